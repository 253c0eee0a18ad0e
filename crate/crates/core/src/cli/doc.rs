//! The structured record every command emits, schema `sectio/1`.

use std::fmt::Write as _;
use std::sync::Arc;

use serde::{Deserialize, Serialize};

use super::expr::{eval_group, eval_hom, parse_group, parse_hom};
use crate::group::{GroupTable, Hom};
use crate::invariants::{certify_reason, InfinityReason, Subject};
use crate::limits::Limits;
use crate::subgroups::closure;
use crate::Error;

pub const SCHEMA: &str = "sectio/1";

/// A number, a truth value, or the string `"infinite"`.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum DocValue {
    Bool(bool),
    Int(u64),
    Text(String),
}

impl DocValue {
    pub fn infinite() -> Self {
        DocValue::Text("infinite".into())
    }

    pub fn is_infinite(&self) -> bool {
        matches!(self, DocValue::Text(s) if s == "infinite")
    }

    pub fn as_int(&self) -> Option<u64> {
        match self {
            DocValue::Int(n) => Some(*n),
            _ => None,
        }
    }
}

impl std::fmt::Display for DocValue {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            DocValue::Bool(b) => write!(f, "{b}"),
            DocValue::Int(n) => write!(f, "{n}"),
            DocValue::Text(s) => f.write_str(s),
        }
    }
}

/// `images[i]` is the value of the section at `subgroup[i]`.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct SectionDoc {
    pub subgroup: Vec<usize>,
    pub images: Vec<usize>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct BudgetStatus {
    pub order_cap: usize,
    pub search_nodes: u64,
    pub cover_nodes: u64,
    pub coboundary_nodes: u64,
    pub seed: u64,
    pub exhausted: bool,
}

impl BudgetStatus {
    pub fn from_limits(limits: &Limits) -> Self {
        BudgetStatus {
            order_cap: limits.order_cap,
            search_nodes: limits.search_nodes,
            cover_nodes: limits.cover_nodes,
            coboundary_nodes: limits.coboundary_nodes,
            seed: limits.seed,
            exhausted: false,
        }
    }

    pub fn limits(&self) -> Limits {
        Limits {
            order_cap: self.order_cap,
            search_nodes: self.search_nodes,
            cover_nodes: self.cover_nodes,
            coboundary_nodes: self.coboundary_nodes,
            seed: self.seed,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ErrorDoc {
    pub kind: String,
    pub message: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub offset: Option<usize>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub expected: Vec<String>,
}

impl ErrorDoc {
    pub fn from_error(e: &Error) -> Self {
        let kind = format!("{e:?}");
        let kind = kind.split(|c: char| !c.is_alphanumeric()).next().unwrap_or("Error").to_string();
        let (offset, expected) = match e {
            Error::Syntax { offset, expected } => (Some(*offset), expected.clone()),
            _ => (None, vec![]),
        };
        ErrorDoc { kind, message: e.to_string(), offset, expected }
    }

    pub fn usage(message: impl Into<String>) -> Self {
        ErrorDoc { kind: "Usage".into(), message: message.into(), offset: None, expected: vec![] }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ResultDocument {
    pub schema: String,
    pub command: String,
    pub inputs: Vec<String>,
    pub invariant: Option<String>,
    pub value: Option<DocValue>,
    pub reason: Option<String>,
    pub reason_element: Option<usize>,
    /// Member lists, one per witness subgroup.
    pub witness: Vec<Vec<usize>>,
    pub sections: Vec<SectionDoc>,
    pub extra: serde_json::Map<String, serde_json::Value>,
    pub timing_ms: f64,
    pub budget: BudgetStatus,
    pub error: Option<ErrorDoc>,
    pub exit_code: i32,
}

impl ResultDocument {
    pub fn new(command: &str, inputs: Vec<String>, limits: &Limits) -> Self {
        ResultDocument {
            schema: SCHEMA.into(),
            command: command.into(),
            inputs,
            invariant: None,
            value: None,
            reason: None,
            reason_element: None,
            witness: vec![],
            sections: vec![],
            extra: serde_json::Map::new(),
            timing_ms: 0.0,
            budget: BudgetStatus::from_limits(limits),
            error: None,
            exit_code: 0,
        }
    }

    pub fn set_reason(&mut self, reason: Option<&InfinityReason>) {
        self.reason = reason.map(|r| r.code().to_string());
        self.reason_element = reason.and_then(|r| r.element());
    }

    pub fn put(&mut self, key: &str, value: impl Serialize) {
        self.extra.insert(key.into(), serde_json::to_value(value).expect("serializable"));
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("serializable")
    }

    pub fn from_json(text: &str) -> Result<Self, String> {
        let doc: ResultDocument = serde_json::from_str(text).map_err(|e| e.to_string())?;
        if doc.schema != SCHEMA {
            return Err(format!("unknown schema {}", doc.schema));
        }
        Ok(doc)
    }

    /// Rebuilds the inputs and re-checks every witness, section and infinity
    /// reason in the document.
    pub fn revalidate(&self) -> Result<(), String> {
        if self.error.is_some() {
            return Ok(());
        }
        let limits = self.budget.limits();
        let err = |e: Error| e.to_string();
        let input = |i: usize| self.inputs.get(i).ok_or_else(|| format!("missing input {i}"));
        match self.command.as_str() {
            "sigma" | "sigma-cyclic" | "covers" => {
                let g = eval_group(&parse_group(input(0)?).map_err(err)?, &limits).map_err(err)?;
                self.check_value_matches_witness()?;
                check_cover(&g, &self.witness)?;
                if self.command == "sigma-cyclic" {
                    for w in &self.witness {
                        if !is_cyclic_set(&g, w) {
                            return Err(format!("witness {w:?} is not cyclic"));
                        }
                    }
                }
                if self.command == "covers" {
                    let covers: Vec<Vec<Vec<usize>>> = self.extra_field("covers")?;
                    let n = self.value.as_ref().and_then(DocValue::as_int).unwrap_or(0) as usize;
                    for c in &covers {
                        if c.len() != n {
                            return Err("cover of the wrong size".into());
                        }
                        check_cover(&g, c)?;
                    }
                }
                let subject = if self.command == "sigma-cyclic" { Subject::SigmaCyclic(&g) } else { Subject::Sigma(&g) };
                self.check_reason(subject, &limits)
            }
            "sec" | "poset" => {
                let f = eval_hom(&parse_hom(input(0)?).map_err(err)?, &limits).map_err(err)?;
                self.check_value_matches_witness()?;
                check_cover(f.codomain(), &self.witness)?;
                self.check_sections(&f, false)?;
                self.check_reason(Subject::Sec(&f), &limits)
            }
            "sigma-hom" => {
                let f = eval_hom(&parse_hom(input(0)?).map_err(err)?, &limits).map_err(err)?;
                self.check_value_matches_witness()?;
                check_cover(f.domain(), &self.witness)?;
                self.check_sections(&f, true)?;
                self.check_reason(Subject::SigmaHom(&f), &limits)
            }
            "cocycle" => {
                let f = eval_hom(&parse_hom(input(0)?).map_err(err)?, &limits).map_err(err)?;
                let (_, w) = crate::cohomology::build_cocycle(&f).map_err(err)?;
                let members = self.witness.first().ok_or("missing subgroup")?;
                check_subgroup(f.codomain(), members)?;
                let l = crate::subgroups::Subgroup::from_closed(f.codomain().clone(), members.iter().copied().collect())
                    .map_err(err)?;
                let r = crate::cohomology::restrict_cocycle(&w, &l).map_err(err)?;
                let values: Vec<Vec<usize>> = self.extra_field("values")?;
                let n = r.base.order();
                if values.len() != n || (0..n).any(|x| (0..n).any(|y| values[x].get(y) != Some(&r.value(x, y)))) {
                    return Err("cocycle values do not match".into());
                }
                let split = matches!(self.value, Some(DocValue::Bool(true)));
                let cochain: Option<Vec<usize>> = self.extra_field("cochain")?;
                match (split, cochain) {
                    (true, Some(c)) if c.len() == n && r.coboundary_of(&c) == r.values => Ok(()),
                    (true, _) => Err("coboundary witness does not re-validate".into()),
                    (false, None) => Ok(()),
                    (false, Some(_)) => Err("cochain given for a non-coboundary".into()),
                }
            }
            "verify" | "verify-batch" => {
                let tally: serde_json::Map<String, serde_json::Value> = self.extra_field("tally")?;
                let fail = tally.get("fail").and_then(|v| v.as_u64()).ok_or("missing fail count")?;
                if self.value.as_ref().and_then(DocValue::as_int) != Some(fail) {
                    return Err("value does not match the failure count".into());
                }
                Ok(())
            }
            _ => Ok(()),
        }
    }

    fn extra_field<T: serde::de::DeserializeOwned>(&self, key: &str) -> Result<T, String> {
        let v = self.extra.get(key).cloned().unwrap_or(serde_json::Value::Null);
        serde_json::from_value(v).map_err(|e| format!("field {key}: {e}"))
    }

    fn check_value_matches_witness(&self) -> Result<(), String> {
        match &self.value {
            Some(DocValue::Int(n)) if *n as usize == self.witness.len() => Ok(()),
            Some(v) if v.is_infinite() && self.witness.is_empty() && self.reason.is_some() => Ok(()),
            other => Err(format!("value {other:?} does not match a witness of {} subgroups", self.witness.len())),
        }
    }

    fn check_sections(&self, f: &Hom, within_witness: bool) -> Result<(), String> {
        if self.value.as_ref().is_some_and(|v| !v.is_infinite()) && self.sections.len() != self.witness.len() {
            return Err("sections not aligned with witness".into());
        }
        let (g, h) = (f.domain(), f.codomain());
        for (i, s) in self.sections.iter().enumerate() {
            check_subgroup(h, &s.subgroup)?;
            if s.images.len() != s.subgroup.len() || s.images.iter().any(|&a| a >= g.order()) {
                return Err(format!("section {i} is malformed"));
            }
            let at = |x: usize| s.subgroup.iter().position(|&y| y == x).map(|p| s.images[p]);
            for (&x, &a) in s.subgroup.iter().zip(&s.images) {
                if f.apply(a) != x {
                    return Err(format!("section {i} does not lift {x}"));
                }
                if within_witness && !self.witness[i].contains(&a) {
                    return Err(format!("section {i} leaves its witness subgroup"));
                }
                for (&y, &b) in s.subgroup.iter().zip(&s.images) {
                    if at(h.mul(x, y)) != Some(g.mul(a, b)) {
                        return Err(format!("section {i} is not multiplicative"));
                    }
                }
            }
        }
        Ok(())
    }

    fn check_reason(&self, subject: Subject<'_>, limits: &Limits) -> Result<(), String> {
        let Some(code) = &self.reason else { return Ok(()) };
        let e = self.reason_element;
        let reason = match (code.as_str(), e) {
            ("NotSurjective", Some(missing)) => InfinityReason::NotSurjective { missing },
            ("CodomainCyclic", None) => InfinityReason::CodomainCyclic,
            ("DomainCyclicAndValueForcedInfinite", None) => InfinityReason::DomainCyclicAndValueForcedInfinite,
            ("NotLocallySectionable", Some(element)) => InfinityReason::NotLocallySectionable { element },
            ("NoProperCoverExists", Some(uncovered)) => InfinityReason::NoProperCoverExists { uncovered },
            _ => return Err(format!("malformed reason {code}")),
        };
        match certify_reason(subject, &reason, limits) {
            Ok(true) => Ok(()),
            Ok(false) => Err(format!("reason {code} does not certify")),
            Err(e) => Err(e.to_string()),
        }
    }

    /// Human-readable rendering with one line per field.
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "command    {} {}", self.command, self.inputs.join(" "));
        if let Some(inv) = &self.invariant {
            let _ = writeln!(out, "invariant  {inv}");
        }
        if let Some(v) = &self.value {
            let _ = writeln!(out, "value      {v}");
        }
        if let Some(r) = &self.reason {
            match self.reason_element {
                Some(e) => {
                    let _ = writeln!(out, "reason     {r} (element {e})");
                }
                None => {
                    let _ = writeln!(out, "reason     {r}");
                }
            }
        }
        for (i, w) in self.witness.iter().enumerate() {
            let _ = writeln!(out, "witness[{i}] {w:?}");
        }
        for (i, s) in self.sections.iter().enumerate() {
            let pairs: Vec<String> = s.subgroup.iter().zip(&s.images).map(|(x, a)| format!("{x}->{a}")).collect();
            let _ = writeln!(out, "section[{i}] {}", pairs.join(" "));
        }
        for (k, v) in &self.extra {
            match v {
                serde_json::Value::Array(items) if items.len() > 1 && !items.iter().all(|x| x.is_number()) => {
                    let _ = writeln!(out, "{k}:");
                    for item in items {
                        let _ = writeln!(out, "  {}", compact(item));
                    }
                }
                serde_json::Value::Object(map) if map.len() > 1 => {
                    let _ = writeln!(out, "{k}:");
                    for (kk, vv) in map {
                        let _ = writeln!(out, "  {kk}: {}", compact(vv));
                    }
                }
                _ => {
                    let _ = writeln!(out, "{k}: {}", compact(v));
                }
            }
        }
        if let Some(e) = &self.error {
            let _ = writeln!(out, "error      {}: {}", e.kind, e.message);
        }
        let b = &self.budget;
        let _ = writeln!(
            out,
            "budget     order cap {}, search {}, cover {}, coboundary {}, seed {}{}",
            b.order_cap,
            b.search_nodes,
            b.cover_nodes,
            b.coboundary_nodes,
            b.seed,
            if b.exhausted { ", exhausted" } else { "" }
        );
        let _ = writeln!(out, "time       {:.3} ms", self.timing_ms);
        let _ = writeln!(out, "exit       {}", self.exit_code);
        out
    }
}

fn compact(v: &serde_json::Value) -> String {
    match v {
        serde_json::Value::String(s) => s.clone(),
        other => other.to_string(),
    }
}

fn check_subgroup(g: &Arc<GroupTable>, members: &[usize]) -> Result<(), String> {
    if members.iter().any(|&x| x >= g.order()) || !members.windows(2).all(|w| w[0] < w[1]) {
        return Err(format!("malformed member list {members:?}"));
    }
    let span = closure(g, members);
    if span.len() != members.len() {
        return Err(format!("{members:?} is not closed"));
    }
    Ok(())
}

fn is_cyclic_set(g: &GroupTable, members: &[usize]) -> bool {
    members.iter().any(|&x| g.elem_order(x) == members.len())
}

fn check_cover(g: &Arc<GroupTable>, witness: &[Vec<usize>]) -> Result<(), String> {
    if witness.is_empty() {
        return Ok(());
    }
    let mut hit = vec![false; g.order()];
    hit[0] = true;
    for w in witness {
        check_subgroup(g, w)?;
        if w.len() == g.order() {
            return Err(format!("{w:?} is not proper"));
        }
        for &x in w {
            hit[x] = true;
        }
    }
    match hit.iter().position(|&b| !b) {
        Some(x) => Err(format!("witness misses element {x}")),
        None => Ok(()),
    }
}
