//! Command-line front end: expression parsing, the case catalog, the result
//! document and the command dispatcher behind the `sectio` binary.

pub mod catalog;
pub mod doc;
pub mod expr;

use std::io::Write;
use std::sync::Arc;
use std::time::Instant;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::json;

use self::catalog::catalog;
use self::doc::{DocValue, ErrorDoc, ResultDocument, SectionDoc};
use self::expr::{eval_group, eval_hom, parse_group, parse_hom};
use crate::cohomology::{build_cocycle, is_coboundary, restrict_cocycle};
use crate::group::{structure, GroupTable, Hom};
use crate::homsearch::{
    evaluation_hom, exists_global_section, exists_local_section, hom_group, is_h_point, is_locally_sectionable,
    LocalSection,
};
use crate::invariants::verify::{verify_hom, verify_theorems, Case, Report, Verdict};
use crate::invariants::{
    check_omega, cyclic_bound, enumerate_minimum_covers, min_cover, sec, sectionable_poset, sigma, sigma_cyclic,
    sigma_hom, CoverResult, InfinityReason, Value,
};
use crate::limits::{Limits, DEFAULT_ORDER_CAP};
use crate::subgroups::{generated_subgroup, Subgroup};
use crate::Error;

/// Catalog bound for `verify-batch` and `search` when `--max-order` is absent.
pub const DEFAULT_CATALOG_ORDER: usize = 16;

#[derive(Parser, Debug, Clone)]
#[command(name = "sectio", version, about = "Covering numbers and sectional numbers of finite groups")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
    /// Order cap for constructed groups; for verify-batch and search, the catalog bound.
    #[arg(long, global = true)]
    pub max_order: Option<usize>,
    /// Node budget shared by homomorphism, cover and cochain searches.
    #[arg(long, global = true)]
    pub budget_nodes: Option<u64>,
    /// Print only the JSON document.
    #[arg(long, global = true)]
    pub json: bool,
    /// Seed for sampled associativity checks on large tables.
    #[arg(long, global = true, default_value_t = 0)]
    pub seed: u64,
    /// Worker threads for verify-batch.
    #[arg(long, global = true)]
    pub jobs: Option<usize>,
}

#[derive(Subcommand, Debug, Clone)]
pub enum Command {
    /// Covering number by proper subgroups.
    Sigma { group: String },
    /// Covering number by proper cyclic subgroups.
    SigmaCyclic { group: String },
    /// Sectional number of a homomorphism.
    Sec { hom: String },
    /// Covering number of a homomorphism by split subgroups.
    SigmaHom { hom: String },
    /// The poset of sectionable subgroups.
    Poset { hom: String },
    /// The extension cocycle, restricted to a subgroup of the codomain.
    Cocycle {
        hom: String,
        /// Generators of the codomain subgroup (default: the whole codomain).
        #[arg(long, value_delimiter = ',')]
        subgroup: Option<Vec<usize>>,
    },
    /// Whether an element of G is an H-point.
    Hpoint { g: String, h: String, elt: usize },
    /// Every minimum cover by proper subgroups.
    Covers { group: String },
    /// Runs the theorem checks on one homomorphism.
    Verify { hom: String },
    /// Runs the theorem checks on the catalog.
    VerifyBatch,
    /// Scans catalog epimorphisms for a named property.
    Search {
        #[arg(long, value_enum)]
        predicate: Predicate,
    },
    /// Element table and structure of a group.
    Describe { group: String },
}

#[derive(ValueEnum, Debug, Clone, Copy, PartialEq, Eq)]
pub enum Predicate {
    /// sec(f) finite while f has no global section.
    FiniteSecNoGlobalSection,
    /// sec(f) > sigma(H).
    SecExceedsSigma,
    /// sec(f) differs from sigma(f).
    SecDiffersFromSigmaHom,
    /// Noncyclic codomain and some element has no lift of equal order.
    NotLocallySectionable,
}

impl Command {
    pub fn name(&self) -> &'static str {
        match self {
            Command::Sigma { .. } => "sigma",
            Command::SigmaCyclic { .. } => "sigma-cyclic",
            Command::Sec { .. } => "sec",
            Command::SigmaHom { .. } => "sigma-hom",
            Command::Poset { .. } => "poset",
            Command::Cocycle { .. } => "cocycle",
            Command::Hpoint { .. } => "hpoint",
            Command::Covers { .. } => "covers",
            Command::Verify { .. } => "verify",
            Command::VerifyBatch => "verify-batch",
            Command::Search { .. } => "search",
            Command::Describe { .. } => "describe",
        }
    }

    fn inputs(&self) -> Vec<String> {
        match self {
            Command::Sigma { group } | Command::SigmaCyclic { group } | Command::Covers { group } => {
                vec![group.clone()]
            }
            Command::Describe { group } => vec![group.clone()],
            Command::Sec { hom } | Command::SigmaHom { hom } | Command::Poset { hom } | Command::Verify { hom } => {
                vec![hom.clone()]
            }
            Command::Cocycle { hom, subgroup } => {
                let mut v = vec![hom.clone()];
                if let Some(gens) = subgroup {
                    v.push(format!("{gens:?}"));
                }
                v
            }
            Command::Hpoint { g, h, elt } => vec![g.clone(), h.clone(), elt.to_string()],
            Command::VerifyBatch => vec![],
            Command::Search { predicate } => {
                vec![predicate.to_possible_value().expect("named").get_name().to_string()]
            }
        }
    }
}

impl Cli {
    pub fn catalog_order(&self) -> usize {
        self.max_order.unwrap_or(DEFAULT_CATALOG_ORDER)
    }

    pub fn limits(&self) -> Limits {
        let mut limits = Limits { seed: self.seed, ..Limits::default() };
        let cap = match self.command {
            Command::VerifyBatch | Command::Search { .. } => self.catalog_order().max(DEFAULT_ORDER_CAP),
            _ => self.max_order.unwrap_or(DEFAULT_ORDER_CAP),
        };
        limits = limits.with_order_cap(cap);
        if let Some(n) = self.budget_nodes {
            limits.search_nodes = n;
            limits.cover_nodes = n;
            limits.coboundary_nodes = n;
        }
        limits
    }
}

/// Errors in reading the inputs are usage errors, apart from size and budget
/// limits.
fn input_error(doc: &mut ResultDocument, e: Error) {
    let code = match e {
        Error::OrderCapExceeded { .. } | Error::SearchBudgetExceeded { .. } => 1,
        _ => 2,
    };
    set_error(doc, e, code);
}

fn compute_error(doc: &mut ResultDocument, e: Error) {
    set_error(doc, e, 1);
}

fn set_error(doc: &mut ResultDocument, e: Error, code: i32) {
    doc.budget.exhausted |= e.is_budget();
    doc.error = Some(ErrorDoc::from_error(&e));
    doc.exit_code = code;
}

fn members(s: &Subgroup) -> Vec<usize> {
    s.elements()
}

fn section_doc(ls: &LocalSection) -> SectionDoc {
    SectionDoc { subgroup: members(&ls.subgroup), images: ls.images_on_members() }
}

fn fill_cover(doc: &mut ResultDocument, r: &CoverResult) {
    doc.value = Some(match r.value {
        Value::Finite(n) => DocValue::Int(n as u64),
        Value::Infinite => DocValue::infinite(),
    });
    doc.set_reason(r.reason.as_ref());
    doc.witness = r.witness.iter().map(members).collect();
    doc.sections = r.sections.iter().map(section_doc).collect();
}

fn group_input(doc: &mut ResultDocument, text: &str, limits: &Limits) -> Option<Arc<GroupTable>> {
    match parse_group(text).and_then(|e| eval_group(&e, limits)) {
        Ok(g) => Some(g),
        Err(e) => {
            input_error(doc, e);
            None
        }
    }
}

fn hom_input(doc: &mut ResultDocument, text: &str, limits: &Limits) -> Option<Hom> {
    match parse_hom(text).and_then(|s| eval_hom(&s, limits)) {
        Ok(f) => Some(f),
        Err(e) => {
            input_error(doc, e);
            None
        }
    }
}

/// Runs one command and returns its document, with `exit_code` set.
pub fn run(cli: &Cli) -> ResultDocument {
    let limits = cli.limits();
    let mut doc = ResultDocument::new(cli.command.name(), cli.command.inputs(), &limits);
    let start = Instant::now();
    if let Err(e) = dispatch(cli, &limits, &mut doc) {
        compute_error(&mut doc, e);
    }
    doc.timing_ms = start.elapsed().as_secs_f64() * 1e3;
    doc
}

fn dispatch(cli: &Cli, limits: &Limits, doc: &mut ResultDocument) -> crate::Result<()> {
    macro_rules! input {
        (group $t:expr) => {
            match group_input(doc, $t, limits) {
                Some(g) => g,
                None => return Ok(()),
            }
        };
        (hom $t:expr) => {
            match hom_input(doc, $t, limits) {
                Some(f) => f,
                None => return Ok(()),
            }
        };
    }
    match &cli.command {
        Command::Sigma { group } => {
            let g = input!(group group);
            doc.invariant = Some("sigma".into());
            fill_cover(doc, &sigma(&g, limits)?);
            doc.put("group", g.label());
            doc.put("order", g.order());
        }
        Command::SigmaCyclic { group } => {
            let g = input!(group group);
            doc.invariant = Some("sigma_c".into());
            let (r, report) = sigma_cyclic(&g, limits)?;
            fill_cover(doc, &r);
            doc.put("group", g.label());
            doc.put("cyclic_bound", report.bound);
            let rows: Vec<_> = report
                .per_order
                .iter()
                .map(|r| json!({"order": r.order, "elements": r.elements, "totient": r.totient, "subgroups": r.subgroups}))
                .collect();
            doc.put("per_order", rows);
        }
        Command::Sec { hom } => {
            let f = input!(hom hom);
            doc.invariant = Some("sec".into());
            let r = sec(&f, limits)?;
            fill_cover(doc, &r);
            doc.put("domain", f.domain().label());
            doc.put("codomain", f.codomain().label());
            if f.is_surjective() {
                doc.put("locally_sectionable", is_locally_sectionable(&f).holds());
                doc.put("global_section", exists_global_section(&f, limits)?.map(|s| s.images().to_vec()));
            }
        }
        Command::SigmaHom { hom } => {
            let f = input!(hom hom);
            doc.invariant = Some("sigma_hom".into());
            let r = sigma_hom(&f, limits)?;
            fill_cover(doc, &r);
            let omega = r.witness.iter().zip(&r.sections).all(|(s, ls)| check_omega(&f, s, ls));
            doc.put("omega_isomorphisms", omega);
            doc.put("kernel", members(&crate::subgroups::kernel(&f)));
        }
        Command::Poset { hom } => {
            let f = input!(hom hom);
            doc.invariant = Some("sectionable_poset".into());
            poset(doc, &f, limits)?;
        }
        Command::Cocycle { hom, subgroup } => {
            let f = input!(hom hom);
            doc.invariant = Some("cocycle".into());
            cocycle(doc, &f, subgroup.as_deref(), limits)?;
        }
        Command::Hpoint { g, h, elt } => {
            let g = input!(group g);
            let h = input!(group h);
            doc.invariant = Some("h_point".into());
            if *elt >= g.order() {
                input_error(doc, Error::Elaboration(format!("element {elt} is out of range for {}", g.label())));
                return Ok(());
            }
            doc.value = Some(DocValue::Bool(is_h_point(&g, &h, *elt, limits)?));
            doc.put("element_order", g.elem_order(*elt));
            if h.is_abelian() {
                match hom_group(&g, &h, limits).and_then(|hg| {
                    let ev = evaluation_hom(&hg, *elt)?;
                    Ok((hg.base.order(), sec(&ev, limits)?))
                }) {
                    Ok((n, r)) => {
                        doc.put("hom_group_order", n);
                        doc.put("sec_ev", r.value.to_string());
                    }
                    Err(e) => doc.put("sec_ev_error", e.to_string()),
                }
            }
        }
        Command::Covers { group } => {
            let g = input!(group group);
            doc.invariant = Some("minimum_covers".into());
            let r = sigma(&g, limits)?;
            if r.value.is_finite() {
                let covers = enumerate_minimum_covers(&g, limits)?;
                let lists: Vec<Vec<Vec<usize>>> =
                    covers.iter().map(|c| c.iter().map(members).collect()).collect();
                doc.value = Some(DocValue::Int(r.witness.len() as u64));
                doc.witness = lists.first().cloned().unwrap_or_default();
                doc.put("count", lists.len());
                doc.put("covers", lists);
            } else {
                fill_cover(doc, &r);
                doc.put("count", 0);
                doc.put("covers", Vec::<Vec<Vec<usize>>>::new());
            }
        }
        Command::Verify { hom } => {
            let f = input!(hom hom);
            doc.invariant = Some("theorems".into());
            let report = verify_hom(hom, &f, limits);
            fill_report(doc, &report);
        }
        Command::VerifyBatch => {
            doc.invariant = Some("theorems".into());
            let cat = match catalog(cli.catalog_order(), limits) {
                Ok(c) => c,
                Err(e) => {
                    input_error(doc, e);
                    return Ok(());
                }
            };
            let cases: Vec<Case> =
                cat.homs.iter().map(|h| Case { key: h.spec.to_string(), hom: h.hom.clone() }).collect();
            let report = verify_theorems(&cases, limits, cli.jobs);
            doc.put("catalog_max_order", cli.catalog_order());
            doc.put("groups", cat.groups.len());
            doc.put("cases", cases.len());
            fill_report(doc, &report);
        }
        Command::Search { predicate } => {
            doc.invariant = Some("search".into());
            search(doc, *predicate, cli.catalog_order(), limits)?;
        }
        Command::Describe { group } => {
            let g = input!(group group);
            describe(doc, &g);
        }
    }
    Ok(())
}

fn poset(doc: &mut ResultDocument, f: &Hom, limits: &Limits) -> crate::Result<()> {
    let p = sectionable_poset(f, limits)?;
    let h = f.codomain();
    let maximal = p.maximal_elements();
    let mut universe = h.all();
    universe.remove(0);
    let sets: Vec<_> = maximal.iter().map(|s| *s.members()).collect();
    let r = match min_cover(&universe, &sets, limits.cover_nodes)? {
        Some(c) => CoverResult {
            value: Value::Finite(c.size),
            witness: c.chosen.iter().map(|&i| maximal[i].clone()).collect(),
            sections: c.chosen.iter().map(|&i| p.sections[i].clone()).collect(),
            reason: None,
        },
        None => {
            let union = sets.iter().fold(crate::elemset::ElemSet::singleton(0), |a, s| a.union(s));
            let uncovered = universe.difference(&union).first().expect("uncovered element");
            CoverResult::infinite(InfinityReason::NoProperCoverExists { uncovered })
        }
    };
    fill_cover(doc, &r);
    let n = p.elements.len();
    let below = |i: usize, j: usize| i != j && p.elements[i].is_subset_of(&p.elements[j]);
    let hasse: Vec<(usize, usize)> = (0..n)
        .flat_map(|i| (0..n).map(move |j| (i, j)))
        .filter(|&(i, j)| below(i, j) && !(0..n).any(|k| below(i, k) && below(k, j)))
        .collect();
    doc.put("elements", p.elements.iter().map(members).collect::<Vec<_>>());
    doc.put("maximal", &p.maximal);
    doc.put("hasse", hasse);
    Ok(())
}

fn cocycle(doc: &mut ResultDocument, f: &Hom, gens: Option<&[usize]>, limits: &Limits) -> crate::Result<()> {
    let h = f.codomain();
    let l = match gens {
        None => Subgroup::full(h),
        Some(gens) => {
            if let Some(&x) = gens.iter().find(|&&x| x >= h.order()) {
                input_error(doc, Error::Elaboration(format!("element {x} is out of range for {}", h.label())));
                return Ok(());
            }
            generated_subgroup(h, gens)?
        }
    };
    let (t, w) = build_cocycle(f)?;
    let r = restrict_cocycle(&w, &l)?;
    let found = is_coboundary(&r, limits)?;
    let lm = members(&l);
    doc.value = Some(DocValue::Bool(found.is_some()));
    doc.witness = vec![lm.clone()];
    let n = r.base.order();
    let rows = |table: &dyn Fn(usize, usize) -> usize, cols: usize| -> Vec<Vec<usize>> {
        (0..n).map(|x| (0..cols).map(|y| table(x, y)).collect()).collect()
    };
    doc.put("kernel", members(&crate::subgroups::kernel(f)));
    doc.put("transversal", lm.iter().map(|&x| t.rep[x]).collect::<Vec<_>>());
    doc.put("values", rows(&|x, y| r.value(x, y), n));
    doc.put("action", rows(&|x, a| r.action.apply(x, a), r.coeff.order()));
    doc.put("action_trivial", r.action.is_trivial());
    doc.put("cochain", found.as_ref().map(|c| c.cochain.clone()));
    doc.put("via_section_oracle", found.as_ref().is_some_and(|c| c.via_section_oracle));
    doc.put("local_section", exists_local_section(f, &l, limits)?.is_some());
    Ok(())
}

fn fill_report(doc: &mut ResultDocument, report: &Report) {
    let t = report.tally();
    doc.value = Some(DocValue::Int(t.fail as u64));
    doc.budget.exhausted = t.budget > 0;
    doc.put("tally", json!({"pass": t.pass, "fail": t.fail, "budget": t.budget, "not_applicable": t.not_applicable}));
    let per: serde_json::Map<String, serde_json::Value> = report
        .per_check()
        .into_iter()
        .map(|(c, t)| {
            let v = json!({"description": c.description(), "pass": t.pass, "fail": t.fail,
                "budget": t.budget, "not_applicable": t.not_applicable});
            (c.code().to_string(), v)
        })
        .collect();
    doc.put("per_check", per);
    let listed = |want: fn(&Verdict) -> Option<&String>| -> Vec<serde_json::Value> {
        report
            .results
            .iter()
            .filter_map(|r| want(&r.verdict).map(|m| json!({"case": r.case, "check": r.check.code(), "message": m})))
            .collect()
    };
    doc.put("failures", listed(|v| if let Verdict::Fail(m) = v { Some(m) } else { None }));
    doc.put("budget_verdicts", listed(|v| if let Verdict::Budget(m) = v { Some(m) } else { None }));
    doc.put("unexercised", report.unexercised().iter().map(|c| c.code()).collect::<Vec<_>>());
    if t.fail > 0 {
        doc.exit_code = 1;
    }
}

fn search(doc: &mut ResultDocument, predicate: Predicate, max_order: usize, limits: &Limits) -> crate::Result<()> {
    let cat = match catalog(max_order, limits) {
        Ok(c) => c,
        Err(e) => {
            input_error(doc, e);
            return Ok(());
        }
    };
    let mut matches = Vec::new();
    let mut scanned = 0;
    for ch in cat.homs.iter().filter(|h| h.hom.is_surjective()) {
        scanned += 1;
        let f = &ch.hom;
        let s = sec(f, limits)?;
        let hit = match predicate {
            Predicate::FiniteSecNoGlobalSection => {
                s.value.is_finite() && exists_global_section(f, limits)?.is_none()
            }
            Predicate::SecExceedsSigma => !f.codomain().is_cyclic() && s.value > sigma(f.codomain(), limits)?.value,
            Predicate::SecDiffersFromSigmaHom => s.value != sigma_hom(f, limits)?.value,
            Predicate::NotLocallySectionable => {
                matches!(s.reason, Some(InfinityReason::NotLocallySectionable { .. }))
            }
        };
        if hit {
            matches.push(json!({"hom": ch.spec.to_string(), "sec": s.value.to_string(),
                "reason": s.reason.as_ref().map(|r| r.code())}));
        }
    }
    doc.value = Some(DocValue::Int(matches.len() as u64));
    doc.put("catalog_max_order", max_order);
    doc.put("scanned", scanned);
    doc.put("matches", matches);
    Ok(())
}

fn describe(doc: &mut ResultDocument, g: &Arc<GroupTable>) {
    let st = structure(g);
    doc.value = Some(DocValue::Int(g.order() as u64));
    doc.put("group", g.label());
    doc.put("abelian", st.is_abelian);
    doc.put("cyclic", st.is_cyclic);
    doc.put("exponent", st.exponent);
    doc.put("center", members(&st.center));
    doc.put("generators", g.generating_sequence());
    let cb = cyclic_bound(g);
    doc.put("cyclic_subgroups", cb.bound);
    let table: Vec<_> = g
        .elements()
        .map(|x| json!({"index": x, "name": g.name(x), "order": g.elem_order(x)}))
        .collect();
    doc.put("elements", table);
}

/// Parses `args`, runs the command, prints the outcome and returns the exit code.
pub fn main_with_args<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            if matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion) {
                print!("{e}");
                return 0;
            }
            let mut doc = ResultDocument::new("", vec![], &Limits::default());
            doc.error = Some(ErrorDoc::usage(e.kind().to_string()));
            doc.exit_code = 2;
            let _ = write!(std::io::stderr(), "{e}");
            let _ = writeln!(std::io::stdout(), "{}", doc.to_json());
            return 2;
        }
    };
    let doc = run(&cli);
    if !cli.json {
        let _ = write!(std::io::stderr(), "{}", doc.to_text());
    }
    let _ = writeln!(std::io::stdout(), "{}", doc.to_json());
    doc.exit_code
}

#[cfg(test)]
mod tests {
    use super::*;

    fn run_args(args: &[&str]) -> ResultDocument {
        let mut full = vec!["sectio"];
        full.extend_from_slice(args);
        run(&Cli::try_parse_from(full).unwrap())
    }

    #[test]
    fn sigma_klein() {
        let d = run_args(&["sigma", "Z(2)xZ(2)"]);
        assert_eq!(d.value, Some(DocValue::Int(3)));
        assert_eq!(d.witness.len(), 3);
        assert!(d.witness.iter().all(|w| w.len() == 2));
        d.revalidate().unwrap();
    }

    #[test]
    fn sec_q8_quotient() {
        let d = run_args(&["sec", "quot(Q8,[4])"]);
        assert!(d.value.as_ref().unwrap().is_infinite());
        assert_eq!(d.reason.as_deref(), Some("NotLocallySectionable"));
        assert!(d.reason_element.is_some());
        d.revalidate().unwrap();
    }

    #[test]
    fn exit_codes() {
        assert_eq!(run_args(&["sigma", "Z("]).exit_code, 2);
        assert_eq!(run_args(&["sigma", "Z(100)"]).exit_code, 1);
        assert_eq!(run_args(&["sigma", "Z(4)"]).exit_code, 0);
        assert!(Cli::try_parse_from(["sectio", "nonsense"]).is_err());
    }

    #[test]
    fn budget_is_reported() {
        let d = run_args(&["--budget-nodes", "0", "sigma", "Z(2)xZ(2)xZ(2)"]);
        assert_eq!(d.exit_code, 1);
        assert!(d.budget.exhausted);
        assert_eq!(d.error.as_ref().unwrap().kind, "SearchBudgetExceeded");
    }

    #[test]
    fn documents_round_trip_and_revalidate() {
        for args in [
            vec!["sigma-cyclic", "Q8"],
            vec!["sec", "proj(E(2,3),[0,1])"],
            vec!["sigma-hom", "proj(Z(2)xZ(2)xZ(2),[0,1])"],
            vec!["poset", "quot(D(4),[2])"],
            vec!["cocycle", "quot(Z(4),[2])"],
            vec!["cocycle", "quot(Q8,[4])", "--subgroup", "1"],
            vec!["covers", "S(3)"],
            vec!["hpoint", "Z(4)", "Z(2)", "1"],
            vec!["verify", "quot(Q8,[4])"],
            vec!["describe", "D(4)"],
        ] {
            let d = run_args(&args);
            assert_eq!(d.exit_code, 0, "{args:?}: {:?}", d.error);
            d.revalidate().unwrap_or_else(|e| panic!("{args:?}: {e}"));
            let text = d.to_json();
            let back = ResultDocument::from_json(&text).unwrap();
            assert_eq!(back, d);
            assert_eq!(back.to_json(), text);
        }
    }

    #[test]
    fn tampered_witness_is_rejected() {
        let mut d = run_args(&["sigma", "Z(2)xZ(2)"]);
        d.witness.pop();
        d.value = Some(DocValue::Int(2));
        assert!(d.revalidate().is_err());
    }

    #[test]
    fn sec_matches_sigma_hom_on_small_catalog() {
        let d = run_args(&["--max-order", "8", "search", "--predicate", "sec-differs-from-sigma-hom"]);
        assert_eq!(d.value, Some(DocValue::Int(0)));
    }
}
