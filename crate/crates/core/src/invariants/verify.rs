//! Checks the identities and inequalities linking σ, σ_c, sec, σ(f), the
//! poset 𝔏(f) and the extension cocycle, case by case over a batch of
//! homomorphisms.

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::sync::{Arc, Mutex};

use rayon::prelude::*;

use super::{
    certify_reason, cyclic_bound, enumerate_minimum_covers, oracle, sec, sectionable_poset, sigma, sigma_cyclic,
    sigma_hom, check_omega, CoverResult, Subject, Value, MINIMUM_COVERS_MAX_ORDER,
};
use crate::arith::gcd;
use crate::cohomology::{build_cocycle, cocycle_from, is_coboundary, restrict_cocycle, sec_via_cohomology, Transversal};
use crate::group::{fiber_product, make_cyclic, make_product, quotient, GroupTable, Hom};
use crate::homsearch::{
    enumerate_homs, exists_fibrewise_morphism, exists_global_section, exists_local_section, is_locally_sectionable,
    locally_sectionable_by_definition, HomQuery,
};
use crate::limits::Limits;
use crate::subgroups::{all_subgroups, kernel};
use crate::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Check {
    I01,
    I02,
    I03,
    I04,
    I05,
    I06,
    I07,
    I08,
    I09,
    I10,
    I11,
    I12,
    I13,
    I14,
    I15,
    I16,
    CocycleSection,
    CohomologySec,
    TransversalChange,
    CoprimeShortcut,
    GlobalImpliesLocal,
    LiftCriterion,
    Certificates,
}

impl Check {
    pub const NUMBERED: [Check; 16] = [
        Check::I01, Check::I02, Check::I03, Check::I04, Check::I05, Check::I06, Check::I07, Check::I08,
        Check::I09, Check::I10, Check::I11, Check::I12, Check::I13, Check::I14, Check::I15, Check::I16,
    ];

    pub fn code(&self) -> &'static str {
        match self {
            Check::I01 => "I01",
            Check::I02 => "I02",
            Check::I03 => "I03",
            Check::I04 => "I04",
            Check::I05 => "I05",
            Check::I06 => "I06",
            Check::I07 => "I07",
            Check::I08 => "I08",
            Check::I09 => "I09",
            Check::I10 => "I10",
            Check::I11 => "I11",
            Check::I12 => "I12",
            Check::I13 => "I13",
            Check::I14 => "I14",
            Check::I15 => "I15",
            Check::I16 => "I16",
            Check::CocycleSection => "C-cocycle-section",
            Check::CohomologySec => "C-sec-cohomology",
            Check::TransversalChange => "C-transversal",
            Check::CoprimeShortcut => "C-coprime",
            Check::GlobalImpliesLocal => "X-global-local",
            Check::LiftCriterion => "X-lift-criterion",
            Check::Certificates => "X-certificates",
        }
    }

    pub fn description(&self) -> &'static str {
        match self {
            Check::I01 => "sec(f) >= sigma(H); sigma(H) >= sigma(G) for epis",
            Check::I02 => "sec(id) = sigma",
            Check::I03 => "global section implies sec(f) = sigma(H)",
            Check::I04 => "sec(f) = sec(q_f)",
            Check::I05 => "sec(f) >= sigma(f), equal without global section",
            Check::I06 => "locally sectionable implies sec(f) <= sigma_c(H)",
            Check::I07 => "sigma = 3 iff an epimorphism onto Z2xZ2 exists",
            Check::I08 => "3 <= sigma <= sigma_c <= cyclic bound",
            Check::I09 => "fibrewise monotonicity, FE pairs",
            Check::I10 => "pullback along an epimorphism does not raise sec",
            Check::I11 => "product inequalities",
            Check::I12 => "sec(f) = sigma of the sectionable poset",
            Check::I13 => "sec(f) > sigma(H) iff every minimum cover has a non-sectionable member",
            Check::I14 => "equal kernels give equal sec (epimorphisms)",
            Check::I15 => "sec(f) finite iff H noncyclic and locally sectionable",
            Check::I16 => "maximal-element sec equals all-subgroup sec",
            Check::CocycleSection => "cocycle restricts to a coboundary iff a local section exists",
            Check::CohomologySec => "sec via cohomology equals sec",
            Check::TransversalChange => "transversal change alters the cocycle by a coboundary",
            Check::CoprimeShortcut => "coprime subgroups trivialize the cocycle",
            Check::GlobalImpliesLocal => "a global section restricts to every subgroup",
            Check::LiftCriterion => "order-lift test agrees with the subgroup definition",
            Check::Certificates => "witnesses and infinity reasons re-validate",
        }
    }
}

impl fmt::Display for Check {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.code())
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Verdict {
    Pass,
    Fail(String),
    /// A search budget or order cap stopped the check.
    Budget(String),
    NotApplicable,
}

impl Verdict {
    pub fn tag(&self) -> &'static str {
        match self {
            Verdict::Pass => "PASS",
            Verdict::Fail(_) => "FAIL",
            Verdict::Budget(_) => "BUDGET",
            Verdict::NotApplicable => "N/A",
        }
    }
}

#[derive(Clone, Debug)]
pub struct CheckResult {
    pub case: String,
    pub check: Check,
    pub verdict: Verdict,
}

#[derive(Clone, Debug, Default)]
pub struct Report {
    pub results: Vec<CheckResult>,
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct Tally {
    pub pass: usize,
    pub fail: usize,
    pub budget: usize,
    pub not_applicable: usize,
}

impl Report {
    pub fn tally(&self) -> Tally {
        let mut t = Tally::default();
        for r in &self.results {
            match r.verdict {
                Verdict::Pass => t.pass += 1,
                Verdict::Fail(_) => t.fail += 1,
                Verdict::Budget(_) => t.budget += 1,
                Verdict::NotApplicable => t.not_applicable += 1,
            }
        }
        t
    }

    pub fn failures(&self) -> impl Iterator<Item = &CheckResult> {
        self.results.iter().filter(|r| matches!(r.verdict, Verdict::Fail(_)))
    }

    pub fn per_check(&self) -> BTreeMap<Check, Tally> {
        let mut out: BTreeMap<Check, Tally> = BTreeMap::new();
        for r in &self.results {
            let t = out.entry(r.check).or_default();
            match r.verdict {
                Verdict::Pass => t.pass += 1,
                Verdict::Fail(_) => t.fail += 1,
                Verdict::Budget(_) => t.budget += 1,
                Verdict::NotApplicable => t.not_applicable += 1,
            }
        }
        out
    }

    /// Numbered checks that never passed.
    pub fn unexercised(&self) -> Vec<Check> {
        let per = self.per_check();
        Check::NUMBERED.into_iter().filter(|c| per.get(c).is_none_or(|t| t.pass == 0)).collect()
    }

    pub fn summary(&self) -> String {
        let t = self.tally();
        let mut s = format!(
            "{} checks: {} pass, {} fail, {} budget, {} not applicable\n",
            self.results.len(),
            t.pass,
            t.fail,
            t.budget,
            t.not_applicable
        );
        for (c, t) in self.per_check() {
            s += &format!(
                "  {:<18} pass {:>4}  fail {:>3}  budget {:>3}  n/a {:>4}  {}\n",
                c.code(),
                t.pass,
                t.fail,
                t.budget,
                t.not_applicable,
                c.description()
            );
        }
        for r in self.failures() {
            if let Verdict::Fail(why) = &r.verdict {
                s += &format!("FAIL {} {}: {}\n", r.case, r.check, why);
            }
        }
        s
    }
}

/// One homomorphism under test, identified by a stable key.
#[derive(Clone, Debug)]
pub struct Case {
    pub key: String,
    pub hom: Hom,
}

// ---------------------------------------------------------------------------
// Memoization
// ---------------------------------------------------------------------------

type HomKey = (u64, usize, u64, usize, Vec<usize>);

fn hom_key(f: &Hom) -> HomKey {
    (
        f.domain().fingerprint(),
        f.domain().order(),
        f.codomain().fingerprint(),
        f.codomain().order(),
        f.images().to_vec(),
    )
}

#[derive(Default)]
struct Memo {
    sec: Mutex<HashMap<HomKey, Value>>,
    sigma: Mutex<HashMap<(u64, usize), Value>>,
    sigma_c: Mutex<HashMap<(u64, usize), Value>>,
}

impl Memo {
    fn sec(&self, f: &Hom, limits: &Limits) -> Result<Value> {
        let key = hom_key(f);
        if let Some(v) = self.sec.lock().unwrap().get(&key) {
            return Ok(*v);
        }
        let v = sec(f, limits)?.value;
        self.sec.lock().unwrap().insert(key, v);
        Ok(v)
    }

    fn sigma(&self, g: &Arc<GroupTable>, limits: &Limits) -> Result<Value> {
        let key = (g.fingerprint(), g.order());
        if let Some(v) = self.sigma.lock().unwrap().get(&key) {
            return Ok(*v);
        }
        let v = sigma(g, limits)?.value;
        self.sigma.lock().unwrap().insert(key, v);
        Ok(v)
    }

    fn sigma_c(&self, g: &Arc<GroupTable>, limits: &Limits) -> Result<Value> {
        let key = (g.fingerprint(), g.order());
        if let Some(v) = self.sigma_c.lock().unwrap().get(&key) {
            return Ok(*v);
        }
        let v = sigma_cyclic(g, limits)?.0.value;
        self.sigma_c.lock().unwrap().insert(key, v);
        Ok(v)
    }
}

// ---------------------------------------------------------------------------
// Individual checks
// ---------------------------------------------------------------------------

fn expect(cond: bool, detail: impl FnOnce() -> String) -> Result<Verdict> {
    Ok(if cond { Verdict::Pass } else { Verdict::Fail(detail()) })
}

fn to_verdict(r: Result<Verdict>) -> Verdict {
    match r {
        Ok(v) => v,
        Err(e @ Error::SearchBudgetExceeded { .. }) => Verdict::Budget(e.to_string()),
        Err(e @ Error::OrderCapExceeded { .. }) => Verdict::Budget(e.to_string()),
        Err(e) => Verdict::Fail(format!("error: {e}")),
    }
}

struct Ctx<'a> {
    f: &'a Hom,
    limits: &'a Limits,
    memo: &'a Memo,
    epi: bool,
    /// Other epimorphisms onto the same codomain, for pullbacks.
    partners: &'a [Hom],
}

impl Ctx<'_> {
    fn g(&self) -> &Arc<GroupTable> {
        self.f.domain()
    }

    fn h(&self) -> &Arc<GroupTable> {
        self.f.codomain()
    }

    fn sec(&self, f: &Hom) -> Result<Value> {
        self.memo.sec(f, self.limits)
    }

    fn sec_f(&self) -> Result<Value> {
        self.sec(self.f)
    }

    fn sigma(&self, g: &Arc<GroupTable>) -> Result<Value> {
        self.memo.sigma(g, self.limits)
    }

    fn sigma_c(&self, g: &Arc<GroupTable>) -> Result<Value> {
        self.memo.sigma_c(g, self.limits)
    }

    fn has_global_section(&self) -> Result<bool> {
        Ok(exists_global_section(self.f, self.limits)?.is_some())
    }

    fn q_f(&self) -> Result<Hom> {
        Ok(quotient(self.g(), &kernel(self.f))?.1)
    }

    fn abelian_kernel(&self) -> bool {
        self.epi && kernel(self.f).is_abelian()
    }
}

fn i01(c: &Ctx) -> Result<Verdict> {
    let (s, sh) = (c.sec_f()?, c.sigma(c.h())?);
    if s < sh {
        return expect(false, || format!("sec {s} < sigma(H) {sh}"));
    }
    if c.epi {
        let sg = c.sigma(c.g())?;
        return expect(sh >= sg, || format!("sigma(H) {sh} < sigma(G) {sg}"));
    }
    Ok(Verdict::Pass)
}

fn i02(c: &Ctx) -> Result<Verdict> {
    for g in [c.g(), c.h()] {
        let (s, sg) = (c.sec(&Hom::identity(g))?, c.sigma(g)?);
        if s != sg {
            return expect(false, || format!("sec(id {}) = {s} but sigma = {sg}", g.label()));
        }
    }
    Ok(Verdict::Pass)
}

fn i03(c: &Ctx) -> Result<Verdict> {
    if !c.has_global_section()? {
        return Ok(Verdict::NotApplicable);
    }
    let (s, sh) = (c.sec_f()?, c.sigma(c.h())?);
    expect(s == sh, || format!("split but sec {s} != sigma(H) {sh}"))
}

fn i04(c: &Ctx) -> Result<Verdict> {
    if !c.epi {
        return Ok(Verdict::NotApplicable);
    }
    let (s, sq) = (c.sec_f()?, c.sec(&c.q_f()?)?);
    expect(s == sq, || format!("sec {s} != sec(q_f) {sq}"))
}

fn i05(c: &Ctx) -> Result<Verdict> {
    if !c.epi {
        return Ok(Verdict::NotApplicable);
    }
    let sh = sigma_hom(c.f, c.limits)?;
    sh.check_cover(c.g()).map_err(Error::InvalidHom)?;
    for (s, ls) in sh.witness.iter().zip(&sh.sections) {
        if !check_omega(c.f, s, ls) {
            return expect(false, || format!("Omega fails on {:?}", s.members()));
        }
    }
    let s = c.sec_f()?;
    if s < sh.value {
        return expect(false, || format!("sec {s} < sigma(f) {}", sh.value));
    }
    if !c.has_global_section()? {
        return expect(s == sh.value, || format!("no global section but sec {s} != sigma(f) {}", sh.value));
    }
    Ok(Verdict::Pass)
}

fn i06(c: &Ctx) -> Result<Verdict> {
    if !is_locally_sectionable(c.f).holds() {
        return Ok(Verdict::NotApplicable);
    }
    let (s, sh, sc) = (c.sec_f()?, c.sigma(c.h())?, c.sigma_c(c.h())?);
    if s > sc {
        return expect(false, || format!("sec {s} > sigma_c(H) {sc}"));
    }
    if sh == sc {
        return expect(s == sh, || format!("sigma(H) = sigma_c(H) = {sh} but sec {s}"));
    }
    Ok(Verdict::Pass)
}

fn i07(c: &Ctx) -> Result<Verdict> {
    let z2 = make_cyclic(2, c.limits)?;
    let v4 = make_product(&z2, &z2, c.limits)?.group;
    for g in [c.g(), c.h()] {
        let onto = enumerate_homs(&HomQuery::new(g, &v4), c.limits)?.iter().any(|h| h.is_surjective());
        let three = c.sigma(g)? == Value::Finite(3);
        if onto != three {
            return expect(false, || format!("{}: sigma = 3 is {three}, epi onto Z2xZ2 is {onto}", g.label()));
        }
    }
    Ok(Verdict::Pass)
}

fn i08(c: &Ctx) -> Result<Verdict> {
    let mut applied = false;
    for g in [c.g(), c.h()] {
        if g.is_cyclic() {
            continue;
        }
        applied = true;
        let (s, sc, bound) = (c.sigma(g)?, c.sigma_c(g)?, cyclic_bound(g).bound);
        if !(Value::Finite(3) <= s && s <= sc && sc <= Value::Finite(bound)) {
            return expect(false, || format!("{}: sigma {s}, sigma_c {sc}, bound {bound}", g.label()));
        }
    }
    Ok(if applied { Verdict::Pass } else { Verdict::NotApplicable })
}

fn i09(c: &Ctx) -> Result<Verdict> {
    let z2 = make_cyclic(2, c.limits)?;
    let p = make_product(c.g(), &z2, c.limits)?;
    let f2 = p.projection(0).then(c.f)?;
    let there = exists_fibrewise_morphism(c.f, &f2, c.limits)?;
    let back = exists_fibrewise_morphism(&f2, c.f, c.limits)?;
    if there.is_none() || back.is_none() {
        return expect(false, || "FE pair with G x Z2 lacks a fibrewise morphism".into());
    }
    let (s, s2) = (c.sec_f()?, c.sec(&f2)?);
    if s != s2 {
        return expect(false, || format!("FE pair: sec {s} vs {s2}"));
    }
    let id = Hom::identity(c.h());
    if exists_fibrewise_morphism(&id, c.f, c.limits)?.is_some() {
        let si = c.sec(&id)?;
        if si < s {
            return expect(false, || format!("fibrewise id_H -> f but sec(id_H) {si} < sec {s}"));
        }
    }
    Ok(Verdict::Pass)
}

fn i10(c: &Ctx) -> Result<Verdict> {
    let z2 = make_cyclic(2, c.limits)?;
    let mut along = vec![make_product(c.h(), &z2, c.limits)?.projection(0)];
    along.extend(c.partners.iter().cloned());
    let s = c.sec_f()?;
    for phi in &along {
        let fp = fiber_product(c.f, phi, c.limits)?;
        let pulled = fp.to_k.clone();
        let sp = c.sec(&pulled)?;
        if sp > s {
            return expect(false, || format!("pullback along {}: sec {sp} > {s}", phi.domain().label()));
        }
    }
    Ok(Verdict::Pass)
}

fn small_factors(limits: &Limits) -> Result<Vec<Hom>> {
    let z2 = make_cyclic(2, limits)?;
    let z4 = make_cyclic(4, limits)?;
    let v4 = make_product(&z2, &z2, limits)?;
    Ok(vec![
        Hom::identity(&z2),
        Hom::identity(&make_cyclic(3, limits)?),
        Hom::new(z4, z2.clone(), vec![0, 1, 0, 1])?,
        v4.projection(0),
    ])
}

fn i11(c: &Ctx) -> Result<Verdict> {
    let s = c.sec_f()?;
    let split = c.has_global_section()?;
    let z2 = make_cyclic(2, c.limits)?;
    let with_id = c.sec(&Hom::product(c.f, &Hom::identity(&z2), c.limits)?)?;
    if with_id > s || (!split && with_id != s) {
        return expect(false, || format!("sec(f x id) {with_id} vs sec(f) {s}, split {split}"));
    }
    for f2 in small_factors(c.limits)? {
        let prod = Hom::product(c.f, &f2, c.limits)?;
        let sp = c.sec(&prod)?;
        if !split && s > sp {
            return expect(false, || format!("no section but sec(f x {}) {sp} < sec {s}", f2.domain().label()));
        }
        // coprime codomains only
        if c.h().is_abelian() && f2.codomain().is_abelian() && gcd(c.h().order(), f2.codomain().order()) == 1 {
            let s2 = c.sec(&f2)?;
            if s.min(s2) > sp {
                return expect(false, || format!("min(sec {s}, {s2}) > sec(product) {sp}"));
            }
        }
    }
    Ok(Verdict::Pass)
}

fn i12(c: &Ctx) -> Result<Verdict> {
    let s = c.sec_f()?;
    let p = sectionable_poset(c.f, c.limits)?.cover_number;
    if s != p {
        return expect(false, || format!("sec {s} != sigma(poset) {p}"));
    }
    let sh = c.sigma(c.h())?;
    let ph = sectionable_poset(&Hom::identity(c.h()), c.limits)?.cover_number;
    expect(sh == ph, || format!("sigma(H) {sh} != sigma(poset of id) {ph}"))
}

fn i13(c: &Ctx) -> Result<Verdict> {
    if !c.epi || c.h().order() > MINIMUM_COVERS_MAX_ORDER || !c.sigma(c.h())?.is_finite() {
        return Ok(Verdict::NotApplicable);
    }
    let covers = enumerate_minimum_covers(c.h(), c.limits)?;
    let poset = sectionable_poset(c.f, c.limits)?;
    let every_blocked = covers
        .iter()
        .all(|cover| cover.iter().any(|s| !poset.elements.contains(s)));
    let strict = c.sec_f()? > c.sigma(c.h())?;
    expect(strict == every_blocked, || {
        format!("sec > sigma(H) is {strict}, every minimum cover blocked is {every_blocked}")
    })
}

fn i14(c: &Ctx) -> Result<Verdict> {
    if !c.epi {
        return Ok(Verdict::NotApplicable);
    }
    let (s, sq) = (c.sec_f()?, c.sec(&c.q_f()?)?);
    expect(s == sq, || format!("same kernel as q_f but sec {s} != {sq}"))
}

fn i15(c: &Ctx) -> Result<Verdict> {
    if !c.epi {
        return Ok(Verdict::NotApplicable);
    }
    let finite = c.sec_f()?.is_finite();
    let predicted = !c.h().is_cyclic() && is_locally_sectionable(c.f).holds();
    expect(finite == predicted, || format!("sec finite is {finite}, predicted {predicted}"))
}

fn i16(c: &Ctx) -> Result<Verdict> {
    if c.h().order() > 16 {
        return Ok(Verdict::NotApplicable);
    }
    let (s, o) = (c.sec_f()?, oracle::sec_all_sectionable(c.f, c.limits)?);
    expect(s == o, || format!("sec {s} != oracle {o}"))
}

fn cocycle_section(c: &Ctx) -> Result<Verdict> {
    if !c.abelian_kernel() || c.h().order() > 24 {
        return Ok(Verdict::NotApplicable);
    }
    let (_, w) = build_cocycle(c.f)?;
    for l in all_subgroups(c.h(), c.limits)?.subgroups() {
        let cob = is_coboundary(&restrict_cocycle(&w, l)?, c.limits)?.is_some();
        let sect = exists_local_section(c.f, l, c.limits)?.is_some();
        if cob != sect {
            return expect(false, || format!("on {:?}: coboundary {cob}, section {sect}", l.members()));
        }
    }
    Ok(Verdict::Pass)
}

fn cohomology_sec(c: &Ctx) -> Result<Verdict> {
    if !c.abelian_kernel() {
        return Ok(Verdict::NotApplicable);
    }
    let (a, b) = (sec_via_cohomology(c.f, c.limits)?.value, c.sec_f()?);
    expect(a == b, || format!("via cohomology {a}, direct {b}"))
}

fn transversal_change(c: &Ctx) -> Result<Verdict> {
    if !c.abelian_kernel() || c.h().order() > 8 {
        return Ok(Verdict::NotApplicable);
    }
    let (_, w) = build_cocycle(c.f)?;
    let mut rep = vec![0; c.h().order()];
    for a in c.g().elements() {
        rep[c.f.apply(a)] = a;
    }
    rep[0] = 0;
    let w2 = cocycle_from(&Transversal::from_reps(c.f, rep)?)?;
    let diff = w.difference(&w2)?;
    expect(is_coboundary(&diff, c.limits)?.is_some(), || "difference cocycle is not a coboundary".into())
}

fn coprime_shortcut(c: &Ctx) -> Result<Verdict> {
    if !c.abelian_kernel() {
        return Ok(Verdict::NotApplicable);
    }
    let k = kernel(c.f).order();
    let (_, w) = build_cocycle(c.f)?;
    let mut applied = false;
    for l in all_subgroups(c.h(), c.limits)?.subgroups() {
        if l.is_trivial() || gcd(l.order(), k) != 1 {
            continue;
        }
        applied = true;
        if is_coboundary(&restrict_cocycle(&w, l)?, c.limits)?.is_none() {
            return expect(false, || format!("coprime {:?} not trivialized", l.members()));
        }
    }
    Ok(if applied { Verdict::Pass } else { Verdict::NotApplicable })
}

fn global_implies_local(c: &Ctx) -> Result<Verdict> {
    if !c.has_global_section()? {
        return Ok(Verdict::NotApplicable);
    }
    for l in all_subgroups(c.h(), c.limits)?.subgroups() {
        if exists_local_section(c.f, l, c.limits)?.is_none() {
            return expect(false, || format!("no local section on {:?}", l.members()));
        }
    }
    Ok(Verdict::Pass)
}

fn lift_criterion(c: &Ctx) -> Result<Verdict> {
    if c.h().order() > 24 {
        return Ok(Verdict::NotApplicable);
    }
    let fast = is_locally_sectionable(c.f);
    let slow = locally_sectionable_by_definition(c.f, c.limits)?;
    expect(fast.holds() == slow.holds(), || format!("order lifts {fast:?}, definition {slow:?}"))
}

fn certificates(c: &Ctx) -> Result<Verdict> {
    let check = |r: &CoverResult, subject: Subject, group: &Arc<GroupTable>| -> Result<Option<String>> {
        if let Err(e) = r.check_cover(group) {
            return Ok(Some(e));
        }
        if let Some(reason) = &r.reason {
            if !certify_reason(subject, reason, c.limits)? {
                return Ok(Some(format!("reason {reason:?} does not re-check")));
            }
        }
        Ok(None)
    };
    let s = sec(c.f, c.limits)?;
    if let Err(e) = s.check_sections(c.f) {
        return expect(false, || e);
    }
    let results = [
        (s, Subject::Sec(c.f), c.h()),
        (sigma(c.h(), c.limits)?, Subject::Sigma(c.h()), c.h()),
        (sigma_cyclic(c.h(), c.limits)?.0, Subject::SigmaCyclic(c.h()), c.h()),
    ];
    for (r, subject, group) in &results {
        if let Some(why) = check(r, *subject, group)? {
            return expect(false, || why);
        }
    }
    Ok(Verdict::Pass)
}

type CheckFn = fn(&Ctx) -> Result<Verdict>;

const CHECKS: [(Check, CheckFn); 23] = [
    (Check::I01, i01),
    (Check::I02, i02),
    (Check::I03, i03),
    (Check::I04, i04),
    (Check::I05, i05),
    (Check::I06, i06),
    (Check::I07, i07),
    (Check::I08, i08),
    (Check::I09, i09),
    (Check::I10, i10),
    (Check::I11, i11),
    (Check::I12, i12),
    (Check::I13, i13),
    (Check::I14, i14),
    (Check::I15, i15),
    (Check::I16, i16),
    (Check::CocycleSection, cocycle_section),
    (Check::CohomologySec, cohomology_sec),
    (Check::TransversalChange, transversal_change),
    (Check::CoprimeShortcut, coprime_shortcut),
    (Check::GlobalImpliesLocal, global_implies_local),
    (Check::LiftCriterion, lift_criterion),
    (Check::Certificates, certificates),
];

fn run_case(case: &Case, partners: &[Hom], limits: &Limits, memo: &Memo) -> Vec<CheckResult> {
    let ctx = Ctx { f: &case.hom, limits, memo, epi: case.hom.is_surjective(), partners };
    CHECKS
        .iter()
        .map(|(check, run)| CheckResult { case: case.key.clone(), check: *check, verdict: to_verdict(run(&ctx)) })
        .collect()
}

/// Pullback partners: up to two other epimorphisms onto the same codomain
/// with domains of order at most 8.
fn partners_for(i: usize, cases: &[Case]) -> Vec<Hom> {
    let f = &cases[i].hom;
    cases
        .iter()
        .enumerate()
        .filter(|(j, c)| {
            *j != i
                && c.hom.is_surjective()
                && c.hom.domain().order() <= 8
                && c.hom.codomain().fingerprint() == f.codomain().fingerprint()
                && **c.hom.codomain() == **f.codomain()
        })
        .take(2)
        .map(|(_, c)| c.hom.clone())
        .collect()
}

/// Epimorphisms with the same domain and kernel must share sec.
fn kernel_classes(cases: &[Case], limits: &Limits, memo: &Memo) -> Vec<CheckResult> {
    let mut classes: BTreeMap<(u64, usize, Vec<usize>), Vec<&Case>> = BTreeMap::new();
    for c in cases.iter().filter(|c| c.hom.is_surjective()) {
        let key = (c.hom.domain().fingerprint(), c.hom.domain().order(), c.hom.kernel_set().to_vec());
        classes.entry(key).or_default().push(c);
    }
    classes
        .into_values()
        .filter(|members| members.len() > 1)
        .map(|members| {
            let verdict = to_verdict((|| {
                let first = memo.sec(&members[0].hom, limits)?;
                for m in &members[1..] {
                    let v = memo.sec(&m.hom, limits)?;
                    if v != first {
                        return expect(false, || format!("{} has sec {first}, {} has {v}", members[0].key, m.key));
                    }
                }
                Ok(Verdict::Pass)
            })());
            let keys: Vec<&str> = members.iter().map(|m| m.key.as_str()).collect();
            CheckResult { case: format!("kernel-class[{}]", keys.join(";")), check: Check::I14, verdict }
        })
        .collect()
}

/// Runs every check on every case; `jobs` bounds the worker count.
pub fn verify_theorems(cases: &[Case], limits: &Limits, jobs: Option<usize>) -> Report {
    let memo = Memo::default();
    let work = || {
        let mut results: Vec<CheckResult> = (0..cases.len())
            .into_par_iter()
            .flat_map_iter(|i| run_case(&cases[i], &partners_for(i, cases), limits, &memo))
            .collect();
        results.extend(kernel_classes(cases, limits, &memo));
        results
    };
    let mut results = match jobs {
        Some(n) => rayon::ThreadPoolBuilder::new()
            .num_threads(n.max(1))
            .build()
            .map(|pool| pool.install(work))
            .unwrap_or_else(|_| work()),
        None => work(),
    };
    results.sort_by(|a, b| a.case.cmp(&b.case).then(a.check.cmp(&b.check)));
    Report { results }
}

/// All checks on a single homomorphism.
pub fn verify_hom(key: &str, f: &Hom, limits: &Limits) -> Report {
    verify_theorems(&[Case { key: key.to_string(), hom: f.clone() }], limits, Some(1))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::Family;

    #[test]
    fn identity_on_klein_group() {
        let lim = Limits::default();
        let v4 = Family::ElementaryAbelian { p: 2, k: 2 }.build(&lim).unwrap();
        let report = verify_hom("id", &Hom::identity(&v4), &lim);
        assert_eq!(report.tally().fail, 0, "{}", report.summary());
        let i02 = report.results.iter().find(|r| r.check == Check::I02).unwrap();
        assert_eq!(i02.verdict, Verdict::Pass);
    }

    #[test]
    fn q8_quotient_passes() {
        let lim = Limits::default();
        let q8 = Family::Quaternion8.build(&lim).unwrap();
        let n = crate::subgroups::generated_subgroup(&q8, &[4]).unwrap();
        let (_, q) = quotient(&q8, &n).unwrap();
        let report = verify_hom("q8", &q, &lim);
        assert_eq!(report.tally().fail, 0, "{}", report.summary());
    }
}
