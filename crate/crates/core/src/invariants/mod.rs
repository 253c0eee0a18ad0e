//! Covering numbers of groups and homomorphisms.
//!
//! Every result is a [`CoverResult`]: either a finite value with a witness
//! cover of the non-identity elements by proper subgroups, or
//! [`Value::Infinite`] with a reason that [`certify_reason`] can re-check.

mod cover;
pub mod oracle;
pub mod verify;

use std::cmp::Ordering;
use std::fmt;
use std::sync::Arc;

pub use cover::{all_covers_of_size, min_cover, Cover};

use crate::arith::totient;
use crate::elemset::ElemSet;
use crate::group::{same_group, GroupTable, Hom};
use crate::homsearch::{exists_local_section, is_locally_sectionable, LocalSection, Sectionability};
use crate::limits::Limits;
use crate::subgroups::{all_subgroups, cyclic_subgroups, image_subgroup, kernel, Subgroup};
use crate::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Value {
    Finite(usize),
    Infinite,
}

impl Value {
    pub fn is_finite(&self) -> bool {
        matches!(self, Value::Finite(_))
    }

    pub fn finite(&self) -> Option<usize> {
        match self {
            Value::Finite(n) => Some(*n),
            Value::Infinite => None,
        }
    }
}

impl Ord for Value {
    fn cmp(&self, other: &Self) -> Ordering {
        match (self, other) {
            (Value::Finite(a), Value::Finite(b)) => a.cmp(b),
            (Value::Finite(_), Value::Infinite) => Ordering::Less,
            (Value::Infinite, Value::Finite(_)) => Ordering::Greater,
            (Value::Infinite, Value::Infinite) => Ordering::Equal,
        }
    }
}

impl PartialOrd for Value {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Value {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Value::Finite(n) => write!(f, "{n}"),
            Value::Infinite => f.write_str("infinite"),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum InfinityReason {
    /// `missing` is not in the image.
    NotSurjective { missing: usize },
    /// The group being covered is cyclic.
    CodomainCyclic,
    /// The domain is cyclic, so no cover by proper subgroups exists.
    DomainCyclicAndValueForcedInfinite,
    /// No preimage of `element` has the same order.
    NotLocallySectionable { element: usize },
    /// No admissible proper subgroup contains `uncovered`.
    NoProperCoverExists { uncovered: usize },
}

impl InfinityReason {
    pub fn code(&self) -> &'static str {
        match self {
            InfinityReason::NotSurjective { .. } => "NotSurjective",
            InfinityReason::CodomainCyclic => "CodomainCyclic",
            InfinityReason::DomainCyclicAndValueForcedInfinite => "DomainCyclicAndValueForcedInfinite",
            InfinityReason::NotLocallySectionable { .. } => "NotLocallySectionable",
            InfinityReason::NoProperCoverExists { .. } => "NoProperCoverExists",
        }
    }

    pub fn element(&self) -> Option<usize> {
        match self {
            InfinityReason::NotSurjective { missing } => Some(*missing),
            InfinityReason::NotLocallySectionable { element } => Some(*element),
            InfinityReason::NoProperCoverExists { uncovered } => Some(*uncovered),
            _ => None,
        }
    }
}

/// Outcome of a covering-number computation. `sections[i]` belongs to
/// `witness[i]` when present.
#[derive(Clone, Debug)]
pub struct CoverResult {
    pub value: Value,
    pub witness: Vec<Subgroup>,
    pub sections: Vec<LocalSection>,
    pub reason: Option<InfinityReason>,
}

impl CoverResult {
    pub fn infinite(reason: InfinityReason) -> Self {
        CoverResult { value: Value::Infinite, witness: vec![], sections: vec![], reason: Some(reason) }
    }

    fn finite(witness: Vec<Subgroup>, sections: Vec<LocalSection>) -> Self {
        CoverResult { value: Value::Finite(witness.len()), witness, sections, reason: None }
    }

    /// Finite results: proper subgroups of `group` whose union is `group`,
    /// as many as the value. Infinite results: empty witness and a reason.
    pub fn check_cover(&self, group: &Arc<GroupTable>) -> std::result::Result<(), String> {
        match self.value {
            Value::Infinite => {
                if !self.witness.is_empty() || self.reason.is_none() {
                    return Err("infinite value must have a reason and no witness".into());
                }
                Ok(())
            }
            Value::Finite(n) => {
                if self.witness.len() != n {
                    return Err(format!("value {n} but {} witness subgroups", self.witness.len()));
                }
                let mut union = ElemSet::singleton(0);
                for s in &self.witness {
                    if !same_group(s.parent(), group) {
                        return Err("witness subgroup of a different group".into());
                    }
                    if !s.is_proper() {
                        return Err(format!("witness subgroup {:?} is not proper", s.members()));
                    }
                    if Subgroup::from_closed(group.clone(), *s.members()).is_err() {
                        return Err(format!("witness {:?} is not a subgroup", s.members()));
                    }
                    union = union.union(s.members());
                }
                if union != group.all() {
                    let missing = group.all().difference(&union).first().unwrap();
                    return Err(format!("witness misses element {missing}"));
                }
                Ok(())
            }
        }
    }

    /// [`check_cover`](Self::check_cover) on the codomain plus `f ∘ s_i = incl`
    /// for every attached section.
    pub fn check_sections(&self, f: &Hom) -> std::result::Result<(), String> {
        if self.value.is_finite() && self.sections.len() != self.witness.len() {
            return Err("sections not aligned with witness".into());
        }
        for (i, ls) in self.sections.iter().enumerate() {
            if !ls.is_valid_for(f) {
                return Err(format!("section {i} is not a section of f"));
            }
        }
        Ok(())
    }
}

// ---------------------------------------------------------------------------
// σ and σ_c
// ---------------------------------------------------------------------------

fn non_identity(g: &GroupTable) -> ElemSet {
    let mut u = g.all();
    u.remove(0);
    u
}

/// Minimum cover of `group ∖ {1}` by `candidates`, which must be sorted
/// canonically so the witness is the least one.
fn cover_by(
    group: &GroupTable,
    candidates: &[Subgroup],
    limits: &Limits,
) -> Result<std::result::Result<Vec<usize>, usize>> {
    let universe = non_identity(group);
    let sets: Vec<ElemSet> = candidates.iter().map(|s| *s.members()).collect();
    match min_cover(&universe, &sets, limits.cover_nodes)? {
        Some(c) => Ok(Ok(c.chosen)),
        None => {
            let union = sets.iter().fold(ElemSet::empty(), |a, s| a.union(s));
            Ok(Err(universe.difference(&union).first().unwrap()))
        }
    }
}

/// The covering number: least number of proper subgroups with union `G`.
pub fn sigma(g: &Arc<GroupTable>, limits: &Limits) -> Result<CoverResult> {
    limits.check_order(g.order())?;
    if g.is_cyclic() {
        return Ok(CoverResult::infinite(InfinityReason::CodomainCyclic));
    }
    let maximal = all_subgroups(g, limits)?.maximal_proper_subgroups();
    match cover_by(g, &maximal, limits)? {
        Ok(chosen) => {
            let witness: Vec<Subgroup> = chosen.into_iter().map(|i| maximal[i].clone()).collect();
            assert!(witness.len() >= 3, "a group is never a union of two proper subgroups");
            Ok(CoverResult::finite(witness, vec![]))
        }
        Err(uncovered) => Ok(CoverResult::infinite(InfinityReason::NoProperCoverExists { uncovered })),
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OrderRow {
    pub order: usize,
    pub elements: usize,
    pub totient: usize,
    pub subgroups: usize,
}

/// `Σ_{x≠1} 1/φ(o(x))`, which counts the nontrivial cyclic subgroups.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CyclicBoundReport {
    pub bound: usize,
    pub per_order: Vec<OrderRow>,
}

pub fn cyclic_bound(g: &GroupTable) -> CyclicBoundReport {
    let mut per_order: Vec<OrderRow> = Vec::new();
    for x in g.elements().skip(1) {
        let o = g.elem_order(x);
        match per_order.iter_mut().find(|r| r.order == o) {
            Some(r) => r.elements += 1,
            None => per_order.push(OrderRow { order: o, elements: 1, totient: totient(o), subgroups: 0 }),
        }
    }
    per_order.sort_by_key(|r| r.order);
    for r in &mut per_order {
        debug_assert_eq!(r.elements % r.totient, 0);
        r.subgroups = r.elements / r.totient;
    }
    let bound = per_order.iter().map(|r| r.subgroups).sum();
    CyclicBoundReport { bound, per_order }
}

/// The cyclic covering number, together with the totient bound.
pub fn sigma_cyclic(g: &Arc<GroupTable>, limits: &Limits) -> Result<(CoverResult, CyclicBoundReport)> {
    limits.check_order(g.order())?;
    let report = cyclic_bound(g);
    if g.is_cyclic() {
        return Ok((CoverResult::infinite(InfinityReason::CodomainCyclic), report));
    }
    let maximal: Vec<Subgroup> = cyclic_subgroups(g)
        .into_iter()
        .filter(|c| c.maximal_cyclic)
        .map(|c| c.subgroup)
        .collect();
    let result = match cover_by(g, &maximal, limits)? {
        Ok(chosen) => CoverResult::finite(chosen.into_iter().map(|i| maximal[i].clone()).collect(), vec![]),
        Err(uncovered) => CoverResult::infinite(InfinityReason::NoProperCoverExists { uncovered }),
    };
    Ok((result, report))
}

// ---------------------------------------------------------------------------
// 𝔏(f) and sec(f)
// ---------------------------------------------------------------------------

/// Proper subgroups of the codomain carrying a local section.
#[derive(Clone, Debug)]
pub struct SectionablePoset {
    pub hom: Hom,
    /// Canonically sorted.
    pub elements: Vec<Subgroup>,
    /// Indices into `elements`, ascending.
    pub maximal: Vec<usize>,
    /// One section per maximal element.
    pub sections: Vec<LocalSection>,
    pub cover_number: Value,
}

impl SectionablePoset {
    pub fn maximal_elements(&self) -> Vec<Subgroup> {
        self.maximal.iter().map(|&i| self.elements[i].clone()).collect()
    }
}

/// Scans proper subgroups from the largest down. Anything inside a known
/// sectionable subgroup is sectionable by restriction; the rest are searched.
pub fn sectionable_poset(f: &Hom, limits: &Limits) -> Result<SectionablePoset> {
    let h = f.codomain();
    limits.check_order(h.order())?;
    limits.check_order(f.domain().order())?;
    let lattice = all_subgroups(h, limits)?;
    let liftable = order_liftable(f);
    let mut found: Vec<(Subgroup, LocalSection)> = Vec::new();
    let mut elements = Vec::new();
    for l in lattice.proper().collect::<Vec<_>>().into_iter().rev() {
        if found.iter().any(|(m, _)| l.is_subset_of(m)) {
            elements.push(l.clone());
            continue;
        }
        if !l.members().is_subset(&liftable) {
            continue;
        }
        if let Some(ls) = exists_local_section(f, l, limits)? {
            found.push((l.clone(), ls));
            elements.push(l.clone());
        }
    }
    elements.sort_by(|a, b| a.canonical_cmp(b));
    found.sort_by(|a, b| a.0.canonical_cmp(&b.0));
    let maximal: Vec<usize> = found
        .iter()
        .map(|(m, _)| elements.iter().position(|e| e == m).unwrap())
        .collect();
    let sections: Vec<LocalSection> = found.into_iter().map(|(_, s)| s).collect();
    let candidates: Vec<Subgroup> = maximal.iter().map(|&i| elements[i].clone()).collect();
    let cover_number = if h.is_trivial() {
        Value::Infinite
    } else {
        match cover_by(h, &candidates, limits)? {
            Ok(chosen) => Value::Finite(chosen.len()),
            Err(_) => Value::Infinite,
        }
    };
    Ok(SectionablePoset { hom: f.clone(), elements, maximal, sections, cover_number })
}

/// Codomain elements having a preimage of the same order.
fn order_liftable(f: &Hom) -> ElemSet {
    let (g, h) = (f.domain(), f.codomain());
    g.elements()
        .filter(|&a| g.elem_order(a) == h.elem_order(f.apply(a)))
        .map(|a| f.apply(a))
        .collect()
}

/// The sectional number: least number of proper subgroups of the codomain,
/// each with a local section, whose union is the codomain.
pub fn sec(f: &Hom, limits: &Limits) -> Result<CoverResult> {
    let h = f.codomain();
    limits.check_order(h.order())?;
    limits.check_order(f.domain().order())?;
    if let Some(missing) = f.first_missed() {
        return Ok(CoverResult::infinite(InfinityReason::NotSurjective { missing }));
    }
    if h.is_cyclic() {
        return Ok(CoverResult::infinite(InfinityReason::CodomainCyclic));
    }
    if let Sectionability::Fails { element } = is_locally_sectionable(f) {
        return Ok(CoverResult::infinite(InfinityReason::NotLocallySectionable { element }));
    }
    let poset = sectionable_poset(f, limits)?;
    let candidates = poset.maximal_elements();
    match cover_by(h, &candidates, limits)? {
        Ok(chosen) => {
            let witness = chosen.iter().map(|&i| candidates[i].clone()).collect();
            let sections = chosen.iter().map(|&i| poset.sections[i].clone()).collect();
            Ok(CoverResult::finite(witness, sections))
        }
        Err(uncovered) => Ok(CoverResult::infinite(InfinityReason::NoProperCoverExists { uncovered })),
    }
}

// ---------------------------------------------------------------------------
// σ(f)
// ---------------------------------------------------------------------------

/// A section of `f` over `f(S)` with values inside `S`, if one exists.
pub fn splitting_section(f: &Hom, s: &Subgroup, limits: &Limits) -> Result<Option<LocalSection>> {
    if !same_group(s.parent(), f.domain()) {
        return Err(Error::ParentMismatch);
    }
    let induced = s.induced();
    let restricted = induced.inclusion.then(f)?;
    let image = image_subgroup(f, s)?;
    Ok(exists_local_section(&restricted, &image, limits)?.map(|ls| LocalSection {
        subgroup: image,
        section: ls.section.then(&induced.inclusion).expect("composable"),
    }))
}

/// Whether `Ω(a, b) = a·s(b)` is an isomorphism `Ker(f) ⋊ f(S) → S` for the
/// conjugation action `b·a = s(b) a s(b)⁻¹`.
pub fn check_omega(f: &Hom, s: &Subgroup, ls: &LocalSection) -> bool {
    let g = f.domain();
    let ker = kernel(f).elements();
    let pairs = ls.pairs();
    let omega = |a: usize, i: usize| g.mul(a, pairs[i].1);
    let mut hit = ElemSet::empty();
    for &a in &ker {
        for i in 0..pairs.len() {
            let x = omega(a, i);
            if !s.contains(x) || !hit.insert(x) {
                return false;
            }
        }
    }
    if hit != *s.members() {
        return false;
    }
    let index_of = |b: usize| pairs.iter().position(|&(x, _)| x == b).unwrap();
    let h = f.codomain();
    for &a1 in &ker {
        for (i1, &(b1, s1)) in pairs.iter().enumerate() {
            for &a2 in &ker {
                for (i2, &(b2, _)) in pairs.iter().enumerate() {
                    let twisted = g.mul(g.mul(s1, a2), g.inv(s1));
                    let lhs = g.mul(omega(a1, i1), omega(a2, i2));
                    let rhs = omega(g.mul(a1, twisted), index_of(h.mul(b1, b2)));
                    if lhs != rhs {
                        return false;
                    }
                }
            }
        }
    }
    true
}

/// The covering number of a homomorphism: least number of proper subgroups
/// `S ⊋ Ker(f)` of the domain, each split over its image, covering the domain.
pub fn sigma_hom(f: &Hom, limits: &Limits) -> Result<CoverResult> {
    let g = f.domain();
    limits.check_order(g.order())?;
    if !f.is_surjective() {
        return Err(Error::NotSurjective);
    }
    if g.is_cyclic() {
        return Ok(CoverResult::infinite(InfinityReason::DomainCyclicAndValueForcedInfinite));
    }
    let ker = kernel(f);
    let lattice = all_subgroups(g, limits)?;
    let mut found: Vec<(Subgroup, LocalSection)> = Vec::new();
    for s in lattice.proper().collect::<Vec<_>>().into_iter().rev() {
        if !ker.is_subset_of(s) || s.order() == ker.order() {
            continue;
        }
        if found.iter().any(|(m, _)| s.is_subset_of(m)) {
            continue;
        }
        if let Some(ls) = splitting_section(f, s, limits)? {
            found.push((s.clone(), ls));
        }
    }
    found.sort_by(|a, b| a.0.canonical_cmp(&b.0));
    let candidates: Vec<Subgroup> = found.iter().map(|(s, _)| s.clone()).collect();
    match cover_by(g, &candidates, limits)? {
        Ok(chosen) => {
            let witness = chosen.iter().map(|&i| found[i].0.clone()).collect();
            let sections = chosen.iter().map(|&i| found[i].1.clone()).collect();
            Ok(CoverResult::finite(witness, sections))
        }
        Err(uncovered) => Ok(CoverResult::infinite(InfinityReason::NoProperCoverExists { uncovered })),
    }
}

// ---------------------------------------------------------------------------
// Minimum covers and reason certificates
// ---------------------------------------------------------------------------

pub const MINIMUM_COVERS_MAX_ORDER: usize = 24;

/// All covers of `H` by `σ(H)` proper subgroups, drawn from every nontrivial
/// proper subgroup.
pub fn enumerate_minimum_covers(h: &Arc<GroupTable>, limits: &Limits) -> Result<Vec<Vec<Subgroup>>> {
    if h.order() > MINIMUM_COVERS_MAX_ORDER {
        return Err(Error::OrderCapExceeded { order: h.order(), cap: MINIMUM_COVERS_MAX_ORDER });
    }
    let size = match sigma(h, limits)?.value {
        Value::Finite(n) => n,
        Value::Infinite => return Err(Error::InvalidParameter("covering number is infinite".into())),
    };
    let proper: Vec<Subgroup> = all_subgroups(h, limits)?
        .proper()
        .filter(|s| !s.is_trivial())
        .cloned()
        .collect();
    let sets: Vec<ElemSet> = proper.iter().map(|s| *s.members()).collect();
    let covers = all_covers_of_size(&non_identity(h), &sets, size, limits.cover_nodes)?;
    Ok(covers
        .into_iter()
        .map(|c| c.into_iter().map(|i| proper[i].clone()).collect())
        .collect())
}

/// Which result a reason is attached to.
#[derive(Clone, Copy, Debug)]
pub enum Subject<'a> {
    Sigma(&'a Arc<GroupTable>),
    SigmaCyclic(&'a Arc<GroupTable>),
    Sec(&'a Hom),
    SigmaHom(&'a Hom),
}

/// Re-checks an infinity reason by a predicate independent of the code that
/// produced it.
pub fn certify_reason(subject: Subject<'_>, reason: &InfinityReason, limits: &Limits) -> Result<bool> {
    use InfinityReason::*;
    Ok(match (subject, reason) {
        (Subject::Sigma(g) | Subject::SigmaCyclic(g), CodomainCyclic) => {
            g.elements().any(|x| g.elem_order(x) == g.order())
        }
        (Subject::Sec(f), CodomainCyclic) => {
            let h = f.codomain();
            h.elements().any(|x| h.elem_order(x) == h.order())
        }
        (Subject::SigmaHom(f), DomainCyclicAndValueForcedInfinite) => {
            let g = f.domain();
            g.elements().any(|x| g.elem_order(x) == g.order())
        }
        (Subject::Sec(f), NotSurjective { missing }) => {
            *missing < f.codomain().order() && f.images().iter().all(|y| y != missing)
        }
        (Subject::Sec(f), NotLocallySectionable { element }) => {
            let h = f.codomain();
            *element < h.order()
                && f.fiber(*element).iter().all(|&a| f.domain().elem_order(a) != h.elem_order(*element))
        }
        (Subject::Sigma(g), NoProperCoverExists { uncovered }) => {
            all_subgroups(g, limits)?.proper().all(|s| !s.contains(*uncovered))
        }
        (Subject::SigmaCyclic(g), NoProperCoverExists { uncovered }) => {
            cyclic_subgroups(g).iter().all(|c| !c.subgroup.is_proper() || !c.subgroup.contains(*uncovered))
        }
        (Subject::Sec(f), NoProperCoverExists { uncovered }) => {
            let mut ok = true;
            for l in all_subgroups(f.codomain(), limits)?.proper() {
                if l.contains(*uncovered) && exists_local_section(f, l, limits)?.is_some() {
                    ok = false;
                    break;
                }
            }
            ok
        }
        (Subject::SigmaHom(f), NoProperCoverExists { uncovered }) => {
            let ker = kernel(f);
            let mut ok = true;
            for s in all_subgroups(f.domain(), limits)?.proper() {
                if s.contains(*uncovered)
                    && ker.is_subset_of(s)
                    && s.order() > ker.order()
                    && splitting_section(f, s, limits)?.is_some()
                {
                    ok = false;
                    break;
                }
            }
            ok
        }
        _ => false,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::{make_cyclic, make_product, quotient, Family};
    use crate::subgroups::generated_subgroup;

    fn lim() -> Limits {
        Limits::default()
    }

    fn build(f: Family) -> Arc<GroupTable> {
        f.build(&lim()).unwrap()
    }

    fn v4() -> Arc<GroupTable> {
        build(Family::ElementaryAbelian { p: 2, k: 2 })
    }

    fn members(r: &CoverResult) -> Vec<Vec<usize>> {
        r.witness.iter().map(|s| s.elements()).collect()
    }

    #[test]
    fn value_order() {
        assert!(Value::Finite(1000) < Value::Infinite);
        assert!(Value::Finite(3) < Value::Finite(4));
        assert_eq!(Value::Infinite.to_string(), "infinite");
    }

    #[test]
    fn sigma_small_groups() {
        let r = sigma(&v4(), &lim()).unwrap();
        assert_eq!(r.value, Value::Finite(3));
        assert_eq!(members(&r), vec![vec![0, 1], vec![0, 2], vec![0, 3]]);
        r.check_cover(&v4()).unwrap();
        let z6 = make_cyclic(6, &lim()).unwrap();
        let r = sigma(&z6, &lim()).unwrap();
        assert_eq!(r.reason, Some(InfinityReason::CodomainCyclic));
        assert!(certify_reason(Subject::Sigma(&z6), r.reason.as_ref().unwrap(), &lim()).unwrap());
        let s3 = build(Family::Symmetric(3));
        assert_eq!(sigma(&s3, &lim()).unwrap().value, Value::Finite(4));
    }

    #[test]
    fn sigma_cyclic_values() {
        let (r, rep) = sigma_cyclic(&build(Family::ElementaryAbelian { p: 3, k: 2 }), &lim()).unwrap();
        assert_eq!(r.value, Value::Finite(4));
        assert_eq!(rep.bound, 4);
        let (r, _) = sigma_cyclic(&build(Family::ElementaryAbelian { p: 2, k: 3 }), &lim()).unwrap();
        assert_eq!(r.value, Value::Finite(7));
        let q8 = build(Family::Quaternion8);
        let (r, rep) = sigma_cyclic(&q8, &lim()).unwrap();
        assert_eq!(r.value, Value::Finite(3));
        assert_eq!(rep.bound, 4);
        assert_eq!(rep.per_order, vec![
            OrderRow { order: 2, elements: 1, totient: 1, subgroups: 1 },
            OrderRow { order: 4, elements: 6, totient: 2, subgroups: 3 },
        ]);
    }

    #[test]
    fn sec_of_identity_and_projection() {
        let id = Hom::identity(&v4());
        let r = sec(&id, &lim()).unwrap();
        assert_eq!(r.value, Value::Finite(3));
        r.check_sections(&id).unwrap();
        let e = build(Family::ElementaryAbelian { p: 2, k: 3 });
        let f = Hom::new(e.clone(), v4(), e.elements().map(|x| x >> 1).collect()).unwrap();
        let r = sec(&f, &lim()).unwrap();
        assert_eq!(r.value, Value::Finite(3));
        r.check_cover(f.codomain()).unwrap();
        r.check_sections(&f).unwrap();
    }

    #[test]
    fn sec_of_q8_quotient() {
        let q8 = build(Family::Quaternion8);
        let (_, q) = quotient(&q8, &generated_subgroup(&q8, &[4]).unwrap()).unwrap();
        let r = sec(&q, &lim()).unwrap();
        assert_eq!(r.value, Value::Infinite);
        let reason = r.reason.clone().unwrap();
        assert_eq!(reason.code(), "NotLocallySectionable");
        assert!(certify_reason(Subject::Sec(&q), &reason, &lim()).unwrap());
        let poset = sectionable_poset(&q, &lim()).unwrap();
        assert_eq!(poset.elements.len(), 1);
        assert!(poset.elements[0].is_trivial());
        assert_eq!(poset.cover_number, Value::Infinite);
    }

    #[test]
    fn sec_ladder_reasons() {
        let z4 = make_cyclic(4, &lim()).unwrap();
        let inc = Hom::new(make_cyclic(2, &lim()).unwrap(), z4.clone(), vec![0, 2]).unwrap();
        assert_eq!(sec(&inc, &lim()).unwrap().reason, Some(InfinityReason::NotSurjective { missing: 1 }));
        let red = Hom::new(z4, make_cyclic(2, &lim()).unwrap(), vec![0, 1, 0, 1]).unwrap();
        assert_eq!(sec(&red, &lim()).unwrap().reason, Some(InfinityReason::CodomainCyclic));
    }

    #[test]
    fn poset_of_projection() {
        let e = build(Family::ElementaryAbelian { p: 2, k: 3 });
        let f = Hom::new(e.clone(), v4(), e.elements().map(|x| x >> 1).collect()).unwrap();
        let p = sectionable_poset(&f, &lim()).unwrap();
        assert_eq!(p.maximal.len(), 3);
        assert_eq!(p.cover_number, Value::Finite(3));
        assert_eq!(p.elements.len(), 4);
    }

    #[test]
    fn sigma_hom_examples() {
        let z2 = make_cyclic(2, &lim()).unwrap();
        let z4 = make_cyclic(4, &lim()).unwrap();
        let red = Hom::new(z4, z2, vec![0, 1, 0, 1]).unwrap();
        assert_eq!(sigma_hom(&red, &lim()).unwrap().value, Value::Infinite);

        let p = make_product(&make_cyclic(2, &lim()).unwrap(), &make_cyclic(2, &lim()).unwrap(), &lim()).unwrap();
        let r = sigma_hom(&p.projection(0), &lim()).unwrap();
        assert_eq!(r.value, Value::Infinite);
        assert!(certify_reason(Subject::SigmaHom(&p.projection(0)), r.reason.as_ref().unwrap(), &lim()).unwrap());

        let e = build(Family::ElementaryAbelian { p: 2, k: 3 });
        let f = Hom::new(e.clone(), v4(), e.elements().map(|x| x >> 1).collect()).unwrap();
        let r = sigma_hom(&f, &lim()).unwrap();
        assert_eq!(r.value, Value::Finite(3));
        r.check_cover(&e).unwrap();
        for (s, ls) in r.witness.iter().zip(&r.sections) {
            assert!(ls.is_valid_for(&f));
            assert!(check_omega(&f, s, ls));
        }
    }

    #[test]
    fn minimum_covers() {
        let covers = enumerate_minimum_covers(&v4(), &lim()).unwrap();
        assert_eq!(covers.len(), 1);
        let q8 = build(Family::Quaternion8);
        let covers = enumerate_minimum_covers(&q8, &lim()).unwrap();
        let ijk: Vec<Vec<usize>> = vec![vec![0, 1, 4, 5], vec![0, 2, 4, 6], vec![0, 3, 4, 7]];
        assert!(covers.iter().any(|c| c.iter().map(|s| s.elements()).collect::<Vec<_>>() == ijk));
    }
}
