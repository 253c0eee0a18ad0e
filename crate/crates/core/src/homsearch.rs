//! Homomorphism enumeration by backtracking over generator images, and the
//! decision procedures built on it: local and global sections, locally
//! sectionable maps, fibrewise morphisms, `Hom(G, A)` and H-points.
//!
//! A search fixes the domain's greedy generating sequence, assigns images to
//! the generators in ascending codomain index, and after each assignment
//! propagates the partial map along right multiplication by the assigned
//! generators. Any conflict prunes the branch. Candidate images are filtered
//! by order divisibility and, for fiber-constrained queries, by the required
//! fiber. The first solution found is therefore the least by generator-image
//! tuple.

use std::collections::BTreeMap;
use std::sync::Arc;

use crate::group::{same_group, GroupTable, Hom};
use crate::limits::Limits;
use crate::subgroups::{all_subgroups, Subgroup};
use crate::{Error, Result};

/// Solutions `s` must satisfy `along ∘ s = target`.
#[derive(Clone, Debug)]
pub struct FiberConstraint {
    pub along: Hom,
    pub target: Hom,
}

#[derive(Clone, Debug)]
pub struct HomQuery {
    pub domain: Arc<GroupTable>,
    pub codomain: Arc<GroupTable>,
    pub pinned: BTreeMap<usize, usize>,
    pub fiber: Option<FiberConstraint>,
    pub limit: Option<usize>,
}

impl HomQuery {
    pub fn new(domain: &Arc<GroupTable>, codomain: &Arc<GroupTable>) -> Self {
        HomQuery {
            domain: domain.clone(),
            codomain: codomain.clone(),
            pinned: BTreeMap::new(),
            fiber: None,
            limit: None,
        }
    }

    /// Require `s(a) = b`.
    pub fn pin(mut self, a: usize, b: usize) -> Result<Self> {
        if a >= self.domain.order() || b >= self.codomain.order() {
            return Err(Error::InvalidParameter("pinned element out of range".into()));
        }
        if !self.domain.elem_order(a).is_multiple_of(self.codomain.elem_order(b)) {
            return Err(Error::InvalidParameter(format!(
                "cannot send an element of order {} to one of order {}",
                self.domain.elem_order(a),
                self.codomain.elem_order(b)
            )));
        }
        self.pinned.insert(a, b);
        Ok(self)
    }

    pub fn with_fiber(mut self, along: Hom, target: Hom) -> Result<Self> {
        if !same_group(along.domain(), &self.codomain)
            || !same_group(target.domain(), &self.domain)
            || !same_group(along.codomain(), target.codomain())
        {
            return Err(Error::CodomainMismatch);
        }
        self.fiber = Some(FiberConstraint { along, target });
        Ok(self)
    }

    pub fn limit(mut self, n: usize) -> Self {
        self.limit = Some(n);
        self
    }
}

/// Backtracking state for one query.
struct Engine<'a> {
    dom: &'a GroupTable,
    cod: &'a GroupTable,
    gens: Vec<usize>,
    candidates: Vec<Vec<usize>>,
    pinned: Vec<Option<usize>>,
    nodes: u64,
    budget: u64,
}

impl<'a> Engine<'a> {
    fn new(
        dom: &'a GroupTable,
        cod: &'a GroupTable,
        pinned: &BTreeMap<usize, usize>,
        budget: u64,
        admissible: impl Fn(usize, usize) -> bool,
    ) -> Self {
        let gens = dom.generating_sequence();
        let mut pin = vec![None; dom.order()];
        for (&a, &b) in pinned {
            pin[a] = Some(b);
        }
        let candidates = gens
            .iter()
            .map(|&g| {
                cod.elements()
                    .filter(|&y| dom.elem_order(g).is_multiple_of(cod.elem_order(y)))
                    .filter(|&y| pin[g].is_none_or(|p| p == y))
                    .filter(|&y| admissible(g, y))
                    .collect()
            })
            .collect();
        Engine { dom, cod, gens, candidates, pinned: pin, nodes: 0, budget }
    }

    /// Extends the assignment `gens[i] ↦ chosen[i]` to `⟨gens[..chosen.len()]⟩`.
    fn propagate(&self, chosen: &[usize]) -> Option<Vec<usize>> {
        const NONE: usize = usize::MAX;
        let mut img = vec![NONE; self.dom.order()];
        if matches!(self.pinned[0], Some(p) if p != 0) {
            return None;
        }
        img[0] = 0;
        let mut queue = vec![0];
        while let Some(e) = queue.pop() {
            for (&g, &y) in self.gens.iter().zip(chosen) {
                let e2 = self.dom.mul(e, g);
                let v = self.cod.mul(img[e], y);
                if img[e2] == NONE {
                    if matches!(self.pinned[e2], Some(p) if p != v) {
                        return None;
                    }
                    img[e2] = v;
                    queue.push(e2);
                } else if img[e2] != v {
                    return None;
                }
            }
        }
        Some(img)
    }

    /// Calls `visit` on every complete image array until it returns false.
    fn run(&mut self, visit: &mut dyn FnMut(Vec<usize>) -> bool) -> Result<()> {
        let mut chosen = Vec::with_capacity(self.gens.len());
        self.descend(&mut chosen, visit)?;
        Ok(())
    }

    fn descend(&mut self, chosen: &mut Vec<usize>, visit: &mut dyn FnMut(Vec<usize>) -> bool) -> Result<bool> {
        let depth = chosen.len();
        if depth == self.gens.len() {
            let img = match self.propagate(chosen) {
                Some(img) => img,
                None => return Ok(true),
            };
            return Ok(visit(img));
        }
        for i in 0..self.candidates[depth].len() {
            self.nodes += 1;
            if self.nodes > self.budget {
                return Err(Error::SearchBudgetExceeded { budget: self.budget });
            }
            chosen.push(self.candidates[depth][i]);
            let ok = depth + 1 == self.gens.len() || self.propagate(chosen).is_some();
            let keep_going = if ok { self.descend(chosen, visit)? } else { true };
            chosen.pop();
            if !keep_going {
                return Ok(false);
            }
        }
        Ok(true)
    }
}

pub fn enumerate_homs(q: &HomQuery, limits: &Limits) -> Result<Vec<Hom>> {
    limits.check_order(q.domain.order())?;
    let fiber = q.fiber.as_ref();
    let mut engine = Engine::new(&q.domain, &q.codomain, &q.pinned, limits.search_nodes, |g, y| {
        fiber.is_none_or(|fc| fc.along.apply(y) == fc.target.apply(g))
    });
    let mut out = Vec::new();
    let mut failure = None;
    engine.run(&mut |img| {
        match Hom::new(q.domain.clone(), q.codomain.clone(), img) {
            Ok(h) => out.push(h),
            Err(e) => {
                failure = Some(e);
                return false;
            }
        }
        q.limit.is_none_or(|n| out.len() < n)
    })?;
    if let Some(e) = failure {
        return Err(e);
    }
    Ok(out)
}

fn first_hom(q: HomQuery, limits: &Limits) -> Result<Option<Hom>> {
    Ok(enumerate_homs(&q.limit(1), limits)?.into_iter().next())
}

// ---------------------------------------------------------------------------
// Sections
// ---------------------------------------------------------------------------

/// `s : L → G` with `f ∘ s = incl_L`. The section's domain is `L` as its own
/// table; `images_on_members` realigns it with `L`'s elements in `H`.
#[derive(Clone, Debug)]
pub struct LocalSection {
    pub subgroup: Subgroup,
    pub section: Hom,
}

impl LocalSection {
    /// `(x, s(x))` for every `x ∈ L`, ascending in `x`.
    pub fn pairs(&self) -> Vec<(usize, usize)> {
        self.subgroup
            .elements()
            .into_iter()
            .zip(self.section.images().iter().copied())
            .collect()
    }

    pub fn images_on_members(&self) -> Vec<usize> {
        self.section.images().to_vec()
    }

    /// Re-checks `f ∘ s = incl_L` and that `s` is a homomorphism.
    pub fn is_valid_for(&self, f: &Hom) -> bool {
        let induced = self.subgroup.induced();
        same_group(self.subgroup.parent(), f.codomain())
            && same_group(self.section.codomain(), f.domain())
            && Hom::new(induced.group.clone(), f.domain().clone(), self.section.images().to_vec()).is_ok()
            && self.pairs().iter().all(|&(x, a)| f.apply(a) == x)
    }
}

pub fn exists_local_section(f: &Hom, l: &Subgroup, limits: &Limits) -> Result<Option<LocalSection>> {
    if !same_group(l.parent(), f.codomain()) {
        return Err(Error::ParentMismatch);
    }
    let induced = l.induced();
    let q = HomQuery::new(&induced.group, f.domain()).with_fiber(f.clone(), induced.inclusion.clone())?;
    Ok(first_hom(q, limits)?.map(|section| LocalSection { subgroup: l.clone(), section }))
}

/// A homomorphism `s : H → G` with `f ∘ s = id_H`.
pub fn exists_global_section(f: &Hom, limits: &Limits) -> Result<Option<Hom>> {
    Ok(exists_local_section(f, &Subgroup::full(f.codomain()), limits)?.map(|ls| ls.section))
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Sectionability {
    /// `lifts[b]` has `f(lifts[b]) = b` and the same order as `b`.
    Sectionable { lifts: Vec<usize> },
    /// No lift of `element` has its order.
    Fails { element: usize },
}

impl Sectionability {
    pub fn holds(&self) -> bool {
        matches!(self, Sectionability::Sectionable { .. })
    }
}

/// Order-lift criterion: every `b` needs some `a` with `f(a) = b` and
/// `o(a) = o(b)`. Valid for finite codomains.
pub fn is_locally_sectionable(f: &Hom) -> Sectionability {
    let (g, h) = (f.domain(), f.codomain());
    let mut lifts = vec![usize::MAX; h.order()];
    for a in g.elements() {
        let b = f.apply(a);
        if lifts[b] == usize::MAX && g.elem_order(a) == h.elem_order(b) {
            lifts[b] = a;
        }
    }
    match lifts.iter().position(|&a| a == usize::MAX) {
        Some(b) => Sectionability::Fails { element: b },
        None => Sectionability::Sectionable { lifts },
    }
}

/// Literal reading: each `b ≠ 1` lies in some subgroup carrying a local
/// section. Exponential; used for cross-checking only.
pub fn locally_sectionable_by_definition(f: &Hom, limits: &Limits) -> Result<Sectionability> {
    let h = f.codomain();
    let lattice = all_subgroups(h, limits)?;
    let mut lifts = vec![usize::MAX; h.order()];
    lifts[0] = 0;
    for b in 1..h.order() {
        for l in lattice.subgroups().iter().filter(|l| l.contains(b)) {
            if let Some(ls) = exists_local_section(f, l, limits)? {
                lifts[b] = ls.pairs().into_iter().find(|&(x, _)| x == b).map(|(_, a)| a).unwrap();
                break;
            }
        }
        if lifts[b] == usize::MAX {
            return Ok(Sectionability::Fails { element: b });
        }
    }
    Ok(Sectionability::Sectionable { lifts })
}

/// `ψ : G → G2` with `f2 ∘ ψ = f`.
pub fn exists_fibrewise_morphism(f: &Hom, f2: &Hom, limits: &Limits) -> Result<Option<Hom>> {
    if !same_group(f.codomain(), f2.codomain()) {
        return Err(Error::CodomainMismatch);
    }
    let q = HomQuery::new(f.domain(), f2.domain()).with_fiber(f2.clone(), f.clone())?;
    first_hom(q, limits)
}

/// Bijective homomorphism `G → H`, if any. Candidates keep element orders.
pub fn find_isomorphism(g: &Arc<GroupTable>, h: &Arc<GroupTable>, limits: &Limits) -> Result<Option<Hom>> {
    if g.order() != h.order() {
        return Ok(None);
    }
    let mut og = g.element_orders().to_vec();
    let mut oh = h.element_orders().to_vec();
    og.sort_unstable();
    oh.sort_unstable();
    if og != oh {
        return Ok(None);
    }
    let mut engine = Engine::new(g, h, &BTreeMap::new(), limits.search_nodes, |x, y| {
        g.elem_order(x) == h.elem_order(y)
    });
    let mut found = None;
    engine.run(&mut |img| {
        let mut hit = vec![false; img.len()];
        img.iter().for_each(|&y| hit[y] = true);
        if hit.iter().all(|&b| b) {
            found = Some(img);
            false
        } else {
            true
        }
    })?;
    found.map(|img| Hom::new(g.clone(), h.clone(), img)).transpose()
}

// ---------------------------------------------------------------------------
// Hom(G, A) and H-points
// ---------------------------------------------------------------------------

/// `Hom(G, A)` for abelian `A` under the pointwise product. `homs[i]` is the
/// homomorphism at index `i` of `base`; index 0 is the trivial one.
#[derive(Clone, Debug)]
pub struct HomGroup {
    pub base: Arc<GroupTable>,
    pub homs: Vec<Hom>,
    pub source: Arc<GroupTable>,
    pub target: Arc<GroupTable>,
}

pub fn hom_group(g: &Arc<GroupTable>, a: &Arc<GroupTable>, limits: &Limits) -> Result<HomGroup> {
    if !a.is_abelian() {
        return Err(Error::NotAbelian(a.label().to_string()));
    }
    let homs = enumerate_homs(&HomQuery::new(g, a), limits)?;
    limits.check_order(homs.len())?;
    debug_assert!(homs[0].images().iter().all(|&y| y == 0));
    let index: std::collections::HashMap<&[usize], usize> =
        homs.iter().enumerate().map(|(i, h)| (h.images(), i)).collect();
    let n = homs.len();
    let mut mul = vec![0; n * n];
    for i in 0..n {
        for j in 0..n {
            let prod: Vec<usize> = g
                .elements()
                .map(|x| a.mul(homs[i].apply(x), homs[j].apply(x)))
                .collect();
            mul[i * n + j] = *index.get(prod.as_slice()).ok_or_else(|| {
                Error::InvalidHom("pointwise product left the enumerated set".into())
            })?;
        }
    }
    let label = format!("Hom({},{})", g.label(), a.label());
    let base = Arc::new(GroupTable::from_flat(label, mul, n, None, limits)?);
    Ok(HomGroup { base, homs, source: g.clone(), target: a.clone() })
}

/// `ev_a : Hom(G, A) → A`, `f ↦ f(a)`.
pub fn evaluation_hom(hg: &HomGroup, a: usize) -> Result<Hom> {
    if a >= hg.source.order() {
        return Err(Error::InvalidParameter("element out of range".into()));
    }
    let images = hg.homs.iter().map(|h| h.apply(a)).collect();
    Hom::new(hg.base.clone(), hg.target.clone(), images)
}

/// Whether every `b ∈ H` is `f(a)` for some `f ∈ Hom(G, H)`.
pub fn is_h_point(g: &Arc<GroupTable>, h: &Arc<GroupTable>, a: usize, limits: &Limits) -> Result<bool> {
    if a >= g.order() {
        return Err(Error::InvalidParameter("element out of range".into()));
    }
    if g.elem_order(a) == g.order() {
        // G = ⟨a⟩: a ↦ b extends iff o(b) | o(a)
        return Ok(h.elements().all(|b| g.elem_order(a).is_multiple_of(h.elem_order(b))));
    }
    if h.is_abelian() {
        match hom_group(g, h, limits) {
            Ok(hg) => return Ok(evaluation_hom(&hg, a)?.is_surjective()),
            Err(Error::OrderCapExceeded { .. }) => {}
            Err(e) => return Err(e),
        }
    }
    for b in h.elements() {
        if !g.elem_order(a).is_multiple_of(h.elem_order(b)) {
            return Ok(false);
        }
        let q = HomQuery::new(g, h).pin(a, b)?;
        if first_hom(q, limits)?.is_none() {
            return Ok(false);
        }
    }
    Ok(true)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::{make_cyclic, make_product, quotient, Family};
    use crate::subgroups::generated_subgroup;

    fn lim() -> Limits {
        Limits::default()
    }

    fn z(n: usize) -> Arc<GroupTable> {
        make_cyclic(n, &lim()).unwrap()
    }

    fn v4() -> Arc<GroupTable> {
        make_product(&z(2), &z(2), &lim()).unwrap().group
    }

    #[test]
    fn hom_counts() {
        assert_eq!(enumerate_homs(&HomQuery::new(&z(2), &z(4)), &lim()).unwrap().len(), 2);
        assert_eq!(enumerate_homs(&HomQuery::new(&v4(), &z(2)), &lim()).unwrap().len(), 4);
        let q8 = Family::Quaternion8.build(&lim()).unwrap();
        assert_eq!(enumerate_homs(&HomQuery::new(&q8, &v4()), &lim()).unwrap().len(), 16);
    }

    #[test]
    fn z2_to_z4_images() {
        let homs = enumerate_homs(&HomQuery::new(&z(2), &z(4)), &lim()).unwrap();
        let gen_images: Vec<usize> = homs.iter().map(|h| h.apply(1)).collect();
        assert_eq!(gen_images, vec![0, 2]);
    }

    #[test]
    fn budget_is_reported_not_truncated() {
        let tight = Limits { search_nodes: 3, ..lim() };
        let err = enumerate_homs(&HomQuery::new(&v4(), &v4()), &tight).unwrap_err();
        assert!(err.is_budget());
    }

    #[test]
    fn pins_must_respect_orders() {
        assert!(HomQuery::new(&z(2), &z(4)).pin(1, 1).is_err());
        let homs = enumerate_homs(&HomQuery::new(&z(4), &z(4)).pin(1, 3).unwrap(), &lim()).unwrap();
        assert_eq!(homs.len(), 1);
        assert_eq!(homs[0].images(), &[0, 3, 2, 1]);
    }

    #[test]
    fn identity_has_sections_everywhere() {
        let d4 = Family::Dihedral(4).build(&lim()).unwrap();
        let id = Hom::identity(&d4);
        for l in all_subgroups(&d4, &lim()).unwrap().subgroups() {
            let ls = exists_local_section(&id, l, &lim()).unwrap().unwrap();
            assert!(ls.is_valid_for(&id));
            assert!(ls.pairs().iter().all(|&(x, a)| x == a));
        }
    }

    #[test]
    fn reduction_mod_two_has_no_section() {
        let f = Hom::new(z(4), z(2), vec![0, 1, 0, 1]).unwrap();
        let h = f.codomain().clone();
        assert!(exists_local_section(&f, &Subgroup::full(&h), &lim()).unwrap().is_none());
        assert!(exists_global_section(&f, &lim()).unwrap().is_none());
        assert_eq!(is_locally_sectionable(&f), Sectionability::Fails { element: 1 });
    }

    #[test]
    fn reflection_class_lifts_in_d4_mod_center() {
        let d4 = Family::Dihedral(4).build(&lim()).unwrap();
        let center = crate::group::center(&d4);
        let (quot, q) = quotient(&d4, &center).unwrap();
        let s = 4; // the reflection s
        let l = generated_subgroup(&quot, &[q.apply(s)]).unwrap();
        let ls = exists_local_section(&q, &l, &lim()).unwrap().expect("reflections lift");
        assert!(ls.is_valid_for(&q));
        assert!(ls.pairs().iter().all(|&(_, a)| d4.elem_order(a) <= 2));
    }

    #[test]
    fn projection_of_e23_splits() {
        let e = Family::ElementaryAbelian { p: 2, k: 3 }.build(&lim()).unwrap();
        let f = Hom::new(e.clone(), v4(), e.elements().map(|x| x >> 1).collect()).unwrap();
        let s = exists_global_section(&f, &lim()).unwrap().unwrap();
        assert!(v4().elements().all(|b| f.apply(s.apply(b)) == b));
    }

    #[test]
    fn q8_mod_center_has_no_global_section() {
        let q8 = Family::Quaternion8.build(&lim()).unwrap();
        let n = generated_subgroup(&q8, &[4]).unwrap();
        let (_, q) = quotient(&q8, &n).unwrap();
        assert!(exists_global_section(&q, &lim()).unwrap().is_none());
        assert!(!is_locally_sectionable(&q).holds());
    }

    #[test]
    fn trivial_hom_is_not_locally_sectionable() {
        let f = Hom::trivial(&v4(), &z(2));
        assert_eq!(is_locally_sectionable(&f), Sectionability::Fails { element: 1 });
    }

    #[test]
    fn split_epi_is_locally_sectionable() {
        let p = make_product(&z(3), &v4(), &lim()).unwrap();
        assert!(is_locally_sectionable(&p.projection(1)).holds());
    }

    #[test]
    fn fibrewise_morphisms() {
        let proj = make_product(&z(2), &z(2), &lim()).unwrap().projection(0);
        let red = Hom::new(z(4), proj.codomain().clone(), vec![0, 1, 0, 1]).unwrap();
        assert!(exists_fibrewise_morphism(&proj, &red, &lim()).unwrap().is_none());
        let psi = exists_fibrewise_morphism(&red, &proj, &lim()).unwrap().unwrap();
        assert_eq!(psi.then(&proj).unwrap().images(), red.images());
        assert!(exists_fibrewise_morphism(&red, &red, &lim()).unwrap().is_some());
    }

    #[test]
    fn hom_groups() {
        let hg = hom_group(&v4(), &z(2), &lim()).unwrap();
        assert_eq!(hg.base.order(), 4);
        assert_eq!(hg.base.exponent(), 2);
        assert_eq!(hom_group(&z(3), &z(2), &lim()).unwrap().base.order(), 1);
        let q8 = Family::Quaternion8.build(&lim()).unwrap();
        let hq = hom_group(&q8, &v4(), &lim()).unwrap();
        assert_eq!(hq.base.order(), 16);
        assert!(hq.base.is_abelian() && hq.base.exponent() == 2);
        assert!(matches!(hom_group(&v4(), &q8, &lim()), Err(Error::NotAbelian(_))));
    }

    #[test]
    fn evaluation_maps() {
        let hg = hom_group(&v4(), &v4(), &lim()).unwrap();
        assert!(evaluation_hom(&hg, 0).unwrap().images().iter().all(|&y| y == 0));
        assert!(evaluation_hom(&hg, 2).unwrap().is_surjective());
        let hz = hom_group(&z(4), &z(2), &lim()).unwrap();
        assert_eq!(evaluation_hom(&hz, 2).unwrap().image_set().to_vec(), vec![0]);
    }

    #[test]
    fn h_points() {
        assert!(is_h_point(&z(4), &z(2), 1, &lim()).unwrap());
        assert!(!is_h_point(&v4(), &z(2), 0, &lim()).unwrap());
        assert!(!is_h_point(&z(2), &z(4), 1, &lim()).unwrap());
        let s3 = Family::Symmetric(3).build(&lim()).unwrap();
        assert!(!is_h_point(&s3, &s3, 0, &lim()).unwrap());
    }

    #[test]
    fn isomorphism_search() {
        let s3 = Family::Symmetric(3).build(&lim()).unwrap();
        let d3 = Family::Dihedral(3).build(&lim()).unwrap();
        assert!(find_isomorphism(&s3, &d3, &lim()).unwrap().is_some());
        assert!(find_isomorphism(&z(6), &s3, &lim()).unwrap().is_none());
        let z6 = make_product(&z(2), &z(3), &lim()).unwrap().group;
        assert!(find_isomorphism(&z6, &z(6), &lim()).unwrap().is_some());
    }
}
