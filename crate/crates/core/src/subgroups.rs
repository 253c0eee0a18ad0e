//! Subgroups as element sets of a parent table, the full subgroup lattice,
//! cyclic subgroups, and images/preimages under homomorphisms.

use std::cmp::Ordering;
use std::collections::HashMap;
use std::fmt;
use std::sync::{Arc, OnceLock};

use crate::elemset::ElemSet;
use crate::group::{same_group, GroupTable, Hom};
use crate::limits::Limits;
use crate::{Error, Result};

#[derive(Clone)]
pub struct Subgroup {
    parent: Arc<GroupTable>,
    members: ElemSet,
    normal: OnceLock<bool>,
}

impl Subgroup {
    /// Checks identity, closure and Lagrange.
    pub fn from_closed(parent: Arc<GroupTable>, members: ElemSet) -> Result<Self> {
        if !members.contains(0) {
            return Err(Error::InvalidParameter("subgroup must contain the identity".into()));
        }
        if members.iter().any(|x| x >= parent.order()) {
            return Err(Error::InvalidParameter("member index out of range".into()));
        }
        for a in members.iter() {
            for b in members.iter() {
                if !members.contains(parent.mul(a, b)) {
                    return Err(Error::InvalidParameter(format!("not closed at ({a},{b})")));
                }
            }
        }
        assert_eq!(parent.order() % members.len(), 0, "Lagrange violated");
        Ok(Self::trusted(parent, members))
    }

    pub(crate) fn trusted(parent: Arc<GroupTable>, members: ElemSet) -> Self {
        debug_assert!(members.contains(0));
        Subgroup { parent, members, normal: OnceLock::new() }
    }

    pub fn full(parent: &Arc<GroupTable>) -> Self {
        Self::trusted(parent.clone(), parent.all())
    }

    pub fn trivial(parent: &Arc<GroupTable>) -> Self {
        Self::trusted(parent.clone(), ElemSet::singleton(0))
    }

    pub fn parent(&self) -> &Arc<GroupTable> {
        &self.parent
    }

    pub fn members(&self) -> &ElemSet {
        &self.members
    }

    pub fn elements(&self) -> Vec<usize> {
        self.members.to_vec()
    }

    pub fn order(&self) -> usize {
        self.members.len()
    }

    pub fn contains(&self, x: usize) -> bool {
        self.members.contains(x)
    }

    pub fn is_proper(&self) -> bool {
        self.order() < self.parent.order()
    }

    pub fn is_trivial(&self) -> bool {
        self.order() == 1
    }

    pub fn is_subset_of(&self, other: &Subgroup) -> bool {
        self.members.is_subset(&other.members)
    }

    pub fn is_cyclic(&self) -> bool {
        self.members.iter().any(|x| self.parent.elem_order(x) == self.order())
    }

    pub fn is_abelian(&self) -> bool {
        let m = self.elements();
        m.iter().all(|&a| m.iter().all(|&b| self.parent.mul(a, b) == self.parent.mul(b, a)))
    }

    /// Computed on first use.
    pub fn is_normal(&self) -> bool {
        *self.normal.get_or_init(|| {
            let g = &self.parent;
            self.members
                .iter()
                .all(|n| g.elements().all(|x| self.members.contains(g.conj(x, n))))
        })
    }

    pub(crate) fn mark_normal(self) -> Self {
        let _ = self.normal.set(true);
        self
    }

    pub fn canonical_cmp(&self, other: &Subgroup) -> Ordering {
        self.members.canonical_cmp(&other.members)
    }

    /// The subgroup as a table of its own, elements in ascending parent order.
    pub fn induced(&self) -> InducedGroup {
        let members = self.elements();
        if members.len() == self.parent.order() {
            return InducedGroup {
                group: self.parent.clone(),
                inclusion: Hom::identity(&self.parent),
                members,
            };
        }
        let n = members.len();
        let mut local = vec![usize::MAX; self.parent.order()];
        for (i, &m) in members.iter().enumerate() {
            local[m] = i;
        }
        let mut mul = vec![0; n * n];
        for (i, &a) in members.iter().enumerate() {
            for (j, &b) in members.iter().enumerate() {
                mul[i * n + j] = local[self.parent.mul(a, b)];
            }
        }
        let names = members.iter().map(|&m| self.parent.name(m).to_string()).collect();
        let label = format!("{}{{{}}}", self.parent.label(), self.describe_members());
        let group = Arc::new(GroupTable::trusted(label, mul, n, Some(names)));
        let inclusion = Hom::new(group.clone(), self.parent.clone(), members.clone())
            .expect("inclusion of a subgroup is a homomorphism");
        InducedGroup { group, members, inclusion }
    }

    fn describe_members(&self) -> String {
        self.members.iter().map(|m| m.to_string()).collect::<Vec<_>>().join(",")
    }
}

impl PartialEq for Subgroup {
    fn eq(&self, other: &Self) -> bool {
        self.members == other.members && same_group(&self.parent, &other.parent)
    }
}

impl Eq for Subgroup {}

impl fmt::Debug for Subgroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Subgroup({}, {:?})", self.parent.label(), self.members)
    }
}

/// A subgroup realized as its own group, with the index correspondence.
#[derive(Clone, Debug)]
pub struct InducedGroup {
    pub group: Arc<GroupTable>,
    /// `members[i]` is the parent index of local element `i`.
    pub members: Vec<usize>,
    pub inclusion: Hom,
}

// ---------------------------------------------------------------------------
// Closure
// ---------------------------------------------------------------------------

/// The subgroup generated by `gens`, as a set.
pub fn closure(g: &GroupTable, gens: &[usize]) -> ElemSet {
    extend_closure(g, ElemSet::singleton(0), &[], gens)
}

/// Closure of `base ∪ extra` where `base` is already closed and generated by
/// `base_gens`.
fn extend_closure(g: &GroupTable, base: ElemSet, base_gens: &[usize], extra: &[usize]) -> ElemSet {
    let mut set = base;
    let mut queue: Vec<usize> = Vec::new();
    for e in base.iter() {
        for &x in extra {
            let y = g.mul(e, x);
            if set.insert(y) {
                queue.push(y);
            }
        }
    }
    let gens: Vec<usize> = base_gens.iter().chain(extra).copied().collect();
    while let Some(e) = queue.pop() {
        for &x in &gens {
            let y = g.mul(e, x);
            if set.insert(y) {
                queue.push(y);
            }
        }
    }
    set
}

pub fn generated_subgroup(g: &Arc<GroupTable>, seed: &[usize]) -> Result<Subgroup> {
    if seed.iter().any(|&x| x >= g.order()) {
        return Err(Error::InvalidParameter("seed element out of range".into()));
    }
    Ok(Subgroup::trusted(g.clone(), closure(g, seed)))
}

// ---------------------------------------------------------------------------
// Lattice
// ---------------------------------------------------------------------------

/// All subgroups, sorted by size then lexicographically by member list.
#[derive(Clone, Debug)]
pub struct SubgroupLattice {
    parent: Arc<GroupTable>,
    subgroups: Vec<Subgroup>,
    maximal_proper: Vec<usize>,
}

impl SubgroupLattice {
    pub fn parent(&self) -> &Arc<GroupTable> {
        &self.parent
    }

    pub fn subgroups(&self) -> &[Subgroup] {
        &self.subgroups
    }

    pub fn len(&self) -> usize {
        self.subgroups.len()
    }

    pub fn is_empty(&self) -> bool {
        self.subgroups.is_empty()
    }

    /// Inclusion `subgroups[i] ⊆ subgroups[j]`.
    pub fn leq(&self, i: usize, j: usize) -> bool {
        self.subgroups[i].is_subset_of(&self.subgroups[j])
    }

    pub fn maximal_proper(&self) -> &[usize] {
        &self.maximal_proper
    }

    pub fn maximal_proper_subgroups(&self) -> Vec<Subgroup> {
        self.maximal_proper.iter().map(|&i| self.subgroups[i].clone()).collect()
    }

    pub fn proper(&self) -> impl Iterator<Item = &Subgroup> {
        self.subgroups.iter().filter(|s| s.is_proper())
    }

    pub fn position(&self, members: &ElemSet) -> Option<usize> {
        self.subgroups
            .binary_search_by(|s| s.members.canonical_cmp(members))
            .ok()
    }
}

fn lattice_sets(g: &GroupTable) -> Arc<Vec<ElemSet>> {
    g.lattice
        .get_or_init(|| {
            // cyclic subgroups with one generator each
            let mut cyclic: Vec<(ElemSet, usize)> = Vec::new();
            let mut seen: HashMap<ElemSet, Vec<usize>> = HashMap::new();
            for x in g.elements() {
                let c = closure(g, &[x]);
                if let std::collections::hash_map::Entry::Vacant(e) = seen.entry(c) {
                    e.insert(if x == 0 { vec![] } else { vec![x] });
                    cyclic.push((c, x));
                }
            }
            let mut work: Vec<ElemSet> = cyclic.iter().map(|(c, _)| *c).collect();
            while let Some(s) = work.pop() {
                let gens = seen[&s].clone();
                for &(c, x) in &cyclic {
                    if c.is_subset(&s) {
                        continue;
                    }
                    let joined = extend_closure(g, s, &gens, &[x]);
                    if let std::collections::hash_map::Entry::Vacant(e) = seen.entry(joined) {
                        let mut jg = gens.clone();
                        jg.push(x);
                        e.insert(jg);
                        work.push(joined);
                    }
                }
            }
            let mut all: Vec<ElemSet> = seen.into_keys().collect();
            all.sort_by(|a, b| a.canonical_cmp(b));
            Arc::new(all)
        })
        .clone()
}

pub fn all_subgroups(g: &Arc<GroupTable>, limits: &Limits) -> Result<SubgroupLattice> {
    limits.check_order(g.order())?;
    let sets = lattice_sets(g);
    let subgroups: Vec<Subgroup> = sets.iter().map(|s| Subgroup::trusted(g.clone(), *s)).collect();
    let n = g.order();
    let maximal_proper = (0..subgroups.len())
        .filter(|&i| {
            let s = &subgroups[i].members;
            s.len() < n
                && !subgroups
                    .iter()
                    .any(|t| t.members.len() < n && t.members.len() > s.len() && s.is_subset(&t.members))
        })
        .collect();
    Ok(SubgroupLattice { parent: g.clone(), subgroups, maximal_proper })
}

#[derive(Clone, Debug)]
pub struct CyclicSubgroup {
    pub subgroup: Subgroup,
    /// Least-index generator.
    pub generator: usize,
    /// Not strictly contained in another cyclic subgroup.
    pub maximal_cyclic: bool,
}

pub fn cyclic_subgroups(g: &Arc<GroupTable>) -> Vec<CyclicSubgroup> {
    let mut found: Vec<(ElemSet, usize)> = Vec::new();
    let mut seen = std::collections::HashSet::new();
    for x in g.elements() {
        let c = closure(g, &[x]);
        if seen.insert(c) {
            found.push((c, x));
        }
    }
    found.sort_by(|a, b| a.0.canonical_cmp(&b.0));
    found
        .iter()
        .map(|&(c, x)| CyclicSubgroup {
            subgroup: Subgroup::trusted(g.clone(), c),
            generator: x,
            maximal_cyclic: !found
                .iter()
                .any(|(d, _)| d.len() > c.len() && c.is_subset(d)),
        })
        .collect()
}

// ---------------------------------------------------------------------------
// Images, preimages, kernels
// ---------------------------------------------------------------------------

pub fn image_subgroup(f: &Hom, l: &Subgroup) -> Result<Subgroup> {
    if !same_group(f.domain(), l.parent()) {
        return Err(Error::ParentMismatch);
    }
    let members = l.members().iter().map(|a| f.apply(a)).collect();
    Ok(Subgroup::trusted(f.codomain().clone(), members))
}

pub fn preimage_subgroup(f: &Hom, m: &Subgroup) -> Result<Subgroup> {
    if !same_group(f.codomain(), m.parent()) {
        return Err(Error::ParentMismatch);
    }
    let members = f.domain().elements().filter(|&a| m.contains(f.apply(a))).collect();
    Ok(Subgroup::trusted(f.domain().clone(), members))
}

pub fn kernel(f: &Hom) -> Subgroup {
    Subgroup::trusted(f.domain().clone(), f.kernel_set()).mark_normal()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::{make_cyclic, make_product, Family};

    fn lim() -> Limits {
        Limits::default()
    }

    #[test]
    fn generated_in_z6() {
        let z6 = make_cyclic(6, &lim()).unwrap();
        assert_eq!(generated_subgroup(&z6, &[2]).unwrap().elements(), vec![0, 2, 4]);
    }

    #[test]
    fn generated_i_in_q8() {
        let q8 = Family::Quaternion8.build(&lim()).unwrap();
        let s = generated_subgroup(&q8, &[1]).unwrap();
        // ⟨i⟩ = {1, i, -1, -i}
        assert_eq!(s.elements(), vec![0, 1, 4, 5]);
    }

    #[test]
    fn generated_s3_by_transposition_and_3_cycle() {
        let s3 = Family::Symmetric(3).build(&lim()).unwrap();
        let t = (0..6).find(|&x| s3.name(x) == "(1 2)").unwrap();
        let c = (0..6).find(|&x| s3.name(x) == "(1 2 3)").unwrap();
        assert_eq!(generated_subgroup(&s3, &[t, c]).unwrap().order(), 6);
    }

    #[test]
    fn lattice_counts() {
        let z2 = make_cyclic(2, &lim()).unwrap();
        let v4 = make_product(&z2, &z2, &lim()).unwrap().group;
        assert_eq!(all_subgroups(&v4, &lim()).unwrap().len(), 5);
        let q8 = Family::Quaternion8.build(&lim()).unwrap();
        let lat = all_subgroups(&q8, &lim()).unwrap();
        assert_eq!(lat.len(), 6);
        assert_eq!(lat.maximal_proper().len(), 3);
        let z6 = make_cyclic(6, &lim()).unwrap();
        assert_eq!(all_subgroups(&z6, &lim()).unwrap().len(), 4);
    }

    #[test]
    fn lattice_is_sorted_and_has_extremes() {
        let d4 = Family::Dihedral(4).build(&lim()).unwrap();
        let lat = all_subgroups(&d4, &lim()).unwrap();
        assert!(lat.subgroups()[0].is_trivial());
        assert!(!lat.subgroups().last().unwrap().is_proper());
        for w in lat.subgroups().windows(2) {
            assert_eq!(w[0].canonical_cmp(&w[1]), Ordering::Less);
        }
        assert_eq!(lat.position(&d4.all()), Some(lat.len() - 1));
    }

    #[test]
    fn cyclic_subgroups_of_q8() {
        let q8 = Family::Quaternion8.build(&lim()).unwrap();
        let cyc = cyclic_subgroups(&q8);
        assert_eq!(cyc.len(), 5);
        let maximal: Vec<Vec<usize>> = cyc
            .iter()
            .filter(|c| c.maximal_cyclic)
            .map(|c| c.subgroup.elements())
            .collect();
        assert_eq!(maximal, vec![vec![0, 1, 4, 5], vec![0, 2, 4, 6], vec![0, 3, 4, 7]]);
    }

    #[test]
    fn cyclic_subgroups_of_e32_and_trivial() {
        let e = Family::ElementaryAbelian { p: 3, k: 2 }.build(&lim()).unwrap();
        let nontrivial = cyclic_subgroups(&e).into_iter().filter(|c| !c.subgroup.is_trivial()).count();
        assert_eq!(nontrivial, (9 - 1) / (3 - 1));
        let one = make_cyclic(1, &lim()).unwrap();
        assert_eq!(cyclic_subgroups(&one).len(), 1);
    }

    #[test]
    fn kernel_and_preimage_of_reduction() {
        let z4 = make_cyclic(4, &lim()).unwrap();
        let z2 = make_cyclic(2, &lim()).unwrap();
        let f = Hom::new(z4.clone(), z2.clone(), vec![0, 1, 0, 1]).unwrap();
        assert_eq!(kernel(&f).elements(), vec![0, 2]);
        assert!(kernel(&f).is_normal());
        let pre = preimage_subgroup(&f, &Subgroup::trivial(&z2)).unwrap();
        assert_eq!(pre.elements(), vec![0, 2]);
        let all = preimage_subgroup(&f, &Subgroup::full(&z2)).unwrap();
        assert_eq!(all.order(), 4);
    }

    #[test]
    fn parent_mismatch_is_reported() {
        let z4 = make_cyclic(4, &lim()).unwrap();
        let z2 = make_cyclic(2, &lim()).unwrap();
        let f = Hom::trivial(&z4, &z2);
        assert_eq!(image_subgroup(&f, &Subgroup::full(&z2)).unwrap_err(), Error::ParentMismatch);
    }

    #[test]
    fn injective_hom_has_trivial_kernel() {
        let z2 = make_cyclic(2, &lim()).unwrap();
        let z4 = make_cyclic(4, &lim()).unwrap();
        let f = Hom::new(z2, z4, vec![0, 2]).unwrap();
        assert!(kernel(&f).is_trivial());
    }
}
