//! The 2-cocycle of an extension `1 → A → G → H → 1` with abelian kernel
//! `A = Ker(f)`, and the coboundary test deciding where it splits.
//!
//! Conventions, with `A` written additively:
//!
//! * transversal `t : H → G`, `f(t(h)) = h`, `t(1) = 1`
//! * `w(x, y) = t(x) t(y) t(xy)⁻¹`
//! * action `x·a = t(x) a t(x)⁻¹`
//! * `δc(x, y) = x·c(y) − c(xy) + c(x)`
//! * cocycle identity `x·w(y, z) − w(xy, z) + w(x, yz) − w(x, y) = 0`
//!
//! `w` restricted to `L ≤ H` is a coboundary exactly when `f` has a local
//! section over `L`; when the cochain search runs out of budget the answer is
//! taken from the section search instead and labelled as such.

use std::sync::Arc;

use crate::elemset::ElemSet;
use crate::group::{same_group, ActionTable, GroupTable, Hom};
use crate::homsearch::exists_local_section;
use crate::invariants::{min_cover, CoverResult, InfinityReason, Value};
use crate::limits::Limits;
use crate::subgroups::{all_subgroups, kernel, Subgroup};
use crate::{Error, Result};

#[derive(Clone, Debug)]
pub struct Transversal {
    pub hom: Hom,
    /// `rep[h]` is a domain element over `h`.
    pub rep: Vec<usize>,
}

impl Transversal {
    /// Least domain index in each fiber.
    pub fn minimal(f: &Hom) -> Result<Self> {
        let mut rep = vec![usize::MAX; f.codomain().order()];
        for a in f.domain().elements().rev() {
            rep[f.apply(a)] = a;
        }
        Self::from_reps(f, rep)
    }

    pub fn from_reps(f: &Hom, rep: Vec<usize>) -> Result<Self> {
        if rep.len() != f.codomain().order() {
            return Err(Error::InvalidParameter("transversal has the wrong length".into()));
        }
        if rep.contains(&usize::MAX) {
            return Err(Error::NotSurjective);
        }
        if rep[0] != 0 {
            return Err(Error::InvalidParameter("transversal must send 1 to 1".into()));
        }
        if rep.iter().enumerate().any(|(h, &a)| a >= f.domain().order() || f.apply(a) != h) {
            return Err(Error::InvalidParameter("transversal leaves its fiber".into()));
        }
        Ok(Transversal { hom: f.clone(), rep })
    }
}

/// Where a cocycle came from: enough to consult the section search.
#[derive(Clone, Debug)]
struct Origin {
    hom: Hom,
    /// Codomain indices of the base elements.
    base_members: Vec<usize>,
    /// Transversal values on the base elements.
    rep: Vec<usize>,
    /// Domain indices of the coefficient elements.
    coeff_members: Vec<usize>,
}

#[derive(Clone, Debug)]
pub struct Cocycle {
    pub base: Arc<GroupTable>,
    pub coeff: Arc<GroupTable>,
    pub action: ActionTable,
    /// `values[x * |base| + y] = w(x, y)`.
    pub values: Vec<usize>,
    origin: Option<Origin>,
}

impl Cocycle {
    #[inline]
    pub fn value(&self, x: usize, y: usize) -> usize {
        self.values[x * self.base.order() + y]
    }

    /// `δc` for a cochain `c` over the base.
    pub fn coboundary_of(&self, c: &[usize]) -> Vec<usize> {
        let (h, a) = (&self.base, &self.coeff);
        let mut out = Vec::with_capacity(h.order() * h.order());
        for x in h.elements() {
            for y in h.elements() {
                let v = a.mul(a.mul(self.action.apply(x, c[y]), a.inv(c[h.mul(x, y)])), c[x]);
                out.push(v);
            }
        }
        out
    }

    pub fn is_zero(&self) -> bool {
        self.values.iter().all(|&v| v == 0)
    }

    pub fn is_normalized(&self) -> bool {
        self.base.elements().all(|h| self.value(0, h) == 0 && self.value(h, 0) == 0)
    }

    pub fn satisfies_cocycle_identity(&self) -> bool {
        let (h, a) = (&self.base, &self.coeff);
        for x in h.elements() {
            for y in h.elements() {
                let xy = h.mul(x, y);
                for z in h.elements() {
                    let lhs = a.mul(
                        a.mul(self.action.apply(x, self.value(y, z)), a.inv(self.value(xy, z))),
                        a.mul(self.value(x, h.mul(y, z)), a.inv(self.value(x, y))),
                    );
                    if lhs != 0 {
                        return false;
                    }
                }
            }
        }
        true
    }

    pub fn check(&self) -> std::result::Result<(), String> {
        if !self.is_normalized() {
            return Err("cocycle is not normalized".into());
        }
        if !self.satisfies_cocycle_identity() {
            return Err("cocycle identity fails".into());
        }
        Ok(())
    }

    /// Pointwise `self − other`; both must live on the same base, coefficients
    /// and action.
    pub fn difference(&self, other: &Cocycle) -> Result<Cocycle> {
        if !same_group(&self.base, &other.base) || !same_group(&self.coeff, &other.coeff) {
            return Err(Error::ParentMismatch);
        }
        let a = &self.coeff;
        for x in self.base.elements() {
            if (0..a.order()).any(|k| self.action.apply(x, k) != other.action.apply(x, k)) {
                return Err(Error::InvalidAction("actions differ".into()));
            }
        }
        let values = self.values.iter().zip(&other.values).map(|(&u, &v)| a.mul(u, a.inv(v))).collect();
        Ok(Cocycle { values, origin: None, ..self.clone() })
    }
}

pub fn build_cocycle(f: &Hom) -> Result<(Transversal, Cocycle)> {
    if !f.is_surjective() {
        return Err(Error::NotSurjective);
    }
    let t = Transversal::minimal(f)?;
    let c = cocycle_from(&t)?;
    Ok((t, c))
}

/// The cocycle of `t.hom` computed from the given transversal.
pub fn cocycle_from(t: &Transversal) -> Result<Cocycle> {
    let f = &t.hom;
    let (g, h) = (f.domain(), f.codomain());
    let ker = kernel(f);
    if !ker.is_abelian() {
        return Err(Error::KernelNotAbelian);
    }
    let induced = ker.induced();
    let coeff = induced.group.clone();
    let mut local = vec![usize::MAX; g.order()];
    for (i, &m) in induced.members.iter().enumerate() {
        local[m] = i;
    }
    let act = h
        .elements()
        .map(|x| induced.members.iter().map(|&a| local[g.conj(t.rep[x], a)]).collect())
        .collect();
    let action = ActionTable::new(h.clone(), coeff.clone(), act)?;
    let mut values = Vec::with_capacity(h.order() * h.order());
    for x in h.elements() {
        for y in h.elements() {
            let prod = g.mul(g.mul(t.rep[x], t.rep[y]), g.inv(t.rep[h.mul(x, y)]));
            values.push(local[prod]);
        }
    }
    debug_assert!(values.iter().all(|&v| v != usize::MAX));
    let c = Cocycle {
        base: h.clone(),
        coeff,
        action,
        values,
        origin: Some(Origin {
            hom: f.clone(),
            base_members: h.elements().collect(),
            rep: t.rep.clone(),
            coeff_members: induced.members.clone(),
        }),
    };
    c.check().map_err(Error::InvalidParameter)?;
    Ok(c)
}

/// `L` must be a subgroup of the cocycle's base.
pub fn restrict_cocycle(c: &Cocycle, l: &Subgroup) -> Result<Cocycle> {
    if !same_group(l.parent(), &c.base) {
        return Err(Error::ParentMismatch);
    }
    let induced = l.induced();
    let m = &induced.members;
    let act = m
        .iter()
        .map(|&x| (0..c.coeff.order()).map(|a| c.action.apply(x, a)).collect())
        .collect();
    let action = ActionTable::new(induced.group.clone(), c.coeff.clone(), act)?;
    let values = m.iter().flat_map(|&x| m.iter().map(move |&y| c.value(x, y))).collect();
    let origin = c.origin.as_ref().map(|o| Origin {
        hom: o.hom.clone(),
        base_members: m.iter().map(|&x| o.base_members[x]).collect(),
        rep: m.iter().map(|&x| o.rep[x]).collect(),
        coeff_members: o.coeff_members.clone(),
    });
    Ok(Cocycle { base: induced.group, coeff: c.coeff.clone(), action, values, origin })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CoboundaryWitness {
    /// `c(x)` for every base element; `δc = w`.
    pub cochain: Vec<usize>,
    /// Obtained from a local section rather than the cochain search.
    pub via_section_oracle: bool,
}

/// A cochain `c` with `c(1) = 0` and `δc = w`, if any.
pub fn is_coboundary(c: &Cocycle, limits: &Limits) -> Result<Option<CoboundaryWitness>> {
    match search_cochain(c, limits.coboundary_nodes) {
        Ok(found) => Ok(found.map(|cochain| CoboundaryWitness { cochain, via_section_oracle: false })),
        Err(e) if e.is_budget() => match &c.origin {
            Some(origin) => via_section(c, origin, limits),
            None => Err(e),
        },
        Err(e) => Err(e),
    }
}

/// Backtracks over `c(g)` for the base generators and propagates
/// `c(xg) = x·c(g) + c(x) − w(x, g)` along the Cayley graph.
pub(crate) fn search_cochain(c: &Cocycle, budget: u64) -> Result<Option<Vec<usize>>> {
    let (h, a) = (&c.base, &c.coeff);
    let gens = h.generating_sequence();
    let mut chosen = Vec::with_capacity(gens.len());
    let mut nodes = 0u64;

    let propagate = |chosen: &[usize]| -> Option<Vec<usize>> {
        let mut val = vec![usize::MAX; h.order()];
        val[0] = 0;
        let mut stack = vec![0];
        while let Some(x) = stack.pop() {
            for (&g, &cg) in gens.iter().zip(chosen) {
                let xg = h.mul(x, g);
                let v = a.mul(a.mul(c.action.apply(x, cg), val[x]), a.inv(c.value(x, g)));
                if val[xg] == usize::MAX {
                    val[xg] = v;
                    stack.push(xg);
                } else if val[xg] != v {
                    return None;
                }
            }
        }
        Some(val)
    };

    fn walk(
        depth: usize,
        gens_len: usize,
        a_order: usize,
        chosen: &mut Vec<usize>,
        nodes: &mut u64,
        budget: u64,
        propagate: &dyn Fn(&[usize]) -> Option<Vec<usize>>,
    ) -> Result<Option<Vec<usize>>> {
        if depth == gens_len {
            return Ok(propagate(chosen));
        }
        for v in 0..a_order {
            *nodes += 1;
            if *nodes > budget {
                return Err(Error::SearchBudgetExceeded { budget });
            }
            chosen.push(v);
            if propagate(chosen).is_some() {
                if let Some(found) = walk(depth + 1, gens_len, a_order, chosen, nodes, budget, propagate)? {
                    return Ok(Some(found));
                }
            }
            chosen.pop();
        }
        Ok(None)
    }

    let found = walk(0, gens.len(), a.order(), &mut chosen, &mut nodes, budget, &propagate)?;
    if let Some(cochain) = &found {
        if c.coboundary_of(cochain) != c.values {
            return Err(Error::InvalidParameter("cochain search produced a wrong witness".into()));
        }
    }
    Ok(found)
}

/// `c(x) = t(x) s(x)⁻¹` for a local section `s`.
fn via_section(c: &Cocycle, origin: &Origin, limits: &Limits) -> Result<Option<CoboundaryWitness>> {
    let f = &origin.hom;
    let g = f.domain();
    let members: ElemSet = origin.base_members.iter().copied().collect();
    let l = Subgroup::from_closed(f.codomain().clone(), members)?;
    let section = match exists_local_section(f, &l, limits)? {
        Some(s) => s,
        None => return Ok(None),
    };
    // base element i is the i-th smallest member, as is the section's domain
    let mut local = vec![usize::MAX; g.order()];
    for (i, &m) in origin.coeff_members.iter().enumerate() {
        local[m] = i;
    }
    let cochain: Vec<usize> = section
        .section
        .images()
        .iter()
        .zip(&origin.rep)
        .map(|(&s, &t)| local[g.mul(t, g.inv(s))])
        .collect();
    if c.coboundary_of(&cochain) != c.values {
        return Err(Error::InvalidParameter("section-derived cochain is not a witness".into()));
    }
    Ok(Some(CoboundaryWitness { cochain, via_section_oracle: true }))
}

/// Least number of proper subgroups of the codomain, on each of which the
/// cocycle restricts to a coboundary, with union the codomain.
pub fn sec_via_cohomology(f: &Hom, limits: &Limits) -> Result<CoverResult> {
    let h = f.codomain();
    limits.check_order(h.order())?;
    limits.check_order(f.domain().order())?;
    let (_, w) = build_cocycle(f)?;
    let mut found: Vec<Subgroup> = Vec::new();
    for l in all_subgroups(h, limits)?.proper().collect::<Vec<_>>().into_iter().rev() {
        if found.iter().any(|m| l.is_subset_of(m)) {
            continue;
        }
        if is_coboundary(&restrict_cocycle(&w, l)?, limits)?.is_some() {
            found.push(l.clone());
        }
    }
    found.sort_by(|a, b| a.canonical_cmp(b));
    let mut universe = h.all();
    universe.remove(0);
    let sets: Vec<ElemSet> = found.iter().map(|s| *s.members()).collect();
    let union = sets.iter().fold(ElemSet::singleton(0), |acc, s| acc.union(s));
    if let Some(uncovered) = universe.difference(&union).first() {
        return Ok(CoverResult::infinite(InfinityReason::NoProperCoverExists { uncovered }));
    }
    if universe.is_empty() {
        return Ok(CoverResult::infinite(InfinityReason::CodomainCyclic));
    }
    let cover = min_cover(&universe, &sets, limits.cover_nodes)?.expect("union covers");
    let witness: Vec<Subgroup> = cover.chosen.iter().map(|&i| found[i].clone()).collect();
    Ok(CoverResult {
        value: Value::Finite(witness.len()),
        witness,
        sections: vec![],
        reason: None,
    })
}
