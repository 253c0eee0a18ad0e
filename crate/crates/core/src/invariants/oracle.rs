//! Unoptimized reference computations: the same covering numbers taken over
//! every admissible subgroup rather than only the maximal ones.

use std::sync::Arc;

use super::{min_cover, Value};
use crate::elemset::ElemSet;
use crate::group::{GroupTable, Hom};
use crate::homsearch::exists_local_section;
use crate::limits::Limits;
use crate::subgroups::{all_subgroups, cyclic_subgroups};
use crate::Result;

fn cover_value(g: &GroupTable, sets: &[ElemSet], limits: &Limits) -> Result<Value> {
    let mut universe = g.all();
    universe.remove(0);
    if universe.is_empty() {
        return Ok(Value::Infinite);
    }
    Ok(match min_cover(&universe, sets, limits.cover_nodes)? {
        Some(c) => Value::Finite(c.size),
        None => Value::Infinite,
    })
}

/// σ over every proper subgroup.
pub fn sigma_all_proper(g: &Arc<GroupTable>, limits: &Limits) -> Result<Value> {
    let sets: Vec<ElemSet> = all_subgroups(g, limits)?.proper().map(|s| *s.members()).collect();
    cover_value(g, &sets, limits)
}

/// σ_c over every proper cyclic subgroup.
pub fn sigma_cyclic_all(g: &Arc<GroupTable>, limits: &Limits) -> Result<Value> {
    let sets: Vec<ElemSet> = cyclic_subgroups(g)
        .into_iter()
        .filter(|c| c.subgroup.is_proper())
        .map(|c| *c.subgroup.members())
        .collect();
    cover_value(g, &sets, limits)
}

/// Proper subgroups of the codomain with a local section, each found by its
/// own search.
pub fn all_sectionable(f: &Hom, limits: &Limits) -> Result<Vec<ElemSet>> {
    let mut out = Vec::new();
    for l in all_subgroups(f.codomain(), limits)?.proper() {
        if exists_local_section(f, l, limits)?.is_some() {
            out.push(*l.members());
        }
    }
    Ok(out)
}

/// sec over every sectionable proper subgroup, with no shortcuts for
/// surjectivity, cyclicity or order lifts.
pub fn sec_all_sectionable(f: &Hom, limits: &Limits) -> Result<Value> {
    let sets = all_sectionable(f, limits)?;
    cover_value(f.codomain(), &sets, limits)
}
