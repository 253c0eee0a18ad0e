//! The deterministic list of groups and homomorphisms used by `verify-batch`
//! and `search`.

use std::collections::HashSet;
use std::sync::Arc;

use super::expr::{eval_group, eval_hom, ActionName, GroupExpr, HomSpec};
use crate::arith::is_prime;
use crate::group::{GroupTable, Hom};
use crate::limits::Limits;
use crate::subgroups::{all_subgroups, closure};
use crate::{Error, Result};

#[derive(Clone, Debug)]
pub struct CatalogGroup {
    pub expr: GroupExpr,
    pub group: Arc<GroupTable>,
}

#[derive(Clone, Debug)]
pub struct CatalogHom {
    pub spec: HomSpec,
    pub hom: Hom,
}

#[derive(Clone, Debug, Default)]
pub struct Catalog {
    pub groups: Vec<CatalogGroup>,
    pub homs: Vec<CatalogHom>,
}

fn order_of(expr: &GroupExpr) -> usize {
    match expr {
        GroupExpr::Cyclic(n) => *n,
        GroupExpr::Dihedral(n) => 2 * n,
        GroupExpr::Quaternion => 8,
        GroupExpr::Symmetric(n) => (1..=*n).product(),
        GroupExpr::Alternating(n) => (1..=*n).product::<usize>().div_ceil(2),
        GroupExpr::Elementary(p, k) => p.pow(*k as u32),
        GroupExpr::Product(parts) => parts.iter().map(order_of).product(),
        GroupExpr::Semidirect(a, h, _) => order_of(a) * order_of(h),
        GroupExpr::Quotient(..) => unreachable!("catalog lists no quotient groups"),
    }
}

/// Base groups, pairwise and cyclic triple products, and `Z(n) ⋊ Z(2k)` with
/// inversion, all of order at most `max_order`.
pub fn catalog_groups(max_order: usize) -> Vec<GroupExpr> {
    use GroupExpr::*;
    let mut base = Vec::new();
    for n in 1..=max_order {
        base.push(Cyclic(n));
    }
    for n in 3..=max_order / 2 {
        base.push(Dihedral(n));
    }
    base.extend([Quaternion, Symmetric(3), Symmetric(4), Alternating(4)]);
    for p in (2..=max_order).filter(|&p| is_prime(p)) {
        let mut k = 2;
        while p.pow(k as u32) <= max_order {
            base.push(Elementary(p, k));
            k += 1;
        }
    }
    base.retain(|g| order_of(g) <= max_order);

    let factors: Vec<GroupExpr> = base
        .iter()
        .filter(|g| order_of(g) > 1 && !matches!(g, Elementary(..)))
        .cloned()
        .collect();
    let mut out = base;
    for (i, a) in factors.iter().enumerate() {
        for b in &factors[i..] {
            if order_of(a) * order_of(b) <= max_order {
                out.push(Product(vec![a.clone(), b.clone()]));
            }
        }
    }
    for a in 2..=max_order {
        for b in a..=max_order {
            for c in b..=max_order {
                if a * b * c <= max_order {
                    out.push(Product(vec![Cyclic(a), Cyclic(b), Cyclic(c)]));
                }
            }
        }
    }
    for n in 3..=max_order {
        for k in 1..=max_order {
            if n * 2 * k <= max_order {
                out.push(Semidirect(Box::new(Cyclic(n)), Box::new(Cyclic(2 * k)), ActionName::Inv));
            }
        }
    }
    let mut seen = HashSet::new();
    out.retain(|g| seen.insert(g.to_string()));
    out
}

/// A short generating list for a subgroup given by its members.
fn generators_of(g: &GroupTable, members: &[usize]) -> Vec<usize> {
    let mut gens = Vec::new();
    let mut span = closure(g, &[]);
    for &x in members {
        if !span.contains(x) {
            gens.push(x);
            span = closure(g, &gens);
        }
    }
    gens
}

/// Groups of order at most `max_order`, then for each: its quotient maps by
/// every normal subgroup, its factor projections, and the trivial maps to
/// `Z(2)xZ(2)` and to itself.
pub fn catalog(max_order: usize, limits: &Limits) -> Result<Catalog> {
    if max_order > limits.order_cap {
        return Err(Error::OrderCapExceeded { order: max_order, cap: limits.order_cap });
    }
    let mut cat = Catalog::default();
    let v4 = GroupExpr::Product(vec![GroupExpr::Cyclic(2), GroupExpr::Cyclic(2)]);
    let mut seen = HashSet::new();
    for expr in catalog_groups(max_order) {
        let group = eval_group(&expr, limits)?;
        let mut specs = Vec::new();
        for n in all_subgroups(&group, limits)?.subgroups() {
            if n.is_normal() {
                specs.push(HomSpec::Quotient(expr.clone(), generators_of(&group, &n.elements())));
            }
        }
        if let GroupExpr::Product(parts) = &expr {
            specs.extend((0..parts.len()).map(|i| HomSpec::Projection(expr.clone(), vec![i])));
        }
        if !group.is_trivial() {
            specs.push(HomSpec::Trivial(expr.clone(), v4.clone()));
            specs.push(HomSpec::Trivial(expr.clone(), expr.clone()));
        }
        for spec in specs {
            if seen.insert(spec.to_string()) {
                let hom = eval_hom(&spec, limits)?;
                cat.homs.push(CatalogHom { spec, hom });
            }
        }
        cat.groups.push(CatalogGroup { expr, group });
    }
    Ok(cat)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn labels(max: usize) -> Vec<String> {
        catalog_groups(max).iter().map(|g| g.to_string()).collect()
    }

    #[test]
    fn order_eight_contents() {
        let l = labels(8);
        for want in ["Z(8)", "Z(2)xZ(4)", "Z(2)xZ(2)xZ(2)", "E(2,3)", "D(4)", "Q8"] {
            assert!(l.iter().any(|x| x == want), "missing {want}");
        }
        assert!(!l.iter().any(|x| x == "S(4)"));
    }

    #[test]
    fn order_four_homs() {
        let cat = catalog(4, &Limits::default()).unwrap();
        let specs: Vec<String> = cat.homs.iter().map(|h| h.spec.to_string()).collect();
        assert!(specs.iter().any(|s| s == "quot(Z(4),[2])"));
        assert!(specs.iter().any(|s| s == "proj(Z(2)xZ(2),0)"));
    }

    #[test]
    fn deterministic() {
        let a = catalog(8, &Limits::default()).unwrap();
        let b = catalog(8, &Limits::default()).unwrap();
        let sa: Vec<String> = a.homs.iter().map(|h| h.spec.to_string()).collect();
        let sb: Vec<String> = b.homs.iter().map(|h| h.spec.to_string()).collect();
        assert_eq!(sa, sb);
        assert!(a.homs.iter().zip(&b.homs).all(|(x, y)| x.hom.same_as(&y.hom)));
    }

    #[test]
    fn respects_cap() {
        assert!(catalog(65, &Limits::default()).is_err());
    }
}
