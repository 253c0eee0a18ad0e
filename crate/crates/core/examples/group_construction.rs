//! Builds groups from the standard families and combines them.

use std::sync::Arc;

use sectio::group::{direct_product, make_semidirect, quotient, structure, ActionTable, Family, GroupTable, Hom};
use sectio::subgroups::generated_subgroup;
use sectio::{Limits, Result};

fn show(g: &Arc<GroupTable>) {
    let st = structure(g);
    println!(
        "{:<16} order {:>2}  abelian {:<5}  cyclic {:<5}  exponent {:>2}  center {:?}",
        g.label(),
        g.order(),
        st.is_abelian,
        st.is_cyclic,
        st.exponent,
        st.center.elements()
    );
}

fn main() -> Result<()> {
    let limits = Limits::default();
    let z2 = Family::Cyclic(2).build(&limits)?;
    let z3 = Family::Cyclic(3).build(&limits)?;
    let q8 = Family::Quaternion8.build(&limits)?;
    for g in [
        z2.clone(),
        Family::Dihedral(4).build(&limits)?,
        q8.clone(),
        Family::Symmetric(3).build(&limits)?,
        Family::Alternating(4).build(&limits)?,
        Family::ElementaryAbelian { p: 3, k: 2 }.build(&limits)?,
    ] {
        show(&g);
    }

    // Z2 x Z3 is cyclic of order 6.
    let p = direct_product(&[z2.clone(), z3.clone()], &limits)?;
    show(&p.group);

    // Z3 ⋊ Z2 with the inversion action is S3.
    let sign = Hom::identity(&z2);
    let action = ActionTable::inversion_along(&sign, &z3)?;
    let sd = make_semidirect(&action, &limits)?;
    show(&sd.group);

    // Q8 modulo its center.
    let center = generated_subgroup(&q8, &[4])?;
    let (q, map) = quotient(&q8, &center)?;
    show(&q);
    println!("quotient map images {:?}", map.images());

    // Element names of Q8 in canonical order.
    for x in q8.elements() {
        println!("  {x}: {:>3} of order {}", q8.name(x), q8.elem_order(x));
    }
    Ok(())
}
