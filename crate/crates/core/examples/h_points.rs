//! H-points and the sectional number of evaluation maps.

use sectio::cli::expr::{eval_group, parse_group};
use sectio::homsearch::{evaluation_hom, hom_group, is_h_point};
use sectio::invariants::sec;
use sectio::{Limits, Result};

fn main() -> Result<()> {
    let limits = Limits::default();
    let g = |t: &str| -> Result<_> { eval_group(&parse_group(t)?, &limits) };
    for (gt, ht) in [("Z(4)", "Z(2)"), ("Z(4)", "Z(2)xZ(2)"), ("Z(2)xZ(2)", "Z(2)xZ(2)"), ("S(3)", "Z(3)")] {
        let (gg, hh) = (g(gt)?, g(ht)?);
        let points: Vec<usize> = gg
            .elements()
            .filter(|&a| is_h_point(&gg, &hh, a, &limits).unwrap_or(false))
            .collect();
        println!("{ht}-points of {gt}: {points:?}");
    }

    let v4 = g("Z(2)xZ(2)")?;
    let hg = hom_group(&v4, &v4, &limits)?;
    println!("|Hom(Z2xZ2, Z2xZ2)| = {}", hg.base.order());
    for a in v4.elements() {
        let ev = evaluation_hom(&hg, a)?;
        println!("  sec(ev_{}) = {}", v4.name(a), sec(&ev, &limits)?.value);
    }
    Ok(())
}
