//! Extension cocycles and their restrictions to codomain subgroups.

use sectio::cli::expr::{eval_hom, parse_hom};
use sectio::cohomology::{build_cocycle, is_coboundary, restrict_cocycle, sec_via_cohomology};
use sectio::homsearch::exists_local_section;
use sectio::invariants::sec;
use sectio::subgroups::all_subgroups;
use sectio::{Limits, Result};

fn main() -> Result<()> {
    let limits = Limits::default();
    for text in ["quot(Z(4),[2])", "quot(Q8,[4])", "proj(E(2,3),[0,1])", "quot(D(4),[2])"] {
        let f = eval_hom(&parse_hom(text)?, &limits)?;
        let (t, w) = build_cocycle(&f)?;
        println!("{text}: transversal {:?}, trivial action {}", t.rep, w.action.is_trivial());
        let n = w.base.order();
        for x in 0..n {
            let row: Vec<usize> = (0..n).map(|y| w.value(x, y)).collect();
            println!("    w({x}, -) = {row:?}");
        }
        for l in all_subgroups(f.codomain(), &limits)?.subgroups() {
            let r = restrict_cocycle(&w, l)?;
            let cob = is_coboundary(&r, &limits)?;
            let section = exists_local_section(&f, l, &limits)?.is_some();
            println!(
                "    over {:?}: coboundary {:?}, local section {section}",
                l.elements(),
                cob.map(|c| c.cochain)
            );
        }
        println!(
            "    sec via cohomology {}, sec {}",
            sec_via_cohomology(&f, &limits)?.value,
            sec(&f, &limits)?.value
        );
    }
    Ok(())
}
