//! Homomorphism enumeration, pinned searches, sections and isomorphisms.

use sectio::cli::expr::{eval_group, eval_hom, parse_group, parse_hom};
use sectio::homsearch::{
    enumerate_homs, exists_global_section, exists_local_section, find_isomorphism, is_locally_sectionable, HomQuery,
};
use sectio::subgroups::all_subgroups;
use sectio::{Limits, Result};

fn main() -> Result<()> {
    let limits = Limits::default();
    let g = |t: &str| -> Result<_> { eval_group(&parse_group(t)?, &limits) };

    let (q8, v4) = (g("Q8")?, g("Z(2)xZ(2)")?);
    let all = enumerate_homs(&HomQuery::new(&q8, &v4), &limits)?;
    println!("|Hom(Q8, Z2xZ2)| = {}", all.len());
    let pinned = enumerate_homs(&HomQuery::new(&q8, &v4).pin(1, 1)?, &limits)?;
    println!("with i -> (0,1): {}", pinned.len());

    for text in ["quot(Q8,[4])", "quot(D(4),[2])", "proj(Z(2)xZ(4),[0])", "quot(S(3),[3])"] {
        let f = eval_hom(&parse_hom(text)?, &limits)?;
        let global = exists_global_section(&f, &limits)?;
        println!("{text}: global section {:?}", global.as_ref().map(|s| s.images().to_vec()));
        println!("  locally sectionable: {:?}", is_locally_sectionable(&f));
        for l in all_subgroups(f.codomain(), &limits)?.subgroups() {
            let ls = exists_local_section(&f, l, &limits)?;
            println!("  over {:?}: {:?}", l.elements(), ls.map(|s| s.pairs()));
        }
    }

    let (a, b) = (g("Z(2)xZ(3)")?, g("Z(6)")?);
    let iso = find_isomorphism(&a, &b, &limits)?;
    println!("Z2xZ3 ~ Z6: {:?}", iso.map(|h| h.images().to_vec()));
    println!("Q8 ~ D(4): {}", find_isomorphism(&q8, &g("D(4)")?, &limits)?.is_some());
    Ok(())
}
