//! Sectional numbers, the poset of sectionable subgroups, and sigma(f).

use sectio::cli::expr::{eval_hom, parse_hom};
use sectio::invariants::{sec, sectionable_poset, sigma, sigma_hom};
use sectio::{Limits, Result};

fn main() -> Result<()> {
    let limits = Limits::default();
    for text in [
        "proj(E(2,3),[0,1])",
        "id(Z(2)xZ(2))",
        "quot(Q8,[4])",
        "quot(D(4),[2])",
        "quot(Z(2)xZ(4),[2])",
        "quot(sd(Z(4),Z(4),inv),[10])",
        "triv(Z(4),Z(2)xZ(2))",
        "quot(A(4),[3,8])",
    ] {
        let f = eval_hom(&parse_hom(text)?, &limits)?;
        let r = sec(&f, &limits)?;
        print!("{text:<30} sec {:<8}", r.value.to_string());
        match &r.reason {
            Some(reason) => println!("({} {:?})", reason.code(), reason.element()),
            None => println!("sigma(H) {}", sigma(f.codomain(), &limits)?.value),
        }
        for ls in &r.sections {
            println!("    section over {:?}: {:?}", ls.subgroup.elements(), ls.pairs());
        }
        if f.is_surjective() {
            let p = sectionable_poset(&f, &limits)?;
            println!(
                "    poset: {} elements, {} maximal, cover number {}",
                p.elements.len(),
                p.maximal.len(),
                p.cover_number
            );
            println!("    sigma(f) = {}", sigma_hom(&f, &limits)?.value);
        }
    }
    Ok(())
}
