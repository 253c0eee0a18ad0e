//! Subgroup lattices, cyclic subgroups, images and preimages.

use sectio::cli::expr::{eval_group, eval_hom, parse_group, parse_hom};
use sectio::subgroups::{all_subgroups, cyclic_subgroups, image_subgroup, kernel, preimage_subgroup};
use sectio::{Limits, Result};

fn main() -> Result<()> {
    let limits = Limits::default();
    for text in ["Q8", "D(4)", "Z(2)xZ(2)xZ(2)", "A(4)"] {
        let g = eval_group(&parse_group(text)?, &limits)?;
        let lattice = all_subgroups(&g, &limits)?;
        println!("{text}: {} subgroups", lattice.len());
        for (i, s) in lattice.subgroups().iter().enumerate() {
            let tag = if lattice.maximal_proper().contains(&i) { " maximal" } else { "" };
            let normal = if s.is_normal() { " normal" } else { "" };
            println!("  #{i:<2} order {:>2} {:?}{tag}{normal}", s.order(), s.elements());
        }
        let maximal_cyclic: Vec<Vec<usize>> = cyclic_subgroups(&g)
            .into_iter()
            .filter(|c| c.maximal_cyclic)
            .map(|c| c.subgroup.elements())
            .collect();
        println!("  maximal cyclic: {maximal_cyclic:?}");
    }

    let f = eval_hom(&parse_hom("quot(D(4),[2])")?, &limits)?;
    println!("kernel of quot(D(4),[2]): {:?}", kernel(&f).elements());
    for s in all_subgroups(f.domain(), &limits)?.subgroups() {
        let img = image_subgroup(&f, s)?;
        let back = preimage_subgroup(&f, &img)?;
        println!("  {:?} -> {:?} -> {:?}", s.elements(), img.elements(), back.elements());
    }
    Ok(())
}
