//! Covering numbers by proper and by cyclic subgroups, with witnesses.

use sectio::cli::expr::{eval_group, parse_group};
use sectio::invariants::{enumerate_minimum_covers, sigma, sigma_cyclic};
use sectio::{Limits, Result};

fn main() -> Result<()> {
    let limits = Limits::default();
    for text in ["Z(2)xZ(2)", "Z(3)xZ(3)", "Z(5)xZ(5)", "E(2,3)", "E(3,3)", "Q8", "S(3)", "D(4)", "A(4)", "Z(12)"] {
        let g = eval_group(&parse_group(text)?, &limits)?;
        let s = sigma(&g, &limits)?;
        let (c, bound) = sigma_cyclic(&g, &limits)?;
        println!(
            "{text:<10} sigma {:<8} sigma_c {:<8} cyclic subgroups {:>2}  reason {:?}",
            s.value.to_string(),
            c.value.to_string(),
            bound.bound,
            s.reason.as_ref().map(|r| r.code())
        );
        for w in &s.witness {
            println!("    {:?}", w.elements());
        }
    }

    let s3 = eval_group(&parse_group("S(3)")?, &limits)?;
    for cover in enumerate_minimum_covers(&s3, &limits)? {
        let parts: Vec<Vec<usize>> = cover.iter().map(|s| s.elements()).collect();
        println!("S(3) minimum cover {parts:?}");
    }
    Ok(())
}
