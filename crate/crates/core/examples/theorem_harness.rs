//! Runs the theorem checks over the catalog. Optional argument: maximum order.

use sectio::cli::catalog::catalog;
use sectio::invariants::verify::{verify_theorems, Case};
use sectio::{Limits, Result};

fn main() -> Result<()> {
    let max: usize = std::env::args().nth(1).and_then(|s| s.parse().ok()).unwrap_or(12);
    let limits = Limits::default().with_order_cap(max.max(64));
    let start = std::time::Instant::now();
    let cat = catalog(max, &limits)?;
    let cases: Vec<Case> = cat.homs.iter().map(|h| Case { key: h.spec.to_string(), hom: h.hom.clone() }).collect();
    println!("{} groups, {} homomorphisms", cat.groups.len(), cases.len());
    let report = verify_theorems(&cases, &limits, None);
    print!("{}", report.summary());
    println!("unexercised: {:?}", report.unexercised());
    println!("elapsed {:?}", start.elapsed());
    Ok(())
}
