//! Parsing, printing and evaluating group and homomorphism expressions.

use sectio::cli::expr::{eval_group, eval_hom, parse_group, parse_hom};
use sectio::Limits;

fn main() {
    let limits = Limits::default();
    for text in ["Z(2) x Z(2)", "(Z(2)xZ(3))xZ(5)", "sd(Z(5),Z(4),inv)", "quot(Q8,[4])", "E(2,4)", "Z(", "quot(D(4),[4])"] {
        match parse_group(text) {
            Ok(expr) => match eval_group(&expr, &limits) {
                Ok(g) => println!("{text:<22} => {expr}  order {}", g.order()),
                Err(e) => println!("{text:<22} => {expr}  {e}"),
            },
            Err(e) => println!("{text:<22} => {e}"),
        }
    }
    for text in ["id(Q8)", "proj(Z(2)xZ(4),1)", "incl(Z(2)xZ(4),0)", "map(Z(4),Z(2),[1])", "ev(Z(2)xZ(2),Z(2),1)", "triv(S(3),Z(2))", "map(Z(4),Z(3),[1])"] {
        match parse_hom(text).and_then(|s| eval_hom(&s, &limits).map(|f| (s, f))) {
            Ok((spec, f)) => println!(
                "{text:<24} => {spec}: {} -> {} images {:?}",
                f.domain().label(),
                f.codomain().label(),
                f.images()
            ),
            Err(e) => println!("{text:<24} => {e}"),
        }
    }
}
