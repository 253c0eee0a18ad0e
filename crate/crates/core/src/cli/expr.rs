//! Group and homomorphism expressions.
//!
//! ```text
//! expr   := term ('x' term)*
//! term   := 'Z(' int ')' | 'D(' int ')' | 'Q8' | 'S(' int ')' | 'A(' int ')'
//!         | 'E(' int ',' int ')' | 'sd(' expr ',' expr ',' action ')'
//!         | 'quot(' expr ',' ints ')' | '(' expr ')'
//! action := 'inv' | 'trivial'
//! ints   := '[' (int (',' int)*)? ']'
//!
//! hom    := 'id(' expr ')' | 'quot(' expr ',' ints ')'
//!         | 'proj(' expr ',' (int | ints) ')' | 'incl(' expr ',' int ')'
//!         | 'map(' expr ',' expr ',' ints ')' | 'ev(' expr ',' expr ',' int ')'
//!         | 'triv(' expr ',' expr ')'
//! ```
//!
//! Whitespace is ignored. Element indices refer to the canonical orderings
//! printed by `describe`.

use std::fmt;
use std::sync::Arc;

use crate::group::{
    direct_product, make_cyclic, make_semidirect, quotient, ActionTable, Family, GroupTable, Hom, Product,
};
use crate::homsearch::{enumerate_homs, evaluation_hom, hom_group, HomQuery};
use crate::limits::Limits;
use crate::subgroups::generated_subgroup;
use crate::{Error, Result};

pub const MAX_INPUT: usize = 4096;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum ActionName {
    Inv,
    Trivial,
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum GroupExpr {
    Cyclic(usize),
    Dihedral(usize),
    Quaternion,
    Symmetric(usize),
    Alternating(usize),
    Elementary(usize, usize),
    Product(Vec<GroupExpr>),
    Semidirect(Box<GroupExpr>, Box<GroupExpr>, ActionName),
    Quotient(Box<GroupExpr>, Vec<usize>),
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum HomSpec {
    Identity(GroupExpr),
    Quotient(GroupExpr, Vec<usize>),
    Projection(GroupExpr, Vec<usize>),
    Inclusion(GroupExpr, usize),
    Map(GroupExpr, GroupExpr, Vec<usize>),
    Evaluation(GroupExpr, GroupExpr, usize),
    Trivial(GroupExpr, GroupExpr),
}

// ---------------------------------------------------------------------------
// Printing
// ---------------------------------------------------------------------------

fn ints(xs: &[usize]) -> String {
    format!("[{}]", xs.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(","))
}

impl fmt::Display for GroupExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GroupExpr::Cyclic(n) => write!(f, "Z({n})"),
            GroupExpr::Dihedral(n) => write!(f, "D({n})"),
            GroupExpr::Quaternion => f.write_str("Q8"),
            GroupExpr::Symmetric(n) => write!(f, "S({n})"),
            GroupExpr::Alternating(n) => write!(f, "A({n})"),
            GroupExpr::Elementary(p, k) => write!(f, "E({p},{k})"),
            GroupExpr::Product(parts) => {
                for (i, p) in parts.iter().enumerate() {
                    if i > 0 {
                        f.write_str("x")?;
                    }
                    if matches!(p, GroupExpr::Product(_)) {
                        write!(f, "({p})")?;
                    } else {
                        write!(f, "{p}")?;
                    }
                }
                Ok(())
            }
            GroupExpr::Semidirect(a, h, act) => {
                let name = match act {
                    ActionName::Inv => "inv",
                    ActionName::Trivial => "trivial",
                };
                write!(f, "sd({a},{h},{name})")
            }
            GroupExpr::Quotient(g, gens) => write!(f, "quot({g},{})", ints(gens)),
        }
    }
}

impl fmt::Display for HomSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            HomSpec::Identity(g) => write!(f, "id({g})"),
            HomSpec::Quotient(g, gens) => write!(f, "quot({g},{})", ints(gens)),
            HomSpec::Projection(g, which) if which.len() == 1 => write!(f, "proj({g},{})", which[0]),
            HomSpec::Projection(g, which) => write!(f, "proj({g},{})", ints(which)),
            HomSpec::Inclusion(g, i) => write!(f, "incl({g},{i})"),
            HomSpec::Map(d, c, imgs) => write!(f, "map({d},{c},{})", ints(imgs)),
            HomSpec::Evaluation(g, a, x) => write!(f, "ev({g},{a},{x})"),
            HomSpec::Trivial(d, c) => write!(f, "triv({d},{c})"),
        }
    }
}

// ---------------------------------------------------------------------------
// Parsing
// ---------------------------------------------------------------------------

struct Parser<'a> {
    src: &'a [u8],
    pos: usize,
}

impl<'a> Parser<'a> {
    fn new(text: &'a str) -> Result<Self> {
        if text.len() > MAX_INPUT {
            return Err(Error::Syntax { offset: MAX_INPUT, expected: vec!["end of input".into()] });
        }
        Ok(Parser { src: text.as_bytes(), pos: 0 })
    }

    fn skip_ws(&mut self) {
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn fail<T>(&mut self, expected: &[&str]) -> Result<T> {
        self.skip_ws();
        Err(Error::Syntax { offset: self.pos, expected: expected.iter().map(|s| s.to_string()).collect() })
    }

    fn peek_word(&mut self, word: &str) -> bool {
        self.skip_ws();
        self.src[self.pos..].starts_with(word.as_bytes())
    }

    fn eat(&mut self, word: &str) -> bool {
        // `name(` may have blanks before the parenthesis
        if let Some(head) = word.strip_suffix('(').filter(|h| !h.is_empty()) {
            let save = self.pos;
            if self.peek_word(head) {
                self.pos += head.len();
                if self.eat("(") {
                    return true;
                }
            }
            self.pos = save;
            return false;
        }
        if self.peek_word(word) {
            self.pos += word.len();
            true
        } else {
            false
        }
    }

    fn expect(&mut self, word: &str) -> Result<()> {
        if self.eat(word) {
            Ok(())
        } else {
            self.fail(&[word])
        }
    }

    fn int(&mut self) -> Result<usize> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if start == self.pos {
            return self.fail(&["integer"]);
        }
        let text = std::str::from_utf8(&self.src[start..self.pos]).unwrap();
        text.parse().map_err(|_| Error::Syntax { offset: start, expected: vec!["smaller integer".into()] })
    }

    fn int_list(&mut self) -> Result<Vec<usize>> {
        self.expect("[")?;
        let mut out = Vec::new();
        if self.eat("]") {
            return Ok(out);
        }
        loop {
            out.push(self.int()?);
            if self.eat("]") {
                return Ok(out);
            }
            if !self.eat(",") {
                return self.fail(&[",", "]"]);
            }
        }
    }

    fn finish(&mut self) -> Result<()> {
        self.skip_ws();
        if self.pos == self.src.len() {
            Ok(())
        } else {
            self.fail(&["end of input"])
        }
    }

    fn expr(&mut self) -> Result<GroupExpr> {
        let mut parts = vec![self.term()?];
        while self.eat("x") {
            parts.push(self.term()?);
        }
        Ok(if parts.len() == 1 { parts.pop().unwrap() } else { GroupExpr::Product(parts) })
    }

    fn call1(&mut self) -> Result<usize> {
        let n = self.int()?;
        self.expect(")")?;
        Ok(n)
    }

    fn term(&mut self) -> Result<GroupExpr> {
        const TERMS: &[&str] = &["Z(", "D(", "Q8", "S(", "A(", "E(", "sd(", "quot(", "("];
        if self.eat("Z(") {
            Ok(GroupExpr::Cyclic(self.call1()?))
        } else if self.eat("D(") {
            Ok(GroupExpr::Dihedral(self.call1()?))
        } else if self.eat("Q8") {
            Ok(GroupExpr::Quaternion)
        } else if self.eat("S(") {
            Ok(GroupExpr::Symmetric(self.call1()?))
        } else if self.eat("A(") {
            Ok(GroupExpr::Alternating(self.call1()?))
        } else if self.eat("E(") {
            let p = self.int()?;
            self.expect(",")?;
            Ok(GroupExpr::Elementary(p, self.call1()?))
        } else if self.eat("sd(") {
            let a = self.expr()?;
            self.expect(",")?;
            let h = self.expr()?;
            self.expect(",")?;
            let act = if self.eat("inv") {
                ActionName::Inv
            } else if self.eat("trivial") {
                ActionName::Trivial
            } else {
                return self.fail(&["inv", "trivial"]);
            };
            self.expect(")")?;
            Ok(GroupExpr::Semidirect(Box::new(a), Box::new(h), act))
        } else if self.eat("quot(") {
            let g = self.expr()?;
            self.expect(",")?;
            let gens = self.int_list()?;
            self.expect(")")?;
            Ok(GroupExpr::Quotient(Box::new(g), gens))
        } else if self.eat("(") {
            let g = self.expr()?;
            self.expect(")")?;
            Ok(g)
        } else {
            self.fail(TERMS)
        }
    }

    fn hom(&mut self) -> Result<HomSpec> {
        const HEADS: &[&str] = &["id(", "quot(", "proj(", "incl(", "map(", "ev(", "triv("];
        let spec = if self.eat("id(") {
            HomSpec::Identity(self.expr()?)
        } else if self.eat("quot(") {
            let g = self.expr()?;
            self.expect(",")?;
            HomSpec::Quotient(g, self.int_list()?)
        } else if self.eat("proj(") {
            let g = self.expr()?;
            self.expect(",")?;
            let which = if self.peek_word("[") { self.int_list()? } else { vec![self.int()?] };
            HomSpec::Projection(g, which)
        } else if self.eat("incl(") {
            let g = self.expr()?;
            self.expect(",")?;
            HomSpec::Inclusion(g, self.int()?)
        } else if self.eat("map(") {
            let d = self.expr()?;
            self.expect(",")?;
            let c = self.expr()?;
            self.expect(",")?;
            HomSpec::Map(d, c, self.int_list()?)
        } else if self.eat("ev(") {
            let g = self.expr()?;
            self.expect(",")?;
            let a = self.expr()?;
            self.expect(",")?;
            HomSpec::Evaluation(g, a, self.int()?)
        } else if self.eat("triv(") {
            let d = self.expr()?;
            self.expect(",")?;
            HomSpec::Trivial(d, self.expr()?)
        } else {
            return self.fail(HEADS);
        };
        self.expect(")")?;
        Ok(spec)
    }
}

pub fn parse_group(text: &str) -> Result<GroupExpr> {
    let mut p = Parser::new(text)?;
    let g = p.expr()?;
    p.finish()?;
    Ok(g)
}

pub fn parse_hom(text: &str) -> Result<HomSpec> {
    let mut p = Parser::new(text)?;
    let h = p.hom()?;
    p.finish()?;
    Ok(h)
}

// ---------------------------------------------------------------------------
// Evaluation
// ---------------------------------------------------------------------------

fn elaboration(e: Error) -> Error {
    match e {
        Error::NotNormal => Error::Elaboration("quotient generators do not span a normal subgroup".into()),
        Error::InvalidParameter(m) | Error::InvalidAction(m) | Error::InvalidHom(m) => Error::Elaboration(m),
        other => other,
    }
}

/// Evaluates `expr`, keeping the factor data when it is a product.
fn eval_inner(expr: &GroupExpr, limits: &Limits) -> Result<(Arc<GroupTable>, Option<Product>)> {
    let label = expr.to_string();
    let relabel = |g: &Arc<GroupTable>| Arc::new(g.relabeled(label.clone()));
    let group = match expr {
        GroupExpr::Cyclic(n) => Family::Cyclic(*n).build(limits),
        GroupExpr::Dihedral(n) => Family::Dihedral(*n).build(limits),
        GroupExpr::Quaternion => Family::Quaternion8.build(limits),
        GroupExpr::Symmetric(n) => Family::Symmetric(*n).build(limits),
        GroupExpr::Alternating(n) => Family::Alternating(*n).build(limits),
        GroupExpr::Elementary(p, k) => {
            let g = Family::ElementaryAbelian { p: *p, k: *k }.build(limits).map_err(elaboration)?;
            let zp = make_cyclic(*p, limits)?;
            let mut product = direct_product(&vec![zp; *k], limits)?;
            product.group = relabel(&g);
            return Ok((product.group.clone(), Some(product)));
        }
        GroupExpr::Product(parts) => {
            let factors = parts.iter().map(|p| eval_group(p, limits)).collect::<Result<Vec<_>>>()?;
            let mut product = direct_product(&factors, limits)?;
            product.group = relabel(&product.group);
            return Ok((product.group.clone(), Some(product)));
        }
        GroupExpr::Semidirect(a, h, act) => {
            let a = eval_group(a, limits)?;
            let h = eval_group(h, limits)?;
            let action = match act {
                ActionName::Trivial => ActionTable::trivial(&h, &a),
                ActionName::Inv => {
                    if !a.is_abelian() {
                        return Err(Error::Elaboration("inversion needs an abelian normal factor".into()));
                    }
                    let z2 = make_cyclic(2, limits)?;
                    let sign = enumerate_homs(&HomQuery::new(&h, &z2).limit(2), limits)?
                        .into_iter()
                        .nth(1)
                        .ok_or_else(|| Error::Elaboration(format!("{} has no character of order 2", h.label())))?;
                    ActionTable::inversion_along(&sign, &a).map_err(elaboration)?
                }
            };
            make_semidirect(&action, limits).map_err(elaboration).map(|s| s.group)
        }
        GroupExpr::Quotient(g, gens) => {
            let g = eval_group(g, limits)?;
            let n = quotient_subgroup(&g, gens)?;
            quotient(&g, &n).map_err(elaboration).map(|(q, _)| q)
        }
    }
    .map_err(elaboration)?;
    Ok((relabel(&group), None))
}

pub fn eval_group(expr: &GroupExpr, limits: &Limits) -> Result<Arc<GroupTable>> {
    eval_inner(expr, limits).map(|(g, _)| g)
}

fn check_element(g: &GroupTable, x: usize) -> Result<()> {
    if x >= g.order() {
        Err(Error::Elaboration(format!("element {x} is out of range for {} (order {})", g.label(), g.order())))
    } else {
        Ok(())
    }
}

fn quotient_subgroup(g: &Arc<GroupTable>, gens: &[usize]) -> Result<crate::subgroups::Subgroup> {
    for &x in gens {
        check_element(g, x)?;
    }
    generated_subgroup(g, gens).map_err(elaboration)
}

fn product_of(expr: &GroupExpr, limits: &Limits) -> Result<Product> {
    match eval_inner(expr, limits)? {
        (_, Some(p)) => Ok(p),
        (g, None) => Err(Error::Elaboration(format!("{} is not written as a product", g.label()))),
    }
}

pub fn eval_hom(spec: &HomSpec, limits: &Limits) -> Result<Hom> {
    match spec {
        HomSpec::Identity(g) => Ok(Hom::identity(&eval_group(g, limits)?)),
        HomSpec::Quotient(expr, gens) => {
            let g = eval_group(expr, limits)?;
            let n = quotient_subgroup(&g, gens)?;
            let (q, map) = quotient(&g, &n).map_err(elaboration)?;
            let label = GroupExpr::Quotient(Box::new(expr.clone()), gens.clone()).to_string();
            Hom::new(g, Arc::new(q.relabeled(label)), map.images().to_vec())
        }
        HomSpec::Projection(expr, which) => {
            let p = product_of(expr, limits)?;
            let parts = match expr {
                GroupExpr::Product(parts) => parts.clone(),
                GroupExpr::Elementary(p, k) => vec![GroupExpr::Cyclic(*p); *k],
                _ => unreachable!("product_of accepts products only"),
            };
            if which.is_empty() {
                return Err(Error::Elaboration("projection onto no factors".into()));
            }
            if let Some(&i) = which.iter().find(|&&i| i >= p.factors.len()) {
                return Err(Error::Elaboration(format!("factor {i} out of range")));
            }
            if which.len() == 1 {
                Ok(p.projection(which[0]))
            } else {
                let h = p.projection_onto(which, limits)?;
                let label = GroupExpr::Product(which.iter().map(|&i| parts[i].clone()).collect()).to_string();
                Hom::new(p.group.clone(), Arc::new(h.codomain().relabeled(label)), h.images().to_vec())
            }
        }
        HomSpec::Inclusion(g, i) => {
            let p = product_of(g, limits)?;
            if *i >= p.factors.len() {
                return Err(Error::Elaboration(format!("factor {i} out of range")));
            }
            Ok(p.injection(*i))
        }
        HomSpec::Map(d, c, imgs) => {
            let (d, c) = (eval_group(d, limits)?, eval_group(c, limits)?);
            let gens = d.generating_sequence();
            if gens.len() != imgs.len() {
                return Err(Error::Elaboration(format!(
                    "{} is generated by {:?}; expected {} images",
                    d.label(),
                    gens,
                    gens.len()
                )));
            }
            let mut q = HomQuery::new(&d, &c);
            for (&x, &y) in gens.iter().zip(imgs) {
                check_element(&c, y)?;
                q = q.pin(x, y).map_err(elaboration)?;
            }
            enumerate_homs(&q.limit(1), limits)?
                .pop()
                .ok_or_else(|| Error::Elaboration("generator images do not extend to a homomorphism".into()))
        }
        HomSpec::Evaluation(g, a, x) => {
            let (g, a) = (eval_group(g, limits)?, eval_group(a, limits)?);
            check_element(&g, *x)?;
            let hg = hom_group(&g, &a, limits).map_err(|e| match e {
                Error::NotAbelian(m) => Error::Elaboration(format!("{m} is not abelian")),
                other => other,
            })?;
            evaluation_hom(&hg, *x)
        }
        HomSpec::Trivial(d, c) => Ok(Hom::trivial(&eval_group(d, limits)?, &eval_group(c, limits)?)),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn lim() -> Limits {
        Limits::default()
    }

    #[test]
    fn parse_products() {
        let g = parse_group(" Z (2) x\tZ(2) ").unwrap();
        assert_eq!(g, GroupExpr::Product(vec![GroupExpr::Cyclic(2), GroupExpr::Cyclic(2)]));
        assert_eq!(eval_group(&g, &lim()).unwrap().order(), 4);
        assert_eq!(g.to_string(), "Z(2)xZ(2)");
        let nested = parse_group("(Z(2)xZ(2))xZ(3)").unwrap();
        assert_eq!(parse_group(&nested.to_string()).unwrap(), nested);
        assert_eq!(parse_group("((Q8))").unwrap(), GroupExpr::Quaternion);
    }

    #[test]
    fn syntax_errors_have_offsets() {
        match parse_group("Z(") {
            Err(Error::Syntax { offset, expected }) => {
                assert_eq!(offset, 2);
                assert_eq!(expected, vec!["integer"]);
            }
            other => panic!("{other:?}"),
        }
        assert!(matches!(parse_group("Z(2)y"), Err(Error::Syntax { offset: 4, .. })));
        assert!(matches!(parse_group("W(2)"), Err(Error::Syntax { offset: 0, .. })));
        assert!(matches!(parse_group(&"(".repeat(5000)), Err(Error::Syntax { .. })));
    }

    #[test]
    fn quotient_of_q8() {
        let spec = parse_hom("quot(Q8,[4])").unwrap();
        let f = eval_hom(&spec, &lim()).unwrap();
        assert_eq!(f.codomain().order(), 4);
        assert_eq!(f.codomain().label(), "quot(Q8,[4])");
        let g = eval_group(&parse_group("quot(Q8,[4])").unwrap(), &lim()).unwrap();
        assert_eq!(g.order(), 4);
    }

    #[test]
    fn non_normal_quotient_is_an_elaboration_error() {
        // (1 2) generates a non-normal subgroup of S(3)
        let e = eval_hom(&parse_hom("quot(S(3),[1])").unwrap(), &lim()).unwrap_err();
        assert!(matches!(e, Error::Elaboration(_)), "{e:?}");
    }

    #[test]
    fn semidirect_products() {
        let g = eval_group(&parse_group("sd(Z(3),Z(4),inv)").unwrap(), &lim()).unwrap();
        assert_eq!(g.order(), 12);
        assert!(!g.is_abelian());
        let d = eval_group(&parse_group("sd(Z(5),Z(2),inv)").unwrap(), &lim()).unwrap();
        assert_eq!(d.exponent(), 10);
        let t = eval_group(&parse_group("sd(Z(3),Z(2),trivial)").unwrap(), &lim()).unwrap();
        assert!(t.is_cyclic());
        assert!(matches!(
            eval_group(&parse_group("sd(Z(3),Z(3),inv)").unwrap(), &lim()),
            Err(Error::Elaboration(_))
        ));
    }

    #[test]
    fn homomorphism_forms() {
        let p = eval_hom(&parse_hom("proj(Z(2)xZ(3),1)").unwrap(), &lim()).unwrap();
        assert_eq!(p.codomain().order(), 3);
        let p = eval_hom(&parse_hom("proj(Z(2)xZ(3)xZ(5),[2,0])").unwrap(), &lim()).unwrap();
        assert_eq!(p.codomain().label(), "Z(5)xZ(2)");
        let i = eval_hom(&parse_hom("incl(Z(2)xZ(3),0)").unwrap(), &lim()).unwrap();
        assert!(i.is_injective());
        let m = eval_hom(&parse_hom("map(Z(4),Z(2),[1])").unwrap(), &lim()).unwrap();
        assert_eq!(m.images(), &[0, 1, 0, 1]);
        assert!(eval_hom(&parse_hom("map(Z(2),Z(4),[1])").unwrap(), &lim()).is_err());
        let ev = eval_hom(&parse_hom("ev(Z(2)xZ(2),Z(2)xZ(2),2)").unwrap(), &lim()).unwrap();
        assert_eq!(ev.domain().order(), 16);
        let t = eval_hom(&parse_hom("triv(S(3),Z(2))").unwrap(), &lim()).unwrap();
        assert!(t.images().iter().all(|&y| y == 0));
        assert!(eval_hom(&parse_hom("proj(Z(6),0)").unwrap(), &lim()).is_err());
    }

    #[test]
    fn hom_round_trip() {
        for text in ["id(Q8)", "quot(D(4),[2])", "proj(Z(2)xZ(2),0)", "proj(Z(2)xZ(3),[1,0])",
                     "incl(Z(2)xS(3),1)", "map(Z(4),Z(2),[1])", "ev(Z(4),Z(2),1)", "triv(Z(3),Z(2)xZ(2))"] {
            let spec = parse_hom(text).unwrap();
            assert_eq!(spec.to_string(), text);
        }
    }
}
