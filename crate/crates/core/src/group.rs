//! Finite groups as Cayley tables, homomorphisms between them, and the
//! standard constructions: families, direct and semidirect products,
//! quotients and fiber products.
//!
//! Every table keeps the identity at index 0.

use std::collections::hash_map::DefaultHasher;
use std::fmt;
use std::hash::{Hash, Hasher};
use std::sync::{Arc, OnceLock};

use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

use crate::arith::is_prime;
use crate::elemset::ElemSet;
use crate::limits::{Limits, EXHAUSTIVE_ASSOCIATIVITY, SAMPLED_TRIPLES};
use crate::subgroups::Subgroup;
use crate::{Error, Result};

pub struct GroupTable {
    label: String,
    order: usize,
    mul: Vec<usize>,
    inv: Vec<usize>,
    elem_order: Vec<usize>,
    names: Vec<String>,
    fingerprint: u64,
    pub(crate) lattice: OnceLock<Arc<Vec<ElemSet>>>,
}

impl GroupTable {
    /// Validates a full multiplication table (`rows[a][b] = a·b`).
    pub fn from_rows(
        label: impl Into<String>,
        rows: Vec<Vec<usize>>,
        names: Option<Vec<String>>,
        limits: &Limits,
    ) -> Result<Self> {
        let n = rows.len();
        if rows.iter().any(|r| r.len() != n) {
            return Err(Error::InvalidTable("table is not square".into()));
        }
        Self::from_flat(label, rows.concat(), n, names, limits)
    }

    pub(crate) fn from_flat(
        label: impl Into<String>,
        mul: Vec<usize>,
        n: usize,
        names: Option<Vec<String>>,
        limits: &Limits,
    ) -> Result<Self> {
        if n == 0 {
            return Err(Error::InvalidTable("empty group".into()));
        }
        limits.check_order(n)?;
        if mul.len() != n * n || mul.iter().any(|&x| x >= n) {
            return Err(Error::InvalidTable("entries out of range".into()));
        }
        for x in 0..n {
            if mul[x] != x || mul[x * n] != x {
                return Err(Error::InvalidTable(format!("index 0 is not an identity for {x}")));
            }
        }
        // Latin-square rows and columns give unique solvability, hence inverses.
        for a in 0..n {
            let mut row = vec![false; n];
            let mut col = vec![false; n];
            for b in 0..n {
                row[mul[a * n + b]] = true;
                col[mul[b * n + a]] = true;
            }
            if row.iter().chain(col.iter()).any(|seen| !seen) {
                return Err(Error::InvalidTable(format!("row or column {a} is not a permutation")));
            }
        }
        let assoc = |x: usize, y: usize, z: usize| {
            mul[mul[x * n + y] * n + z] == mul[x * n + mul[y * n + z]]
        };
        if n <= EXHAUSTIVE_ASSOCIATIVITY {
            for x in 0..n {
                for y in 0..n {
                    for z in 0..n {
                        if !assoc(x, y, z) {
                            return Err(Error::InvalidTable(format!(
                                "associativity fails at ({x},{y},{z})"
                            )));
                        }
                    }
                }
            }
        } else {
            let mut rng = StdRng::seed_from_u64(limits.seed);
            for _ in 0..SAMPLED_TRIPLES {
                let (x, y, z) = (rng.gen_range(0..n), rng.gen_range(0..n), rng.gen_range(0..n));
                if !assoc(x, y, z) {
                    return Err(Error::InvalidTable(format!(
                        "associativity fails at ({x},{y},{z})"
                    )));
                }
            }
        }
        Ok(Self::trusted(label, mul, n, names))
    }

    /// Builds derived data for a table already known to be a group.
    pub(crate) fn trusted(
        label: impl Into<String>,
        mul: Vec<usize>,
        n: usize,
        names: Option<Vec<String>>,
    ) -> Self {
        let inv: Vec<usize> = (0..n)
            .map(|a| (0..n).find(|&b| mul[a * n + b] == 0).expect("group element without inverse"))
            .collect();
        let elem_order = (0..n)
            .map(|a| {
                let (mut x, mut k) = (a, 1);
                while x != 0 {
                    x = mul[x * n + a];
                    k += 1;
                }
                k
            })
            .collect();
        let mut h = DefaultHasher::new();
        n.hash(&mut h);
        mul.hash(&mut h);
        let names = names.unwrap_or_else(|| (0..n).map(|i| i.to_string()).collect());
        assert_eq!(names.len(), n);
        GroupTable {
            label: label.into(),
            order: n,
            mul,
            inv,
            elem_order,
            names,
            fingerprint: h.finish(),
            lattice: OnceLock::new(),
        }
    }

    pub fn with_label(mut self, label: impl Into<String>) -> Self {
        self.label = label.into();
        self
    }

    /// Copy of the table under another label.
    pub fn relabeled(&self, label: impl Into<String>) -> GroupTable {
        GroupTable {
            label: label.into(),
            order: self.order,
            mul: self.mul.clone(),
            inv: self.inv.clone(),
            elem_order: self.elem_order.clone(),
            names: self.names.clone(),
            fingerprint: self.fingerprint,
            lattice: self.lattice.clone(),
        }
    }

    pub fn label(&self) -> &str {
        &self.label
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn identity(&self) -> usize {
        0
    }

    #[inline]
    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.mul[a * self.order + b]
    }

    #[inline]
    pub fn inv(&self, a: usize) -> usize {
        self.inv[a]
    }

    #[inline]
    pub fn elem_order(&self, a: usize) -> usize {
        self.elem_order[a]
    }

    pub fn element_orders(&self) -> &[usize] {
        &self.elem_order
    }

    pub fn name(&self, a: usize) -> &str {
        &self.names[a]
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn fingerprint(&self) -> u64 {
        self.fingerprint
    }

    pub fn elements(&self) -> std::ops::Range<usize> {
        0..self.order
    }

    pub fn all(&self) -> ElemSet {
        ElemSet::full(self.order)
    }

    pub fn pow(&self, a: usize, k: usize) -> usize {
        (0..k).fold(0, |acc, _| self.mul(acc, a))
    }

    /// `a b a^-1`
    pub fn conj(&self, a: usize, b: usize) -> usize {
        self.mul(self.mul(a, b), self.inv(a))
    }

    pub fn is_abelian(&self) -> bool {
        (0..self.order).all(|a| (0..a).all(|b| self.mul(a, b) == self.mul(b, a)))
    }

    pub fn is_cyclic(&self) -> bool {
        self.elem_order.contains(&self.order)
    }

    pub fn is_trivial(&self) -> bool {
        self.order == 1
    }

    pub fn exponent(&self) -> usize {
        self.elem_order.iter().fold(1, |acc, &k| acc / crate::arith::gcd(acc, k) * k)
    }

    /// Greedy generating sequence: descending element order, ties by index.
    pub fn generating_sequence(&self) -> Vec<usize> {
        let mut by_order: Vec<usize> = (1..self.order).collect();
        by_order.sort_by_key(|&x| (std::cmp::Reverse(self.elem_order[x]), x));
        let mut gens = Vec::new();
        let mut span = ElemSet::singleton(0);
        for x in by_order {
            if span.len() == self.order {
                break;
            }
            if !span.contains(x) {
                gens.push(x);
                span = crate::subgroups::closure(self, &gens);
            }
        }
        gens
    }
}

impl PartialEq for GroupTable {
    fn eq(&self, other: &Self) -> bool {
        self.order == other.order && self.fingerprint == other.fingerprint && self.mul == other.mul
    }
}

impl Eq for GroupTable {}

impl fmt::Debug for GroupTable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "GroupTable({}, order {})", self.label, self.order)
    }
}

impl fmt::Display for GroupTable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.label)
    }
}

pub(crate) fn same_group(a: &Arc<GroupTable>, b: &Arc<GroupTable>) -> bool {
    Arc::ptr_eq(a, b) || **a == **b
}

// ---------------------------------------------------------------------------
// Homomorphisms
// ---------------------------------------------------------------------------

/// A total map between two tables, validated multiplicative.
#[derive(Clone)]
pub struct Hom {
    domain: Arc<GroupTable>,
    codomain: Arc<GroupTable>,
    images: Vec<usize>,
}

impl Hom {
    pub fn new(domain: Arc<GroupTable>, codomain: Arc<GroupTable>, images: Vec<usize>) -> Result<Self> {
        let n = domain.order();
        if images.len() != n {
            return Err(Error::InvalidHom(format!(
                "{} images for a domain of order {n}",
                images.len()
            )));
        }
        if images.iter().any(|&y| y >= codomain.order()) {
            return Err(Error::InvalidHom("image index out of range".into()));
        }
        if images[0] != 0 {
            return Err(Error::InvalidHom("identity not preserved".into()));
        }
        for a in 0..n {
            if !domain.elem_order(a).is_multiple_of(codomain.elem_order(images[a])) {
                return Err(Error::InvalidHom(format!("order of image of {a} does not divide its order")));
            }
            for b in 0..n {
                if images[domain.mul(a, b)] != codomain.mul(images[a], images[b]) {
                    return Err(Error::InvalidHom(format!("not multiplicative at ({a},{b})")));
                }
            }
        }
        Ok(Hom { domain, codomain, images })
    }

    pub fn identity(g: &Arc<GroupTable>) -> Self {
        Hom { domain: g.clone(), codomain: g.clone(), images: g.elements().collect() }
    }

    pub fn trivial(domain: &Arc<GroupTable>, codomain: &Arc<GroupTable>) -> Self {
        Hom { domain: domain.clone(), codomain: codomain.clone(), images: vec![0; domain.order()] }
    }

    pub fn domain(&self) -> &Arc<GroupTable> {
        &self.domain
    }

    pub fn codomain(&self) -> &Arc<GroupTable> {
        &self.codomain
    }

    pub fn images(&self) -> &[usize] {
        &self.images
    }

    #[inline]
    pub fn apply(&self, a: usize) -> usize {
        self.images[a]
    }

    /// `next ∘ self`
    pub fn then(&self, next: &Hom) -> Result<Hom> {
        if !same_group(&self.codomain, &next.domain) {
            return Err(Error::ParentMismatch);
        }
        let images = self.images.iter().map(|&y| next.images[y]).collect();
        Ok(Hom { domain: self.domain.clone(), codomain: next.codomain.clone(), images })
    }

    pub fn image_set(&self) -> ElemSet {
        self.images.iter().copied().collect()
    }

    pub fn kernel_set(&self) -> ElemSet {
        self.domain.elements().filter(|&a| self.images[a] == 0).collect()
    }

    pub fn is_surjective(&self) -> bool {
        self.image_set().len() == self.codomain.order()
    }

    pub fn is_injective(&self) -> bool {
        self.images.iter().filter(|&&y| y == 0).count() == 1
    }

    /// Least codomain element outside the image.
    pub fn first_missed(&self) -> Option<usize> {
        let img = self.image_set();
        self.codomain.elements().find(|&b| !img.contains(b))
    }

    /// The fiber `f^{-1}(b)`, ascending.
    pub fn fiber(&self, b: usize) -> Vec<usize> {
        self.domain.elements().filter(|&a| self.images[a] == b).collect()
    }

    pub fn same_as(&self, other: &Hom) -> bool {
        self.images == other.images
            && same_group(&self.domain, &other.domain)
            && same_group(&self.codomain, &other.codomain)
    }

    /// `f1 × f2 : G1×G2 → H1×H2`
    pub fn product(f1: &Hom, f2: &Hom, limits: &Limits) -> Result<Hom> {
        let dom = make_product(&f1.domain, &f2.domain, limits)?;
        let cod = make_product(&f1.codomain, &f2.codomain, limits)?;
        let k = f2.domain.order();
        let k2 = f2.codomain.order();
        let images = dom
            .group
            .elements()
            .map(|x| f1.images[x / k] * k2 + f2.images[x % k])
            .collect();
        Hom::new(dom.group, cod.group, images)
    }
}

impl fmt::Debug for Hom {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Hom({} -> {}, {:?})", self.domain.label(), self.codomain.label(), self.images)
    }
}

// ---------------------------------------------------------------------------
// Actions
// ---------------------------------------------------------------------------

/// A left action of `actor` on `target` by automorphisms.
#[derive(Clone, Debug)]
pub struct ActionTable {
    actor: Arc<GroupTable>,
    target: Arc<GroupTable>,
    act: Vec<Vec<usize>>,
}

impl ActionTable {
    pub fn new(actor: Arc<GroupTable>, target: Arc<GroupTable>, act: Vec<Vec<usize>>) -> Result<Self> {
        let (h, a) = (actor.order(), target.order());
        if act.len() != h || act.iter().any(|row| row.len() != a || row.iter().any(|&x| x >= a)) {
            return Err(Error::InvalidAction("table has the wrong shape".into()));
        }
        if act[0].iter().enumerate().any(|(i, &x)| i != x) {
            return Err(Error::InvalidAction("identity does not act trivially".into()));
        }
        for (g, row) in act.iter().enumerate() {
            let mut hit = vec![false; a];
            row.iter().for_each(|&x| hit[x] = true);
            if hit.iter().any(|b| !b) {
                return Err(Error::InvalidAction(format!("element {g} does not act bijectively")));
            }
            for x in 0..a {
                for y in 0..a {
                    if row[target.mul(x, y)] != target.mul(row[x], row[y]) {
                        return Err(Error::InvalidAction(format!(
                            "element {g} does not act by an automorphism"
                        )));
                    }
                }
            }
        }
        for g1 in 0..h {
            for g2 in 0..h {
                let prod = &act[actor.mul(g1, g2)];
                if (0..a).any(|x| prod[x] != act[g1][act[g2][x]]) {
                    return Err(Error::InvalidAction(format!("not compatible at ({g1},{g2})")));
                }
            }
        }
        Ok(ActionTable { actor, target, act })
    }

    pub fn trivial(actor: &Arc<GroupTable>, target: &Arc<GroupTable>) -> Self {
        let row: Vec<usize> = target.elements().collect();
        ActionTable { actor: actor.clone(), target: target.clone(), act: vec![row; actor.order()] }
    }

    /// Elements with `sign(h) ≠ 1` act by inversion. `target` must be abelian.
    pub fn inversion_along(sign: &Hom, target: &Arc<GroupTable>) -> Result<Self> {
        if sign.codomain().order() != 2 {
            return Err(Error::InvalidAction("sign character must land in a group of order 2".into()));
        }
        let act = sign
            .domain()
            .elements()
            .map(|h| {
                target
                    .elements()
                    .map(|x| if sign.apply(h) == 0 { x } else { target.inv(x) })
                    .collect()
            })
            .collect();
        ActionTable::new(sign.domain().clone(), target.clone(), act)
    }

    pub fn actor(&self) -> &Arc<GroupTable> {
        &self.actor
    }

    pub fn target(&self) -> &Arc<GroupTable> {
        &self.target
    }

    #[inline]
    pub fn apply(&self, h: usize, a: usize) -> usize {
        self.act[h][a]
    }

    pub fn is_trivial(&self) -> bool {
        self.act.iter().all(|row| row.iter().enumerate().all(|(i, &x)| i == x))
    }
}

// ---------------------------------------------------------------------------
// Standard families
// ---------------------------------------------------------------------------

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Family {
    Cyclic(usize),
    /// Symmetries of the regular `n`-gon, order `2n`.
    Dihedral(usize),
    Quaternion8,
    Symmetric(usize),
    Alternating(usize),
    ElementaryAbelian { p: usize, k: usize },
}

impl Family {
    pub fn build(self, limits: &Limits) -> Result<Arc<GroupTable>> {
        let g = match self {
            Family::Cyclic(n) => cyclic(n, limits)?,
            Family::Dihedral(n) => dihedral(n, limits)?,
            Family::Quaternion8 => quaternion8(limits)?,
            Family::Symmetric(n) => permutation_group(n, false, limits)?,
            Family::Alternating(n) => permutation_group(n, true, limits)?,
            Family::ElementaryAbelian { p, k } => elementary_abelian(p, k, limits)?,
        };
        Ok(Arc::new(g))
    }
}

pub fn make_cyclic(n: usize, limits: &Limits) -> Result<Arc<GroupTable>> {
    Family::Cyclic(n).build(limits)
}

fn cyclic(n: usize, limits: &Limits) -> Result<GroupTable> {
    if n == 0 {
        return Err(Error::InvalidParameter("cyclic group of order 0".into()));
    }
    limits.check_order(n)?;
    let mul = (0..n * n).map(|i| (i / n + i % n) % n).collect();
    GroupTable::from_flat(format!("Z({n})"), mul, n, None, limits)
}

fn dihedral(n: usize, limits: &Limits) -> Result<GroupTable> {
    if n == 0 {
        return Err(Error::InvalidParameter("dihedral group of a 0-gon".into()));
    }
    limits.check_order(2 * n)?;
    // index k = r^k, n + k = s r^k; r^a s = s r^-a
    let m = 2 * n;
    let mut mul = vec![0; m * m];
    for x in 0..m {
        for y in 0..m {
            let (sx, a) = (x / n, x % n);
            let (sy, b) = (y / n, y % n);
            let rot = if sy == 0 { (a + b) % n } else { (b + n - a) % n };
            mul[x * m + y] = ((sx ^ sy) * n) + rot;
        }
    }
    let names = (0..m)
        .map(|x| match (x / n, x % n) {
            (0, 0) => "1".to_string(),
            (0, 1) => "r".to_string(),
            (0, k) => format!("r^{k}"),
            (_, 0) => "s".to_string(),
            (_, 1) => "sr".to_string(),
            (_, k) => format!("sr^{k}"),
        })
        .collect();
    GroupTable::from_flat(format!("D({n})"), mul, m, Some(names), limits)
}

/// Elements in the order `1, i, j, k, -1, -i, -j, -k`.
fn quaternion8(limits: &Limits) -> Result<GroupTable> {
    limits.check_order(8)?;
    // unit products: (sign, unit) for units 1,i,j,k
    const UNIT: [[(usize, usize); 4]; 4] = [
        [(0, 0), (0, 1), (0, 2), (0, 3)],
        [(0, 1), (1, 0), (0, 3), (1, 2)],
        [(0, 2), (1, 3), (1, 0), (0, 1)],
        [(0, 3), (0, 2), (1, 1), (1, 0)],
    ];
    let mut mul = vec![0; 64];
    for x in 0..8 {
        for y in 0..8 {
            let (s, u) = UNIT[x % 4][y % 4];
            mul[x * 8 + y] = ((x / 4 + y / 4 + s) % 2) * 4 + u;
        }
    }
    let names = ["1", "i", "j", "k", "-1", "-i", "-j", "-k"].map(String::from).to_vec();
    GroupTable::from_flat("Q8", mul, 8, Some(names), limits)
}

fn permutations(n: usize) -> Vec<Vec<usize>> {
    fn rec(prefix: &mut Vec<usize>, used: &mut Vec<bool>, out: &mut Vec<Vec<usize>>) {
        if prefix.len() == used.len() {
            out.push(prefix.clone());
            return;
        }
        for x in 0..used.len() {
            if !used[x] {
                used[x] = true;
                prefix.push(x);
                rec(prefix, used, out);
                prefix.pop();
                used[x] = false;
            }
        }
    }
    let mut out = Vec::new();
    rec(&mut Vec::new(), &mut vec![false; n], &mut out);
    out
}

fn is_even(p: &[usize]) -> bool {
    let inversions: usize = (0..p.len())
        .map(|i| (i + 1..p.len()).filter(|&j| p[i] > p[j]).count())
        .sum();
    inversions.is_multiple_of(2)
}

fn cycle_name(p: &[usize]) -> String {
    let mut seen = vec![false; p.len()];
    let mut out = String::new();
    for start in 0..p.len() {
        if seen[start] || p[start] == start {
            continue;
        }
        let mut cyc = vec![start + 1];
        seen[start] = true;
        let mut x = p[start];
        while x != start {
            seen[x] = true;
            cyc.push(x + 1);
            x = p[x];
        }
        out.push('(');
        out.push_str(&cyc.iter().map(|c| c.to_string()).collect::<Vec<_>>().join(" "));
        out.push(')');
    }
    if out.is_empty() {
        "()".into()
    } else {
        out
    }
}

/// Permutations in lexicographic one-line order; `(στ)(x) = σ(τ(x))`.
fn permutation_group(n: usize, even_only: bool, limits: &Limits) -> Result<GroupTable> {
    if n == 0 || n > 5 {
        return Err(Error::InvalidParameter(format!("degree {n} outside 1..=5")));
    }
    let perms: Vec<Vec<usize>> = permutations(n)
        .into_iter()
        .filter(|p| !even_only || is_even(p))
        .collect();
    let m = perms.len();
    limits.check_order(m)?;
    let index: std::collections::HashMap<&[usize], usize> =
        perms.iter().enumerate().map(|(i, p)| (p.as_slice(), i)).collect();
    let mut mul = vec![0; m * m];
    for (i, s) in perms.iter().enumerate() {
        for (j, t) in perms.iter().enumerate() {
            let st: Vec<usize> = (0..n).map(|x| s[t[x]]).collect();
            mul[i * m + j] = index[st.as_slice()];
        }
    }
    let names = perms.iter().map(|p| cycle_name(p)).collect();
    let label = if even_only { format!("A({n})") } else { format!("S({n})") };
    GroupTable::from_flat(label, mul, m, Some(names), limits)
}

fn elementary_abelian(p: usize, k: usize, limits: &Limits) -> Result<GroupTable> {
    if !is_prime(p) {
        return Err(Error::InvalidParameter(format!("{p} is not prime")));
    }
    if k == 0 {
        return Err(Error::InvalidParameter("rank must be positive".into()));
    }
    let order = p.checked_pow(k as u32).unwrap_or(usize::MAX);
    limits.check_order(order)?;
    let zp = Arc::new(cyclic(p, limits)?);
    let prod = direct_product(&vec![zp; k], limits)?;
    let g = Arc::try_unwrap(prod.group).unwrap_or_else(|arc| {
        GroupTable::trusted(arc.label(), arc.mul.clone(), arc.order(), Some(arc.names.clone()))
    });
    Ok(g.with_label(format!("E({p},{k})")))
}

// ---------------------------------------------------------------------------
// Products
// ---------------------------------------------------------------------------

/// A direct product with its factors; element index is mixed radix with the
/// first factor most significant.
#[derive(Clone, Debug)]
pub struct Product {
    pub group: Arc<GroupTable>,
    pub factors: Vec<Arc<GroupTable>>,
    strides: Vec<usize>,
}

impl Product {
    pub fn coordinates(&self, x: usize) -> Vec<usize> {
        self.factors
            .iter()
            .zip(&self.strides)
            .map(|(f, s)| (x / s) % f.order())
            .collect()
    }

    pub fn element(&self, coords: &[usize]) -> usize {
        coords.iter().zip(&self.strides).map(|(c, s)| c * s).sum()
    }

    pub fn projection(&self, i: usize) -> Hom {
        let (s, m) = (self.strides[i], self.factors[i].order());
        Hom {
            domain: self.group.clone(),
            codomain: self.factors[i].clone(),
            images: self.group.elements().map(|x| (x / s) % m).collect(),
        }
    }

    pub fn injection(&self, i: usize) -> Hom {
        let s = self.strides[i];
        Hom {
            domain: self.factors[i].clone(),
            codomain: self.group.clone(),
            images: self.factors[i].elements().map(|x| x * s).collect(),
        }
    }

    /// Projection onto the listed factors, in the listed order.
    pub fn projection_onto(&self, which: &[usize], limits: &Limits) -> Result<Hom> {
        if which.iter().any(|&i| i >= self.factors.len()) {
            return Err(Error::InvalidParameter("factor index out of range".into()));
        }
        let target = direct_product(
            &which.iter().map(|&i| self.factors[i].clone()).collect::<Vec<_>>(),
            limits,
        )?;
        let images = self
            .group
            .elements()
            .map(|x| {
                let c = self.coordinates(x);
                target.element(&which.iter().map(|&i| c[i]).collect::<Vec<_>>())
            })
            .collect();
        Hom::new(self.group.clone(), target.group, images)
    }
}

pub fn direct_product(factors: &[Arc<GroupTable>], limits: &Limits) -> Result<Product> {
    if factors.is_empty() {
        return Err(Error::InvalidParameter("empty product".into()));
    }
    let order = factors
        .iter()
        .try_fold(1usize, |acc, f| acc.checked_mul(f.order()))
        .unwrap_or(usize::MAX);
    limits.check_order(order)?;
    let mut strides = vec![1; factors.len()];
    for i in (0..factors.len() - 1).rev() {
        strides[i] = strides[i + 1] * factors[i + 1].order();
    }
    let coords = |x: usize| -> Vec<usize> {
        factors.iter().zip(&strides).map(|(f, s)| (x / s) % f.order()).collect()
    };
    let mut mul = vec![0; order * order];
    for x in 0..order {
        let cx = coords(x);
        for y in 0..order {
            let cy = coords(y);
            mul[x * order + y] = factors
                .iter()
                .zip(&strides)
                .enumerate()
                .map(|(i, (f, s))| f.mul(cx[i], cy[i]) * s)
                .sum();
        }
    }
    let names = (0..order)
        .map(|x| {
            let parts: Vec<&str> = coords(x).iter().zip(factors).map(|(&c, f)| f.name(c)).collect();
            format!("({})", parts.join(","))
        })
        .collect();
    let label = factors.iter().map(|f| wrap_label(f.label())).collect::<Vec<_>>().join("x");
    let group = GroupTable::trusted(label, mul, order, Some(names));
    Ok(Product { group: Arc::new(group), factors: factors.to_vec(), strides })
}

fn wrap_label(label: &str) -> String {
    // products are written without parentheses only when unambiguous
    let mut depth = 0;
    for ch in label.chars() {
        match ch {
            '(' => depth += 1,
            ')' => depth -= 1,
            'x' if depth == 0 => return format!("({label})"),
            _ => {}
        }
    }
    label.to_string()
}

/// `G × K`, with `π_1, π_2, ι_1, ι_2` available as `projection(0|1)` and
/// `injection(0|1)`.
pub fn make_product(g: &Arc<GroupTable>, k: &Arc<GroupTable>, limits: &Limits) -> Result<Product> {
    direct_product(&[g.clone(), k.clone()], limits)
}

// ---------------------------------------------------------------------------
// Semidirect products
// ---------------------------------------------------------------------------

pub struct Semidirect {
    pub group: Arc<GroupTable>,
    /// `(a, b) ↦ b`
    pub projection: Hom,
    /// `b ↦ (1, b)`
    pub injection: Hom,
    /// `a ↦ (a, 1)`
    pub normal_injection: Hom,
}

/// `A ⋊ H` on pairs `(a, b)` (index `a·|H| + b`) with
/// `(a1, b1)(a2, b2) = (a1 · b1(a2), b1 b2)`.
pub fn make_semidirect(action: &ActionTable, limits: &Limits) -> Result<Semidirect> {
    let (a, h) = (action.target(), action.actor());
    let (na, nh) = (a.order(), h.order());
    let order = na.saturating_mul(nh);
    limits.check_order(order)?;
    let mut mul = vec![0; order * order];
    for x in 0..order {
        let (a1, b1) = (x / nh, x % nh);
        for y in 0..order {
            let (a2, b2) = (y / nh, y % nh);
            mul[x * order + y] = a.mul(a1, action.apply(b1, a2)) * nh + h.mul(b1, b2);
        }
    }
    let names = (0..order)
        .map(|x| format!("({},{})", a.name(x / nh), h.name(x % nh)))
        .collect();
    let label = format!("{}:{}", wrap_label(a.label()), wrap_label(h.label()));
    let group = Arc::new(GroupTable::from_flat(label, mul, order, Some(names), limits)?);
    let projection = Hom::new(group.clone(), h.clone(), group.elements().map(|x| x % nh).collect())?;
    let injection = Hom::new(h.clone(), group.clone(), h.elements().collect())?;
    let normal_injection = Hom::new(a.clone(), group.clone(), a.elements().map(|x| x * nh).collect())?;
    Ok(Semidirect { group, projection, injection, normal_injection })
}

// ---------------------------------------------------------------------------
// Quotients and fiber products
// ---------------------------------------------------------------------------

/// `G/N` with cosets indexed by ascending minimal representative, plus the
/// quotient map.
pub fn quotient(g: &Arc<GroupTable>, n: &Subgroup) -> Result<(Arc<GroupTable>, Hom)> {
    if !same_group(g, n.parent()) {
        return Err(Error::ParentMismatch);
    }
    if !n.is_normal() {
        return Err(Error::NotNormal);
    }
    let members = n.members();
    let mut coset_of = vec![usize::MAX; g.order()];
    let mut reps = Vec::new();
    for x in g.elements() {
        if coset_of[x] == usize::MAX {
            let idx = reps.len();
            reps.push(x);
            for m in members.iter() {
                coset_of[g.mul(x, m)] = idx;
            }
        }
    }
    let q = reps.len();
    let mut mul = vec![0; q * q];
    for i in 0..q {
        for j in 0..q {
            mul[i * q + j] = coset_of[g.mul(reps[i], reps[j])];
        }
    }
    let names = reps.iter().map(|&r| format!("[{}]", g.name(r))).collect();
    let label = format!("{}/{:?}", g.label(), members.to_vec());
    let table = Arc::new(GroupTable::trusted(label, mul, q, Some(names)));
    let hom = Hom::new(g.clone(), table.clone(), coset_of)?;
    Ok((table, hom))
}

/// `K ×_H G = {(k, x) : g(k) = f(x)}` with its two projections.
#[derive(Clone, Debug)]
pub struct FiberProduct {
    pub group: Arc<GroupTable>,
    /// `pairs[i] = (k, x)` with `g(k) = f(x)`, lexicographic.
    pub pairs: Vec<(usize, usize)>,
    pub to_k: Hom,
    pub to_g: Hom,
}

/// `K ×_H G = {(k, x) : g(k) = f(x)}` for `f : G → H` and `g : K → H`,
/// built directly on the matching pairs.
pub fn fiber_product(f: &Hom, g: &Hom, limits: &Limits) -> Result<FiberProduct> {
    if !same_group(f.codomain(), g.codomain()) {
        return Err(Error::CodomainMismatch);
    }
    let (gk, gg) = (g.domain(), f.domain());
    let pairs: Vec<(usize, usize)> = gk
        .elements()
        .flat_map(|k| gg.elements().filter(move |&x| g.apply(k) == f.apply(x)).map(move |x| (k, x)))
        .collect();
    let n = pairs.len();
    limits.check_order(n)?;
    let index: std::collections::HashMap<(usize, usize), usize> =
        pairs.iter().enumerate().map(|(i, &p)| (p, i)).collect();
    let mut mul = vec![0; n * n];
    for (i, &(k1, x1)) in pairs.iter().enumerate() {
        for (j, &(k2, x2)) in pairs.iter().enumerate() {
            mul[i * n + j] = index[&(gk.mul(k1, k2), gg.mul(x1, x2))];
        }
    }
    let names = pairs.iter().map(|&(k, x)| format!("({},{})", gk.name(k), gg.name(x))).collect();
    let label = format!("{}x_{}{}", wrap_label(gk.label()), wrap_label(f.codomain().label()), wrap_label(gg.label()));
    let group = Arc::new(GroupTable::trusted(label, mul, n, Some(names)));
    let to_k = Hom::new(group.clone(), gk.clone(), pairs.iter().map(|p| p.0).collect())?;
    let to_g = Hom::new(group.clone(), gg.clone(), pairs.iter().map(|p| p.1).collect())?;
    Ok(FiberProduct { group, pairs, to_k, to_g })
}

// ---------------------------------------------------------------------------
// Structure queries
// ---------------------------------------------------------------------------

#[derive(Debug, Clone)]
pub struct Structure {
    pub is_abelian: bool,
    pub is_cyclic: bool,
    pub center: Subgroup,
    pub element_orders: Vec<usize>,
    pub exponent: usize,
}

pub fn center(g: &Arc<GroupTable>) -> Subgroup {
    let members = g
        .elements()
        .filter(|&z| g.elements().all(|x| g.mul(z, x) == g.mul(x, z)))
        .collect();
    Subgroup::from_closed(g.clone(), members).expect("the center is a subgroup")
}

pub fn structure(g: &Arc<GroupTable>) -> Structure {
    Structure {
        is_abelian: g.is_abelian(),
        is_cyclic: g.is_cyclic(),
        center: center(g),
        element_orders: g.element_orders().to_vec(),
        exponent: g.exponent(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::subgroups::generated_subgroup;

    fn lim() -> Limits {
        Limits::default()
    }

    #[test]
    fn families() {
        let z6 = make_cyclic(6, &lim()).unwrap();
        assert!(z6.is_cyclic() && z6.is_abelian());
        let q8 = Family::Quaternion8.build(&lim()).unwrap();
        assert_eq!(q8.order(), 8);
        assert_eq!(q8.elements().filter(|&x| q8.elem_order(x) == 2).count(), 1);
        let s4 = Family::Symmetric(4).build(&lim()).unwrap();
        assert_eq!((s4.order(), s4.is_abelian()), (24, false));
        assert_eq!(Family::Alternating(4).build(&lim()).unwrap().order(), 12);
        assert!(Family::ElementaryAbelian { p: 4, k: 2 }.build(&lim()).is_err());
        assert!(make_cyclic(65, &lim()).is_err());
    }

    #[test]
    fn products_and_quotients() {
        let z2 = make_cyclic(2, &lim()).unwrap();
        let z3 = make_cyclic(3, &lim()).unwrap();
        assert!(make_product(&z2, &z3, &lim()).unwrap().group.is_cyclic());
        let v4 = make_product(&z2, &z2, &lim()).unwrap().group;
        assert_eq!(v4.exponent(), 2);
        assert!(!v4.is_cyclic());
        let d4 = Family::Dihedral(4).build(&lim()).unwrap();
        let (q, map) = quotient(&d4, &center(&d4)).unwrap();
        assert_eq!(q.order(), 4);
        assert!(!q.is_cyclic());
        assert!(map.is_surjective());
        let refl = generated_subgroup(&d4, &[4]).unwrap();
        assert_eq!(quotient(&d4, &refl).unwrap_err(), Error::NotNormal);
    }

    #[test]
    fn rejects_non_groups() {
        let rows = vec![vec![0, 1, 2], vec![1, 0, 2], vec![2, 2, 0]];
        assert!(GroupTable::from_rows("bad", rows, None, &lim()).is_err());
        let rows = vec![vec![0, 1], vec![1, 0]];
        assert!(GroupTable::from_rows("Z2", rows, None, &lim()).is_ok());
    }

    #[test]
    fn semidirect_inversion_is_dihedral() {
        let z2 = make_cyclic(2, &lim()).unwrap();
        let z4 = make_cyclic(4, &lim()).unwrap();
        let act = ActionTable::inversion_along(&Hom::identity(&z2), &z4).unwrap();
        let sd = make_semidirect(&act, &lim()).unwrap();
        assert_eq!(sd.group.order(), 8);
        assert!(!sd.group.is_abelian());
        assert_eq!(center(&sd.group).order(), 2);
        assert!(sd.injection.then(&sd.projection).unwrap().same_as(&Hom::identity(&z2)));
    }

    #[test]
    fn fiber_product_pairs() {
        let z2 = make_cyclic(2, &lim()).unwrap();
        let z4 = make_cyclic(4, &lim()).unwrap();
        let f = Hom::new(z4.clone(), z2.clone(), vec![0, 1, 0, 1]).unwrap();
        let fp = fiber_product(&f, &f, &lim()).unwrap();
        assert_eq!(fp.group.order(), 8);
        assert_eq!(fp.pairs[0], (0, 0));
        assert!(fp.pairs.iter().all(|&(k, x)| f.apply(k) == f.apply(x)));
        let left = fp.to_k.then(&f).unwrap();
        let right = fp.to_g.then(&f).unwrap();
        assert!(left.same_as(&right));
        let z3 = make_cyclic(3, &lim()).unwrap();
        assert_eq!(fiber_product(&f, &Hom::trivial(&z4, &z3), &lim()).unwrap_err(), Error::CodomainMismatch);
    }
}
