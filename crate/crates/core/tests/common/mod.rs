//! Brute-force reference computations, written against the raw Cayley table
//! only so they share no search code with the library.

#![allow(dead_code)]

use sectio::group::{GroupTable, Hom};

/// Closure of `gens` by repeated multiplication.
pub fn naive_closure(g: &GroupTable, gens: &[usize]) -> Vec<usize> {
    let mut seen = vec![false; g.order()];
    seen[0] = true;
    let mut list = vec![0];
    let mut i = 0;
    while i < list.len() {
        let x = list[i];
        for &s in gens {
            let y = g.mul(x, s);
            if !seen[y] {
                seen[y] = true;
                list.push(y);
            }
        }
        i += 1;
    }
    list.sort_unstable();
    list
}

pub fn is_closed(g: &GroupTable, members: &[usize]) -> bool {
    let mut inside = vec![false; g.order()];
    for &x in members {
        inside[x] = true;
    }
    inside[0] && members.iter().all(|&a| members.iter().all(|&b| inside[g.mul(a, b)]))
}

/// Every subgroup, by testing each subset that contains the identity.
pub fn subgroups_by_subsets(g: &GroupTable) -> Vec<Vec<usize>> {
    let n = g.order();
    assert!(n <= 20, "subset enumeration is exponential");
    let mut out = Vec::new();
    for mask in 0u32..(1 << (n - 1)) {
        let members: Vec<usize> =
            std::iter::once(0).chain((1..n).filter(|&x| mask >> (x - 1) & 1 == 1)).collect();
        if is_closed(g, &members) {
            out.push(members);
        }
    }
    canonical(out)
}

/// Every subgroup generated by at most three elements.
pub fn subgroups_by_triples(g: &GroupTable) -> Vec<Vec<usize>> {
    let n = g.order();
    let mut out = std::collections::BTreeSet::new();
    for a in 0..n {
        for b in a..n {
            for c in b..n {
                out.insert(naive_closure(g, &[a, b, c]));
            }
        }
    }
    canonical(out.into_iter().collect())
}

/// Size first, then lexicographic.
pub fn canonical(mut v: Vec<Vec<usize>>) -> Vec<Vec<usize>> {
    v.sort_by(|a, b| a.len().cmp(&b.len()).then(a.cmp(b)));
    v.dedup();
    v
}

fn next_combination(c: &mut [usize], n: usize) -> bool {
    let k = c.len();
    for i in (0..k).rev() {
        if c[i] < n - k + i {
            c[i] += 1;
            for j in i + 1..k {
                c[j] = c[j - 1] + 1;
            }
            return true;
        }
    }
    false
}

/// Least `k` and the lexicographically first `k`-subset of `sets` covering
/// `universe`, by exhaustive enumeration.
pub fn brute_min_cover(universe: &[usize], sets: &[Vec<usize>]) -> Option<(usize, Vec<usize>)> {
    let covers = |choice: &[usize]| universe.iter().all(|x| choice.iter().any(|&i| sets[i].contains(x)));
    for k in 0..=sets.len() {
        let mut c: Vec<usize> = (0..k).collect();
        loop {
            if covers(&c) {
                return Some((k, c));
            }
            if k == 0 || !next_combination(&mut c, sets.len()) {
                break;
            }
        }
    }
    None
}

/// Every `k`-subset of `sets` covering `universe`.
pub fn brute_all_covers(universe: &[usize], sets: &[Vec<usize>], k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    if k > sets.len() {
        return out;
    }
    let mut c: Vec<usize> = (0..k).collect();
    loop {
        if universe.iter().all(|x| c.iter().any(|&i| sets[i].contains(x))) {
            out.push(c.clone());
        }
        if k == 0 || !next_combination(&mut c, sets.len()) {
            break;
        }
    }
    out
}

fn non_identity(g: &GroupTable) -> Vec<usize> {
    (1..g.order()).collect()
}

fn is_cyclic_set(g: &GroupTable, members: &[usize]) -> bool {
    members.iter().any(|&x| naive_closure(g, &[x]).len() == members.len())
}

/// `None` stands for an infinite covering number.
pub fn sigma_brute(g: &GroupTable) -> Option<usize> {
    let proper: Vec<Vec<usize>> = subgroups_by_subsets(g).into_iter().filter(|s| s.len() < g.order()).collect();
    if g.order() == 1 {
        return None;
    }
    brute_min_cover(&non_identity(g), &proper).map(|(k, _)| k)
}

pub fn sigma_cyclic_brute(g: &GroupTable) -> Option<usize> {
    let cyclic: Vec<Vec<usize>> = subgroups_by_subsets(g)
        .into_iter()
        .filter(|s| s.len() < g.order() && is_cyclic_set(g, s))
        .collect();
    if g.order() == 1 {
        return None;
    }
    brute_min_cover(&non_identity(g), &cyclic).map(|(k, _)| k)
}

/// Whether some multiplicative map `s : L → G` satisfies `f(s(x)) = x`, by
/// trying every choice of preimages.
pub fn has_section_brute(f: &Hom, l: &[usize]) -> bool {
    let (g, h) = (f.domain(), f.codomain());
    let fibers: Vec<Vec<usize>> = l.iter().map(|&x| g.elements().filter(|&a| f.apply(a) == x).collect()).collect();
    if fibers.iter().any(|fib| fib.is_empty()) {
        return false;
    }
    let pos = |x: usize| l.iter().position(|&y| y == x).unwrap();
    let mut choice = vec![0usize; l.len()];
    loop {
        let s = |i: usize| fibers[i][choice[i]];
        let ok = (0..l.len()).all(|i| (0..l.len()).all(|j| s(pos(h.mul(l[i], l[j]))) == g.mul(s(i), s(j))));
        if ok {
            return true;
        }
        let mut i = 0;
        loop {
            if i == l.len() {
                return false;
            }
            choice[i] += 1;
            if choice[i] < fibers[i].len() {
                break;
            }
            choice[i] = 0;
            i += 1;
        }
    }
}

/// Least number of sectionable proper subgroups of the codomain covering it.
pub fn sec_brute(f: &Hom) -> Option<usize> {
    let h = f.codomain();
    if (0..h.order()).any(|x| !f.images().contains(&x)) {
        return None;
    }
    if h.order() == 1 {
        return None;
    }
    let sectionable: Vec<Vec<usize>> = subgroups_by_subsets(h)
        .into_iter()
        .filter(|s| s.len() < h.order() && has_section_brute(f, s))
        .collect();
    brute_min_cover(&non_identity(h), &sectionable).map(|(k, _)| k)
}

/// Number of homomorphisms `G → H`, by testing every map of sets.
pub fn count_homs_brute(g: &GroupTable, h: &GroupTable) -> usize {
    let (n, m) = (g.order(), h.order());
    assert!((m as f64).powi(n as i32 - 1) < 2e6, "too many maps");
    let mut img = vec![0usize; n];
    let mut count = 0;
    loop {
        if (0..n).all(|a| (0..n).all(|b| img[g.mul(a, b)] == h.mul(img[a], img[b]))) {
            count += 1;
        }
        let mut i = 1;
        loop {
            if i == n {
                return count;
            }
            img[i] += 1;
            if img[i] < m {
                break;
            }
            img[i] = 0;
            i += 1;
        }
    }
}
