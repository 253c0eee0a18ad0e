use std::cmp::Ordering;
use std::fmt;

use crate::limits::MAX_ORDER;

const WORDS: usize = MAX_ORDER / 64;

/// Fixed-capacity bit set over element indices `0..MAX_ORDER`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct ElemSet([u64; WORDS]);

impl ElemSet {
    pub const fn empty() -> Self {
        ElemSet([0; WORDS])
    }

    /// `{0, 1, ..., n - 1}`
    pub fn full(n: usize) -> Self {
        let mut s = Self::empty();
        for w in 0..WORDS {
            let lo = w * 64;
            if n >= lo + 64 {
                s.0[w] = u64::MAX;
            } else if n > lo {
                s.0[w] = (1u64 << (n - lo)) - 1;
            }
        }
        s
    }

    pub fn singleton(x: usize) -> Self {
        let mut s = Self::empty();
        s.insert(x);
        s
    }

    #[inline]
    pub fn insert(&mut self, x: usize) -> bool {
        let (w, b) = (x / 64, x % 64);
        let fresh = self.0[w] & (1 << b) == 0;
        self.0[w] |= 1 << b;
        fresh
    }

    #[inline]
    pub fn remove(&mut self, x: usize) {
        self.0[x / 64] &= !(1 << (x % 64));
    }

    #[inline]
    pub fn contains(&self, x: usize) -> bool {
        x < MAX_ORDER && self.0[x / 64] & (1 << (x % 64)) != 0
    }

    pub fn len(&self) -> usize {
        self.0.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.0.iter().all(|&w| w == 0)
    }

    pub fn union(&self, other: &Self) -> Self {
        let mut out = *self;
        for (a, b) in out.0.iter_mut().zip(other.0.iter()) {
            *a |= b;
        }
        out
    }

    pub fn intersection(&self, other: &Self) -> Self {
        let mut out = *self;
        for (a, b) in out.0.iter_mut().zip(other.0.iter()) {
            *a &= b;
        }
        out
    }

    pub fn difference(&self, other: &Self) -> Self {
        let mut out = *self;
        for (a, b) in out.0.iter_mut().zip(other.0.iter()) {
            *a &= !b;
        }
        out
    }

    pub fn is_subset(&self, other: &Self) -> bool {
        self.0.iter().zip(other.0.iter()).all(|(a, b)| a & !b == 0)
    }

    pub fn intersects(&self, other: &Self) -> bool {
        self.0.iter().zip(other.0.iter()).any(|(a, b)| a & b != 0)
    }

    pub fn first(&self) -> Option<usize> {
        self.iter().next()
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.0.iter().enumerate().flat_map(|(w, &word)| {
            let mut bits = word;
            std::iter::from_fn(move || {
                if bits == 0 {
                    None
                } else {
                    let b = bits.trailing_zeros() as usize;
                    bits &= bits - 1;
                    Some(w * 64 + b)
                }
            })
        })
    }

    pub fn to_vec(&self) -> Vec<usize> {
        self.iter().collect()
    }

    /// Size first, then lexicographic on the ascending member lists.
    pub fn canonical_cmp(&self, other: &Self) -> Ordering {
        self.len()
            .cmp(&other.len())
            .then_with(|| self.iter().cmp(other.iter()))
    }
}

impl FromIterator<usize> for ElemSet {
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Self {
        let mut s = Self::empty();
        for x in iter {
            s.insert(x);
        }
        s
    }
}

impl fmt::Debug for ElemSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn full_and_len() {
        assert_eq!(ElemSet::full(0).len(), 0);
        assert_eq!(ElemSet::full(64).len(), 64);
        assert_eq!(ElemSet::full(65).len(), 65);
        assert_eq!(ElemSet::full(256).len(), 256);
        assert!(ElemSet::full(70).contains(69));
        assert!(!ElemSet::full(70).contains(70));
    }

    #[test]
    fn canonical_order_is_size_then_lex() {
        let a: ElemSet = [0, 5].into_iter().collect();
        let b: ElemSet = [0, 1, 2].into_iter().collect();
        let c: ElemSet = [0, 3].into_iter().collect();
        assert_eq!(a.canonical_cmp(&b), Ordering::Less);
        assert_eq!(c.canonical_cmp(&a), Ordering::Less);
    }

    #[test]
    fn iter_crosses_word_boundaries() {
        let s: ElemSet = [1, 63, 64, 200].into_iter().collect();
        assert_eq!(s.to_vec(), vec![1, 63, 64, 200]);
        assert_eq!(s.first(), Some(1));
    }
}
