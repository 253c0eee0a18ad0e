//! Exact minimum set cover over small universes.

use crate::elemset::ElemSet;
use crate::{Error, Result};

/// A minimum cover: its size and the chosen candidate indices, ascending.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Cover {
    pub size: usize,
    pub chosen: Vec<usize>,
}

/// Smallest set of candidates whose union contains `universe`, with the
/// lexicographically least index list among all minimum covers. `None` when
/// the candidates cannot cover the universe at all.
pub fn min_cover(universe: &ElemSet, candidates: &[ElemSet], budget: u64) -> Result<Option<Cover>> {
    if universe.is_empty() {
        return Ok(Some(Cover { size: 0, chosen: vec![] }));
    }
    let union = candidates.iter().fold(ElemSet::empty(), |acc, c| acc.union(c));
    if !universe.is_subset(&union) {
        return Ok(None);
    }
    let restricted: Vec<ElemSet> = candidates.iter().map(|c| c.intersection(universe)).collect();
    let mut search = Search { nodes: 0, budget };
    let size = search.optimum(universe, &restricted)?;
    let chosen = search.least_of_size(universe, &restricted, size)?;
    Ok(Some(Cover { size, chosen }))
}

struct Search {
    nodes: u64,
    budget: u64,
}

impl Search {
    fn tick(&mut self) -> Result<()> {
        self.nodes += 1;
        if self.nodes > self.budget {
            Err(Error::SearchBudgetExceeded { budget: self.budget })
        } else {
            Ok(())
        }
    }

    fn optimum(&mut self, universe: &ElemSet, sets: &[ElemSet]) -> Result<usize> {
        // dominance: keep one copy of each set not strictly inside another
        let mut kept: Vec<ElemSet> = Vec::new();
        for (i, s) in sets.iter().enumerate() {
            if s.is_empty() {
                continue;
            }
            let dominated = sets.iter().enumerate().any(|(j, t)| {
                j != i && s.is_subset(t) && (s != t || j < i)
            });
            if !dominated {
                kept.push(*s);
            }
        }
        let mut best = greedy(universe, &kept) + 1;
        self.branch(*universe, &kept, 0, &mut best)?;
        Ok(best)
    }

    /// Branch on the uncovered element with the fewest covering sets.
    fn branch(&mut self, uncovered: ElemSet, sets: &[ElemSet], used: usize, best: &mut usize) -> Result<()> {
        self.tick()?;
        if uncovered.is_empty() {
            *best = (*best).min(used);
            return Ok(());
        }
        let widest = sets.iter().map(|s| s.intersection(&uncovered).len()).max().unwrap_or(0);
        if widest == 0 {
            return Ok(());
        }
        let lower = uncovered.len().div_ceil(widest);
        if used + lower >= *best {
            return Ok(());
        }
        let pivot = uncovered
            .iter()
            .min_by_key(|&e| sets.iter().filter(|s| s.contains(e)).count())
            .unwrap();
        let mut options: Vec<&ElemSet> = sets.iter().filter(|s| s.contains(pivot)).collect();
        options.sort_by_key(|s| std::cmp::Reverse(s.intersection(&uncovered).len()));
        for s in options {
            self.branch(uncovered.difference(s), sets, used + 1, best)?;
        }
        Ok(())
    }

    fn least_of_size(&mut self, universe: &ElemSet, sets: &[ElemSet], size: usize) -> Result<Vec<usize>> {
        // last[e]: largest index of a set containing e
        let mut last = vec![0usize; crate::limits::MAX_ORDER];
        for (i, s) in sets.iter().enumerate() {
            for e in s.iter() {
                last[e] = i;
            }
        }
        let mut chosen = Vec::with_capacity(size);
        let found = self.ordered(*universe, sets, &last, 0, size, &mut chosen)?;
        debug_assert!(found);
        Ok(chosen)
    }

    fn ordered(
        &mut self,
        uncovered: ElemSet,
        sets: &[ElemSet],
        last: &[usize],
        from: usize,
        slots: usize,
        chosen: &mut Vec<usize>,
    ) -> Result<bool> {
        self.tick()?;
        if uncovered.is_empty() {
            return Ok(true);
        }
        if slots == 0 {
            return Ok(false);
        }
        // each uncovered e needs some set with index in from..=last[e]
        let ceiling = uncovered.iter().map(|e| last[e]).min().unwrap();
        if ceiling < from {
            return Ok(false);
        }
        let widest = sets[from..].iter().map(|s| s.intersection(&uncovered).len()).max().unwrap_or(0);
        if widest == 0 || uncovered.len().div_ceil(widest) > slots {
            return Ok(false);
        }
        for i in from..=ceiling {
            if !sets[i].intersects(&uncovered) {
                continue;
            }
            chosen.push(i);
            if self.ordered(uncovered.difference(&sets[i]), sets, last, i + 1, slots - 1, chosen)? {
                return Ok(true);
            }
            chosen.pop();
        }
        Ok(false)
    }
}

fn greedy(universe: &ElemSet, sets: &[ElemSet]) -> usize {
    let mut left = *universe;
    let mut count = 0;
    while !left.is_empty() {
        let best = sets.iter().max_by_key(|s| s.intersection(&left).len()).unwrap();
        left = left.difference(best);
        count += 1;
    }
    count
}

/// Every cover of `universe` by exactly `size` candidates, as ascending index
/// lists in lexicographic order.
pub fn all_covers_of_size(
    universe: &ElemSet,
    candidates: &[ElemSet],
    size: usize,
    budget: u64,
) -> Result<Vec<Vec<usize>>> {
    fn walk(
        uncovered: ElemSet,
        sets: &[ElemSet],
        from: usize,
        slots: usize,
        chosen: &mut Vec<usize>,
        out: &mut Vec<Vec<usize>>,
        search: &mut Search,
    ) -> Result<()> {
        search.tick()?;
        if slots == 0 {
            if uncovered.is_empty() {
                out.push(chosen.clone());
            }
            return Ok(());
        }
        for i in from..sets.len() {
            if sets.len() - i < slots {
                break;
            }
            chosen.push(i);
            walk(uncovered.difference(&sets[i]), sets, i + 1, slots - 1, chosen, out, search)?;
            chosen.pop();
        }
        Ok(())
    }
    let mut out = Vec::new();
    let mut search = Search { nodes: 0, budget };
    walk(*universe, candidates, 0, size, &mut Vec::new(), &mut out, &mut search)?;
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn set(xs: &[usize]) -> ElemSet {
        xs.iter().copied().collect()
    }

    #[test]
    fn small_instance() {
        let c = min_cover(&set(&[1, 2, 3]), &[set(&[1, 2]), set(&[2, 3]), set(&[3])], 1000).unwrap();
        assert_eq!(c, Some(Cover { size: 2, chosen: vec![0, 1] }));
    }

    #[test]
    fn disjoint_points() {
        let c = min_cover(&set(&[1, 2, 3]), &[set(&[1]), set(&[2]), set(&[3])], 1000).unwrap().unwrap();
        assert_eq!(c.size, 3);
    }

    #[test]
    fn uncoverable() {
        assert_eq!(min_cover(&set(&[1, 9]), &[set(&[1])], 1000).unwrap(), None);
    }

    #[test]
    fn empty_universe() {
        assert_eq!(min_cover(&ElemSet::empty(), &[], 10).unwrap().unwrap().size, 0);
    }

    #[test]
    fn least_witness_uses_dominated_sets_too() {
        // {1} is dominated by {1,2}, but [0,2] < [1,2] lexicographically
        let sets = [set(&[1]), set(&[1, 2]), set(&[3])];
        let c = min_cover(&set(&[1, 3]), &sets, 1000).unwrap().unwrap();
        assert_eq!(c.chosen, vec![0, 2]);
    }

    #[test]
    fn budget_exhaustion() {
        let sets: Vec<ElemSet> = (1..30).map(|i| set(&[i])).collect();
        let err = min_cover(&set(&(1..30).collect::<Vec<_>>()), &sets, 5).unwrap_err();
        assert!(err.is_budget());
    }

    #[test]
    fn all_covers() {
        let sets = [set(&[1, 2]), set(&[2, 3]), set(&[1, 3]), set(&[3])];
        let covers = all_covers_of_size(&set(&[1, 2, 3]), &sets, 2, 1000).unwrap();
        assert_eq!(covers, vec![vec![0, 1], vec![0, 2], vec![0, 3], vec![1, 2]]);
    }
}
