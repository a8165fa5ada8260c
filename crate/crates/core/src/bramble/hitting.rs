use super::BRAMBLE_MAX_ELEMENTS;
use crate::error::{check_cap, Error, Result};
use crate::graph::{bits, mask_of};

/// Largest host graph accepted by exact bramble order computation.
pub const BRAMBLE_ORDER_MAX_N: usize = 30;

/// Minimum hitting set of a family of non-empty vertex sets on `0..n`, by
/// branch and bound. Returns the size and a sorted witness.
pub(crate) fn min_hitting_set(n: usize, elements: &[Vec<usize>]) -> Result<(usize, Vec<usize>)> {
    check_cap("bramble order vertex count", n, BRAMBLE_ORDER_MAX_N)?;
    check_cap("bramble element count", elements.len(), BRAMBLE_MAX_ELEMENTS)?;
    let mut sets: Vec<u64> = elements.iter().map(|e| mask_of(e.iter().copied())).collect();
    if sets.contains(&0) {
        return Err(Error::InvalidBramble("empty element".into()));
    }
    sets.sort_unstable_by_key(|s| (s.count_ones(), *s));
    sets.dedup();
    // A set containing another is hit whenever the smaller one is.
    let mut minimal: Vec<u64> = Vec::with_capacity(sets.len());
    for &s in &sets {
        if !minimal.iter().any(|&m| m & s == m) {
            minimal.push(s);
        }
    }
    let greedy = greedy_hitting_set(&minimal);
    let mut search = Search {
        sets: minimal,
        best: greedy,
    };
    search.go(0, 0);
    let hs: Vec<usize> = bits(search.best).collect();
    Ok((hs.len(), hs))
}

fn greedy_hitting_set(sets: &[u64]) -> u64 {
    let mut chosen = 0u64;
    loop {
        let unhit: Vec<u64> = sets.iter().copied().filter(|s| s & chosen == 0).collect();
        if unhit.is_empty() {
            return chosen;
        }
        let best = (0..64)
            .max_by_key(|&v| (unhit.iter().filter(|&&s| s >> v & 1 == 1).count(), std::cmp::Reverse(v)))
            .expect("64 candidates");
        chosen |= 1 << best;
    }
}

struct Search {
    sets: Vec<u64>,
    best: u64,
}

impl Search {
    /// `chosen` hits some sets; `forbidden` vertices were ruled out by earlier
    /// sibling branches.
    fn go(&mut self, chosen: u64, forbidden: u64) {
        let size = chosen.count_ones();
        let mut unhit: Vec<u64> = Vec::new();
        for &s in &self.sets {
            if s & chosen == 0 {
                let avail = s & !forbidden;
                if avail == 0 {
                    return;
                }
                unhit.push(avail);
            }
        }
        if unhit.is_empty() {
            if size < self.best.count_ones() {
                self.best = chosen;
            }
            return;
        }
        // Pairwise disjoint unhit sets each need their own vertex.
        unhit.sort_unstable_by_key(|s| s.count_ones());
        let mut used = 0u64;
        let mut packing = 0;
        for &s in &unhit {
            if s & used == 0 {
                used |= s;
                packing += 1;
            }
        }
        if size + packing >= self.best.count_ones() {
            return;
        }
        let pivot = unhit[0];
        let mut branch: Vec<usize> = bits(pivot).collect();
        branch.sort_by_key(|&v| std::cmp::Reverse(unhit.iter().filter(|&&s| s >> v & 1 == 1).count()));
        let mut excluded = forbidden;
        for v in branch {
            self.go(chosen | 1 << v, excluded);
            excluded |= 1 << v;
        }
    }
}
