use super::{bramble_violation, Bramble};
use crate::error::{check_cap, Error, Result};
use crate::graph::{bits, mask_of, Graph};

/// Largest host graph accepted by [`find_hitting_cycle`].
pub const HITTING_CYCLE_MAX_N: usize = 20;

/// A cycle meeting every bramble element, found by exhaustive DFS. Such a
/// cycle always exists when the bramble has order at least 3; `None` means
/// no cycle of `g` meets every element.
///
/// ```
/// use minorlab::bramble::{find_hitting_cycle, Bramble};
/// use minorlab::graph::complete;
/// let singletons = Bramble::new((0..4).map(|v| vec![v]).collect());
/// let c = find_hitting_cycle(&complete(4), &singletons).unwrap().unwrap();
/// assert_eq!(c.len(), 4);
/// ```
pub fn find_hitting_cycle(g: &Graph, b: &Bramble) -> Result<Option<Vec<usize>>> {
    check_cap("hitting cycle vertex count", g.n(), HITTING_CYCLE_MAX_N)?;
    if let Some(problem) = bramble_violation(g, b)? {
        return Err(Error::InvalidBramble(problem));
    }
    let adj = g.masks();
    let sets: Vec<u64> = b.elements.iter().map(|e| mask_of(e.iter().copied())).collect();
    // Every hitting cycle passes through the smallest element.
    let starts = sets.iter().copied().min_by_key(|s| s.count_ones()).unwrap_or(u64::MAX >> (64 - g.n().max(1)));
    let mut banned = 0u64;
    for s in bits(starts) {
        if s >= g.n() {
            break;
        }
        let mut dfs = Dfs {
            adj: &adj,
            sets: &sets,
            start: s,
            banned,
            path: vec![s],
        };
        if dfs.go(1 << s) {
            return Ok(Some(dfs.path));
        }
        // Cycles through `s` are exhausted.
        banned |= 1 << s;
    }
    Ok(None)
}

struct Dfs<'a> {
    adj: &'a [u64],
    sets: &'a [u64],
    start: usize,
    banned: u64,
    path: Vec<usize>,
}

impl Dfs<'_> {
    fn go(&mut self, on_path: u64) -> bool {
        let end = *self.path.last().expect("non-empty path");
        let unhit: Vec<u64> = self.sets.iter().copied().filter(|s| s & on_path == 0).collect();
        if self.path.len() >= 3 && self.adj[end] >> self.start & 1 == 1 && unhit.is_empty() {
            return true;
        }
        // The rest of the cycle lies in the component of the free vertices
        // around `end`, and must still reach back to `start`.
        let free = !on_path & !self.banned;
        let mut reach = 0u64;
        let mut frontier = self.adj[end] & free;
        while frontier != 0 {
            reach |= frontier;
            let mut grow = 0u64;
            for x in bits(frontier) {
                grow |= self.adj[x];
            }
            frontier = grow & free & !reach;
        }
        if unhit.iter().any(|s| s & reach == 0) {
            return false;
        }
        let closable = self.adj[self.start] & reach != 0;
        if !closable {
            return false;
        }
        for w in bits(self.adj[end] & free) {
            self.path.push(w);
            if self.go(on_path | 1 << w) {
                return true;
            }
            self.path.pop();
        }
        false
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::bramble::grid_cross_bramble;
    use crate::graph::*;

    #[test]
    fn examples() {
        let b = Bramble::new(vec![vec![0, 1], vec![2, 3], vec![4, 5]]);
        let c = find_hitting_cycle(&cycle(6), &b).unwrap().unwrap();
        assert_eq!(c.len(), 6);
        let (g, b) = grid_cross_bramble(3).unwrap();
        let c = find_hitting_cycle(&g, &b).unwrap().unwrap();
        assert!(g.is_cycle(&c));
        assert!(b.is_hit_by(&c));
    }

    #[test]
    fn none_on_trees() {
        let b = Bramble::new(vec![vec![0, 1, 2]]);
        assert_eq!(find_hitting_cycle(&path(3), &b).unwrap(), None);
    }
}
