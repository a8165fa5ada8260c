//! Exact isomorphism testing and canonical forms for small graphs.
//!
//! The canonical form is the lexicographically smallest upper-triangle
//! adjacency bit string over all vertex orderings that list the colour classes
//! of an isomorphism-invariant refinement in a fixed order. Since the
//! refinement commutes with relabelling, restricting to those orderings keeps
//! the form exact while cutting the search far below `n!`.

use super::Graph;
use crate::error::{Error, Result};
use std::collections::{BTreeMap, BTreeSet, VecDeque};

/// Largest `n` accepted by [`enumerate_graphs`].
pub const MAX_ENUMERATION_N: usize = 8;

/// Stable colour refinement. Returns a colour rank per vertex; ranks are
/// assigned by sorting signatures, so isomorphic graphs get matching colours.
fn refine(g: &Graph) -> Vec<usize> {
    let n = g.n();
    let mut colour: Vec<usize> = vec![0; n];
    let mut classes = 1.min(n);
    loop {
        let sigs: Vec<(usize, Vec<usize>)> = (0..n)
            .map(|v| {
                let mut nb: Vec<usize> = g.neighbors(v).map(|w| colour[w]).collect();
                nb.sort_unstable();
                (colour[v], nb)
            })
            .collect();
        let ranks: BTreeMap<&(usize, Vec<usize>), usize> = sigs
            .iter()
            .collect::<BTreeSet<_>>()
            .into_iter()
            .enumerate()
            .map(|(i, s)| (s, i))
            .collect();
        let next: Vec<usize> = sigs.iter().map(|s| ranks[s]).collect();
        let count = ranks.len();
        colour = next;
        if count == classes {
            return colour;
        }
        classes = count;
    }
}

/// Upper-triangle bits in column order: `(0,1), (0,2), (1,2), (0,3), ...`.
fn bit_index(i: usize, j: usize) -> usize {
    debug_assert!(i < j);
    j * (j - 1) / 2 + i
}

struct CanonSearch<'a> {
    g: &'a Graph,
    /// Colour class assigned to each position.
    slot_colour: Vec<usize>,
    colour: Vec<usize>,
    order: Vec<usize>,
    used: Vec<bool>,
    bits: Vec<bool>,
    best: Option<(Vec<bool>, Vec<usize>)>,
}

impl CanonSearch<'_> {
    /// `cmp` is the comparison of the current prefix with the best prefix so far.
    fn go(&mut self, pos: usize, cmp: std::cmp::Ordering) {
        let n = self.g.n();
        if pos == n {
            if self.best.is_none() || cmp == std::cmp::Ordering::Less {
                self.best = Some((self.bits.clone(), self.order.clone()));
            }
            return;
        }
        for v in 0..n {
            if self.used[v] || self.colour[v] != self.slot_colour[pos] {
                continue;
            }
            let start = self.bits.len();
            let mut c = cmp;
            for i in 0..pos {
                let b = self.g.has_edge(self.order[i], v);
                if c == std::cmp::Ordering::Equal {
                    if let Some((best, _)) = &self.best {
                        c = b.cmp(&best[bit_index(i, pos)]);
                    }
                }
                self.bits.push(b);
            }
            if c != std::cmp::Ordering::Greater {
                self.used[v] = true;
                self.order.push(v);
                self.go(pos + 1, c);
                self.order.pop();
                self.used[v] = false;
            }
            self.bits.truncate(start);
        }
    }
}

/// Canonical ordering: `order[k]` is the vertex placed at position `k`.
fn canonical_order(g: &Graph) -> Vec<usize> {
    let n = g.n();
    let colour = refine(g);
    let mut slot_colour = colour.clone();
    slot_colour.sort_unstable();
    let mut search = CanonSearch {
        g,
        slot_colour,
        colour,
        order: Vec::with_capacity(n),
        used: vec![false; n],
        bits: Vec::new(),
        best: None,
    };
    search.go(0, std::cmp::Ordering::Equal);
    search.best.map(|(_, o)| o).unwrap_or_default()
}

/// The canonical relabelling of `g`: two graphs are isomorphic exactly when
/// their canonical forms are equal. Labels are dropped.
///
/// Exponential in the worst case; intended for small graphs.
pub fn canonical_form(g: &Graph) -> Graph {
    let order = canonical_order(g);
    let mut pos = vec![0; g.n()];
    for (k, &v) in order.iter().enumerate() {
        pos[v] = k;
    }
    let mut h = Graph::new(g.n());
    for (u, v) in g.edges() {
        h.add_edge(pos[u], pos[v]);
    }
    h
}

/// One representative per isomorphism class of simple graphs on `n` vertices,
/// each in canonical form, sorted by edge count and then edge list.
///
/// ```
/// use minorlab::graph::enumerate_graphs;
/// let counts: Vec<usize> = (1..=5).map(|n| enumerate_graphs(n).unwrap().len()).collect();
/// assert_eq!(counts, [1, 2, 4, 11, 34]);
/// ```
pub fn enumerate_graphs(n: usize) -> Result<Vec<Graph>> {
    Ok(enumerate_graphs_up_to(n)?.pop().expect("level n present"))
}

/// `enumerate_graphs(k)` for every `k` in `0..=n_max`, built in one pass.
pub fn enumerate_graphs_up_to(n_max: usize) -> Result<Vec<Vec<Graph>>> {
    if n_max > MAX_ENUMERATION_N {
        return Err(Error::CapExceeded {
            what: "enumeration vertex count",
            limit: MAX_ENUMERATION_N,
            actual: n_max,
        });
    }
    let mut levels = vec![vec![Graph::new(0)]];
    for k in 1..=n_max {
        let mut next = BTreeSet::new();
        for g in &levels[k - 1] {
            for mask in 0u32..(1 << (k - 1)) {
                let mut h = Graph::new(k);
                for (u, v) in g.edges() {
                    h.add_edge(u, v);
                }
                for u in 0..k - 1 {
                    if mask >> u & 1 == 1 {
                        h.add_edge(u, k - 1);
                    }
                }
                let c = canonical_form(&h);
                next.insert((c.m(), c.edge_list()));
            }
        }
        levels.push(
            next.into_iter()
                .map(|(_, edges)| Graph::from_edges(k, edges).expect("canonical edges are valid"))
                .collect(),
        );
    }
    Ok(levels)
}

/// An isomorphism `g -> h` as a vertex map, if one exists.
pub fn find_isomorphism(g: &Graph, h: &Graph) -> Option<Vec<usize>> {
    if g.n() != h.n() || g.m() != h.m() || g.degree_sequence() != h.degree_sequence() {
        return None;
    }
    let n = g.n();
    let (cg, ch) = (refine(g), refine(h));
    let mut sg = cg.clone();
    let mut sh = ch.clone();
    sg.sort_unstable();
    sh.sort_unstable();
    if sg != sh {
        return None;
    }
    // Map g's vertices in BFS order so each new vertex has a mapped neighbour.
    let mut order = Vec::with_capacity(n);
    let mut seen = vec![false; n];
    for s in 0..n {
        if seen[s] {
            continue;
        }
        seen[s] = true;
        let mut queue = VecDeque::from([s]);
        while let Some(u) = queue.pop_front() {
            order.push(u);
            for w in g.neighbors(u) {
                if !seen[w] {
                    seen[w] = true;
                    queue.push_back(w);
                }
            }
        }
    }
    let mut map = vec![usize::MAX; n];
    let mut used = vec![false; n];
    fn extend(
        k: usize,
        order: &[usize],
        g: &Graph,
        h: &Graph,
        cg: &[usize],
        ch: &[usize],
        map: &mut [usize],
        used: &mut [bool],
    ) -> bool {
        let Some(&u) = order.get(k) else {
            return true;
        };
        for x in 0..h.n() {
            if used[x] || ch[x] != cg[u] {
                continue;
            }
            let consistent = order[..k].iter().all(|&p| g.has_edge(u, p) == h.has_edge(x, map[p]));
            if consistent {
                map[u] = x;
                used[x] = true;
                if extend(k + 1, order, g, h, cg, ch, map, used) {
                    return true;
                }
                used[x] = false;
                map[u] = usize::MAX;
            }
        }
        false
    }
    extend(0, &order, g, h, &cg, &ch, &mut map, &mut used).then_some(map)
}

pub fn are_isomorphic(g: &Graph, h: &Graph) -> bool {
    find_isomorphism(g, h).is_some()
}
