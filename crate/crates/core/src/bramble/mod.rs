//! Brambles: pairwise-touching families of connected vertex sets, whose
//! order (minimum hitting set size) is at most treewidth plus one.

mod cycle;
mod hitting;
mod partition;

pub use cycle::{find_hitting_cycle, HITTING_CYCLE_MAX_N};
pub use hitting::BRAMBLE_ORDER_MAX_N;
pub use partition::{path_partition, PathPartition};

use crate::error::{Error, Result};
use crate::graph::{make_grid, Graph, VertexSet};
use serde::{Deserialize, Serialize};

/// Largest element count accepted by [`bramble_order`].
pub const BRAMBLE_MAX_ELEMENTS: usize = 10_000;

#[derive(Debug, Clone, PartialEq, Eq, Default, Serialize, Deserialize)]
pub struct Bramble {
    pub elements: Vec<Vec<usize>>,
}

impl Bramble {
    pub fn new(elements: Vec<Vec<usize>>) -> Self {
        Bramble { elements }
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    /// The sub-family at `indices`; any sub-family of a bramble is a bramble.
    pub fn sub(&self, indices: &[usize]) -> Bramble {
        Bramble::new(indices.iter().map(|&i| self.elements[i].clone()).collect())
    }

    /// Indices of the elements meeting `set`.
    pub fn meeting(&self, set: &VertexSet) -> Vec<usize> {
        (0..self.len())
            .filter(|&i| self.elements[i].iter().any(|&v| set.contains(v)))
            .collect()
    }

    /// Whether `set` meets every element.
    pub fn is_hit_by(&self, set: &[usize]) -> bool {
        let cap = set.iter().max().map_or(0, |m| m + 1);
        let s = VertexSet::from_iter_with_capacity(cap, set.iter().copied());
        self.elements.iter().all(|e| e.iter().any(|&v| s.contains(v)))
    }
}

/// The first violated bramble axiom, if any. Out-of-range vertices are an error.
pub fn bramble_violation(g: &Graph, b: &Bramble) -> Result<Option<String>> {
    let n = g.n();
    let mut sets = Vec::with_capacity(b.len());
    let mut closed = Vec::with_capacity(b.len());
    for (i, e) in b.elements.iter().enumerate() {
        for &v in e {
            g.check_vertex(v)?;
        }
        if !g.is_connected_set(e) {
            return Ok(Some(format!("element {i} does not induce a connected subgraph")));
        }
        let s = VertexSet::from_iter_with_capacity(n, e.iter().copied());
        let mut c = s.clone();
        for &v in e {
            c.union_with(g.neighbor_set(v));
        }
        sets.push(s);
        closed.push(c);
    }
    for i in 0..sets.len() {
        for j in i + 1..sets.len() {
            if !sets[i].intersects(&closed[j]) {
                return Ok(Some(format!("elements {i} and {j} do not touch")));
            }
        }
    }
    Ok(None)
}

/// Whether every element is connected and every two elements touch.
///
/// ```
/// use minorlab::{bramble::{validate_bramble, Bramble}, graph::path};
/// let b = Bramble::new(vec![vec![0], vec![2]]);
/// assert!(!validate_bramble(&path(3), &b).unwrap());
/// ```
pub fn validate_bramble(g: &Graph, b: &Bramble) -> Result<bool> {
    Ok(bramble_violation(g, b)?.is_none())
}

/// Exact order with a minimum hitting set (sorted).
pub fn bramble_order(g: &Graph, b: &Bramble) -> Result<(usize, Vec<usize>)> {
    if let Some(problem) = bramble_violation(g, b)? {
        return Err(Error::InvalidBramble(problem));
    }
    hitting::min_hitting_set(g.n(), &b.elements)
}

/// The cross bramble of the `k × k` grid: for every cell `(i, j)` of the top-left
/// `(k-1) × (k-1)` subgrid, row `i` union column `j` of that subgrid; plus the
/// last row without its final cell, and the whole last column. Order `k + 1`.
///
/// ```
/// use minorlab::bramble::{bramble_order, grid_cross_bramble};
/// let (grid, b) = grid_cross_bramble(3).unwrap();
/// assert_eq!(bramble_order(&grid, &b).unwrap().0, 4);
/// ```
pub fn grid_cross_bramble(k: usize) -> Result<(Graph, Bramble)> {
    if k < 2 {
        return Err(Error::InvalidParameter(format!("cross bramble needs k >= 2, got {k}")));
    }
    let g = make_grid(k, k);
    let at = |i: usize, j: usize| i * k + j;
    let mut elements = Vec::with_capacity((k - 1) * (k - 1) + 2);
    for i in 0..k - 1 {
        for j in 0..k - 1 {
            let mut e: Vec<usize> = (0..k - 1).map(|c| at(i, c)).collect();
            e.extend((0..k - 1).filter(|&r| r != i).map(|r| at(r, j)));
            e.sort_unstable();
            elements.push(e);
        }
    }
    elements.push((0..k - 1).map(|c| at(k - 1, c)).collect());
    elements.push((0..k).map(|r| at(r, k - 1)).collect());
    Ok((g, Bramble::new(elements)))
}
