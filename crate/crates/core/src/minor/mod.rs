//! Minor models, exact minor search, and disjoint-path computations.

mod paths;
mod search;

pub use paths::{max_vertex_disjoint_paths, two_disjoint_paths, DisjointPaths, TWO_PATHS_MAX_N};
pub use search::{find_minor_model, find_minor_model_with, MinorSearchLimits};

use crate::error::{Error, Result};
use crate::graph::Graph;
use serde::{Deserialize, Serialize};

/// Branch sets indexed by the vertices of the minor `H`.
#[derive(Debug, Clone, PartialEq, Eq, Default, Serialize, Deserialize)]
pub struct MinorModel {
    pub branch_sets: Vec<Vec<usize>>,
}

impl MinorModel {
    pub fn new(branch_sets: Vec<Vec<usize>>) -> Self {
        MinorModel { branch_sets }
    }

    /// The model of `H` in `G'` obtained by replacing each vertex `v` of `G`
    /// with `inner.branch_sets[v]`, where `inner` is a model of `G` in `G'`.
    pub fn compose(&self, inner: &MinorModel) -> MinorModel {
        MinorModel::new(
            self.branch_sets
                .iter()
                .map(|set| {
                    let mut out: Vec<usize> = set.iter().flat_map(|&v| inner.branch_sets[v].iter().copied()).collect();
                    out.sort_unstable();
                    out
                })
                .collect(),
        )
    }

    /// Total number of host vertices used.
    pub fn size(&self) -> usize {
        self.branch_sets.iter().map(Vec::len).sum()
    }
}

/// The first violated model axiom, if any. Index errors are reported as `Err`.
pub fn minor_model_violation(g: &Graph, h: &Graph, m: &MinorModel) -> Result<Option<String>> {
    if m.branch_sets.len() != h.n() {
        return Err(Error::InvalidParameter(format!(
            "model has {} branch sets for {} minor vertices",
            m.branch_sets.len(),
            h.n()
        )));
    }
    let mut owner = vec![usize::MAX; g.n()];
    for (x, set) in m.branch_sets.iter().enumerate() {
        for &v in set {
            g.check_vertex(v)?;
            if owner[v] != usize::MAX {
                return Ok(Some(format!("branch sets not disjoint (vertex {v} in sets {} and {x})", owner[v])));
            }
            owner[v] = x;
        }
    }
    for (x, set) in m.branch_sets.iter().enumerate() {
        if !g.is_connected_set(set) {
            return Ok(Some(format!("branch set {x} is empty or disconnected")));
        }
    }
    for (x, y) in h.edges() {
        let hit = m.branch_sets[x]
            .iter()
            .any(|&v| g.neighbors(v).any(|w| owner[w] == y));
        if !hit {
            return Ok(Some(format!("no edge between branch sets {x} and {y}")));
        }
    }
    Ok(None)
}

/// Whether `m` is a model of `h` in `g`.
///
/// ```
/// use minorlab::graph::cycle;
/// use minorlab::minor::{validate_minor_model, MinorModel};
/// let identity = MinorModel::new((0..4).map(|v| vec![v]).collect());
/// assert!(validate_minor_model(&cycle(4), &cycle(4), &identity).unwrap());
/// ```
pub fn validate_minor_model(g: &Graph, h: &Graph, m: &MinorModel) -> Result<bool> {
    Ok(minor_model_violation(g, h, m)?.is_none())
}

/// The graph whose vertices are the branch sets of `sets` and whose edges
/// join sets linked by an edge of `g` (the minor realized by contracting
/// each set). Sets must be disjoint.
pub fn quotient(g: &Graph, sets: &[Vec<usize>]) -> Graph {
    let mut owner = vec![usize::MAX; g.n()];
    for (x, set) in sets.iter().enumerate() {
        for &v in set {
            owner[v] = x;
        }
    }
    let mut q = Graph::new(sets.len());
    for (u, v) in g.edges() {
        let (a, b) = (owner[u], owner[v]);
        if a != usize::MAX && b != usize::MAX && a != b {
            q.add_edge(a, b);
        }
    }
    q
}
