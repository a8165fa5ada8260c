//! Simple undirected graphs on dense vertex sets `0..n`.

mod bitset;
mod generators;
pub mod io;
pub mod iso;
mod ops;

pub use bitset::{bits, mask_of, VertexSet};
pub use generators::*;
pub use iso::{are_isomorphic, canonical_form, enumerate_graphs, enumerate_graphs_up_to, find_isomorphism, MAX_ENUMERATION_N};
pub use ops::*;

use crate::error::{Error, Result};
use std::collections::VecDeque;

/// An undirected simple graph.
///
/// Vertices are `0..n`. Optional per-vertex labels record where a vertex came
/// from (grid coordinates, cycle names); they are ignored by equality, hashing
/// and isomorphism.
#[derive(Clone)]
pub struct Graph {
    adj: Vec<VertexSet>,
    labels: Option<Vec<String>>,
}

impl Graph {
    /// The edgeless graph on `n` vertices.
    pub fn new(n: usize) -> Self {
        Graph {
            adj: (0..n).map(|_| VertexSet::with_capacity(n)).collect(),
            labels: None,
        }
    }

    pub fn from_edges(n: usize, edges: impl IntoIterator<Item = (usize, usize)>) -> Result<Self> {
        let mut g = Graph::new(n);
        for (u, v) in edges {
            g.try_add_edge(u, v)?;
        }
        Ok(g)
    }

    pub fn n(&self) -> usize {
        self.adj.len()
    }

    pub fn m(&self) -> usize {
        self.adj.iter().map(VertexSet::len).sum::<usize>() / 2
    }

    pub fn is_empty(&self) -> bool {
        self.adj.is_empty()
    }

    /// Adds `uv`. Self-loops are rejected; an existing edge is left alone.
    pub fn try_add_edge(&mut self, u: usize, v: usize) -> Result<()> {
        self.check_vertex(u)?;
        self.check_vertex(v)?;
        if u == v {
            return Err(Error::InvalidParameter(format!("self-loop at {u}")));
        }
        self.adj[u].insert(v);
        self.adj[v].insert(u);
        Ok(())
    }

    /// Adds `uv`, panicking on a loop or out-of-range endpoint.
    pub fn add_edge(&mut self, u: usize, v: usize) {
        self.try_add_edge(u, v).expect("invalid edge");
    }

    pub fn remove_edge(&mut self, u: usize, v: usize) -> bool {
        if u >= self.n() || v >= self.n() {
            return false;
        }
        let had = self.adj[u].remove(v);
        self.adj[v].remove(u);
        had
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n() && self.adj[u].contains(v)
    }

    #[inline]
    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn neighbors(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        self.adj[v].iter()
    }

    pub fn neighbor_set(&self, v: usize) -> &VertexSet {
        &self.adj[v]
    }

    /// Edges `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.n()).flat_map(move |u| self.adj[u].iter().filter(move |&v| v > u).map(move |v| (u, v)))
    }

    pub fn edge_list(&self) -> Vec<(usize, usize)> {
        self.edges().collect()
    }

    pub fn vertices(&self) -> std::ops::Range<usize> {
        0..self.n()
    }

    pub fn check_vertex(&self, v: usize) -> Result<()> {
        if v < self.n() {
            Ok(())
        } else {
            Err(Error::VertexOutOfRange { vertex: v, n: self.n() })
        }
    }

    /// Neighborhood bitmasks, one word per vertex.
    ///
    /// # Panics
    /// If the graph has more than 64 vertices.
    pub fn masks(&self) -> Vec<u64> {
        assert!(self.n() <= 64, "word masks need n <= 64, got {}", self.n());
        self.adj.iter().map(VertexSet::low_word).collect()
    }

    pub fn labels(&self) -> Option<&[String]> {
        self.labels.as_deref()
    }

    pub fn label(&self, v: usize) -> Option<&str> {
        self.labels.as_ref().map(|l| l[v].as_str())
    }

    pub fn with_labels(mut self, labels: Vec<String>) -> Self {
        assert_eq!(labels.len(), self.n());
        self.labels = Some(labels);
        self
    }

    pub fn clear_labels(&mut self) {
        self.labels = None;
    }

    pub fn degree_sequence(&self) -> Vec<usize> {
        let mut d: Vec<usize> = self.vertices().map(|v| self.degree(v)).collect();
        d.sort_unstable_by(|a, b| b.cmp(a));
        d
    }

    pub fn min_degree(&self) -> Option<usize> {
        self.vertices().map(|v| self.degree(v)).min()
    }

    /// Connected components, each sorted, ordered by smallest vertex.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let n = self.n();
        let mut seen = vec![false; n];
        let mut out = Vec::new();
        for s in 0..n {
            if seen[s] {
                continue;
            }
            seen[s] = true;
            let mut comp = vec![s];
            let mut queue = VecDeque::from([s]);
            while let Some(u) = queue.pop_front() {
                for w in self.neighbors(u) {
                    if !seen[w] {
                        seen[w] = true;
                        comp.push(w);
                        queue.push_back(w);
                    }
                }
            }
            comp.sort_unstable();
            out.push(comp);
        }
        out
    }

    pub fn is_connected(&self) -> bool {
        self.n() <= 1 || self.components().len() == 1
    }

    /// Whether `set` induces a connected subgraph. The empty set does not.
    pub fn is_connected_set(&self, set: &[usize]) -> bool {
        let Some(&start) = set.first() else {
            return false;
        };
        let inside = VertexSet::from_iter_with_capacity(self.n(), set.iter().copied());
        let mut seen = VertexSet::with_capacity(self.n());
        seen.insert(start);
        let mut stack = vec![start];
        let mut count = 1;
        while let Some(u) = stack.pop() {
            for w in self.neighbors(u) {
                if inside.contains(w) && seen.insert(w) {
                    count += 1;
                    stack.push(w);
                }
            }
        }
        count == inside.len()
    }

    pub fn is_forest(&self) -> bool {
        self.m() + self.components().len() == self.n()
    }

    /// Subgraph induced by `keep` (in the given order); labels follow.
    pub fn induced_subgraph(&self, keep: &[usize]) -> Graph {
        let mut index = vec![usize::MAX; self.n()];
        for (i, &v) in keep.iter().enumerate() {
            index[v] = i;
        }
        let mut g = Graph::new(keep.len());
        for (i, &v) in keep.iter().enumerate() {
            for w in self.neighbors(v) {
                let j = index[w];
                if j != usize::MAX && j > i {
                    g.add_edge(i, j);
                }
            }
        }
        if let Some(l) = &self.labels {
            g.labels = Some(keep.iter().map(|&v| l[v].clone()).collect());
        }
        g
    }

    pub fn remove_vertex(&self, v: usize) -> Graph {
        let keep: Vec<usize> = self.vertices().filter(|&u| u != v).collect();
        self.induced_subgraph(&keep)
    }

    /// Whether `path` is a path in this graph (distinct vertices, consecutive ones adjacent).
    pub fn is_path(&self, path: &[usize]) -> bool {
        if path.is_empty() || path.iter().any(|&v| v >= self.n()) {
            return false;
        }
        let set = VertexSet::from_iter_with_capacity(self.n(), path.iter().copied());
        set.len() == path.len() && path.windows(2).all(|w| self.has_edge(w[0], w[1]))
    }

    /// Whether `cycle` (closing edge implied) is a cycle of length at least 3.
    pub fn is_cycle(&self, cycle: &[usize]) -> bool {
        cycle.len() >= 3 && self.is_path(cycle) && self.has_edge(cycle[cycle.len() - 1], cycle[0])
    }
}

impl PartialEq for Graph {
    fn eq(&self, other: &Self) -> bool {
        self.n() == other.n() && self.vertices().all(|v| self.adj[v].iter().eq(other.adj[v].iter()))
    }
}

impl Eq for Graph {}

impl std::hash::Hash for Graph {
    fn hash<H: std::hash::Hasher>(&self, state: &mut H) {
        self.n().hash(state);
        for e in self.edges() {
            e.hash(state);
        }
    }
}

impl std::fmt::Debug for Graph {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "Graph(n={}, edges={:?})", self.n(), self.edge_list())
    }
}
