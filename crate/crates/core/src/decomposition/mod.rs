//! Tree and path decompositions: exact solvers, heuristic bounds, validation.

mod heuristic;
mod pathwidth;
mod treewidth;

pub use heuristic::{degeneracy, min_fill_ordering, minor_min_degree, treewidth_bounds_heuristic, HeuristicBounds};
pub use pathwidth::{exact_pathwidth, exact_pathwidth_with_cap, EXACT_PATHWIDTH_MAX_N};
pub use treewidth::{exact_treewidth, exact_treewidth_with_cap, EXACT_TREEWIDTH_MAX_N};

use crate::error::Result;
use crate::graph::{Graph, VertexSet};
use serde::{Deserialize, Serialize};

/// Bags on the nodes of a tree given by `tree_edges`.
#[derive(Debug, Clone, PartialEq, Eq, Default, Serialize, Deserialize)]
pub struct TreeDecomposition {
    pub bags: Vec<Vec<usize>>,
    pub tree_edges: Vec<(usize, usize)>,
}

/// Bags along a path.
#[derive(Debug, Clone, PartialEq, Eq, Default, Serialize, Deserialize)]
pub struct PathDecomposition {
    pub bags: Vec<Vec<usize>>,
}

fn width_of(bags: &[Vec<usize>]) -> isize {
    bags.iter().map(Vec::len).max().map_or(-1, |s| s as isize - 1)
}

impl TreeDecomposition {
    /// Largest bag size minus one; `-1` with no bags.
    pub fn width(&self) -> isize {
        width_of(&self.bags)
    }

    /// Elimination-ordering decomposition: vertex `order[i]` gets the bag of
    /// itself and its later neighbours in the fill-in graph, attached to the
    /// earliest-eliminated of those neighbours.
    pub fn from_elimination_ordering(g: &Graph, order: &[usize]) -> TreeDecomposition {
        let n = g.n();
        assert_eq!(order.len(), n, "ordering must list every vertex");
        let mut pos = vec![usize::MAX; n];
        for (i, &v) in order.iter().enumerate() {
            pos[v] = i;
        }
        let mut adj: Vec<VertexSet> = g.vertices().map(|v| g.neighbor_set(v).clone()).collect();
        let mut bags = Vec::with_capacity(n);
        let mut parent = vec![None; n];
        for (i, &v) in order.iter().enumerate() {
            let later: Vec<usize> = adj[v].iter().filter(|&w| pos[w] > i).collect();
            for (a, &x) in later.iter().enumerate() {
                for &y in &later[a + 1..] {
                    adj[x].insert(y);
                    adj[y].insert(x);
                }
            }
            parent[i] = later.iter().map(|&w| pos[w]).min();
            let mut bag = later;
            bag.push(v);
            bag.sort_unstable();
            bags.push(bag);
        }
        let mut tree_edges = Vec::new();
        let mut last_root: Option<usize> = None;
        for (i, p) in parent.iter().enumerate() {
            match p {
                Some(p) => tree_edges.push((i, *p)),
                None => {
                    if let Some(r) = last_root {
                        tree_edges.push((r, i));
                    }
                    last_root = Some(i);
                }
            }
        }
        let mut td = TreeDecomposition { bags, tree_edges };
        td.compact();
        td
    }

    /// Merge every node whose bag is contained in an adjacent node's bag.
    /// Preserves validity and width.
    pub fn compact(&mut self) {
        loop {
            let found = self.tree_edges.iter().enumerate().find_map(|(k, &(a, b))| {
                if subset(&self.bags[a], &self.bags[b]) {
                    Some((k, a, b))
                } else if subset(&self.bags[b], &self.bags[a]) {
                    Some((k, b, a))
                } else {
                    None
                }
            });
            let Some((k, small, big)) = found else {
                return;
            };
            self.tree_edges.swap_remove(k);
            for e in &mut self.tree_edges {
                if e.0 == small {
                    e.0 = big;
                }
                if e.1 == small {
                    e.1 = big;
                }
            }
            // Move the last node into the vacated slot.
            let last = self.bags.len() - 1;
            self.bags.swap_remove(small);
            if small != last {
                for e in &mut self.tree_edges {
                    if e.0 == last {
                        e.0 = small;
                    }
                    if e.1 == last {
                        e.1 = small;
                    }
                }
            }
        }
    }

    /// Concatenate decompositions of vertex-disjoint parts; `maps[k]` sends
    /// part `k`'s vertices to host vertices. Roots are chained together.
    pub(crate) fn join(parts: Vec<(TreeDecomposition, &[usize])>) -> TreeDecomposition {
        let mut out = TreeDecomposition::default();
        for (td, map) in parts {
            let offset = out.bags.len();
            if offset > 0 && !td.bags.is_empty() {
                out.tree_edges.push((offset - 1, offset));
            }
            for bag in td.bags {
                let mut b: Vec<usize> = bag.into_iter().map(|v| map[v]).collect();
                b.sort_unstable();
                out.bags.push(b);
            }
            out.tree_edges.extend(td.tree_edges.into_iter().map(|(a, b)| (a + offset, b + offset)));
        }
        out
    }
}

fn subset(a: &[usize], b: &[usize]) -> bool {
    a.iter().all(|x| b.contains(x))
}

impl PathDecomposition {
    pub fn width(&self) -> isize {
        width_of(&self.bags)
    }

    pub fn to_tree_decomposition(&self) -> TreeDecomposition {
        TreeDecomposition {
            bags: self.bags.clone(),
            tree_edges: (1..self.bags.len()).map(|i| (i - 1, i)).collect(),
        }
    }
}

/// Outcome of checking a decomposition against a graph.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DecompositionCheck {
    pub valid: bool,
    pub width: isize,
    /// First violated condition, when invalid.
    pub problem: Option<String>,
}

/// Check the tree, vertex-coverage, edge-coverage and connected-subtree
/// conditions. Out-of-range vertices in bags are an error.
pub fn validate_tree_decomposition(g: &Graph, td: &TreeDecomposition) -> Result<DecompositionCheck> {
    for bag in &td.bags {
        for &v in bag {
            g.check_vertex(v)?;
        }
    }
    let width = td.width();
    let verdict = |problem: Option<String>| DecompositionCheck {
        valid: problem.is_none(),
        width,
        problem,
    };
    Ok(verdict(find_problem(g, td)))
}

fn find_problem(g: &Graph, td: &TreeDecomposition) -> Option<String> {
    let k = td.bags.len();
    if k == 0 {
        return (g.n() > 0).then(|| "no bags for a non-empty graph".to_string());
    }
    for (i, bag) in td.bags.iter().enumerate() {
        let set = VertexSet::from_iter_with_capacity(g.n(), bag.iter().copied());
        if set.len() != bag.len() {
            return Some(format!("bag {i} repeats a vertex"));
        }
    }
    if td.tree_edges.len() != k - 1 {
        return Some(format!("{} tree edges for {k} nodes", td.tree_edges.len()));
    }
    let mut tree = Graph::new(k);
    for &(a, b) in &td.tree_edges {
        if a >= k || b >= k || a == b || tree.has_edge(a, b) {
            return Some(format!("bad tree edge ({a},{b})"));
        }
        tree.add_edge(a, b);
    }
    if !tree.is_connected() {
        return Some("tree edges do not connect the nodes".into());
    }
    let mut holders: Vec<Vec<usize>> = vec![Vec::new(); g.n()];
    for (i, bag) in td.bags.iter().enumerate() {
        for &v in bag {
            holders[v].push(i);
        }
    }
    for (v, nodes) in holders.iter().enumerate() {
        if nodes.is_empty() {
            return Some(format!("vertex {v} is in no bag"));
        }
        if !tree.is_connected_set(nodes) {
            return Some(format!("bags containing vertex {v} are not connected"));
        }
    }
    for (u, v) in g.edges() {
        if !holders[u].iter().any(|i| td.bags[*i].contains(&v)) {
            return Some(format!("edge ({u},{v}) is in no bag"));
        }
    }
    None
}

/// Check a path decomposition (as a tree decomposition on a path).
pub fn validate_path_decomposition(g: &Graph, pd: &PathDecomposition) -> Result<DecompositionCheck> {
    validate_tree_decomposition(g, &pd.to_tree_decomposition())
}
