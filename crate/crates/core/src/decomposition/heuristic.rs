use super::TreeDecomposition;
use crate::graph::{Graph, VertexSet};

/// Treewidth bracket from cheap heuristics, with a decomposition of width `upper`.
#[derive(Debug, Clone)]
pub struct HeuristicBounds {
    pub lower: isize,
    pub upper: isize,
    pub witness: TreeDecomposition,
}

/// `lower = max(degeneracy, minor-min-degree)`, `upper` from min-fill elimination.
///
/// ```
/// use minorlab::{decomposition::treewidth_bounds_heuristic, graph::complete};
/// let b = treewidth_bounds_heuristic(&complete(6));
/// assert_eq!((b.lower, b.upper), (5, 5));
/// ```
pub fn treewidth_bounds_heuristic(g: &Graph) -> HeuristicBounds {
    let witness = TreeDecomposition::from_elimination_ordering(g, &min_fill_ordering(g));
    let lower = if g.is_empty() {
        -1
    } else {
        degeneracy(g).max(minor_min_degree(g)) as isize
    };
    HeuristicBounds {
        lower,
        upper: witness.width(),
        witness,
    }
}

struct Work {
    adj: Vec<VertexSet>,
    alive: VertexSet,
}

impl Work {
    fn new(g: &Graph) -> Self {
        Work {
            adj: g.vertices().map(|v| g.neighbor_set(v).clone()).collect(),
            alive: VertexSet::from_iter_with_capacity(g.n(), g.vertices()),
        }
    }

    fn min_degree_vertex(&self) -> Option<usize> {
        self.alive.iter().min_by_key(|&v| (self.adj[v].len(), v))
    }

    fn delete(&mut self, v: usize) {
        let nb: Vec<usize> = self.adj[v].iter().collect();
        for w in nb {
            self.adj[w].remove(v);
        }
        self.adj[v] = VertexSet::with_capacity(0);
        self.alive.remove(v);
    }

    fn fill(&self, v: usize) -> usize {
        let nb: Vec<usize> = self.adj[v].iter().collect();
        let mut missing = 0;
        for (i, &x) in nb.iter().enumerate() {
            missing += nb[i + 1..].iter().filter(|&&y| !self.adj[x].contains(y)).count();
        }
        missing
    }
}

/// Maximum over the min-degree deletion sequence of the minimum degree.
pub fn degeneracy(g: &Graph) -> usize {
    let mut w = Work::new(g);
    let mut best = 0;
    while let Some(v) = w.min_degree_vertex() {
        best = best.max(w.adj[v].len());
        w.delete(v);
    }
    best
}

/// Contraction degeneracy estimate: repeatedly contract a minimum-degree
/// vertex into the neighbour sharing fewest neighbours with it. The largest
/// minimum degree seen is a treewidth lower bound since treewidth is
/// minor-monotone and bounds the minimum degree from above.
pub fn minor_min_degree(g: &Graph) -> usize {
    let mut w = Work::new(g);
    let mut best = 0;
    while w.alive.len() > 1 {
        let v = w.min_degree_vertex().expect("alive vertices remain");
        best = best.max(w.adj[v].len());
        let target = w.adj[v].iter().min_by_key(|&u| {
            let common = w.adj[u].iter().filter(|&x| w.adj[v].contains(x)).count();
            (common, u)
        });
        let nb: Vec<usize> = w.adj[v].iter().collect();
        w.delete(v);
        if let Some(u) = target {
            for x in nb {
                if x != u {
                    w.adj[u].insert(x);
                    w.adj[x].insert(u);
                }
            }
        }
    }
    best
}

/// Greedy min-fill elimination ordering (ties: smaller degree, then index).
pub fn min_fill_ordering(g: &Graph) -> Vec<usize> {
    let mut w = Work::new(g);
    let mut order = Vec::with_capacity(g.n());
    while !w.alive.is_empty() {
        let v = w
            .alive
            .iter()
            .min_by_key(|&v| (w.fill(v), w.adj[v].len(), v))
            .expect("non-empty");
        let nb: Vec<usize> = w.adj[v].iter().collect();
        for (i, &x) in nb.iter().enumerate() {
            for &y in &nb[i + 1..] {
                w.adj[x].insert(y);
                w.adj[y].insert(x);
            }
        }
        w.delete(v);
        order.push(v);
    }
    order
}
