//! Exact cycle packing and feedback vertex sets on small graphs.

use crate::error::{check_cap, Result};
use crate::graph::{Graph, VertexSet};
use std::collections::VecDeque;

pub const CYCLE_PACKING_MAX_N: usize = 25;

/// Repeatedly strip vertices with at most one neighbour in `alive`.
fn two_core(g: &Graph, alive: &mut VertexSet) {
    let mut changed = true;
    while changed {
        changed = false;
        for v in alive.iter().collect::<Vec<_>>() {
            if g.neighbors(v).filter(|&w| alive.contains(w)).count() <= 1 {
                alive.remove(v);
                changed = true;
            }
        }
    }
}

fn live_degree(g: &Graph, alive: &VertexSet, v: usize) -> usize {
    g.neighbors(v).filter(|&w| alive.contains(w)).count()
}

/// Chordless cycles through `v` inside `alive`, each listed from `v`.
fn chordless_cycles_through(g: &Graph, alive: &VertexSet, v: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut path = vec![v];
    extend_chordless(g, alive, &mut path, &mut out);
    out
}

fn extend_chordless(g: &Graph, alive: &VertexSet, path: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
    let last = *path.last().expect("nonempty");
    let first = path[0];
    for w in g.neighbors(last) {
        if !alive.contains(w) || path.contains(&w) {
            continue;
        }
        // w may touch only `last` among the inner path vertices, and `first`
        // only when it closes the cycle.
        let inner_touch = path.len() > 2 && path[1..path.len() - 1].iter().any(|&p| g.has_edge(p, w));
        if inner_touch {
            continue;
        }
        if path.len() >= 2 && g.has_edge(first, w) {
            // Each cycle is found in both directions; keep one.
            if path[1] < w {
                let mut c = path.clone();
                c.push(w);
                out.push(c);
            }
            continue;
        }
        path.push(w);
        extend_chordless(g, alive, path, out);
        path.pop();
    }
}

/// A maximum set of vertex-disjoint cycles.
///
/// ```
/// use minorlab::constructions::cycle_packing_exact;
/// use minorlab::graph::make_prism;
/// assert_eq!(cycle_packing_exact(&make_prism(4).unwrap()).unwrap().len(), 2);
/// ```
pub fn cycle_packing_exact(g: &Graph) -> Result<Vec<Vec<usize>>> {
    check_cap("cycle packing vertices", g.n(), CYCLE_PACKING_MAX_N)?;
    let mut alive = VertexSet::from_iter_with_capacity(g.n(), g.vertices());
    two_core(g, &mut alive);
    let mut best = Vec::new();
    let mut current = Vec::new();
    pack(g, alive, &mut current, &mut best);
    Ok(best)
}

fn pack(g: &Graph, alive: VertexSet, current: &mut Vec<Vec<usize>>, best: &mut Vec<Vec<usize>>) {
    if current.len() > best.len() {
        *best = current.clone();
    }
    if current.len() + alive.len() / 3 <= best.len() {
        return;
    }
    let Some(v) = alive.iter().min_by_key(|&v| live_degree(g, &alive, v)) else {
        return;
    };
    for c in chordless_cycles_through(g, &alive, v) {
        let mut rest = alive.clone();
        for &x in &c {
            rest.remove(x);
        }
        two_core(g, &mut rest);
        current.push(c);
        pack(g, rest, current, best);
        current.pop();
    }
    let mut rest = alive;
    rest.remove(v);
    two_core(g, &mut rest);
    pack(g, rest, current, best);
}

/// A shortest cycle inside `alive`.
fn shortest_cycle(g: &Graph, alive: &VertexSet) -> Option<Vec<usize>> {
    let mut best: Option<Vec<usize>> = None;
    for (u, w) in g.edges() {
        if !alive.contains(u) || !alive.contains(w) {
            continue;
        }
        // Shortest u-w path avoiding the edge uw.
        let mut parent = vec![usize::MAX; g.n()];
        parent[u] = u;
        let mut queue = VecDeque::from([u]);
        while let Some(x) = queue.pop_front() {
            if x == w {
                break;
            }
            for y in g.neighbors(x) {
                if alive.contains(y) && parent[y] == usize::MAX && !(x == u && y == w) {
                    parent[y] = x;
                    queue.push_back(y);
                }
            }
        }
        if parent[w] == usize::MAX {
            continue;
        }
        let mut c = vec![w];
        while *c.last().expect("nonempty") != u {
            let x = *c.last().expect("nonempty");
            c.push(parent[x]);
        }
        if best.as_ref().map_or(true, |b| c.len() < b.len()) {
            best = Some(c);
        }
    }
    best
}

/// A minimum set of vertices meeting every cycle.
///
/// ```
/// use minorlab::constructions::cycle_transversal_exact;
/// use minorlab::graph::complete;
/// assert_eq!(cycle_transversal_exact(&complete(5)).unwrap().len(), 3);
/// ```
pub fn cycle_transversal_exact(g: &Graph) -> Result<Vec<usize>> {
    check_cap("cycle transversal vertices", g.n(), CYCLE_PACKING_MAX_N)?;
    let alive = VertexSet::from_iter_with_capacity(g.n(), g.vertices());
    for k in 0..=g.n() {
        let mut chosen = Vec::new();
        if transversal(g, alive.clone(), k, &mut chosen) {
            chosen.sort_unstable();
            return Ok(chosen);
        }
    }
    unreachable!("deleting every vertex leaves no cycle")
}

fn transversal(g: &Graph, mut alive: VertexSet, k: usize, chosen: &mut Vec<usize>) -> bool {
    two_core(g, &mut alive);
    let Some(c) = shortest_cycle(g, &alive) else {
        return true;
    };
    if k == 0 {
        return false;
    }
    for &v in &c {
        let mut rest = alive.clone();
        rest.remove(v);
        chosen.push(v);
        if transversal(g, rest, k - 1, chosen) {
            return true;
        }
        chosen.pop();
    }
    false
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::*;
    use crate::rng::SplitMix64;

    fn brute_packing(g: &Graph) -> usize {
        // Minimal vertex sets whose induced subgraph has a cycle.
        let cyclic = |mask: u32| {
            let keep: Vec<usize> = g.vertices().filter(|&v| mask >> v & 1 == 1).collect();
            !g.induced_subgraph(&keep).is_forest()
        };
        let cycles: Vec<u32> = (1u32..1 << g.n())
            .filter(|&m| cyclic(m) && g.vertices().all(|v| m >> v & 1 == 0 || !cyclic(m & !(1 << v))))
            .collect();
        fn go(cycles: &[u32], used: u32) -> usize {
            match cycles.split_first() {
                None => 0,
                Some((&c, rest)) => {
                    let skip = go(rest, used);
                    if c & used == 0 {
                        skip.max(1 + go(rest, used | c))
                    } else {
                        skip
                    }
                }
            }
        }
        go(&cycles, 0)
    }

    fn brute_transversal(g: &Graph) -> usize {
        (0u32..1 << g.n())
            .filter(|&mask| {
                let keep: Vec<usize> = g.vertices().filter(|&v| mask >> v & 1 == 0).collect();
                g.induced_subgraph(&keep).is_forest()
            })
            .map(u32::count_ones)
            .min()
            .unwrap() as usize
    }

    #[test]
    fn known_values() {
        assert_eq!(cycle_packing_exact(&complete(6)).unwrap().len(), 2);
        assert_eq!(cycle_packing_exact(&petersen()).unwrap().len(), 2);
        assert_eq!(cycle_transversal_exact(&petersen()).unwrap().len(), 3);
        assert!(cycle_packing_exact(&random_tree(10, &mut SplitMix64::new(1))).unwrap().is_empty());
        assert_eq!(cycle_transversal_exact(&make_wheel(6).unwrap()).unwrap().len(), 2);
    }

    #[test]
    fn agrees_with_brute_force() {
        let mut rng = SplitMix64::new(5);
        for _ in 0..60 {
            let g = erdos_renyi(9, 0.35, &mut rng);
            let p = cycle_packing_exact(&g).unwrap();
            assert_eq!(p.len(), brute_packing(&g));
            let mut seen = VertexSet::with_capacity(g.n());
            for c in &p {
                assert!(g.is_cycle(c));
                for &v in c {
                    assert!(!seen.contains(v));
                    seen.insert(v);
                }
            }
            let t = cycle_transversal_exact(&g).unwrap();
            assert_eq!(t.len(), brute_transversal(&g));
            let keep: Vec<usize> = g.vertices().filter(|v| !t.contains(v)).collect();
            assert!(g.induced_subgraph(&keep).is_forest());
            assert!(p.len() <= t.len());
        }
    }
}
