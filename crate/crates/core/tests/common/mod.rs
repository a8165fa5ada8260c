//! Helpers shared by the integration tests.
#![allow(dead_code)]

use minorlab::bramble::{bramble_order, Bramble, PathPartition};
use minorlab::graph::{Graph, VertexSet};
use minorlab::minor::MinorModel;
use minorlab::SplitMix64;
use rand::seq::{IndexedRandom, SliceRandom};
use rand::Rng;

/// A random connected set grown from `start` inside `allowed`, at most `size` vertices.
pub fn grow(g: &Graph, start: usize, size: usize, allowed: &[bool], rng: &mut SplitMix64) -> Vec<usize> {
    let mut set = vec![start];
    while set.len() < size {
        let mut frontier: Vec<usize> = set
            .iter()
            .flat_map(|&v| g.neighbors(v))
            .filter(|&w| allowed[w] && !set.contains(&w))
            .collect();
        frontier.sort_unstable();
        frontier.dedup();
        match frontier.choose(rng) {
            Some(&w) => set.push(w),
            None => break,
        }
    }
    set.sort_unstable();
    set
}

/// A bramble of random connected sets, each touching all earlier ones.
pub fn random_bramble(g: &Graph, attempts: usize, rng: &mut SplitMix64) -> Bramble {
    let all = vec![true; g.n()];
    let mut elements: Vec<Vec<usize>> = Vec::new();
    for _ in 0..attempts {
        let start = rng.random_range(0..g.n());
        let size = rng.random_range(1..=g.n().div_ceil(2));
        let e = grow(g, start, size, &all, rng);
        if elements.iter().all(|f| touches(g, &e, f)) && !elements.contains(&e) {
            elements.push(e);
        }
    }
    Bramble::new(elements)
}

/// Whether two vertex sets share a vertex or are joined by an edge.
pub fn touches(g: &Graph, a: &[usize], b: &[usize]) -> bool {
    a.iter().any(|&u| b.contains(&u) || g.neighbors(u).any(|w| b.contains(&w)))
}

/// Random disjoint connected branch sets in the `side × side` grid, and the
/// graph they realise with a random subset of the available edges kept.
pub fn random_grid_model(side: usize, rng: &mut SplitMix64) -> (Graph, MinorModel) {
    let grid = minorlab::graph::make_grid(side, side);
    let mut free = vec![true; grid.n()];
    let mut order: Vec<usize> = grid.vertices().collect();
    order.shuffle(rng);
    let mut sets = Vec::new();
    for v in order {
        if !free[v] || rng.random_bool(0.3) {
            continue;
        }
        let size = rng.random_range(1..=3);
        let s = grow(&grid, v, size, &free, rng);
        for &x in &s {
            free[x] = false;
        }
        sets.push(s);
    }
    let full = minorlab::minor::quotient(&grid, &sets);
    let mut h = Graph::new(full.n());
    for (u, v) in full.edges() {
        if rng.random_bool(0.8) {
            h.add_edge(u, v);
        }
    }
    (h, MinorModel::new(sets))
}

fn order_of(g: &Graph, b: &Bramble, idx: &[usize]) -> usize {
    bramble_order(g, &b.sub(idx)).expect("sub-bramble order").0
}

fn meeting(b: &Bramble, set: &[usize]) -> Vec<usize> {
    (0..b.len())
        .filter(|&i| b.elements[i].iter().any(|v| set.contains(v)))
        .collect()
}

/// Re-check every conclusion of a path partition from scratch.
pub fn check_partition(
    g: &Graph,
    path: &[usize],
    b: &Bramble,
    c1: usize,
    c2: usize,
    reverse: bool,
    r: &PathPartition,
) -> Result<(), String> {
    let (x, y) = if reverse {
        (*path.last().unwrap(), path[0])
    } else {
        (path[0], *path.last().unwrap())
    };
    // Two edge-disjoint subpaths covering the path and sharing one vertex.
    if !g.is_path(&r.p1) || !g.is_path(&r.p2) {
        return Err("parts are not paths".into());
    }
    if r.p1[0] != x || *r.p2.last().unwrap() != y || r.p1.last() != r.p2.first() {
        return Err("endpoints misplaced".into());
    }
    let mut joined = r.p1.clone();
    joined.extend(&r.p2[1..]);
    let expect: Vec<usize> = if reverse { path.iter().rev().copied().collect() } else { path.to_vec() };
    if joined != expect {
        return Err("parts do not concatenate to the path".into());
    }
    let all: Vec<usize> = (0..b.len()).collect();
    let b1 = meeting(b, &r.p1);
    let only1: Vec<usize> = r.p1.iter().filter(|v| !r.p2.contains(v)).copied().collect();
    let only2: Vec<usize> = r.p2.iter().filter(|v| !r.p1.contains(v)).copied().collect();
    let b1p = meeting(b, &only1);
    if b1 != r.b1_indices || b1p != r.b1_prime_indices {
        return Err("reported sub-brambles differ".into());
    }
    if order_of(g, b, &b1) != c1 || r.order_b1 != c1 {
        return Err(format!("order of B1 is not {c1}"));
    }
    if order_of(g, b, &b1p) + 1 > c1 {
        return Err(format!("order of B1' exceeds {}", c1 - 1));
    }
    let rest: Vec<usize> = all.iter().filter(|i| !b1.contains(i)).copied().collect();
    if order_of(g, b, &rest) < c2 {
        return Err(format!("order of B - B1 below {c2}"));
    }
    if rest.iter().any(|&i| !b.elements[i].iter().any(|v| only2.contains(v))) {
        return Err("V(P2) - V(P1) misses an element of B - B1".into());
    }
    let rest_p: Vec<usize> = all.iter().filter(|i| !b1p.contains(i)).copied().collect();
    if order_of(g, b, &rest_p) < c2 + 1 {
        return Err(format!("order of B - B1' below {}", c2 + 1));
    }
    if rest_p.iter().any(|&i| !b.elements[i].iter().any(|v| r.p2.contains(v))) {
        return Err("V(P2) misses an element of B - B1'".into());
    }
    Ok(())
}

/// Whether `cut` separates `s` from `t` (vertices of the cut are removed).
pub fn separates(g: &Graph, s: &[usize], t: &[usize], cut: &[usize]) -> bool {
    let mut seen = VertexSet::with_capacity(g.n());
    let mut stack: Vec<usize> = s.iter().filter(|v| !cut.contains(v)).copied().collect();
    for &v in &stack {
        seen.insert(v);
    }
    while let Some(v) = stack.pop() {
        if t.contains(&v) {
            return false;
        }
        for w in g.neighbors(v) {
            if !cut.contains(&w) && !seen.contains(w) {
                seen.insert(w);
                stack.push(w);
            }
        }
    }
    true
}
