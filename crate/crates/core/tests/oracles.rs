//! Exact solvers compared against slow, independent reference computations.

use minorlab::bramble::{bramble_order, Bramble};
use minorlab::decomposition::{exact_pathwidth, exact_treewidth};
use minorlab::graph::*;
use minorlab::minor::find_minor_model;
use minorlab::SplitMix64;
use rand::Rng;
use std::collections::{BTreeSet, HashSet};

fn permutations(n: usize) -> Vec<Vec<usize>> {
    if n == 0 {
        return vec![vec![]];
    }
    let mut out = Vec::new();
    for p in permutations(n - 1) {
        for i in 0..=p.len() {
            let mut q = p.clone();
            q.insert(i, n - 1);
            out.push(q);
        }
    }
    out
}

/// Treewidth as the best elimination ordering, by trying all of them.
fn brute_treewidth(g: &Graph) -> isize {
    if g.n() == 0 {
        return -1;
    }
    permutations(g.n())
        .into_iter()
        .map(|order| {
            let mut adj: Vec<BTreeSet<usize>> = g.vertices().map(|v| g.neighbors(v).collect()).collect();
            let mut width = 0;
            for &v in &order {
                let nb: Vec<usize> = adj[v].iter().copied().collect();
                width = width.max(nb.len());
                for &a in &nb {
                    adj[a].remove(&v);
                    for &b in &nb {
                        if a != b {
                            adj[a].insert(b);
                        }
                    }
                }
                adj[v].clear();
            }
            width as isize
        })
        .min()
        .unwrap()
}

/// Pathwidth as the best vertex separation number over all layouts.
fn brute_pathwidth(g: &Graph) -> isize {
    if g.n() == 0 {
        return -1;
    }
    permutations(g.n())
        .into_iter()
        .map(|order| {
            (0..g.n())
                .map(|i| {
                    order[..i]
                        .iter()
                        .filter(|&&u| order[i..].iter().any(|&w| g.has_edge(u, w)))
                        .count()
                })
                .max()
                .unwrap() as isize
        })
        .min()
        .unwrap()
}

/// Every minor of `g` up to isomorphism, by closing under single deletions
/// and contractions.
fn all_minors(g: &Graph) -> Vec<Graph> {
    let key = |h: &Graph| (h.n(), canonical_form(h).edge_list());
    let mut seen = HashSet::new();
    let mut stack = vec![g.clone()];
    let mut out = Vec::new();
    seen.insert(key(g));
    while let Some(h) = stack.pop() {
        let mut next = Vec::new();
        for v in h.vertices() {
            next.push(h.remove_vertex(v));
        }
        for (u, v) in h.edge_list() {
            let mut d = h.clone();
            d.remove_edge(u, v);
            next.push(d);
            next.push(contract_edge(&h, u, v).unwrap());
        }
        for m in next {
            if seen.insert(key(&m)) {
                stack.push(m);
            }
        }
        out.push(h);
    }
    out
}

fn random_graph(rng: &mut SplitMix64, max_n: usize) -> Graph {
    let n = rng.random_range(1..=max_n);
    erdos_renyi(n, rng.random_range(0.2..0.8), rng)
}

#[test]
fn treewidth_matches_ordering_search() {
    let mut rng = SplitMix64::new(21);
    for _ in 0..150 {
        let g = random_graph(&mut rng, 7);
        assert_eq!(exact_treewidth(&g).unwrap().0, brute_treewidth(&g), "{:?}", g.edge_list());
    }
}

#[test]
fn pathwidth_matches_layout_search() {
    let mut rng = SplitMix64::new(22);
    for _ in 0..150 {
        let g = random_graph(&mut rng, 7);
        assert_eq!(exact_pathwidth(&g).unwrap().0, brute_pathwidth(&g), "{:?}", g.edge_list());
    }
}

#[test]
fn minor_search_matches_closure() {
    let patterns = [
        cycle(3),
        cycle(4),
        complete(4),
        path(4),
        star(3),
        complete_bipartite(2, 3),
        disjoint_union(&[path(2), path(2)]),
        make_wheel(5).unwrap(),
    ];
    let mut rng = SplitMix64::new(23);
    for _ in 0..60 {
        let g = random_graph(&mut rng, 6);
        let minors = all_minors(&g);
        for h in &patterns {
            let expected = minors.iter().any(|m| are_isomorphic(m, h));
            let found = find_minor_model(&g, h).unwrap();
            assert_eq!(found.is_some(), expected, "G = {:?}, H = {:?}", g.edge_list(), h.edge_list());
        }
    }
}

#[test]
fn bramble_order_matches_subset_search() {
    let mut rng = SplitMix64::new(24);
    for _ in 0..60 {
        let n = rng.random_range(3..=9);
        let g = complete(n);
        let elements: Vec<Vec<usize>> = (0..rng.random_range(1..=8))
            .map(|_| {
                let mut e: Vec<usize> = (0..n).filter(|_| rng.random_bool(0.4)).collect();
                if e.is_empty() {
                    e.push(0);
                }
                e
            })
            .collect();
        let b = Bramble::new(elements.clone());
        let best = (0u32..1 << n)
            .filter(|&m| elements.iter().all(|e| e.iter().any(|&v| m >> v & 1 == 1)))
            .map(u32::count_ones)
            .min()
            .unwrap() as usize;
        assert_eq!(bramble_order(&g, &b).unwrap().0, best);
    }
}

#[test]
fn enumeration_counts_up_to_seven() {
    // Numbers of graphs on n unlabeled vertices.
    let counts: Vec<usize> = enumerate_graphs_up_to(7).unwrap().iter().map(Vec::len).collect();
    assert_eq!(counts, [1, 1, 2, 4, 11, 34, 156, 1044]);
}
