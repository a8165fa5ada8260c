//! Property tests over random small graphs.

mod common;

use minorlab::bramble::bramble_order;
use minorlab::decomposition::{
    exact_pathwidth, exact_treewidth, treewidth_bounds_heuristic, validate_path_decomposition,
    validate_tree_decomposition,
};
use minorlab::graph::io::{from_dimacs, from_json, to_dimacs, to_json};
use minorlab::graph::*;
use minorlab::minor::{find_minor_model, max_vertex_disjoint_paths, validate_minor_model};
use minorlab::SplitMix64;
use proptest::prelude::*;

fn graph(max_n: usize) -> impl Strategy<Value = Graph> {
    (1..=max_n).prop_flat_map(|n| {
        proptest::collection::vec(any::<bool>(), n * (n - 1) / 2).prop_map(move |bits| {
            let mut g = Graph::new(n);
            let mut k = 0;
            for u in 0..n {
                for v in u + 1..n {
                    if bits[k] {
                        g.add_edge(u, v);
                    }
                    k += 1;
                }
            }
            g
        })
    })
}

fn relabel(g: &Graph, perm: &[usize]) -> Graph {
    Graph::from_edges(g.n(), g.edges().map(|(u, v)| (perm[u], perm[v]))).unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(120))]

    #[test]
    fn decompositions_are_valid_and_ordered(g in graph(10)) {
        let (tw, td) = exact_treewidth(&g).unwrap();
        let check = validate_tree_decomposition(&g, &td).unwrap();
        prop_assert!(check.valid);
        prop_assert_eq!(check.width, tw);
        let (pw, pd) = exact_pathwidth(&g).unwrap();
        prop_assert!(validate_path_decomposition(&g, &pd).unwrap().valid);
        prop_assert!(tw <= pw);
        let h = treewidth_bounds_heuristic(&g);
        prop_assert!(h.lower <= tw && tw <= h.upper);
        prop_assert!(validate_tree_decomposition(&g, &h.witness).unwrap().valid);
    }

    #[test]
    fn canonical_form_ignores_labels(g in graph(8), seed in any::<u64>()) {
        use rand::seq::SliceRandom;
        let mut perm: Vec<usize> = g.vertices().collect();
        perm.shuffle(&mut SplitMix64::new(seed));
        let h = relabel(&g, &perm);
        prop_assert_eq!(canonical_form(&g).edge_list(), canonical_form(&h).edge_list());
        let iso = find_isomorphism(&g, &h).unwrap();
        prop_assert!(g.edges().all(|(u, v)| h.has_edge(iso[u], iso[v])));
    }

    #[test]
    fn minors_are_monotone_under_contraction(g in graph(7)) {
        prop_assume!(g.m() > 0);
        let (u, v) = g.edge_list()[0];
        let c = contract_edge(&g, u, v).unwrap();
        let m = find_minor_model(&g, &c).unwrap().expect("a contraction is a minor");
        prop_assert!(validate_minor_model(&g, &c, &m).unwrap());
        prop_assert!(exact_treewidth(&c).unwrap().0 <= exact_treewidth(&g).unwrap().0);
    }

    #[test]
    fn formats_round_trip(g in graph(12)) {
        prop_assert_eq!(from_json(&to_json(&g)).unwrap(), g.clone());
        prop_assert_eq!(from_dimacs(&to_dimacs(&g)).unwrap(), g);
    }

    #[test]
    fn menger_value_equals_cut(g in graph(14), a in 1usize..4, b in 1usize..4) {
        prop_assume!(a + b <= g.n());
        let s: Vec<usize> = (0..a).collect();
        let t: Vec<usize> = (g.n() - b..g.n()).collect();
        let d = max_vertex_disjoint_paths(&g, &s, &t).unwrap();
        prop_assert_eq!(d.paths.len(), d.cut.len());
        prop_assert!(common::separates(&g, &s, &t, &d.cut));
    }

    #[test]
    fn bramble_order_bounds_treewidth(g in graph(10), seed in any::<u64>()) {
        let b = common::random_bramble(&g, 10, &mut SplitMix64::new(seed));
        let order = bramble_order(&g, &b).unwrap().0 as isize;
        prop_assert!(order - 1 <= exact_treewidth(&g).unwrap().0);
    }

    #[test]
    fn subdivision_keeps_treewidth(g in graph(7), c in 0usize..3) {
        let s = subdivide(&g, &uniform_counts(&g, c)).unwrap();
        prop_assert_eq!(s.n(), g.n() + c * g.m());
        prop_assume!(s.n() <= 25);
        prop_assert_eq!(exact_treewidth(&s).unwrap().0, exact_treewidth(&g).unwrap().0);
    }
}
