mod common;

use minorlab::constructions::*;
use minorlab::graph::*;
use minorlab::minor::{validate_minor_model, MinorModel};
use minorlab::SplitMix64;
use rand::Rng;

#[test]
fn band_cycles_on_all_feasible_inputs() {
    for g in 2..=8 {
        let grid = make_grid(g, g);
        for l1 in 1..=g * g {
            for l2 in 1..=g * g {
                let (h1, h2) = (l1.div_ceil(g) + 1, l2.div_ceil(g) + 1);
                match grid_band_cycles(g, l1, l2) {
                    Ok((c1, c2)) => {
                        assert!(h1 + h2 <= g);
                        assert!(grid.is_cycle(&c1) && grid.is_cycle(&c2));
                        assert!(c1.len() > l1 && c2.len() > l2, "g {g} l1 {l1} l2 {l2}");
                        assert!(c1.iter().all(|v| !c2.contains(v)));
                    }
                    Err(_) => assert!(h1 + h2 > g),
                }
            }
        }
    }
}

#[test]
fn packing_examples_and_duality() {
    let two = disjoint_union(&[cycle(3), cycle(3)]);
    assert_eq!(cycle_packing_exact(&two).unwrap().len(), 2);
    assert_eq!(cycle_packing_exact(&complete(5)).unwrap().len(), 1);
    assert_eq!(cycle_transversal_exact(&cycle(5)).unwrap().len(), 1);
    assert_eq!(cycle_transversal_exact(&make_grid(3, 3)).unwrap().len(), 2);
    let mut rng = SplitMix64::new(31);
    for _ in 0..40 {
        let n = rng.random_range(3..=14);
        let g = erdos_renyi(n, 3.0 / n as f64, &mut rng);
        let p = cycle_packing_exact(&g).unwrap().len();
        let t = cycle_transversal_exact(&g).unwrap().len();
        assert!(p <= t);
        // A tree plus one edge has exactly one cycle.
        let mut u = random_tree(n, &mut rng);
        let (a, b) = (0, n - 1);
        if !u.has_edge(a, b) {
            u.add_edge(a, b);
            assert_eq!(cycle_packing_exact(&u).unwrap().len(), 1);
            assert_eq!(cycle_transversal_exact(&u).unwrap().len(), 1);
        }
    }
    assert!(cycle_packing_exact(&make_grid(6, 5)).is_err());
}

#[test]
fn prism_model_composes_to_cycle_model() {
    for r in 1..=3 {
        let ell = 8 * r * r - 4 * r;
        let prism_in_grid = grid_prism_model(r).unwrap();
        // Contract each rung: the prism has C_ell as a minor.
        let cycle_in_prism = MinorModel::new((0..ell).map(|i| vec![i, i + ell]).collect());
        assert!(validate_minor_model(&make_prism(ell).unwrap(), &cycle(ell), &cycle_in_prism).unwrap());
        let composed = cycle_in_prism.compose(&prism_in_grid);
        assert!(validate_minor_model(&make_grid(4 * r, 4 * r), &cycle(ell), &composed).unwrap());
    }
}

#[test]
fn scaled_embedding_examples() {
    let c4 = make_grid(2, 2);
    let id = MinorModel::new((0..4).map(|v| vec![v]).collect());
    let m = subdivision_grid_model(&c4, 2, &id, &uniform_counts(&c4, 0), 1).unwrap();
    assert!(validate_minor_model(&make_grid(4, 4), &c4, &m).unwrap());

    let mut diamond = complete(4);
    diamond.remove_edge(0, 3);
    let model = MinorModel::new(vec![vec![0, 1], vec![2, 5], vec![3, 4, 6], vec![7, 8]]);
    let counts = uniform_counts(&diamond, 1);
    let m = subdivision_grid_model(&diamond, 3, &model, &counts, 2).unwrap();
    assert_eq!(grid_scale(2) * 3, 9);
    let target = subdivide(&diamond, &counts).unwrap();
    assert!(validate_minor_model(&make_grid(9, 9), &target, &m).unwrap());

    let bad = MinorModel::new(vec![vec![0], vec![8], vec![3, 4, 6], vec![7]]);
    assert!(subdivision_grid_model(&diamond, 3, &bad, &counts, 2).is_err());
}

#[test]
fn scaled_embedding_on_larger_ell() {
    let mut rng = SplitMix64::new(32);
    for _ in 0..30 {
        let g = rng.random_range(2..=4);
        let ell = rng.random_range(7..=20);
        let (h, model) = common::random_grid_model(g, &mut rng);
        let counts: SubdivisionCounts = h.edges().map(|e| (e, rng.random_range(0..ell))).collect();
        let m = subdivision_grid_model(&h, g, &model, &counts, ell).unwrap();
        let side = grid_scale(ell) * g;
        assert!(validate_minor_model(&make_grid(side, side), &subdivide(&h, &counts).unwrap(), &m).unwrap());
    }
}

#[test]
fn twisted_prism_cases() {
    let identity = TwistedPrismSpec::identity(75).unwrap();
    assert!(has_matching_four_cycle(&identity));
    let doubling: Vec<usize> = (1..=75).map(|i| match 2 * i % 75 { 0 => 75, p => p }).collect();
    let spec = TwistedPrismSpec::new(75, doubling).unwrap();
    assert!(!has_matching_four_cycle(&spec));
    let (m, trace) = twisted_prism_grid_model_traced(&spec).unwrap();
    assert!(!trace.four_cycle && trace.rungs >= 10);
    assert!(validate_minor_model(&make_twisted_prism(&spec), &make_grid(4, 4), &m).unwrap());
    let spec = TwistedPrismSpec::random(80, &mut SplitMix64::new(80)).unwrap();
    let (m, trace) = twisted_prism_grid_model_traced(&spec).unwrap();
    assert!(trace.reduced);
    assert!(validate_minor_model(&make_twisted_prism(&spec), &make_grid(4, 4), &m).unwrap());
}

#[test]
fn monotone_examples() {
    let mut rng = SplitMix64::new(33);
    let seq: Vec<i64> = (0..73).map(|_| rng.random_range(-1_000_000..1_000_000)).collect();
    let w = es_monotone(&seq, 9, 10).unwrap();
    assert!(w.verify(&seq));
    assert!(match w.direction {
        Direction::Increasing => w.length >= 9,
        Direction::Decreasing => w.length >= 10,
    });
}
