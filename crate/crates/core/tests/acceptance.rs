//! Acceptance suite. Runs every criterion in sequence and prints one
//! PASS/FAIL line per criterion with its pinned tolerance and timing.

mod common;

use minorlab::bounds::{empirical_f, verify_bound, verify_tree_composition, BoundEntry, VerificationMode};
use minorlab::bramble::{bramble_order, find_hitting_cycle, grid_cross_bramble, path_partition, Bramble};
use minorlab::constructions::{
    es_monotone, grid_prism_model, grid_scale, subdivision_grid_model, twisted_prism_grid_model, Direction,
};
use minorlab::decomposition::exact_treewidth;
use minorlab::graph::*;
use minorlab::minor::{find_minor_model, max_vertex_disjoint_paths, validate_minor_model};
use minorlab::SplitMix64;
use rand::seq::SliceRandom;
use rand::Rng;
use std::time::{Duration, Instant};

type Check = Result<String, String>;

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn e2s(e: minorlab::Error) -> String {
    e.to_string()
}

fn run(id: usize, title: &str, limit: Duration, f: impl FnOnce() -> Check) -> bool {
    let start = Instant::now();
    let outcome = f();
    let elapsed = start.elapsed();
    let (ok, detail) = match outcome {
        Ok(d) if elapsed < limit => (true, d),
        Ok(d) => (false, format!("{d}; over time limit")),
        Err(e) => (false, e),
    };
    println!(
        "criterion {id:>2} {} | {title} | {detail} | {:.3}s (limit {}s)",
        if ok { "PASS" } else { "FAIL" },
        elapsed.as_secs_f64(),
        limit.as_secs()
    );
    ok
}

fn twisted_prisms() -> Check {
    let mut rng = SplitMix64::new(1).split("twisted");
    let mut specs = Vec::new();
    for _ in 0..200 {
        specs.push(TwistedPrismSpec::random(75, &mut rng).map_err(e2s)?);
    }
    for _ in 0..50 {
        let ell = rng.random_range(76..=90);
        specs.push(TwistedPrismSpec::random(ell, &mut rng).map_err(e2s)?);
    }
    let mut times = Vec::new();
    let grid = make_grid(4, 4);
    for spec in &specs {
        let start = Instant::now();
        let m = twisted_prism_grid_model(spec).map_err(e2s)?;
        times.push(start.elapsed());
        let ok = validate_minor_model(&make_twisted_prism(spec), &grid, &m).map_err(e2s)?;
        ensure(ok, || format!("invalid model for pi = {:?}", spec.permutation()))?;
    }
    times.sort_unstable();
    let median = times[times.len() / 2];
    ensure(median < Duration::from_secs(1), || format!("median {median:?} >= 1s"))?;
    Ok(format!("{}/{} models valid, median {:.2?} (< 1s)", specs.len(), specs.len(), median))
}

fn grid_prisms() -> Check {
    for (r, ell, side) in [(1, 4, 4), (2, 24, 8), (3, 60, 12)] {
        let m = grid_prism_model(r).map_err(e2s)?;
        let ok = validate_minor_model(&make_grid(side, side), &make_prism(ell).map_err(e2s)?, &m).map_err(e2s)?;
        ensure(ok, || format!("r = {r}: invalid {ell}-prism model"))?;
    }
    Ok("4-, 24- and 60-prism models valid".into())
}

fn duality() -> Check {
    for k in 2..=4 {
        let (g, b) = grid_cross_bramble(k).map_err(e2s)?;
        let tw = exact_treewidth(&g).map_err(e2s)?.0;
        let order = bramble_order(&g, &b).map_err(e2s)?.0;
        ensure(tw == k as isize && order == k + 1, || {
            format!("k = {k}: tw {tw}, cross bramble order {order}")
        })?;
    }
    let mut rng = SplitMix64::new(3).split("duality");
    for i in 0..100 {
        let n = rng.random_range(4..=12);
        let g = erdos_renyi(n, rng.random_range(0.2..0.7), &mut rng);
        let b = common::random_bramble(&g, 12, &mut rng);
        let order = bramble_order(&g, &b).map_err(e2s)?.0 as isize;
        let tw = exact_treewidth(&g).map_err(e2s)?.0;
        ensure(order - 1 <= tw, || format!("pair {i}: order {order} but tw {tw}"))?;
    }
    Ok("grids k = 2..4 exact; 100 random pairs satisfy order - 1 <= tw".into())
}

fn cycle_bounds() -> Check {
    let mut parts = Vec::new();
    for k in 4..=6 {
        let entry = BoundEntry::Cycle { n: k };
        let r = verify_bound(&cycle(k), &entry, VerificationMode::Exhaustive { n_max: 7 }).map_err(e2s)?;
        ensure(r.passed() && r.budget_overruns == 0, || format!("C{k}: observed {} > {}", r.observed_max_tw, k - 2))?;
        let clique = complete(k - 1);
        let free = find_minor_model(&clique, &cycle(k)).map_err(e2s)?.is_none();
        let tw = exact_treewidth(&clique).map_err(e2s)?.0;
        ensure(free && tw == k as isize - 2, || format!("K{} does not attain {}", k - 1, k - 2))?;
        parts.push(format!("C{k}: max tw {} over {} free graphs", r.observed_max_tw, r.minor_free));
    }
    Ok(parts.join(", "))
}

fn two_triangles() -> Check {
    let h = disjoint_union(&[cycle(3), cycle(3)]);
    let r = empirical_f(&h, 7).map_err(e2s)?;
    let witness: Graph = r.witness.clone().ok_or("no witness")?.try_into().map_err(e2s)?;
    ensure(r.observed_max_tw == 4, || format!("observed {} != 4", r.observed_max_tw))?;
    ensure(are_isomorphic(&witness, &complete(5)), || "witness is not K5".into())?;
    let bound = BoundEntry::DisjointCyclesR2 { n: 6 }.f_upper().map_err(e2s)?.numeric().ok_or("symbolic")?;
    ensure(bound == 25 && 4 <= bound, || format!("normalized bound {bound}"))?;
    Ok(format!("observed 4 (exact) with witness K5, bound {bound}"))
}

fn tree_composition() -> Check {
    let cases = [(cycle(3), complete(1), "C3+K1"), (cycle(3), path(2), "C3+P2"), (cycle(4), complete(1), "C4+K1")];
    let mut parts = Vec::new();
    for (h1, t, name) in cases {
        let r = verify_tree_composition(&h1, &t, 6).map_err(e2s)?;
        ensure(r.passed(), || format!("{name}: observed {} > {:?}", r.observed_max_tw, r.bound))?;
        parts.push(format!("{name} {} <= {}", r.observed_max_tw, r.bound.unwrap_or(-1)));
    }
    Ok(parts.join(", "))
}

fn phi() -> Check {
    let mut rng = SplitMix64::new(7).split("phi");
    for i in 0..100 {
        let g = rng.random_range(1..=3);
        let ell = rng.random_range(1..=6);
        let (h, model) = common::random_grid_model(g, &mut rng);
        let counts: SubdivisionCounts = h.edges().map(|e| (e, rng.random_range(0..ell))).collect();
        let m = subdivision_grid_model(&h, g, &model, &counts, ell).map_err(e2s)?;
        let side = grid_scale(ell) * g;
        let target = subdivide(&h, &counts).map_err(e2s)?;
        let ok = validate_minor_model(&make_grid(side, side), &target, &m).map_err(e2s)?;
        ensure(ok, || format!("instance {i}: g = {g}, ell = {ell} rejected"))?;
    }
    Ok("100/100 scaled models valid".into())
}

fn erdos_szekeres() -> Check {
    let mut rng = SplitMix64::new(8).split("es");
    for (a, b) in [(4, 4), (9, 10), (9, 9)] {
        let len = (a - 1) * (b - 1) + 1;
        for _ in 0..10_000 {
            let mut seq: Vec<u32> = (0..len as u32).collect();
            seq.shuffle(&mut rng);
            let w = es_monotone(&seq, a, b).map_err(e2s)?;
            let need = if w.direction == Direction::Increasing { a } else { b };
            ensure(w.verify(&seq) && w.length >= need, || format!("bad witness for {seq:?}"))?;
        }
    }
    Ok("30000/30000 witnesses verified".into())
}

fn partitions() -> Check {
    let mut rng = SplitMix64::new(9).split("partition");
    let mut done = 0;
    while done < 200 {
        let (g, b, path) = if done % 2 == 0 {
            let n = rng.random_range(4..=8);
            let g = complete(n);
            let count = rng.random_range(3..=12);
            let elements: Vec<Vec<usize>> = (0..count)
                .map(|_| {
                    let mut e: Vec<usize> = (0..n).filter(|_| rng.random_bool(0.3)).collect();
                    if e.is_empty() {
                        e.push(rng.random_range(0..n));
                    }
                    e
                })
                .collect();
            let mut p: Vec<usize> = (0..n).collect();
            p.shuffle(&mut rng);
            (g, Bramble::new(elements), p)
        } else {
            let k = rng.random_range(3..=4);
            let (g, b) = grid_cross_bramble(k).map_err(e2s)?;
            let mut c = find_hitting_cycle(&g, &b).map_err(e2s)?.ok_or("no hitting cycle")?;
            let shift = rng.random_range(0..c.len());
            c.rotate_left(shift);
            (g, b, c)
        };
        let order = bramble_order(&g, &b).map_err(e2s)?.0;
        if order < 2 {
            continue;
        }
        let c1 = rng.random_range(1..order);
        let c2 = rng.random_range(1..=order - c1);
        let reverse = rng.random_bool(0.5);
        let r = path_partition(&g, &path, &b, c1, c2, reverse).map_err(e2s)?;
        common::check_partition(&g, &path, &b, c1, c2, reverse, &r).map_err(|e| format!("instance {done}: {e}"))?;
        done += 1;
    }
    Ok("200/200 partitions satisfy all five conclusions".into())
}

fn menger() -> Check {
    let mut rng = SplitMix64::new(10).split("menger");
    for i in 0..500 {
        let n = rng.random_range(2..=20);
        let g = erdos_renyi(n, rng.random_range(0.05..0.5), &mut rng);
        let mut vs: Vec<usize> = (0..n).collect();
        vs.shuffle(&mut rng);
        let a = rng.random_range(1..=n.min(4));
        let b = rng.random_range(1..=(n - a).clamp(1, 4));
        if a + b > n {
            continue;
        }
        let (s, t) = (&vs[..a], &vs[a..a + b]);
        let d = max_vertex_disjoint_paths(&g, s, t).map_err(e2s)?;
        ensure(d.paths.len() == d.cut.len(), || format!("instance {i}: {} paths, cut {}", d.paths.len(), d.cut.len()))?;
        ensure(common::separates(&g, s, t, &d.cut), || format!("instance {i}: cut does not separate"))?;
        let mut used = Vec::new();
        for p in &d.paths {
            let ok = g.is_path(p) && s.contains(&p[0]) && t.contains(p.last().unwrap());
            ensure(ok && p.iter().all(|v| !used.contains(v)), || format!("instance {i}: bad path {p:?}"))?;
            used.extend(p);
        }
    }
    for ell in 3..=12 {
        let g = make_prism(ell).map_err(e2s)?;
        let c1: Vec<usize> = (0..ell).collect();
        let c2: Vec<usize> = (ell..2 * ell).collect();
        let d = max_vertex_disjoint_paths(&g, &c1, &c2).map_err(e2s)?;
        ensure(d.paths.len() == ell, || format!("{ell}-prism value {}", d.paths.len()))?;
    }
    Ok("500 random instances |paths| = |cut|; prism values = ell for ell <= 12".into())
}

fn catalog() -> Check {
    let num = |e: BoundEntry| e.f_upper().ok().and_then(|b| b.numeric()).ok_or(format!("{e:?} not numeric"));
    for k in 11..=10_000 {
        let (ours, rt) = (num(BoundEntry::WheelOurs { k })?, num(BoundEntry::WheelRt { k })?);
        ensure(ours <= rt, || format!("k = {k}: {ours} > {rt}"))?;
    }
    let mut entries = minorlab::bounds::catalog();
    for n in 1..=40 {
        entries.extend([BoundEntry::Forest { n }, BoundEntry::ApexForest { n: n + 1 }, BoundEntry::CompleteBipartite2t { t: n + 1 }]);
        entries.extend([BoundEntry::Cycle { n: n + 2 }, BoundEntry::WheelOurs { k: n + 3 }, BoundEntry::WheelRt { k: n + 3 }]);
        entries.extend([BoundEntry::TwistedPrism { ell: n + 2 }, BoundEntry::PrismOrGrid { ell: n + 2 }]);
        entries.push(BoundEntry::DisjointCyclesR2 { n: n + 5 });
    }
    let mut numeric = 0;
    for e in &entries {
        if let Some(b) = e.f_upper().map_err(e2s)?.numeric() {
            numeric += 1;
            ensure(b >= e.h_order() as i64 - 2, || format!("{e:?}: {b} < |V(H)| - 2"))?;
        }
    }
    ensure(num(BoundEntry::Grid4x4)? == 160, || "grid_4x4 is not 160".into())?;
    Ok(format!("wheel ordering holds for 11..=10^4, {numeric} numeric entries >= |V(H)| - 2, grid_4x4 = 160"))
}

fn main() {
    let mins = |m: u64| Duration::from_secs(60 * m);
    let secs = Duration::from_secs;
    let results = [
        run(1, "twisted prism to 4x4 grid", mins(10), twisted_prisms),
        run(2, "prism models in grids", secs(1), grid_prisms),
        run(3, "grid treewidth and bramble duality", secs(30), duality),
        run(4, "cycle-minor-free treewidth", mins(10), cycle_bounds),
        run(5, "two disjoint triangles excluded", mins(15), two_triangles),
        run(6, "tree composition inequality", mins(5), tree_composition),
        run(7, "scaled subdivision embedding", mins(1), phi),
        run(8, "monotone subsequences", secs(10), erdos_szekeres),
        run(9, "bramble path partition", mins(2), partitions),
        run(10, "disjoint paths and cuts", mins(1), menger),
        run(11, "bound catalog consistency", secs(1), catalog),
    ];
    let passed = results.iter().filter(|&&ok| ok).count();
    println!("acceptance: {passed}/{} criteria passed", results.len());
    if passed != results.len() {
        std::process::exit(1);
    }
}
