//! A 4 × 4 grid minor in every twisted prism with at least 75 rungs.

use super::monotone::{es_monotone, Direction};
use super::prism::check;
use crate::error::{Error, Result};
use crate::graph::{make_grid, make_twisted_prism, TwistedPrismSpec};
use crate::minor::{find_minor_model_with, quotient, MinorModel, MinorSearchLimits};
use serde::{Deserialize, Serialize};

/// Number of matching edges the construction works with.
pub const TWISTED_CORE: usize = 75;

/// How [`twisted_prism_grid_model_traced`] found its model.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TwistedTrace {
    /// The input had more than 75 rungs and was contracted first.
    pub reduced: bool,
    /// The 75-rung core has two consecutive rungs forming a 4-cycle.
    pub four_cycle: bool,
    /// Prism-ordered rungs extracted from the monotone subsequence.
    pub rungs: usize,
    /// The annulus used the first cycle as its outer cycle.
    pub outer_is_first: bool,
    /// The direct extraction failed and the exact search was used.
    pub fallback: bool,
}

/// Whether some consecutive `v_i v_{i+1}` are matched to consecutive `w`s.
pub fn has_matching_four_cycle(spec: &TwistedPrismSpec) -> bool {
    let ell = spec.ell();
    (1..=ell).any(|i| {
        let d = (spec.pi(i % ell + 1) + ell - spec.pi(i)) % ell;
        d == 1 || d == ell - 1
    })
}

/// A model of the 4 × 4 grid in `make_twisted_prism(spec)`, for `ell >= 75`.
///
/// ```
/// use minorlab::constructions::twisted_prism_grid_model;
/// use minorlab::graph::{make_grid, make_twisted_prism, TwistedPrismSpec};
/// use minorlab::minor::validate_minor_model;
/// let spec = TwistedPrismSpec::identity(75).unwrap();
/// let m = twisted_prism_grid_model(&spec).unwrap();
/// assert!(validate_minor_model(&make_twisted_prism(&spec), &make_grid(4, 4), &m).unwrap());
/// ```
pub fn twisted_prism_grid_model(spec: &TwistedPrismSpec) -> Result<MinorModel> {
    Ok(twisted_prism_grid_model_traced(spec)?.0)
}

/// [`twisted_prism_grid_model`] together with a record of the route taken.
pub fn twisted_prism_grid_model_traced(spec: &TwistedPrismSpec) -> Result<(MinorModel, TwistedTrace)> {
    let ell = spec.ell();
    if ell < TWISTED_CORE {
        return Err(Error::InvalidParameter(format!(
            "the construction needs ell >= {TWISTED_CORE}, got {ell}"
        )));
    }
    let (core, outer) = reduce(spec)?;
    let t = make_twisted_prism(&core);
    let four_cycle = has_matching_four_cycle(&core);
    let (c1, c2, rungs) = if four_cycle { rungs_with_square(&core)? } else { rungs_without_square(&core)? };
    let mut trace = TwistedTrace {
        reduced: ell > TWISTED_CORE,
        four_cycle,
        rungs: rungs.len(),
        outer_is_first: true,
        fallback: false,
    };
    let swapped: Vec<(usize, usize)> = rungs.iter().map(|&(a, b)| (b, a)).collect();
    let grid = make_grid(4, 4);
    let in_core = if let Some(sets) = annulus(&c1, &c2, &rungs) {
        MinorModel::new(sets)
    } else if let Some(sets) = annulus(&c2, &c1, &swapped) {
        trace.outer_is_first = false;
        MinorModel::new(sets)
    } else {
        trace.fallback = true;
        search_fallback(&t, &c1, &c2, &rungs)?
    };
    check(&t, &grid, &in_core)?;
    let model = in_core.compose(&outer);
    check(&make_twisted_prism(spec), &grid, &model)?;
    Ok((model, trace))
}

/// Keep the matching edges at `v_1..v_75`: `v_75..v_ell` becomes one branch
/// set, and each kept `w` endpoint absorbs the arc up to the next one.
fn reduce(spec: &TwistedPrismSpec) -> Result<(TwistedPrismSpec, MinorModel)> {
    let ell = spec.ell();
    let k = TWISTED_CORE;
    if ell == k {
        let id = MinorModel::new((0..2 * ell).map(|v| vec![v]).collect());
        return Ok((spec.clone(), id));
    }
    let mut kept: Vec<usize> = (1..=k).map(|i| spec.pi(i)).collect();
    kept.sort_unstable();
    let rank = |p: usize| kept.binary_search(&p).expect("kept endpoint") + 1;
    let core = TwistedPrismSpec::new(k, (1..=k).map(|i| rank(spec.pi(i))).collect())?;
    let mut sets: Vec<Vec<usize>> = (1..k).map(|i| vec![spec.v(i)]).collect();
    sets.push((k..=ell).map(|i| spec.v(i)).collect());
    for (t, &start) in kept.iter().enumerate() {
        let next = if t + 1 < k { kept[t + 1] } else { kept[0] + ell };
        sets.push((start..next).map(|j| spec.w((j - 1) % ell + 1)).collect());
    }
    Ok((core, MinorModel::new(sets)))
}

type Rungs = (Vec<usize>, Vec<usize>, Vec<(usize, usize)>);

/// Cyclic orders of both cycles and the prism-ordered rungs, from a
/// monotone subsequence of the positions matched along the second cycle.
fn collect_rungs(c1: Vec<usize>, c2: Vec<usize>, partner_pos: &[usize], picks: &[usize]) -> Rungs {
    let rungs = picks.iter().map(|&t| (c1[t], c2[partner_pos[t]])).collect();
    (c1, c2, rungs)
}

/// Rotate so that the 4-cycle rungs come first and last, then take a
/// monotone subsequence of the 73 rungs between them.
fn rungs_with_square(spec: &TwistedPrismSpec) -> Result<Rungs> {
    let n = spec.ell();
    let k = (1..=n)
        .find(|&i| {
            let d = (spec.pi(i % n + 1) + n - spec.pi(i)) % n;
            d == 1 || d == n - 1
        })
        .ok_or_else(|| Error::Internal("no 4-cycle".into()))?;
    // c1[t] = v_{k+1+t}, so c1[0] = v_{k+1} and c1[n-1] = v_k.
    let vi = |t: usize| (k + t) % n + 1;
    let c1: Vec<usize> = (0..n).map(|t| spec.v(vi(t))).collect();
    let a = spec.pi(vi(0));
    let forward = (spec.pi(k) + 1) % n == a % n;
    let wj = |t: usize| if forward { (a - 1 + t) % n + 1 } else { (a - 1 + n * n - t) % n + 1 };
    let c2: Vec<usize> = (0..n).map(|t| spec.w(wj(t))).collect();
    let partner_pos = partner_positions(spec, &c1, &c2);
    debug_assert!(partner_pos[0] == 0 && partner_pos[n - 1] == n - 1);
    let seq = &partner_pos[1..n - 1];
    let w = es_monotone(seq, 9, 10)?;
    let mut picks: Vec<usize> = vec![0];
    picks.extend(w.indices.iter().map(|&i| i + 1));
    if w.direction == Direction::Increasing {
        picks.push(n - 1);
    }
    Ok(collect_rungs(c1, c2, &partner_pos, &picks))
}

/// Rotate the second cycle so that `v_75` is matched to its last vertex,
/// then take a monotone subsequence of the first 74 rungs and add the last.
fn rungs_without_square(spec: &TwistedPrismSpec) -> Result<Rungs> {
    let n = spec.ell();
    let c1: Vec<usize> = (1..=n).map(|i| spec.v(i)).collect();
    let last = spec.pi(n);
    let c2: Vec<usize> = (1..=n).map(|t| spec.w((last + t - 1) % n + 1)).collect();
    let partner_pos = partner_positions(spec, &c1, &c2);
    debug_assert_eq!(partner_pos[n - 1], n - 1);
    let w = es_monotone(&partner_pos[..n - 1], 9, 9)?;
    let mut picks = w.indices.clone();
    picks.push(n - 1);
    Ok(collect_rungs(c1, c2, &partner_pos, &picks))
}

/// `partner_pos[t]`: position along `c2` of the partner of `c1[t]`.
fn partner_positions(spec: &TwistedPrismSpec, c1: &[usize], c2: &[usize]) -> Vec<usize> {
    let n = spec.ell();
    let mut at = vec![0; 2 * n];
    for (t, &w) in c2.iter().enumerate() {
        at[w] = t;
    }
    c1.iter().map(|&v| at[spec.w(spec.pi(v + 1))]).collect()
}

/// Grid cells `(row, col)` of the outer 12-cycle, in order. Slots 0, 3, 6
/// and 9 are corners; the rest carry rungs.
const PERIMETER: [(usize, usize); 12] = [
    (0, 0),
    (0, 1),
    (0, 2),
    (0, 3),
    (1, 3),
    (2, 3),
    (3, 3),
    (3, 2),
    (3, 1),
    (3, 0),
    (2, 0),
    (1, 0),
];

/// Branch sets of the 4 × 4 grid built from an outer cycle, an inner cycle
/// and prism-ordered rungs `(outer, inner)`: the outer cycle is cut into 12
/// arcs around eight rungs and four corners, the inner into four arcs.
fn annulus(outer: &[usize], inner: &[usize], rungs: &[(usize, usize)]) -> Option<Vec<Vec<usize>>> {
    let (l, li) = (outer.len(), inner.len());
    if rungs.len() < 8 {
        return None;
    }
    let size = outer.iter().chain(inner).max().map_or(0, |&m| m + 1);
    let mut opos = vec![usize::MAX; size];
    for (p, &v) in outer.iter().enumerate() {
        opos[v] = p;
    }
    let mut ipos = vec![usize::MAX; size];
    for (p, &v) in inner.iter().enumerate() {
        ipos[v] = p;
    }
    let mut rung_at = vec![None; l];
    let mut by_outer: Vec<(usize, usize)> = rungs.iter().map(|&(a, b)| (opos[a], ipos[b])).collect();
    by_outer.sort_unstable();
    for &(o, i) in &by_outer {
        rung_at[o] = Some(i);
    }
    let k = by_outer.len();
    let descents = |f: &dyn Fn(usize) -> usize| (0..k).filter(|&j| f(by_outer[j].1) > f(by_outer[(j + 1) % k].1)).count();
    let reversed = if descents(&|p| p) == 1 {
        false
    } else if descents(&|p| li - 1 - p) == 1 {
        true
    } else {
        return None;
    };
    let orient = |p: usize| if reversed { li - 1 - p } else { p };
    let inner_at = |p: usize| if reversed { inner[li - 1 - p] } else { inner[p] };

    for s in 0..l {
        let end = s + l;
        let mut picks = [0usize; 13];
        let mut p = s;
        let mut ok = true;
        for (slot, pick) in picks.iter_mut().take(12).enumerate() {
            if slot % 3 != 0 {
                while p < end && rung_at[p % l].is_none() {
                    p += 1;
                }
            }
            if p >= end {
                ok = false;
                break;
            }
            *pick = p;
            p += 1;
        }
        if !ok {
            continue;
        }
        picks[12] = end;
        let mut sets = vec![Vec::new(); 16];
        for slot in 0..12 {
            let (r, c) = PERIMETER[slot];
            sets[4 * r + c] = (picks[slot]..picks[slot + 1]).map(|q| outer[q % l]).collect();
        }
        // Inner positions of the eight rungs r1..r8, in slot order.
        let q: Vec<usize> = [1, 2, 4, 5, 7, 8, 10, 11]
            .iter()
            .map(|&slot| orient(rung_at[picks[slot] % l].expect("rung slot")))
            .collect();
        let arc = |from: usize, to: usize| -> Vec<usize> {
            let len = (to + li - from) % li;
            (0..len).map(|d| inner_at((from + d) % li)).collect()
        };
        sets[5] = arc(q[7], q[1]);
        sets[6] = arc(q[1], q[3]);
        sets[10] = arc(q[3], q[5]);
        sets[9] = arc(q[5], q[7]);
        for set in &mut sets {
            set.sort_unstable();
        }
        return Some(sets);
    }
    None
}

/// Contract both cycles down to rung endpoints and one vertex per gap, then
/// search the small graph exactly.
fn search_fallback(
    t: &crate::graph::Graph,
    c1: &[usize],
    c2: &[usize],
    rungs: &[(usize, usize)],
) -> Result<MinorModel> {
    let rungs = &rungs[..rungs.len().min(12)];
    let mut sets = Vec::new();
    for (cycle, ends) in [
        (c1, rungs.iter().map(|r| r.0).collect::<Vec<_>>()),
        (c2, rungs.iter().map(|r| r.1).collect()),
    ] {
        let l = cycle.len();
        let mut marks: Vec<usize> = ends.iter().map(|&e| cycle.iter().position(|&v| v == e).expect("on cycle")).collect();
        marks.sort_unstable();
        for (j, &p) in marks.iter().enumerate() {
            sets.push(vec![cycle[p]]);
            let next = if j + 1 < marks.len() { marks[j + 1] } else { marks[0] + l };
            if next > p + 1 {
                sets.push((p + 1..next).map(|q| cycle[q % l]).collect());
            }
        }
    }
    let small = quotient(t, &sets);
    let limits = MinorSearchLimits {
        max_h_vertices: 16,
        max_g_vertices: 64,
        ..MinorSearchLimits::default()
    };
    let found = find_minor_model_with(&small, &make_grid(4, 4), limits)?
        .ok_or_else(|| Error::Internal("no 4x4 grid minor in the contracted prism".into()))?;
    Ok(found.compose(&MinorModel::new(sets)))
}
