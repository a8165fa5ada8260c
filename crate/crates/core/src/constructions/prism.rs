use crate::error::{Error, Result};
use crate::graph::{make_grid, make_prism, Graph};
use crate::minor::{minor_model_violation, MinorModel};

/// Model of the `k`-prism from two disjoint cycles and `k` disjoint rungs
/// `(on_c1, on_c2)` whose endpoints appear in the same cyclic order along
/// both cycles (either orientation). Each cycle is cut into arcs holding
/// one rung endpoint each; the arcs of the `i`-th rung along `c1` become the
/// branch sets of `v_{i+1}` and `w_{i+1}` of [`make_prism`].
pub fn prism_model_from_cycles(c1: &[usize], c2: &[usize], rungs: &[(usize, usize)]) -> Result<MinorModel> {
    let k = rungs.len();
    if k < 3 {
        return Err(Error::InvalidParameter(format!("a prism needs at least 3 rungs, got {k}")));
    }
    let position = |c: &[usize], v: usize| {
        c.iter()
            .position(|&x| x == v)
            .ok_or_else(|| Error::InvalidParameter(format!("rung endpoint {v} is not on its cycle")))
    };
    let mut pos: Vec<(usize, usize)> = rungs
        .iter()
        .map(|&(a, b)| Ok((position(c1, a)?, position(c2, b)?)))
        .collect::<Result<_>>()?;
    pos.sort_unstable();
    let p2: Vec<usize> = pos.iter().map(|p| p.1).collect();
    let cyclic_rank_ok = |seq: &[usize]| {
        let descents = (0..k).filter(|&i| seq[i] > seq[(i + 1) % k]).count();
        descents == 1
    };
    let reversed: Vec<usize> = p2.iter().rev().copied().collect();
    let forward = cyclic_rank_ok(&p2);
    if !forward && !cyclic_rank_ok(&reversed) {
        return Err(Error::InvalidParameter("rungs are not in the same cyclic order on both cycles".into()));
    }
    let arcs = |c: &[usize], starts: &[usize]| -> Vec<Vec<usize>> {
        // Arc i runs from starts[i] up to (not including) the next start in cycle order.
        let mut sorted: Vec<usize> = starts.to_vec();
        sorted.sort_unstable();
        starts
            .iter()
            .map(|&s| {
                let idx = sorted.binary_search(&s).expect("start present");
                let next = sorted[(idx + 1) % k];
                let len = (next + c.len() - s - 1) % c.len() + 1;
                let mut arc: Vec<usize> = (0..len).map(|d| c[(s + d) % c.len()]).collect();
                arc.sort_unstable();
                arc
            })
            .collect()
    };
    let starts1: Vec<usize> = pos.iter().map(|p| p.0).collect();
    let mut sets = arcs(c1, &starts1);
    sets.extend(arcs(c2, &p2));
    Ok(MinorModel::new(sets))
}

/// Model of the `(8r²-4r)`-prism in the `4r × 4r` grid: two nested snaking
/// cycles joined by short vertical and horizontal rungs.
///
/// ```
/// use minorlab::constructions::grid_prism_model;
/// use minorlab::graph::{make_grid, make_prism};
/// use minorlab::minor::validate_minor_model;
/// let m = grid_prism_model(1).unwrap();
/// assert!(validate_minor_model(&make_grid(4, 4), &make_prism(4).unwrap(), &m).unwrap());
/// ```
pub fn grid_prism_model(r: usize) -> Result<MinorModel> {
    if r == 0 {
        return Err(Error::InvalidParameter("r must be at least 1".into()));
    }
    let n = 4 * r;
    let m = n - 4;
    // Point (x, y) is grid row y, column x.
    let at = |x: usize, y: usize| y * n + x;
    let mut red = Vec::new();
    let mut blue = Vec::new();
    for k in 0..r {
        let y = 4 * k;
        red.extend((0..=m).rev().map(|x| at(x, y)));
        red.extend([at(0, y + 1), at(0, y + 2)]);
        red.extend((0..=m).map(|x| at(x, y + 3)));
        blue.extend((1..=m + 1).rev().map(|x| at(x, y + 1)));
        blue.extend((1..=m + 1).map(|x| at(x, y + 2)));
        if k + 1 < r {
            blue.extend([at(m + 1, y + 3), at(m + 1, y + 4)]);
        }
    }
    red.extend([at(m + 1, n - 1), at(m + 2, n - 1), at(m + 3, n - 1)]);
    red.extend((1..n - 1).rev().map(|y| at(m + 3, y)));
    red.extend([at(m + 3, 0), at(m + 2, 0), at(m + 1, 0)]);
    blue.push(at(m + 2, n - 2));
    blue.extend((1..n - 2).rev().map(|y| at(m + 2, y)));

    let mut rungs = Vec::new();
    for k in 0..r {
        let y = 4 * k;
        for x in 1..=m {
            rungs.push((at(x, y), at(x, y + 1)));
            rungs.push((at(x, y + 3), at(x, y + 2)));
        }
    }
    rungs.extend((1..n - 1).map(|y| (at(m + 3, y), at(m + 2, y))));
    rungs.push((at(m + 1, 0), at(m + 1, 1)));
    rungs.push((at(m + 1, n - 1), at(m + 1, n - 2)));

    let model = prism_model_from_cycles(&red, &blue, &rungs)?;
    check(&make_grid(n, n), &make_prism(rungs.len())?, &model)?;
    Ok(model)
}

pub(crate) fn check(g: &Graph, h: &Graph, m: &MinorModel) -> Result<()> {
    match minor_model_violation(g, h, m)? {
        None => Ok(()),
        Some(problem) => Err(Error::Internal(format!("assembled model is invalid: {problem}"))),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::*;

    #[test]
    fn grid_prisms() {
        for r in 1..=4 {
            let m = grid_prism_model(r).unwrap();
            assert_eq!(m.branch_sets.len(), 2 * (8 * r * r - 4 * r));
        }
    }

    #[test]
    fn prism_from_ladder_cycles() {
        // The 5-prism itself with its matching as rungs, listed out of order.
        let g = make_prism(5).unwrap();
        let c1: Vec<usize> = (0..5).collect();
        let c2: Vec<usize> = (5..10).rev().collect();
        let rungs: Vec<(usize, usize)> = [3, 0, 4, 1, 2].iter().map(|&i| (i, i + 5)).collect();
        let m = prism_model_from_cycles(&c1, &c2, &rungs).unwrap();
        assert!(crate::minor::validate_minor_model(&g, &g, &m).unwrap());
        let crossed = [(0, 5), (1, 7), (2, 6), (3, 8)];
        assert!(prism_model_from_cycles(&c1, &c2, &crossed).is_err());
    }
}
