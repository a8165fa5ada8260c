use super::{bramble_violation, hitting::min_hitting_set, Bramble};
use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};
use serde::{Deserialize, Serialize};

/// Split of a bramble-hitting path into two edge-disjoint subpaths.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PathPartition {
    /// Starts at the scan endpoint `x`.
    pub p1: Vec<usize>,
    /// Starts at the last vertex of `p1` and ends at the other endpoint `y`.
    pub p2: Vec<usize>,
    /// Order of the elements meeting `p1`; equals `c1`.
    pub order_b1: usize,
    /// Elements meeting `p1`.
    pub b1_indices: Vec<usize>,
    /// Elements meeting `p1` away from `p2`.
    pub b1_prime_indices: Vec<usize>,
}

/// Grow `p1` from `x` one vertex at a time until the elements it meets have
/// order `c1`; `p2` is the rest of the path, sharing `p1`'s last vertex.
/// `x` is the first listed vertex of `path`, or the last if `reverse`.
///
/// Requires `path` to meet every element and the bramble to have order at
/// least `c1 + c2`; these failures are reported as
/// [`Error::PathNotHitting`] and [`Error::InsufficientOrder`].
///
/// ```
/// use minorlab::bramble::{path_partition, Bramble};
/// use minorlab::graph::complete;
/// let singletons = Bramble::new((0..4).map(|v| vec![v]).collect());
/// let r = path_partition(&complete(4), &[0, 1, 2, 3], &singletons, 2, 2, false).unwrap();
/// assert_eq!((r.p1, r.p2), (vec![0, 1], vec![1, 2, 3]));
/// ```
pub fn path_partition(
    g: &Graph,
    path: &[usize],
    b: &Bramble,
    c1: usize,
    c2: usize,
    reverse: bool,
) -> Result<PathPartition> {
    if c1 == 0 || c2 == 0 {
        return Err(Error::InvalidParameter("c1 and c2 must be positive".into()));
    }
    if !g.is_path(path) {
        return Err(Error::Precondition("input is not a path of the graph".into()));
    }
    if let Some(problem) = bramble_violation(g, b)? {
        return Err(Error::InvalidBramble(problem));
    }
    let on_path = VertexSet::from_iter_with_capacity(g.n(), path.iter().copied());
    if let Some(element) = (0..b.len()).find(|&i| !b.elements[i].iter().any(|&v| on_path.contains(v))) {
        return Err(Error::PathNotHitting { element });
    }
    let order = |idx: &[usize]| -> Result<usize> {
        let elems: Vec<Vec<usize>> = idx.iter().map(|&i| b.elements[i].clone()).collect();
        Ok(min_hitting_set(g.n(), &elems)?.0)
    };
    let total = order(&(0..b.len()).collect::<Vec<_>>())?;
    if total < c1 + c2 {
        return Err(Error::InsufficientOrder {
            needed: c1 + c2,
            actual: total,
        });
    }
    let p: Vec<usize> = if reverse {
        path.iter().rev().copied().collect()
    } else {
        path.to_vec()
    };
    let mut prefix = VertexSet::with_capacity(g.n());
    for k in 0..p.len() {
        prefix.insert(p[k]);
        let b1 = b.meeting(&prefix);
        let o = order(&b1)?;
        if o >= c1 {
            let p1 = p[..=k].to_vec();
            let p2 = p[k..].to_vec();
            let only_p1 = VertexSet::from_iter_with_capacity(g.n(), p[..k].iter().copied());
            return Ok(PathPartition {
                p1,
                p2,
                order_b1: o,
                b1_indices: b1,
                b1_prime_indices: b.meeting(&only_p1),
            });
        }
    }
    Err(Error::Internal("scan ended below c1 despite sufficient order".into()))
}
