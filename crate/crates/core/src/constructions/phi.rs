//! Scaled grid embeddings of subdivisions.
//!
//! Every vertex of a `g × g` grid is sent to the corner of a `B × B` block of
//! a larger grid, and every grid edge to a path inside the block of its left
//! or upper endpoint, long enough to absorb the subdivision vertices.

use super::prism::check;
use crate::error::{Error, Result};
use crate::graph::{make_grid, subdivide_with_paths, Graph, SubdivisionCounts};
use crate::minor::{minor_model_violation, MinorModel};

/// Cell routing inside one block. Offsets are `(dx, dy)` from the block
/// corner, `x` the column and `y` the row.
#[derive(Debug, Clone, PartialEq, Eq)]
struct BlockLayout {
    side: usize,
    /// Internal vertices of the path to the block below, in order.
    down: Vec<(usize, usize)>,
    /// Internal vertices of the path to the block on the right, in order.
    right: Vec<(usize, usize)>,
}

impl BlockLayout {
    /// `r = 0` is the identity scaling. For `r >= 2`, both paths have
    /// `2r² + 2r` internal vertices. For `r = 1` the rightward path has only
    /// the two row cells.
    fn square(r: usize) -> Self {
        let side = 2 * r + 1;
        if r == 0 {
            return BlockLayout {
                side,
                down: vec![],
                right: vec![],
            };
        }
        // Down: snake rows 1..=2r over columns 0..=r, ending in column 0.
        let mut down = Vec::new();
        for (k, y) in (1..=2 * r).enumerate() {
            if k % 2 == 0 {
                down.extend((0..=r).map(|x| (x, y)));
            } else {
                down.extend((0..=r).rev().map(|x| (x, y)));
            }
        }
        // Right: along row 0 to column r, down column r+1, snake the remaining
        // columns upwards, finish along row 0.
        let mut right: Vec<(usize, usize)> = (1..=r).map(|x| (x, 0)).collect();
        if r == 1 {
            right.push((2, 0));
        } else {
            right.extend((0..=2 * r).map(|y| (r + 1, y)));
            for (k, y) in (1..=2 * r).rev().enumerate() {
                if k % 2 == 0 {
                    right.extend((r + 2..=2 * r).map(|x| (x, y)));
                } else {
                    right.extend((r + 2..=2 * r).rev().map(|x| (x, y)));
                }
            }
            right.extend((r + 2..=2 * r).map(|x| (x, 0)));
        }
        BlockLayout { side, down, right }
    }

    /// A 4 × 4 block with five internal vertices on each path.
    fn four() -> Self {
        BlockLayout {
            side: 4,
            down: vec![(0, 1), (1, 1), (1, 2), (0, 2), (0, 3)],
            right: vec![(1, 0), (2, 0), (2, 1), (3, 1), (3, 0)],
        }
    }

    fn capacity(&self) -> usize {
        self.down.len().min(self.right.len())
    }

    /// A block that fits in a `scale × scale` cell and routes paths with at
    /// least `ell - 1` internal vertices.
    fn for_ell(ell: usize) -> Self {
        // Smallest r with (2r+1)^2 >= 2 ell - 1.
        let mut r = 0;
        while (2 * r + 1) * (2 * r + 1) < 2 * ell - 1 {
            r += 1;
        }
        let layout = BlockLayout::square(r);
        if layout.capacity() + 1 >= ell {
            layout
        } else if ell == 4 {
            BlockLayout::four()
        } else {
            BlockLayout::square(r + 1)
        }
    }
}

/// `⌈2√ell⌉`, computed exactly.
pub fn grid_scale(ell: usize) -> usize {
    let mut s = 0;
    while s * s < 4 * ell {
        s += 1;
    }
    s
}

/// Given a model of `h` in the `g × g` grid and per-edge subdivision counts
/// all below `ell`, a model of `subdivide(h, counts)` in the
/// `⌈2√ell⌉g × ⌈2√ell⌉g` grid.
///
/// ```
/// use minorlab::constructions::{grid_scale, subdivision_grid_model};
/// use minorlab::graph::{make_grid, subdivide, uniform_counts};
/// use minorlab::minor::{validate_minor_model, MinorModel};
/// // C4 is the 2x2 grid itself; subdivide each edge 4 times.
/// let c4 = make_grid(2, 2);
/// let id = MinorModel::new((0..4).map(|v| vec![v]).collect());
/// let counts = uniform_counts(&c4, 4);
/// let m = subdivision_grid_model(&c4, 2, &id, &counts, 5).unwrap();
/// let side = grid_scale(5) * 2;
/// assert_eq!(side, 10);
/// let target = subdivide(&c4, &counts).unwrap();
/// assert!(validate_minor_model(&make_grid(side, side), &target, &m).unwrap());
/// ```
pub fn subdivision_grid_model(
    h: &Graph,
    g: usize,
    model_in_grid: &MinorModel,
    counts: &SubdivisionCounts,
    ell: usize,
) -> Result<MinorModel> {
    if ell == 0 || g == 0 {
        return Err(Error::InvalidParameter("ell and g must be positive".into()));
    }
    if let Some((&(u, v), &c)) = counts.iter().find(|(_, &c)| c >= ell) {
        return Err(Error::InvalidParameter(format!(
            "edge ({u},{v}) is subdivided {c} times, not fewer than {ell}"
        )));
    }
    let small = make_grid(g, g);
    if let Some(problem) = minor_model_violation(&small, h, model_in_grid)? {
        return Err(Error::InvalidParameter(format!("input model is invalid: {problem}")));
    }
    let (target, paths) = subdivide_with_paths(h, counts)?;
    let layout = BlockLayout::for_ell(ell);
    let scale = grid_scale(ell);
    if layout.side > scale {
        return Err(Error::Internal(format!("block of side {} exceeds scale {scale}", layout.side)));
    }
    let side = scale * g;
    let big = |x: usize, y: usize| y * side + x;
    let corner = |p: usize| {
        let (row, col) = (p / g, p % g);
        big(col * layout.side, row * layout.side)
    };
    // Internal vertices of the image of grid edge p-q, ordered from p.
    let route = |p: usize, q: usize| -> Vec<usize> {
        let (a, b) = (p.min(q), p.max(q));
        let (row, col) = (a / g, a % g);
        let (bx, by) = (col * layout.side, row * layout.side);
        let cells = if b == a + 1 { &layout.right } else { &layout.down };
        let mut out: Vec<usize> = cells.iter().map(|&(dx, dy)| big(bx + dx, by + dy)).collect();
        if p > q {
            out.reverse();
        }
        out
    };

    let mut owner = vec![usize::MAX; small.n()];
    for (x, set) in model_in_grid.branch_sets.iter().enumerate() {
        for &p in set {
            owner[p] = x;
        }
    }
    let mut sets: Vec<Vec<usize>> = vec![Vec::new(); target.n()];
    for (x, set) in model_in_grid.branch_sets.iter().enumerate() {
        for &p in set {
            sets[x].push(corner(p));
            for q in small.neighbors(p) {
                if q > p && owner[q] == x {
                    sets[x].extend(route(p, q));
                }
            }
        }
    }
    for (&(u, v), path) in &paths {
        let (p, q) = small
            .edges()
            .find_map(|(p, q)| match (owner[p], owner[q]) {
                (a, b) if a == u && b == v => Some((p, q)),
                (a, b) if a == v && b == u => Some((q, p)),
                _ => None,
            })
            .ok_or_else(|| Error::Internal(format!("no grid edge realizes ({u},{v})")))?;
        let internal = route(p, q);
        let subdiv = &path[1..path.len() - 1];
        let keep = internal.len().checked_sub(subdiv.len()).ok_or_else(|| {
            Error::Internal(format!("routed path of {} cells is too short", internal.len()))
        })?;
        sets[u].extend_from_slice(&internal[..keep]);
        for (&s, &cell) in subdiv.iter().zip(&internal[keep..]) {
            sets[s].push(cell);
        }
    }
    for s in &mut sets {
        s.sort_unstable();
    }
    let model = MinorModel::new(sets);
    check(&make_grid(side, side), &target, &model)?;
    Ok(model)
}
