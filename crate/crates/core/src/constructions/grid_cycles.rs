use crate::error::{Error, Result};

/// A cycle in the `a × b` grid (indices as in [`make_grid`](crate::graph::make_grid)):
/// Hamiltonian when `a·b` is even; when both sides are odd and
/// `allow_corner_skip` is set, through every vertex except the corner `(a-1, b-1)`.
///
/// ```
/// use minorlab::constructions::grid_hamiltonian_cycle;
/// use minorlab::graph::make_grid;
/// let c = grid_hamiltonian_cycle(3, 3, true).unwrap();
/// assert_eq!(c.len(), 8);
/// assert!(make_grid(3, 3).is_cycle(&c));
/// ```
pub fn grid_hamiltonian_cycle(a: usize, b: usize, allow_corner_skip: bool) -> Result<Vec<usize>> {
    if a < 2 || b < 2 {
        return Err(Error::InvalidParameter(format!("grid sides must be >= 2, got {a}x{b}")));
    }
    let cells = if a % 2 == 0 {
        even_rows(a, b)
    } else if b % 2 == 0 {
        even_rows(b, a).into_iter().map(|(i, j)| (j, i)).collect()
    } else if allow_corner_skip {
        odd_odd(a, b)
    } else {
        return Err(Error::Precondition(format!(
            "the {a}x{b} grid has an odd number of vertices and no Hamiltonian cycle"
        )));
    };
    Ok(cells.into_iter().map(|(i, j)| i * b + j).collect())
}

/// Row 0 left to right, rows `1..a` snaking over columns `1..b`, back up column 0.
fn even_rows(a: usize, b: usize) -> Vec<(usize, usize)> {
    let mut c: Vec<(usize, usize)> = (0..b).map(|j| (0, j)).collect();
    for i in 1..a {
        if i % 2 == 1 {
            c.extend((1..b).rev().map(|j| (i, j)));
        } else {
            c.extend((1..b).map(|j| (i, j)));
        }
    }
    c.extend((1..a).rev().map(|i| (i, 0)));
    c
}

/// Both sides odd: snake down to row `a-3`, zigzag the last two rows leftwards
/// skipping the bottom-right corner, back up column 0.
fn odd_odd(a: usize, b: usize) -> Vec<(usize, usize)> {
    let mut c: Vec<(usize, usize)> = (0..b).map(|j| (0, j)).collect();
    for i in 1..a - 2 {
        if i % 2 == 1 {
            c.extend((1..b).rev().map(|j| (i, j)));
        } else {
            c.extend((1..b).map(|j| (i, j)));
        }
    }
    c.push((a - 2, b - 1));
    for j in (1..b - 1).rev() {
        if (b - 2 - j) % 2 == 0 {
            c.extend([(a - 2, j), (a - 1, j)]);
        } else {
            c.extend([(a - 1, j), (a - 2, j)]);
        }
    }
    c.extend((1..a).rev().map(|i| (i, 0)));
    c
}

/// Two vertex-disjoint cycles in the `g × g` grid, of lengths greater than
/// `l1` and `l2`, in disjoint bands of `⌈l1/g⌉+1` and `⌈l2/g⌉+1` rows.
///
/// ```
/// use minorlab::constructions::grid_band_cycles;
/// let (c1, c2) = grid_band_cycles(6, 11, 5).unwrap();
/// assert!(c1.len() > 11 && c2.len() > 5);
/// ```
pub fn grid_band_cycles(g: usize, l1: usize, l2: usize) -> Result<(Vec<usize>, Vec<usize>)> {
    if l1 == 0 || l2 == 0 || g < 2 {
        return Err(Error::InvalidParameter("need g >= 2 and positive lengths".into()));
    }
    let h1 = l1.div_ceil(g) + 1;
    let h2 = l2.div_ceil(g) + 1;
    if g < h1 + h2 {
        return Err(Error::Precondition(format!(
            "a {g}x{g} grid has no room for bands of {h1} and {h2} rows"
        )));
    }
    let c1 = grid_hamiltonian_cycle(h1, g, true)?;
    let c2 = grid_hamiltonian_cycle(h2, g, true)?
        .into_iter()
        .map(|v| v + h1 * g)
        .collect();
    Ok((c1, c2))
}
