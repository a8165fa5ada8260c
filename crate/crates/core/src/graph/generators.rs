use super::Graph;
use crate::error::{Error, Result};
use crate::rng::SplitMix64;
use rand::seq::SliceRandom;
use rand::Rng;
use serde::{Deserialize, Serialize};

/// Index of grid vertex `(row, col)` in [`make_grid`]`(_, cols)`.
#[inline]
pub fn grid_index(cols: usize, row: usize, col: usize) -> usize {
    row * cols + col
}

/// The `rows × cols` grid. Vertex `(i, j)` has index `i * cols + j` and label `"(i,j)"`.
pub fn make_grid(rows: usize, cols: usize) -> Graph {
    let mut g = Graph::new(rows * cols);
    for i in 0..rows {
        for j in 0..cols {
            let v = grid_index(cols, i, j);
            if j + 1 < cols {
                g.add_edge(v, v + 1);
            }
            if i + 1 < rows {
                g.add_edge(v, v + cols);
            }
        }
    }
    let labels = (0..rows)
        .flat_map(|i| (0..cols).map(move |j| format!("({i},{j})")))
        .collect();
    g.with_labels(labels)
}

/// Two `ell`-cycles `v_1..v_ell`, `w_1..w_ell` joined by the perfect matching
/// `v_i w_{pi(i)}`. The permutation is 1-indexed.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TwistedPrismSpec {
    ell: usize,
    pi: Vec<usize>,
}

impl TwistedPrismSpec {
    pub fn new(ell: usize, pi: Vec<usize>) -> Result<Self> {
        if ell < 3 {
            return Err(Error::InvalidParameter(format!("twisted prism needs ell >= 3, got {ell}")));
        }
        if pi.len() != ell {
            return Err(Error::InvalidParameter(format!(
                "permutation has {} entries, expected {ell}",
                pi.len()
            )));
        }
        let mut seen = vec![false; ell + 1];
        for &p in &pi {
            if p == 0 || p > ell || std::mem::replace(&mut seen[p], true) {
                return Err(Error::InvalidParameter(format!("pi is not a bijection on 1..={ell}")));
            }
        }
        Ok(TwistedPrismSpec { ell, pi })
    }

    pub fn identity(ell: usize) -> Result<Self> {
        Self::new(ell, (1..=ell).collect())
    }

    pub fn random(ell: usize, rng: &mut SplitMix64) -> Result<Self> {
        let mut pi: Vec<usize> = (1..=ell).collect();
        pi.shuffle(rng);
        Self::new(ell, pi)
    }

    pub fn ell(&self) -> usize {
        self.ell
    }

    /// `pi(i)` for `1 <= i <= ell`.
    pub fn pi(&self, i: usize) -> usize {
        self.pi[i - 1]
    }

    pub fn permutation(&self) -> &[usize] {
        &self.pi
    }

    /// Vertex index of `v_i` (1-indexed) in [`make_twisted_prism`].
    pub fn v(&self, i: usize) -> usize {
        i - 1
    }

    /// Vertex index of `w_j` (1-indexed) in [`make_twisted_prism`].
    pub fn w(&self, j: usize) -> usize {
        self.ell + j - 1
    }
}

pub fn make_twisted_prism(spec: &TwistedPrismSpec) -> Graph {
    let ell = spec.ell();
    let mut g = Graph::new(2 * ell);
    for i in 1..=ell {
        let next = i % ell + 1;
        g.add_edge(spec.v(i), spec.v(next));
        g.add_edge(spec.w(i), spec.w(next));
        g.add_edge(spec.v(i), spec.w(spec.pi(i)));
    }
    let labels = (1..=ell)
        .map(|i| format!("v{i}"))
        .chain((1..=ell).map(|j| format!("w{j}")))
        .collect();
    g.with_labels(labels)
}

/// The `ell`-prism, `K_2 × C_ell`.
pub fn make_prism(ell: usize) -> Result<Graph> {
    Ok(make_twisted_prism(&TwistedPrismSpec::identity(ell)?))
}

/// The wheel on `k` vertices: a `(k-1)`-cycle on `0..k-1` plus hub `k-1`.
pub fn make_wheel(k: usize) -> Result<Graph> {
    if k < 4 {
        return Err(Error::InvalidParameter(format!("wheel needs k >= 4, got {k}")));
    }
    let mut g = cycle_on(k, k - 1);
    for v in 0..k - 1 {
        g.add_edge(v, k - 1);
    }
    Ok(g)
}

fn cycle_on(n: usize, len: usize) -> Graph {
    let mut g = Graph::new(n);
    if len >= 3 {
        for v in 0..len {
            g.add_edge(v, (v + 1) % len);
        }
    } else if len == 2 {
        g.add_edge(0, 1);
    }
    g
}

/// `C_n`; for `n < 3` the path on `n` vertices.
pub fn cycle(n: usize) -> Graph {
    cycle_on(n, n)
}

/// The path on `n` vertices.
pub fn path(n: usize) -> Graph {
    let mut g = Graph::new(n);
    for v in 1..n {
        g.add_edge(v - 1, v);
    }
    g
}

pub fn complete(n: usize) -> Graph {
    let mut g = Graph::new(n);
    for u in 0..n {
        for v in u + 1..n {
            g.add_edge(u, v);
        }
    }
    g
}

/// `K_{a,b}` with sides `0..a` and `a..a+b`.
pub fn complete_bipartite(a: usize, b: usize) -> Graph {
    let mut g = Graph::new(a + b);
    for u in 0..a {
        for v in a..a + b {
            g.add_edge(u, v);
        }
    }
    g
}

pub fn star(leaves: usize) -> Graph {
    complete_bipartite(1, leaves)
}

pub fn petersen() -> Graph {
    let mut g = Graph::new(10);
    for i in 0..5 {
        g.add_edge(i, (i + 1) % 5);
        g.add_edge(5 + i, 5 + (i + 2) % 5);
        g.add_edge(i, 5 + i);
    }
    g
}

/// Complete binary tree of the given height (height 0 is a single vertex).
pub fn complete_binary_tree(height: u32) -> Graph {
    let n = (1usize << (height + 1)) - 1;
    let mut g = Graph::new(n);
    for v in 1..n {
        g.add_edge(v, (v - 1) / 2);
    }
    g
}

/// Erdős–Rényi `G(n, p)`.
pub fn erdos_renyi(n: usize, p: f64, rng: &mut SplitMix64) -> Graph {
    let mut g = Graph::new(n);
    for u in 0..n {
        for v in u + 1..n {
            if rng.random_bool(p.clamp(0.0, 1.0)) {
                g.add_edge(u, v);
            }
        }
    }
    g
}

/// Uniform-ish random `d`-regular simple graph by the pairing model with restarts.
pub fn random_regular(n: usize, d: usize, rng: &mut SplitMix64) -> Result<Graph> {
    if d >= n || (n * d) % 2 == 1 {
        return Err(Error::InvalidParameter(format!("no {d}-regular graph on {n} vertices")));
    }
    'attempt: for _ in 0..10_000 {
        let mut points: Vec<usize> = (0..n).flat_map(|v| std::iter::repeat(v).take(d)).collect();
        points.shuffle(rng);
        let mut g = Graph::new(n);
        for pair in points.chunks(2) {
            let (u, v) = (pair[0], pair[1]);
            if u == v || g.has_edge(u, v) {
                continue 'attempt;
            }
            g.add_edge(u, v);
        }
        return Ok(g);
    }
    Err(Error::Internal("random_regular: pairing model failed repeatedly".into()))
}

/// Uniform random labelled tree on `n` vertices (via a random Prüfer-like attachment).
pub fn random_tree(n: usize, rng: &mut SplitMix64) -> Graph {
    let mut g = Graph::new(n);
    let mut order: Vec<usize> = (0..n).collect();
    order.shuffle(rng);
    for i in 1..n {
        let parent = order[rng.random_range(0..i)];
        g.add_edge(order[i], parent);
    }
    g
}
