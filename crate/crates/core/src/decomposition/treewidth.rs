use super::{heuristic, TreeDecomposition};
use crate::error::{check_cap, Error, Result};
use crate::graph::{bits, Graph};
use std::collections::HashMap;

/// Default vertex cap for [`exact_treewidth`].
pub const EXACT_TREEWIDTH_MAX_N: usize = 25;

/// Exact treewidth with a validating decomposition. The empty graph has width `-1`.
///
/// ```
/// use minorlab::{decomposition::exact_treewidth, graph::make_grid};
/// let (width, td) = exact_treewidth(&make_grid(3, 3)).unwrap();
/// assert_eq!(width, 3);
/// assert_eq!(td.width(), 3);
/// ```
pub fn exact_treewidth(g: &Graph) -> Result<(isize, TreeDecomposition)> {
    exact_treewidth_with_cap(g, EXACT_TREEWIDTH_MAX_N)
}

pub fn exact_treewidth_with_cap(g: &Graph, cap: usize) -> Result<(isize, TreeDecomposition)> {
    check_cap("exact treewidth vertex count", g.n(), cap.min(32))?;
    let comps = g.components();
    let mut width = -1;
    let mut parts = Vec::with_capacity(comps.len());
    for comp in &comps {
        let h = g.induced_subgraph(comp);
        let (w, td) = connected_treewidth(&h);
        width = width.max(w);
        parts.push((td, comp.as_slice()));
    }
    let td = TreeDecomposition::join(parts);
    if td.width() != width {
        return Err(Error::Internal(format!("witness width {} != {width}", td.width())));
    }
    Ok((width, td))
}

/// Vertices outside `s ∪ {v}` reachable from `v` through `s`.
#[inline]
fn q_set(adj: &[u32], s: u32, v: usize) -> u32 {
    let mut comp = 1u32 << v;
    let mut frontier = comp;
    let mut nbr = 0u32;
    while frontier != 0 {
        let mut grow = 0u32;
        for x in bits(frontier as u64) {
            grow |= adj[x];
        }
        nbr |= grow;
        frontier = grow & s & !comp;
        comp |= frontier;
    }
    nbr & !s & !(1u32 << v)
}

fn connected_treewidth(g: &Graph) -> (isize, TreeDecomposition) {
    let n = g.n();
    if n <= 1 {
        let bags = if n == 1 { vec![vec![0]] } else { vec![] };
        return (n as isize - 1, TreeDecomposition { bags, tree_edges: vec![] });
    }
    let order = heuristic::min_fill_ordering(g);
    let upper_td = TreeDecomposition::from_elimination_ordering(g, &order);
    let ub = upper_td.width() as u32;
    let lb = heuristic::degeneracy(g).max(heuristic::minor_min_degree(g)) as u32;
    if lb >= ub {
        return (ub as isize, upper_td);
    }
    let adj: Vec<u32> = g.masks().into_iter().map(|m| m as u32).collect();
    let full: u32 = if n == 32 { u32::MAX } else { (1u32 << n) - 1 };
    // layers[k]: subsets of size k eliminated first, with their best width so
    // far (strictly below ub) and the last vertex eliminated.
    let mut layers: Vec<HashMap<u32, (u32, u8)>> = vec![HashMap::from([(0u32, (0u32, u8::MAX))])];
    for _ in 0..n {
        let mut next: HashMap<u32, (u32, u8)> = HashMap::new();
        for (&s, &(val, _)) in layers.last().expect("non-empty") {
            for v in bits((full & !s) as u64) {
                let q = q_set(&adj, s, v).count_ones();
                let nv = val.max(q);
                if nv >= ub {
                    continue;
                }
                let t = s | 1 << v;
                let e = next.entry(t).or_insert((u32::MAX, 0));
                if nv < e.0 {
                    *e = (nv, v as u8);
                }
            }
        }
        if next.is_empty() {
            return (ub as isize, upper_td);
        }
        layers.push(next);
    }
    let (width, _) = layers[n][&full];
    let mut order = Vec::with_capacity(n);
    let mut s = full;
    for k in (1..=n).rev() {
        let (_, v) = layers[k][&s];
        order.push(v as usize);
        s &= !(1u32 << v);
    }
    order.reverse();
    (width as isize, TreeDecomposition::from_elimination_ordering(g, &order))
}
