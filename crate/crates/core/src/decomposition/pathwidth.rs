use super::{PathDecomposition, TreeDecomposition};
use crate::error::{check_cap, Error, Result};
use crate::graph::{bits, Graph};

/// Default vertex cap for [`exact_pathwidth`] (the table has `2^n` entries).
pub const EXACT_PATHWIDTH_MAX_N: usize = 20;

/// Exact pathwidth as the vertex separation number, with a validating path
/// decomposition.
///
/// ```
/// use minorlab::{decomposition::exact_pathwidth, graph::complete_binary_tree};
/// assert_eq!(exact_pathwidth(&complete_binary_tree(3)).unwrap().0, 2);
/// ```
pub fn exact_pathwidth(g: &Graph) -> Result<(isize, PathDecomposition)> {
    exact_pathwidth_with_cap(g, EXACT_PATHWIDTH_MAX_N)
}

pub fn exact_pathwidth_with_cap(g: &Graph, cap: usize) -> Result<(isize, PathDecomposition)> {
    check_cap("exact pathwidth vertex count", g.n(), cap.min(26))?;
    let mut width = -1;
    let mut bags = Vec::new();
    for comp in g.components() {
        let h = g.induced_subgraph(&comp);
        let (w, order) = vertex_separation(&h);
        width = width.max(w as isize);
        bags.extend(bags_from_layout(&h, &order).into_iter().map(|b| {
            let mut b: Vec<usize> = b.into_iter().map(|v| comp[v]).collect();
            b.sort_unstable();
            b
        }));
    }
    let pd = PathDecomposition { bags };
    if pd.width() != width {
        return Err(Error::Internal(format!("witness width {} != {width}", pd.width())));
    }
    Ok((width, pd))
}

/// `vs[S] = max(|boundary(S)|, min_{v in S} vs[S - v])`, where the boundary
/// is the part of `S` with a neighbour outside `S`. Returns the optimum and a
/// layout attaining it.
fn vertex_separation(g: &Graph) -> (u32, Vec<usize>) {
    let n = g.n();
    if n == 0 {
        return (0, vec![]);
    }
    let adj: Vec<u32> = g.masks().into_iter().map(|m| m as u32).collect();
    let size = 1usize << n;
    let mut vs = vec![u8::MAX; size];
    let mut last = vec![0u8; size];
    vs[0] = 0;
    for s in 1..size {
        let s32 = s as u32;
        let boundary = bits(s as u64).filter(|&v| adj[v] & !s32 != 0).count() as u8;
        let (best, arg) = bits(s as u64)
            .map(|v| (vs[s & !(1 << v)], v))
            .min()
            .expect("non-empty subset");
        vs[s] = best.max(boundary);
        last[s] = arg as u8;
    }
    let mut order = Vec::with_capacity(n);
    let mut s = size - 1;
    while s != 0 {
        let v = last[s] as usize;
        order.push(v);
        s &= !(1 << v);
    }
    order.reverse();
    // The optimum over full layouts is the max over prefixes, which the DP
    // value at the full set already includes (its own boundary is empty).
    (vs[size - 1] as u32, order)
}

/// Bag `i` is `{order[i]}` plus the vertices placed before `i` that still
/// have a neighbour at position `i` or later.
fn bags_from_layout(g: &Graph, order: &[usize]) -> Vec<Vec<usize>> {
    let n = g.n();
    let mut pos = vec![0; n];
    for (i, &v) in order.iter().enumerate() {
        pos[v] = i;
    }
    let last_nbr: Vec<usize> = (0..n)
        .map(|v| g.neighbors(v).map(|w| pos[w]).max().unwrap_or(0))
        .collect();
    (0..n)
        .map(|i| {
            let mut bag: Vec<usize> = order[..i].iter().copied().filter(|&u| last_nbr[u] >= i).collect();
            bag.push(order[i]);
            bag
        })
        .collect()
}

impl From<PathDecomposition> for TreeDecomposition {
    fn from(pd: PathDecomposition) -> Self {
        pd.to_tree_decomposition()
    }
}
