use crate::error::{check_cap, Error, Result};
use crate::graph::{Graph, VertexSet};
use std::collections::VecDeque;

/// A maximum family of vertex-disjoint `S`–`T` paths with a vertex cut of the
/// same size separating `S` from `T`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DisjointPaths {
    /// Each path starts in `S`, ends in `T`, and has no other vertex in `S ∪ T`.
    pub paths: Vec<Vec<usize>>,
    pub cut: Vec<usize>,
}

/// Residual network for unit vertex capacities: vertex `v` becomes
/// `2v -> 2v+1` with capacity 1; graph edges and terminals are uncapacitated.
struct Flow {
    head: Vec<usize>,
    cap: Vec<i64>,
    out: Vec<Vec<usize>>,
}

impl Flow {
    fn new(nodes: usize) -> Self {
        Flow {
            head: Vec::new(),
            cap: Vec::new(),
            out: vec![Vec::new(); nodes],
        }
    }

    fn arc(&mut self, from: usize, to: usize, cap: i64) {
        self.out[from].push(self.head.len());
        self.head.push(to);
        self.cap.push(cap);
        self.out[to].push(self.head.len());
        self.head.push(from);
        self.cap.push(0);
    }

    /// Predecessor arcs of a BFS over positive residual capacity.
    fn bfs(&self, src: usize) -> Vec<Option<usize>> {
        let mut pred = vec![None; self.out.len()];
        let mut seen = vec![false; self.out.len()];
        seen[src] = true;
        let mut queue = VecDeque::from([src]);
        while let Some(u) = queue.pop_front() {
            for &a in &self.out[u] {
                let w = self.head[a];
                if self.cap[a] > 0 && !seen[w] {
                    seen[w] = true;
                    pred[w] = Some(a);
                    queue.push_back(w);
                }
            }
        }
        pred
    }
}

/// Maximum vertex-disjoint `S`–`T` paths by unit-capacity max flow, with a
/// minimum separating vertex cut (Menger witness). `S` and `T` must be disjoint.
///
/// ```
/// use minorlab::graph::make_grid;
/// use minorlab::minor::max_vertex_disjoint_paths;
/// let r = max_vertex_disjoint_paths(&make_grid(3, 3), &[0, 1, 2], &[6, 7, 8]).unwrap();
/// assert_eq!((r.paths.len(), r.cut.len()), (3, 3));
/// ```
pub fn max_vertex_disjoint_paths(g: &Graph, s: &[usize], t: &[usize]) -> Result<DisjointPaths> {
    let n = g.n();
    for &v in s.iter().chain(t) {
        g.check_vertex(v)?;
    }
    let in_s = VertexSet::from_iter_with_capacity(n, s.iter().copied());
    let in_t = VertexSet::from_iter_with_capacity(n, t.iter().copied());
    if in_s.intersects(&in_t) {
        return Err(Error::Precondition("source and sink sets must be disjoint".into()));
    }
    let inf = n as i64 + 1;
    let (src, sink) = (2 * n, 2 * n + 1);
    let mut f = Flow::new(2 * n + 2);
    for v in 0..n {
        f.arc(2 * v, 2 * v + 1, 1);
    }
    for (u, v) in g.edges() {
        f.arc(2 * u + 1, 2 * v, inf);
        f.arc(2 * v + 1, 2 * u, inf);
    }
    let mut src_arc = vec![usize::MAX; n];
    for v in in_s.iter() {
        src_arc[v] = f.head.len();
        f.arc(src, 2 * v, inf);
    }
    for v in in_t.iter() {
        f.arc(2 * v + 1, sink, inf);
    }
    loop {
        let pred = f.bfs(src);
        if pred[sink].is_none() {
            break;
        }
        let mut node = sink;
        while let Some(a) = pred[node] {
            f.cap[a] -= 1;
            f.cap[a ^ 1] += 1;
            node = f.head[a ^ 1];
        }
    }
    let reach = f.bfs(src);
    let reached = |x: usize| x == src || reach[x].is_some();
    let cut: Vec<usize> = (0..n).filter(|&v| reached(2 * v) && !reached(2 * v + 1)).collect();

    // Every vertex carries at most one unit, so flow paths are traced by
    // following the unique flow-carrying forward arc out of each vertex.
    let flow_next = |v: usize| -> Option<usize> {
        f.out[2 * v + 1]
            .iter()
            .copied()
            .find(|&a| a % 2 == 0 && f.cap[a ^ 1] > 0)
            .map(|a| f.head[a])
    };
    let mut paths = Vec::new();
    for v in in_s.iter() {
        if f.cap[src_arc[v] ^ 1] == 0 {
            continue;
        }
        let mut path = vec![v];
        let mut cur = v;
        while let Some(next) = flow_next(cur) {
            if next == sink {
                break;
            }
            cur = next / 2;
            path.push(cur);
        }
        paths.push(trim(path, &in_s, &in_t));
    }
    if paths.len() != cut.len() {
        return Err(Error::Internal(format!("{} paths but cut of size {}", paths.len(), cut.len())));
    }
    Ok(DisjointPaths { paths, cut })
}

/// Shorten to the segment from the last `S` vertex to the first `T` vertex after it.
fn trim(path: Vec<usize>, s: &VertexSet, t: &VertexSet) -> Vec<usize> {
    let end = path.iter().position(|&v| t.contains(v)).unwrap_or(path.len() - 1);
    let start = path[..=end].iter().rposition(|&v| s.contains(v)).unwrap_or(0);
    path[start..=end].to_vec()
}

/// Largest host graph accepted by [`two_disjoint_paths`].
pub const TWO_PATHS_MAX_N: usize = 30;

/// Vertex-disjoint `s1`–`t1` and `s2`–`t2` paths, or `None` if none exist.
/// Exhaustive over induced `s1`–`t1` paths, each followed by a BFS for the
/// second path in what remains.
pub fn two_disjoint_paths(
    g: &Graph,
    s1: usize,
    t1: usize,
    s2: usize,
    t2: usize,
) -> Result<Option<(Vec<usize>, Vec<usize>)>> {
    check_cap("two disjoint paths vertex count", g.n(), TWO_PATHS_MAX_N)?;
    let ends = [s1, t1, s2, t2];
    for &v in &ends {
        g.check_vertex(v)?;
    }
    if (0..4).any(|i| (i + 1..4).any(|j| ends[i] == ends[j])) {
        return Err(Error::InvalidParameter("terminals must be four distinct vertices".into()));
    }
    let mut on = vec![false; g.n()];
    on[s1] = true;
    let mut path = vec![s1];
    Ok(induced_paths(g, t1, &[s2, t2], &mut path, &mut on))
}

fn induced_paths(
    g: &Graph,
    t1: usize,
    other: &[usize; 2],
    path: &mut Vec<usize>,
    on: &mut Vec<bool>,
) -> Option<(Vec<usize>, Vec<usize>)> {
    let end = *path.last().expect("non-empty");
    if end == t1 {
        return bfs_avoiding(g, other[0], other[1], on).map(|p2| (path.clone(), p2));
    }
    let candidates: Vec<usize> = g.neighbors(end).collect();
    for w in candidates {
        if on[w] || other.contains(&w) {
            continue;
        }
        // Chordless: `w` sees no path vertex but `end`.
        if path[..path.len() - 1].iter().any(|&p| g.has_edge(p, w)) {
            continue;
        }
        on[w] = true;
        path.push(w);
        if let Some(found) = induced_paths(g, t1, other, path, on) {
            return Some(found);
        }
        path.pop();
        on[w] = false;
    }
    None
}

fn bfs_avoiding(g: &Graph, s: usize, t: usize, blocked: &[bool]) -> Option<Vec<usize>> {
    let mut pred = vec![usize::MAX; g.n()];
    pred[s] = s;
    let mut queue = VecDeque::from([s]);
    while let Some(u) = queue.pop_front() {
        if u == t {
            let mut p = vec![t];
            while *p.last().expect("non-empty") != s {
                p.push(pred[*p.last().expect("non-empty")]);
            }
            p.reverse();
            return Some(p);
        }
        for w in g.neighbors(u) {
            if !blocked[w] && pred[w] == usize::MAX {
                pred[w] = u;
                queue.push_back(w);
            }
        }
    }
    None
}
