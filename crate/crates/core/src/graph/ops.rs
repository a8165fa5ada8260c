use super::Graph;
use crate::error::{Error, Result};
use std::collections::{BTreeMap, VecDeque};

/// Per-edge subdivision counts keyed by `(u, v)` with `u < v`.
pub type SubdivisionCounts = BTreeMap<(usize, usize), usize>;

/// Vertex-disjoint union; part `k`'s vertices follow those of parts `0..k`.
pub fn disjoint_union(parts: &[Graph]) -> Graph {
    let n = parts.iter().map(Graph::n).sum();
    let mut g = Graph::new(n);
    let mut offset = 0;
    for p in parts {
        for (u, v) in p.edges() {
            g.add_edge(offset + u, offset + v);
        }
        offset += p.n();
    }
    g
}

/// Uniform counts for every edge of `g`.
pub fn uniform_counts(g: &Graph, count: usize) -> SubdivisionCounts {
    g.edges().map(|e| (e, count)).collect()
}

/// Replace each edge `uv` by a path with `counts[uv]` internal vertices.
///
/// Original vertices keep their indices. New vertices are appended edge by
/// edge in lexicographic edge order, each edge's run ordered from `u` to `v`.
pub fn subdivide(g: &Graph, counts: &SubdivisionCounts) -> Result<Graph> {
    Ok(subdivide_with_paths(g, counts)?.0)
}

/// As [`subdivide`], also returning for every edge `(u, v)` the full path
/// `u, s_1, ..., s_k, v` in the subdivided graph.
pub fn subdivide_with_paths(
    g: &Graph,
    counts: &SubdivisionCounts,
) -> Result<(Graph, BTreeMap<(usize, usize), Vec<usize>>)> {
    for &(u, v) in counts.keys() {
        if u >= v || !g.has_edge(u, v) {
            return Err(Error::InvalidParameter(format!("count given for non-edge ({u},{v})")));
        }
    }
    if let Some((u, v)) = g.edges().find(|e| !counts.contains_key(e)) {
        return Err(Error::InvalidParameter(format!("missing count for edge ({u},{v})")));
    }
    let total: usize = counts.values().sum();
    let mut h = Graph::new(g.n() + total);
    let mut paths = BTreeMap::new();
    let mut next = g.n();
    let mut labels: Vec<String> = match g.labels() {
        Some(l) => l.to_vec(),
        None => (0..g.n()).map(|v| v.to_string()).collect(),
    };
    for (&(u, v), &k) in counts {
        let mut p = vec![u];
        for i in 0..k {
            p.push(next);
            labels.push(format!("s{u}-{v}.{i}"));
            next += 1;
        }
        p.push(v);
        for w in p.windows(2) {
            h.add_edge(w[0], w[1]);
        }
        paths.insert((u, v), p);
    }
    Ok((h.with_labels(labels), paths))
}

/// Length of a shortest cycle, or `None` for a forest.
pub fn girth(g: &Graph) -> Option<usize> {
    let n = g.n();
    let mut best: Option<usize> = None;
    let mut dist = vec![usize::MAX; n];
    let mut parent = vec![usize::MAX; n];
    for s in 0..n {
        dist.fill(usize::MAX);
        parent.fill(usize::MAX);
        dist[s] = 0;
        let mut queue = VecDeque::from([s]);
        while let Some(u) = queue.pop_front() {
            if best.is_some_and(|b| 2 * dist[u] + 1 >= b) {
                break;
            }
            for w in g.neighbors(u) {
                if dist[w] == usize::MAX {
                    dist[w] = dist[u] + 1;
                    parent[w] = u;
                    queue.push_back(w);
                } else if parent[u] != w {
                    let len = dist[u] + dist[w] + 1;
                    best = Some(best.map_or(len, |b| b.min(len)));
                }
            }
        }
    }
    best
}

/// Contract edge `uv`, returning the contracted graph and the map from old
/// vertex indices to new ones (`u` and `v` map to the same vertex).
pub fn contract_edge_map(g: &Graph, u: usize, v: usize) -> Result<(Graph, Vec<usize>)> {
    g.check_vertex(u)?;
    g.check_vertex(v)?;
    if !g.has_edge(u, v) {
        return Err(Error::NotAnEdge { u, v });
    }
    let map: Vec<usize> = g
        .vertices()
        .map(|x| {
            let x = if x == v { u } else { x };
            if x > v {
                x - 1
            } else {
                x
            }
        })
        .collect();
    let mut h = Graph::new(g.n() - 1);
    for (a, b) in g.edges() {
        let (a, b) = (map[a], map[b]);
        if a != b {
            h.add_edge(a, b);
        }
    }
    Ok((h, map))
}

/// Contract edge `uv` into a simple graph on `n - 1` vertices.
pub fn contract_edge(g: &Graph, u: usize, v: usize) -> Result<Graph> {
    Ok(contract_edge_map(g, u, v)?.0)
}
