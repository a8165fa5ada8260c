use super::{minor_model_violation, MinorModel};
use crate::error::{check_cap, Error, Result};
use crate::graph::{bits, Graph};

/// Caps for [`find_minor_model_with`]. Exceeding any of them is an error,
/// never a "no minor" answer.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct MinorSearchLimits {
    pub max_h_vertices: usize,
    /// At most 64 (host vertex sets are single words).
    pub max_g_vertices: usize,
    /// Candidate branch sets examined before giving up.
    pub node_budget: u64,
}

impl Default for MinorSearchLimits {
    fn default() -> Self {
        MinorSearchLimits {
            max_h_vertices: 10,
            max_g_vertices: 40,
            node_budget: 200_000_000,
        }
    }
}

/// Exact `H`-minor search with default limits. `Ok(None)` means `g` has no
/// `h` minor.
///
/// ```
/// use minorlab::graph::{complete, cycle, path};
/// use minorlab::minor::find_minor_model;
/// assert!(find_minor_model(&complete(5), &cycle(4)).unwrap().is_some());
/// assert!(find_minor_model(&path(6), &cycle(3)).unwrap().is_none());
/// ```
pub fn find_minor_model(g: &Graph, h: &Graph) -> Result<Option<MinorModel>> {
    find_minor_model_with(g, h, MinorSearchLimits::default())
}

pub fn find_minor_model_with(g: &Graph, h: &Graph, limits: MinorSearchLimits) -> Result<Option<MinorModel>> {
    check_cap("minor search pattern vertex count", h.n(), limits.max_h_vertices)?;
    check_cap("minor search host vertex count", g.n(), limits.max_g_vertices.min(64))?;
    if h.n() > g.n() || h.m() > g.m() {
        return Ok(None);
    }
    let reduced = Reduced::new(g, h.min_degree().unwrap_or(0));
    if h.n() > reduced.g.n() || h.m() > reduced.g.m() {
        return Ok(None);
    }
    let mut search = Search::new(&reduced.g, h, limits.node_budget);
    if !search.place(0)? {
        return Ok(None);
    }
    let model = MinorModel::new(
        search
            .sets
            .iter()
            .map(|&s| {
                let mut set: Vec<usize> = bits(s).flat_map(|v| reduced.groups[v].iter().copied()).collect();
                set.sort_unstable();
                set
            })
            .collect(),
    );
    if let Some(problem) = minor_model_violation(g, h, &model)? {
        return Err(Error::Internal(format!("minor search produced an invalid model: {problem}")));
    }
    Ok(Some(model))
}

/// Host graph after removing vertices no model needs. With `H` of minimum
/// degree at least 2, vertices of degree at most 1 never help; with minimum
/// degree at least 3, a degree-2 vertex can be merged into a neighbour.
/// `groups[v]` lists the original vertices behind reduced vertex `v`.
struct Reduced {
    g: Graph,
    groups: Vec<Vec<usize>>,
}

impl Reduced {
    fn new(g: &Graph, h_min_degree: usize) -> Self {
        let n = g.n();
        let mut adj: Vec<u64> = g.masks();
        let mut alive: u64 = if n == 64 { u64::MAX } else { (1u64 << n) - 1 };
        let mut groups: Vec<Vec<usize>> = (0..n).map(|v| vec![v]).collect();
        loop {
            let mut changed = false;
            for v in 0..n {
                if alive >> v & 1 == 0 {
                    continue;
                }
                let d = adj[v].count_ones();
                if h_min_degree >= 2 && d <= 1 {
                    for w in bits(adj[v]) {
                        adj[w] &= !(1 << v);
                    }
                    adj[v] = 0;
                    alive &= !(1 << v);
                    changed = true;
                } else if h_min_degree >= 3 && d == 2 {
                    let a = adj[v].trailing_zeros() as usize;
                    let b = 63 - adj[v].leading_zeros() as usize;
                    adj[a] &= !(1 << v);
                    adj[b] &= !(1 << v);
                    adj[a] |= 1 << b;
                    adj[b] |= 1 << a;
                    adj[v] = 0;
                    alive &= !(1 << v);
                    let moved = std::mem::take(&mut groups[v]);
                    groups[a].extend(moved);
                    changed = true;
                }
            }
            if !changed {
                break;
            }
        }
        let keep: Vec<usize> = bits(alive).collect();
        let mut index = vec![usize::MAX; n];
        for (i, &v) in keep.iter().enumerate() {
            index[v] = i;
        }
        let mut rg = Graph::new(keep.len());
        for (i, &v) in keep.iter().enumerate() {
            for w in bits(adj[v]) {
                if index[w] > i {
                    rg.add_edge(i, index[w]);
                }
            }
        }
        let groups = keep.iter().map(|&v| std::mem::take(&mut groups[v])).collect();
        Reduced { g: rg, groups }
    }
}

struct Search<'a> {
    h: &'a Graph,
    adj: Vec<u64>,
    /// H-vertices in placement order.
    order: Vec<usize>,
    /// For each position, the H-neighbours placed earlier.
    earlier: Vec<Vec<usize>>,
    sets: Vec<u64>,
    /// Open neighbourhood of each placed set.
    boundary: Vec<u64>,
    unused: u64,
    nodes: u64,
    budget: u64,
}

impl<'a> Search<'a> {
    fn new(g: &Graph, h: &'a Graph, budget: u64) -> Self {
        let k = h.n();
        let mut order: Vec<usize> = Vec::with_capacity(k);
        let mut placed = vec![false; k];
        for _ in 0..k {
            let next = (0..k)
                .filter(|&x| !placed[x])
                .max_by_key(|&x| {
                    let back = h.neighbors(x).filter(|&y| placed[y]).count();
                    (h.degree(x) > 0, back, h.degree(x), std::cmp::Reverse(x))
                })
                .expect("unplaced vertex remains");
            placed[next] = true;
            order.push(next);
        }
        let mut pos = vec![0; k];
        for (i, &x) in order.iter().enumerate() {
            pos[x] = i;
        }
        let earlier = order
            .iter()
            .enumerate()
            .map(|(i, &x)| h.neighbors(x).filter(|&y| pos[y] < i).collect())
            .collect();
        let n = g.n();
        Search {
            h,
            adj: g.masks(),
            order,
            earlier,
            sets: vec![0; k],
            boundary: vec![0; k],
            unused: if n == 64 { u64::MAX } else { (1u64 << n) - 1 },
            nodes: 0,
            budget,
        }
    }

    fn neighbourhood(&self, s: u64) -> u64 {
        bits(s).fold(0, |acc, v| acc | self.adj[v]) & !s
    }

    fn place(&mut self, idx: usize) -> Result<bool> {
        if idx == self.order.len() {
            return Ok(true);
        }
        let x = self.order[idx];
        let remaining_after = (self.order.len() - idx - 1) as u32;
        let max_size = self.unused.count_ones().saturating_sub(remaining_after);
        if max_size == 0 {
            return Ok(false);
        }
        let roots = match self.earlier[idx].iter().min_by_key(|&&y| (self.boundary[y] & self.unused).count_ones()) {
            Some(&y) => self.boundary[y] & self.unused,
            None => self.unused,
        };
        let mut excluded = 0u64;
        for r in bits(roots) {
            let start = 1u64 << r;
            let cand = self.adj[r] & self.unused & !excluded & !start;
            if self.grow(idx, x, max_size, start, cand, excluded | start)? {
                return Ok(true);
            }
            excluded |= start;
        }
        Ok(false)
    }

    /// Enumerates each connected set containing `s`, avoiding `excl`, exactly once.
    fn grow(&mut self, idx: usize, x: usize, max_size: u32, s: u64, mut cand: u64, mut excl: u64) -> Result<bool> {
        self.nodes += 1;
        if self.nodes > self.budget {
            return Err(Error::BudgetExceeded {
                what: "minor search",
                budget: self.budget,
            });
        }
        if self.earlier[idx].iter().all(|&y| self.boundary[y] & s != 0) && self.commit(idx, x, s)? {
            return Ok(true);
        }
        if s.count_ones() >= max_size {
            return Ok(false);
        }
        while cand != 0 {
            let v = cand.trailing_zeros() as usize;
            cand &= cand - 1;
            let ns = s | 1 << v;
            let ncand = cand | (self.adj[v] & self.unused & !ns & !excl);
            if self.grow(idx, x, max_size, ns, ncand, excl)? {
                return Ok(true);
            }
            excl |= 1 << v;
        }
        Ok(false)
    }

    fn commit(&mut self, idx: usize, x: usize, s: u64) -> Result<bool> {
        self.sets[x] = s;
        self.boundary[x] = self.neighbourhood(s);
        self.unused &= !s;
        let ok = self.feasible(idx) && self.place(idx + 1)?;
        if !ok {
            self.unused |= s;
            self.sets[x] = 0;
            self.boundary[x] = 0;
        }
        Ok(ok)
    }

    /// Necessary conditions for completing the first `idx + 1` placements.
    fn feasible(&self, idx: usize) -> bool {
        let unplaced = &self.order[idx + 1..];
        if (unplaced.len() as u32) > self.unused.count_ones() {
            return false;
        }
        let is_unplaced = |y: usize| unplaced.contains(&y);
        // Each placed vertex needs a distinct free neighbour per unplaced H-neighbour.
        for &p in &self.order[..=idx] {
            let need = self.h.neighbors(p).filter(|&y| is_unplaced(y)).count() as u32;
            if need > (self.boundary[p] & self.unused).count_ones() {
                return false;
            }
        }
        // Each unplaced vertex's set lies in one free component touching all
        // its placed neighbours.
        let comps = self.free_components();
        for &z in unplaced {
            let placed_nbrs: Vec<usize> = self.h.neighbors(z).filter(|&y| !is_unplaced(y)).collect();
            if placed_nbrs.is_empty() {
                continue;
            }
            let fits = comps
                .iter()
                .any(|&c| placed_nbrs.iter().all(|&y| self.boundary[y] & c != 0));
            if !fits {
                return false;
            }
        }
        true
    }

    fn free_components(&self) -> Vec<u64> {
        let mut left = self.unused;
        let mut comps = Vec::new();
        while left != 0 {
            let mut comp = left & left.wrapping_neg();
            let mut frontier = comp;
            while frontier != 0 {
                let grow = bits(frontier).fold(0, |acc, v| acc | self.adj[v]) & self.unused & !comp;
                comp |= grow;
                frontier = grow;
            }
            left &= !comp;
            comps.push(comp);
        }
        comps
    }
}
