use super::catalog::{Bound, BoundEntry};
use crate::decomposition::exact_treewidth;
use crate::error::{check_cap, Error, Result};
use crate::graph::io::GraphJson;
use crate::graph::{disjoint_union, enumerate_graphs_up_to, erdos_renyi, random_regular, Graph};
use crate::minor::find_minor_model;
use crate::rng::SplitMix64;
use rand::Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

/// Largest `n_max` accepted by [`verify_tree_composition`].
pub const COMPOSITION_MAX_N: usize = 7;

/// Which graphs a verification run examines.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum VerificationMode {
    /// Every isomorphism class on `1..=n_max` vertices.
    Exhaustive { n_max: usize },
    /// `samples` seeded graphs on `n` vertices: even samples Erdős–Rényi with
    /// edge probability in `[2/n, 4/n]`, odd samples random 3-regular.
    Random { n: usize, samples: usize, seed: u64 },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Verdict {
    Pass,
    Fail,
}

/// Outcome of one run. `observed_max_tw` is `-1` when no examined graph
/// excluded `h`. Graphs whose minor check ran out of budget are counted in
/// `budget_overruns` and otherwise skipped.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerificationReport {
    pub h: GraphJson,
    pub entry: Option<BoundEntry>,
    pub mode: VerificationMode,
    pub seed: Option<u64>,
    pub observed_max_tw: i64,
    pub bound: Option<i64>,
    pub verdict: Option<Verdict>,
    pub witness: Option<GraphJson>,
    pub examined: usize,
    pub minor_free: usize,
    pub budget_overruns: usize,
}

impl VerificationReport {
    pub fn passed(&self) -> bool {
        self.verdict == Some(Verdict::Pass)
    }
}

enum Outcome {
    HasMinor,
    Free(i64),
    Overrun,
}

struct Scan {
    observed: i64,
    witness: Option<Graph>,
    examined: usize,
    free: usize,
    overruns: usize,
}

fn classify(h: &Graph, g: &Graph) -> Result<Outcome> {
    match find_minor_model(g, h) {
        Ok(Some(_)) => Ok(Outcome::HasMinor),
        Ok(None) => Ok(Outcome::Free(exact_treewidth(g)?.0 as i64)),
        Err(Error::BudgetExceeded { .. }) => Ok(Outcome::Overrun),
        Err(e) => Err(e),
    }
}

/// Classify in parallel, then fold in input order so that the witness is the
/// first graph attaining the maximum whatever the thread count.
fn scan(h: &Graph, graphs: &[Graph]) -> Result<Scan> {
    let outcomes: Vec<Outcome> = graphs.par_iter().map(|g| classify(h, g)).collect::<Result<_>>()?;
    let mut s = Scan {
        observed: -1,
        witness: None,
        examined: graphs.len(),
        free: 0,
        overruns: 0,
    };
    for (g, o) in graphs.iter().zip(outcomes) {
        match o {
            Outcome::HasMinor => {}
            Outcome::Overrun => s.overruns += 1,
            Outcome::Free(tw) => {
                s.free += 1;
                if tw > s.observed {
                    s.observed = tw;
                    s.witness = Some(g.clone());
                }
            }
        }
    }
    if let Some(w) = &s.witness {
        if find_minor_model(w, h)?.is_some() {
            return Err(Error::Internal("witness contains the excluded minor".into()));
        }
    }
    Ok(s)
}

fn in_pool<T: Send>(jobs: Option<usize>, f: impl FnOnce() -> T + Send) -> Result<T> {
    match jobs {
        None => Ok(f()),
        Some(j) => {
            let pool = rayon::ThreadPoolBuilder::new()
                .num_threads(j.max(1))
                .build()
                .map_err(|e| Error::Internal(format!("thread pool: {e}")))?;
            Ok(pool.install(f))
        }
    }
}

fn all_graphs(n_max: usize) -> Result<Vec<Graph>> {
    Ok(enumerate_graphs_up_to(n_max)?.into_iter().skip(1).flatten().collect())
}

/// The seeded graphs examined by [`VerificationMode::Random`].
pub fn random_samples(n: usize, samples: usize, seed: u64) -> Result<Vec<Graph>> {
    if n < 4 {
        return Err(Error::InvalidParameter(format!("random mode needs n >= 4, got {n}")));
    }
    let root = SplitMix64::new(seed);
    (0..samples)
        .map(|i| {
            let mut rng = root.split_index(i as u64);
            if i % 2 == 1 && n % 2 == 0 {
                random_regular(n, 3, &mut rng)
            } else {
                let p = (2.0 + 2.0 * rng.random::<f64>()) / n as f64;
                Ok(erdos_renyi(n, p, &mut rng))
            }
        })
        .collect()
}

fn report(h: &Graph, mode: VerificationMode, s: Scan, entry: Option<BoundEntry>, bound: Option<i64>) -> VerificationReport {
    let seed = match mode {
        VerificationMode::Random { seed, .. } => Some(seed),
        VerificationMode::Exhaustive { .. } => None,
    };
    VerificationReport {
        h: GraphJson::from(h),
        entry,
        mode,
        seed,
        observed_max_tw: s.observed,
        bound,
        verdict: bound.map(|b| if s.observed <= b { Verdict::Pass } else { Verdict::Fail }),
        witness: s.witness.as_ref().map(GraphJson::from),
        examined: s.examined,
        minor_free: s.free,
        budget_overruns: s.overruns,
    }
}

/// Largest exact treewidth among graphs on at most `n_max` vertices without
/// an `h` minor. The witness is the first maximum in enumeration order.
///
/// ```
/// use minorlab::bounds::empirical_f;
/// use minorlab::graph::cycle;
/// // Graphs without a triangle minor are forests.
/// assert_eq!(empirical_f(&cycle(3), 5).unwrap().observed_max_tw, 1);
/// ```
pub fn empirical_f(h: &Graph, n_max: usize) -> Result<VerificationReport> {
    let graphs = all_graphs(n_max)?;
    let s = scan(h, &graphs)?;
    Ok(report(h, VerificationMode::Exhaustive { n_max }, s, None, None))
}

/// Check a catalog bound against every examined `h`-minor-free graph.
pub fn verify_bound(h: &Graph, entry: &BoundEntry, mode: VerificationMode) -> Result<VerificationReport> {
    verify_bound_jobs(h, entry, mode, None)
}

/// [`verify_bound`] on a pool of `jobs` threads. The report does not depend
/// on `jobs`.
pub fn verify_bound_jobs(
    h: &Graph,
    entry: &BoundEntry,
    mode: VerificationMode,
    jobs: Option<usize>,
) -> Result<VerificationReport> {
    let bound = match entry.f_upper()? {
        Bound::Numeric(b) => b,
        Bound::Symbolic(text) => return Err(Error::Symbolic(text)),
    };
    if h.n() != entry.h_order() {
        return Err(Error::InvalidParameter(format!(
            "{} entry is for |V(H)| = {}, but h has {} vertices",
            entry.family(),
            entry.h_order(),
            h.n()
        )));
    }
    let graphs = match mode {
        VerificationMode::Exhaustive { n_max } => all_graphs(n_max)?,
        VerificationMode::Random { n, samples, seed } => random_samples(n, samples, seed)?,
    };
    let s = in_pool(jobs, || scan(h, &graphs))??;
    Ok(report(h, mode, s, Some(*entry), Some(bound)))
}

/// Check `tw(G) <= empirical_f(h1) + |V(t)|` for every graph `G` on at most
/// `n_max` vertices with no minor `h1 ⊎ t`.
///
/// ```
/// use minorlab::bounds::verify_tree_composition;
/// use minorlab::graph::{complete, cycle};
/// let r = verify_tree_composition(&cycle(3), &complete(1), 5).unwrap();
/// assert!(r.passed());
/// assert_eq!(r.bound, Some(2));
/// ```
pub fn verify_tree_composition(h1: &Graph, t: &Graph, n_max: usize) -> Result<VerificationReport> {
    verify_tree_composition_jobs(h1, t, n_max, None)
}

/// [`verify_tree_composition`] on a pool of `jobs` threads.
pub fn verify_tree_composition_jobs(
    h1: &Graph,
    t: &Graph,
    n_max: usize,
    jobs: Option<usize>,
) -> Result<VerificationReport> {
    check_cap("tree composition n_max", n_max, COMPOSITION_MAX_N)?;
    if !t.is_forest() {
        return Err(Error::Precondition("t has a cycle".into()));
    }
    let graphs = all_graphs(n_max)?;
    let base = in_pool(jobs, || scan(h1, &graphs))??.observed;
    let h = disjoint_union(&[h1.clone(), t.clone()]);
    let s = in_pool(jobs, || scan(&h, &graphs))??;
    Ok(report(&h, VerificationMode::Exhaustive { n_max }, s, None, Some(base + t.n() as i64)))
}
