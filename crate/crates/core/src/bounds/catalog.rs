use crate::error::{Error, Result};
use serde::{Deserialize, Serialize};
use std::fmt;

/// A known upper bound on the treewidth of graphs excluding a fixed minor
/// `H`, for one family of `H`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "family", rename_all = "snake_case")]
pub enum BoundEntry {
    /// A forest on `n` vertices.
    Forest { n: usize },
    /// The cycle on `n` vertices.
    Cycle { n: usize },
    /// `K_{2,t}`, `t >= 2`.
    #[serde(rename = "complete_bipartite_2t")]
    CompleteBipartite2t { t: usize },
    /// The wheel on `k` vertices, earlier linear bound.
    #[serde(rename = "wheel_RT")]
    WheelRt { k: usize },
    /// The wheel on `k` vertices, bound via grid minors of subdivisions.
    WheelOurs { k: usize },
    /// A forest plus one apex vertex, `n` vertices in total.
    ApexForest { n: usize },
    /// Twisted `ell`-prism.
    TwistedPrism { ell: usize },
    /// Graphs with neither the `ell`-prism nor the 4 × 4 grid as a minor.
    PrismOrGrid { ell: usize },
    /// The 4 × 4 grid.
    #[serde(rename = "grid_4x4")]
    Grid4x4,
    /// Two disjoint cycles, `n` vertices in total.
    #[serde(rename = "disjoint_cycles_r2")]
    DisjointCyclesR2 { n: usize },
    /// `r >= 3` disjoint cycles, `n` vertices in total.
    DisjointCyclesGeneral { n: usize, r: usize },
    /// A graph on `n` vertices obtained from one with at most `r` edges per
    /// component by subdivision.
    SubdivisionREdges { n: usize, r: usize },
}

/// A numeric treewidth bound, or the text of a formula with unpinned constants.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum Bound {
    Numeric(i64),
    Symbolic(String),
}

impl Bound {
    pub fn numeric(&self) -> Option<i64> {
        match self {
            Bound::Numeric(b) => Some(*b),
            Bound::Symbolic(_) => None,
        }
    }
}

impl fmt::Display for Bound {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Bound::Numeric(b) => write!(f, "{b}"),
            Bound::Symbolic(s) => write!(f, "symbolic: {s}"),
        }
    }
}

/// `⌈√x⌉`, exactly.
fn ceil_sqrt(x: u64) -> u64 {
    let mut s = (x as f64).sqrt() as u64;
    while s * s < x {
        s += 1;
    }
    while s > 0 && (s - 1) * (s - 1) >= x {
        s -= 1;
    }
    s
}

/// Smallest `m` with `(4m - 1)² >= x`, i.e. `⌈(1 + √x) / 4⌉`.
fn quarter_ceiling(x: u64) -> u64 {
    let mut m = 1;
    while (4 * m - 1) * (4 * m - 1) < x {
        m += 1;
    }
    m
}

/// Largest integer strictly below `num / 2`.
fn strictly_below_half(num: i64) -> i64 {
    (num - 1).div_euclid(2)
}

impl BoundEntry {
    /// `|V(H)|`.
    pub fn h_order(&self) -> usize {
        match *self {
            BoundEntry::Forest { n }
            | BoundEntry::Cycle { n }
            | BoundEntry::ApexForest { n }
            | BoundEntry::DisjointCyclesR2 { n }
            | BoundEntry::DisjointCyclesGeneral { n, .. }
            | BoundEntry::SubdivisionREdges { n, .. } => n,
            BoundEntry::CompleteBipartite2t { t } => t + 2,
            BoundEntry::WheelRt { k } | BoundEntry::WheelOurs { k } => k,
            BoundEntry::TwistedPrism { ell } | BoundEntry::PrismOrGrid { ell } => 2 * ell,
            BoundEntry::Grid4x4 => 16,
        }
    }

    /// Family name as used in serialized records.
    pub fn family(&self) -> &'static str {
        match self {
            BoundEntry::Forest { .. } => "forest",
            BoundEntry::Cycle { .. } => "cycle",
            BoundEntry::CompleteBipartite2t { .. } => "complete_bipartite_2t",
            BoundEntry::WheelRt { .. } => "wheel_RT",
            BoundEntry::WheelOurs { .. } => "wheel_ours",
            BoundEntry::ApexForest { .. } => "apex_forest",
            BoundEntry::TwistedPrism { .. } => "twisted_prism",
            BoundEntry::PrismOrGrid { .. } => "prism_or_grid",
            BoundEntry::Grid4x4 => "grid_4x4",
            BoundEntry::DisjointCyclesR2 { .. } => "disjoint_cycles_r2",
            BoundEntry::DisjointCyclesGeneral { .. } => "disjoint_cycles_general",
            BoundEntry::SubdivisionREdges { .. } => "subdivision_r_edges",
        }
    }

    /// The formula, with `n = |V(H)|`. Strict forms are marked `<`.
    pub fn formula(&self) -> &'static str {
        match self {
            BoundEntry::Forest { .. } | BoundEntry::Cycle { .. } => "n - 2",
            BoundEntry::CompleteBipartite2t { .. } => "2t - 2",
            BoundEntry::WheelRt { .. } => "36k - 39",
            BoundEntry::WheelOurs { .. } => "2k + 18*ceil((1 + sqrt(2k - 1)) / 4) - 10",
            BoundEntry::ApexForest { .. } => "3n/2 - 3",
            BoundEntry::TwistedPrism { .. } => "2l + 18*ceil((1 + sqrt(2l + 1)) / 4) - 8",
            BoundEntry::PrismOrGrid { .. } => "2l + 10",
            BoundEntry::Grid4x4 => "160",
            BoundEntry::DisjointCyclesR2 { .. } => "< n + 9/2*ceil(sqrt(4 + n)) + 2",
            BoundEntry::DisjointCyclesGeneral { .. } => "< 3n/2 + c*r^2*log(r), c an absolute constant",
            BoundEntry::SubdivisionREdges { .. } => {
                "(r + 1)/2 * n + b_r, b_r := max{2r^2, 8r, 12 c_{8r}^2 g_{2r}^2}"
            }
        }
    }

    fn validate(&self) -> Result<()> {
        let bad = |why: String| Err(Error::InvalidParameter(format!("{}: {why}", self.family())));
        match *self {
            BoundEntry::Forest { n: 0 } => bad("n must be positive".into()),
            BoundEntry::Cycle { n } if n < 3 => bad(format!("a cycle needs n >= 3, got {n}")),
            // K_{2,1} is a path; the forest entry covers it.
            BoundEntry::CompleteBipartite2t { t } if t < 2 => bad(format!("need t >= 2, got {t}")),
            BoundEntry::WheelRt { k } | BoundEntry::WheelOurs { k } if k < 4 => {
                bad(format!("a wheel needs k >= 4, got {k}"))
            }
            BoundEntry::ApexForest { n } if n < 2 => bad(format!("an apex forest needs n >= 2, got {n}")),
            BoundEntry::TwistedPrism { ell } | BoundEntry::PrismOrGrid { ell } if ell < 3 => {
                bad(format!("prisms need ell >= 3, got {ell}"))
            }
            BoundEntry::DisjointCyclesR2 { n } if n < 6 => {
                bad(format!("two disjoint cycles need n >= 6, got {n}"))
            }
            BoundEntry::DisjointCyclesGeneral { n, r } if r < 3 || n < 3 * r => {
                bad(format!("need r >= 3 and n >= 3r, got n = {n}, r = {r}"))
            }
            BoundEntry::SubdivisionREdges { n, r } if r == 0 || n == 0 => bad("n and r must be positive".into()),
            _ => Ok(()),
        }
    }

    /// The bound as an inclusive integer. Strict bounds `tw < X` are stored
    /// as the largest integer below `X`.
    ///
    /// ```
    /// use minorlab::bounds::{Bound, BoundEntry};
    /// assert_eq!(BoundEntry::Grid4x4.f_upper().unwrap(), Bound::Numeric(160));
    /// assert_eq!(BoundEntry::WheelOurs { k: 5 }.f_upper().unwrap(), Bound::Numeric(18));
    /// assert_eq!(BoundEntry::DisjointCyclesR2 { n: 6 }.f_upper().unwrap(), Bound::Numeric(25));
    /// ```
    pub fn f_upper(&self) -> Result<Bound> {
        self.validate()?;
        let v = |x: usize| x as i64;
        Ok(match *self {
            BoundEntry::Forest { n } | BoundEntry::Cycle { n } => Bound::Numeric(v(n) - 2),
            BoundEntry::CompleteBipartite2t { t } => Bound::Numeric(2 * v(t) - 2),
            BoundEntry::WheelRt { k } => Bound::Numeric(36 * v(k) - 39),
            BoundEntry::WheelOurs { k } => {
                Bound::Numeric(2 * v(k) + 18 * quarter_ceiling(2 * k as u64 - 1) as i64 - 10)
            }
            BoundEntry::ApexForest { n } => Bound::Numeric(3 * v(n) / 2 - 3),
            BoundEntry::TwistedPrism { ell } => {
                Bound::Numeric(2 * v(ell) + 18 * quarter_ceiling(2 * ell as u64 + 1) as i64 - 8)
            }
            BoundEntry::PrismOrGrid { ell } => Bound::Numeric(2 * v(ell) + 10),
            BoundEntry::Grid4x4 => Bound::Numeric(160),
            BoundEntry::DisjointCyclesR2 { n } => {
                let c = ceil_sqrt(4 + n as u64) as i64;
                Bound::Numeric(strictly_below_half(2 * v(n) + 4 + 9 * c))
            }
            BoundEntry::DisjointCyclesGeneral { .. } | BoundEntry::SubdivisionREdges { .. } => {
                Bound::Symbolic(self.formula().to_string())
            }
        })
    }
}

/// One representative entry per family, sized for reporting.
pub fn catalog() -> Vec<BoundEntry> {
    vec![
        BoundEntry::Forest { n: 5 },
        BoundEntry::Cycle { n: 5 },
        BoundEntry::CompleteBipartite2t { t: 3 },
        BoundEntry::WheelRt { k: 5 },
        BoundEntry::WheelOurs { k: 5 },
        BoundEntry::ApexForest { n: 6 },
        BoundEntry::TwistedPrism { ell: 75 },
        BoundEntry::PrismOrGrid { ell: 75 },
        BoundEntry::Grid4x4,
        BoundEntry::DisjointCyclesR2 { n: 6 },
        BoundEntry::DisjointCyclesGeneral { n: 9, r: 3 },
        BoundEntry::SubdivisionREdges { n: 6, r: 2 },
    ]
}
