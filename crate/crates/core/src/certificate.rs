//! Self-describing JSON certificates and a total checker for them.

use crate::bramble::{bramble_order, bramble_violation, Bramble};
use crate::decomposition::{validate_tree_decomposition, TreeDecomposition};
use crate::error::{Error, Result};
use crate::graph::io::GraphJson;
use crate::graph::{Graph, VertexSet};
use crate::minor::{minor_model_violation, MinorModel};
use serde::{Deserialize, Serialize};
use std::collections::BTreeMap;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "type", rename_all = "snake_case")]
pub enum Certificate {
    TreeDecomposition {
        width: isize,
        bags: Vec<Vec<usize>>,
        tree_edges: Vec<(usize, usize)>,
    },
    Bramble {
        elements: Vec<Vec<usize>>,
        claimed_order: usize,
    },
    MinorModel {
        h: GraphJson,
        /// Keyed by the decimal index of the `h` vertex.
        branch_sets: BTreeMap<String, Vec<usize>>,
    },
    CyclePacking {
        cycles: Vec<Vec<usize>>,
    },
}

/// Verdict of [`check_certificate`]. `reason` is set exactly when rejected.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CertificateCheck {
    pub accepted: bool,
    pub reason: Option<String>,
}

impl CertificateCheck {
    fn accept() -> Self {
        CertificateCheck {
            accepted: true,
            reason: None,
        }
    }

    fn reject(reason: impl Into<String>) -> Self {
        CertificateCheck {
            accepted: false,
            reason: Some(reason.into()),
        }
    }
}

impl Certificate {
    pub fn tree_decomposition(td: &TreeDecomposition) -> Self {
        Certificate::TreeDecomposition {
            width: td.width(),
            bags: td.bags.clone(),
            tree_edges: td.tree_edges.clone(),
        }
    }

    pub fn bramble(b: &Bramble, claimed_order: usize) -> Self {
        Certificate::Bramble {
            elements: b.elements.clone(),
            claimed_order,
        }
    }

    pub fn minor_model(h: &Graph, m: &MinorModel) -> Self {
        Certificate::MinorModel {
            h: GraphJson::from(h),
            branch_sets: m
                .branch_sets
                .iter()
                .enumerate()
                .map(|(x, s)| (x.to_string(), s.clone()))
                .collect(),
        }
    }

    pub fn cycle_packing(cycles: &[Vec<usize>]) -> Self {
        Certificate::CyclePacking { cycles: cycles.to_vec() }
    }

    pub fn kind(&self) -> &'static str {
        match self {
            Certificate::TreeDecomposition { .. } => "tree_decomposition",
            Certificate::Bramble { .. } => "bramble",
            Certificate::MinorModel { .. } => "minor_model",
            Certificate::CyclePacking { .. } => "cycle_packing",
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("certificate serializes")
    }

    pub fn from_json(text: &str) -> Result<Self> {
        serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))
    }
}

/// Accept or reject `cert` against `g`. Only resource limits are errors;
/// malformed content (bad indices, wrong claims) is a rejection.
///
/// ```
/// use minorlab::certificate::{check_certificate, Certificate};
/// use minorlab::decomposition::exact_treewidth;
/// use minorlab::graph::make_grid;
/// let g = make_grid(3, 3);
/// let (_, td) = exact_treewidth(&g).unwrap();
/// assert!(check_certificate(&g, &Certificate::tree_decomposition(&td)).unwrap().accepted);
/// ```
pub fn check_certificate(g: &Graph, cert: &Certificate) -> Result<CertificateCheck> {
    let outcome = match cert {
        Certificate::TreeDecomposition {
            width,
            bags,
            tree_edges,
        } => check_td(g, *width, bags, tree_edges),
        Certificate::Bramble {
            elements,
            claimed_order,
        } => check_bramble(g, elements, *claimed_order),
        Certificate::MinorModel { h, branch_sets } => check_model(g, h, branch_sets),
        Certificate::CyclePacking { cycles } => Ok(check_packing(g, cycles)),
    };
    match outcome {
        Err(e) if e.is_resource_limit() => Err(e),
        Err(e) => Ok(CertificateCheck::reject(e.to_string())),
        ok => ok,
    }
}

fn check_td(g: &Graph, width: isize, bags: &[Vec<usize>], tree_edges: &[(usize, usize)]) -> Result<CertificateCheck> {
    let td = TreeDecomposition {
        bags: bags.to_vec(),
        tree_edges: tree_edges.to_vec(),
    };
    let check = validate_tree_decomposition(g, &td)?;
    Ok(if !check.valid {
        CertificateCheck::reject(check.problem.unwrap_or_else(|| "invalid tree decomposition".into()))
    } else if check.width != width {
        CertificateCheck::reject(format!("claimed width {width} but the bags give width {}", check.width))
    } else {
        CertificateCheck::accept()
    })
}

fn check_bramble(g: &Graph, elements: &[Vec<usize>], claimed: usize) -> Result<CertificateCheck> {
    let b = Bramble::new(elements.to_vec());
    if let Some(problem) = bramble_violation(g, &b)? {
        return Ok(CertificateCheck::reject(problem));
    }
    let (order, _) = bramble_order(g, &b)?;
    Ok(if order < claimed {
        CertificateCheck::reject(format!("hitting set of size {order} found"))
    } else {
        CertificateCheck::accept()
    })
}

fn check_model(g: &Graph, h: &GraphJson, branch_sets: &BTreeMap<String, Vec<usize>>) -> Result<CertificateCheck> {
    let h = Graph::try_from(h.clone())?;
    let mut sets = vec![None; h.n()];
    for (key, set) in branch_sets {
        let x: usize = match key.parse() {
            Ok(x) if x < h.n() => x,
            _ => return Ok(CertificateCheck::reject(format!("branch set key {key:?} is not a vertex of h"))),
        };
        sets[x] = Some(set.clone());
    }
    let Some(sets) = sets.into_iter().collect::<Option<Vec<_>>>() else {
        return Ok(CertificateCheck::reject("some vertex of h has no branch set"));
    };
    Ok(match minor_model_violation(g, &h, &MinorModel::new(sets))? {
        Some(problem) => CertificateCheck::reject(problem),
        None => CertificateCheck::accept(),
    })
}

fn check_packing(g: &Graph, cycles: &[Vec<usize>]) -> CertificateCheck {
    let mut used = VertexSet::with_capacity(g.n());
    for (i, c) in cycles.iter().enumerate() {
        if c.iter().any(|&v| v >= g.n()) || !g.is_cycle(c) {
            return CertificateCheck::reject(format!("entry {i} is not a cycle of the graph"));
        }
        for &v in c {
            if used.contains(v) {
                return CertificateCheck::reject(format!("cycles not disjoint (vertex {v})"));
            }
            used.insert(v);
        }
    }
    CertificateCheck::accept()
}
