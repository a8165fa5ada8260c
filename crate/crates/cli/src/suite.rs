//! `check-bounds`: fixed suites of catalog checks and tree compositions.

use crate::{write_text, CliResult, Failure};
use clap::{Args, ValueEnum};
use minorlab::bounds::{
    verify_bound_jobs, verify_tree_composition_jobs, BoundEntry, Verdict, VerificationMode, VerificationReport,
};
use minorlab::graph::{self as gr, Graph};
use minorlab::SplitMix64;
use std::collections::BTreeMap;
use std::fmt::Write as _;
use std::path::PathBuf;

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Suite {
    Default,
    Full,
}

#[derive(Args)]
pub struct CheckBoundsArgs {
    #[arg(long, value_enum, default_value = "default")]
    suite: Suite,
    /// JSONL output; stdout when neither this nor the variable is set.
    #[arg(long, env = "MINORLAB_RESULTS")]
    results: Option<PathBuf>,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Worker threads; the output does not depend on this.
    #[arg(long)]
    jobs: Option<usize>,
    /// Replace the bound of every case of a family, e.g. `cycle=0`.
    #[arg(long, value_parser = parse_override)]
    bound_override: Vec<(String, i64)>,
}

fn parse_override(s: &str) -> Result<(String, i64), String> {
    let (name, value) = s.split_once('=').ok_or("expected NAME=VALUE")?;
    let value = value.trim().parse().map_err(|e| format!("bad bound {value:?}: {e}"))?;
    Ok((name.trim().to_string(), value))
}

enum Check {
    Bound { h: Graph, entry: BoundEntry, mode: VerificationMode },
    Composition { h1: Graph, t: Graph, n_max: usize },
}

struct Case {
    name: String,
    check: Check,
}

const COMPOSITION: &str = "tree_composition";

/// A forest plus a vertex adjacent to all of it.
fn fan(n: usize) -> Graph {
    let mut g = Graph::new(n);
    for v in 0..n - 1 {
        if v + 1 < n - 1 {
            g.add_edge(v, v + 1);
        }
        g.add_edge(v, n - 1);
    }
    g
}

fn cases(suite: Suite, seed: u64) -> CliResult<Vec<Case>> {
    let root = SplitMix64::new(seed);
    let random = |name: &str, n: usize, samples: usize| VerificationMode::Random {
        n,
        samples,
        seed: root.split(name).next(),
    };
    let exhaustive = |n_max| VerificationMode::Exhaustive { n_max };
    let mut list = vec![
        ("forest", gr::path(5), BoundEntry::Forest { n: 5 }, exhaustive(7)),
        ("cycle4", gr::cycle(4), BoundEntry::Cycle { n: 4 }, exhaustive(7)),
        ("cycle5", gr::cycle(5), BoundEntry::Cycle { n: 5 }, exhaustive(7)),
        ("k2_3", gr::complete_bipartite(2, 3), BoundEntry::CompleteBipartite2t { t: 3 }, exhaustive(7)),
        ("apex_forest", fan(5), BoundEntry::ApexForest { n: 5 }, exhaustive(7)),
        ("two_triangles", two_triangles(), BoundEntry::DisjointCyclesR2 { n: 6 }, exhaustive(7)),
        ("wheel5_rt", gr::make_wheel(5)?, BoundEntry::WheelRt { k: 5 }, random("wheel5_rt", 12, 60)),
        ("wheel5", gr::make_wheel(5)?, BoundEntry::WheelOurs { k: 5 }, random("wheel5", 12, 60)),
    ];
    if suite == Suite::Full {
        list.extend([
            ("cycle5_n16", gr::cycle(5), BoundEntry::Cycle { n: 5 }, random("cycle5_n16", 16, 200)),
            (
                "k2_3_n14",
                gr::complete_bipartite(2, 3),
                BoundEntry::CompleteBipartite2t { t: 3 },
                random("k2_3_n14", 14, 200),
            ),
            ("wheel5_n14", gr::make_wheel(5)?, BoundEntry::WheelOurs { k: 5 }, random("wheel5_n14", 14, 150)),
            (
                "two_triangles_n14",
                two_triangles(),
                BoundEntry::DisjointCyclesR2 { n: 6 },
                random("two_triangles_n14", 14, 150),
            ),
            ("apex_forest_n14", fan(5), BoundEntry::ApexForest { n: 5 }, random("apex_forest_n14", 14, 150)),
        ]);
    }
    let mut out: Vec<Case> = list
        .into_iter()
        .map(|(name, h, entry, mode)| Case {
            name: name.to_string(),
            check: Check::Bound { h, entry, mode },
        })
        .collect();
    if suite == Suite::Full {
        for (name, h1, t, n_max) in [
            ("triangle+k1", gr::cycle(3), gr::complete(1), 6),
            ("triangle+p2", gr::cycle(3), gr::path(2), 7),
            ("cycle4+k1", gr::cycle(4), gr::complete(1), 7),
        ] {
            out.push(Case {
                name: name.to_string(),
                check: Check::Composition { h1, t, n_max },
            });
        }
    }
    Ok(out)
}

fn two_triangles() -> Graph {
    gr::disjoint_union(&[gr::cycle(3), gr::cycle(3)])
}

struct Row {
    name: String,
    family: String,
    mode: String,
    report: Option<VerificationReport>,
    error: Option<Failure>,
}

pub fn run(a: CheckBoundsArgs) -> CliResult<u8> {
    let overrides: BTreeMap<String, i64> = a.bound_override.into_iter().collect();
    let mut rows = Vec::new();
    let mut jsonl = String::new();
    for case in cases(a.suite, a.seed)? {
        let (family, mode, outcome) = match &case.check {
            Check::Bound { h, entry, mode } => (
                entry.family().to_string(),
                mode_text(mode),
                verify_bound_jobs(h, entry, *mode, a.jobs),
            ),
            Check::Composition { h1, t, n_max } => (
                COMPOSITION.to_string(),
                mode_text(&VerificationMode::Exhaustive { n_max: *n_max }),
                verify_tree_composition_jobs(h1, t, *n_max, a.jobs),
            ),
        };
        let mut row = Row {
            name: case.name,
            family,
            mode,
            report: None,
            error: None,
        };
        match outcome {
            Ok(mut report) => {
                let overridden = overrides.get(&row.family).copied();
                if let Some(b) = overridden {
                    report.bound = Some(b);
                    report.verdict = Some(if report.observed_max_tw <= b { Verdict::Pass } else { Verdict::Fail });
                }
                let mut value = serde_json::to_value(&report).expect("report serializes");
                let map = value.as_object_mut().expect("report is an object");
                map.insert("case".into(), row.name.clone().into());
                map.insert("bound_overridden".into(), overridden.is_some().into());
                jsonl.push_str(&serde_json::to_string(&value).expect("record serializes"));
                jsonl.push('\n');
                row.report = Some(report);
            }
            Err(e) => row.error = Some(e.into()),
        }
        rows.push(row);
    }
    write_text(a.results.as_deref(), &jsonl)?;
    print!("{}", table(&rows));

    let failed = rows.iter().filter(|r| r.report.as_ref().is_some_and(|p| !p.passed())).count();
    let overruns: usize = rows.iter().filter_map(|r| r.report.as_ref()).map(|p| p.budget_overruns).sum();
    let errors: Vec<&Failure> = rows.iter().filter_map(|r| r.error.as_ref()).collect();
    println!(
        "{} cases, {} passed, {failed} failed, {} errors, {overruns} budget overruns",
        rows.len(),
        rows.len() - failed - errors.len(),
        errors.len()
    );
    if failed > 0 {
        Ok(1)
    } else if let Some(worst) = errors.iter().map(|e| e.code).max() {
        Ok(worst)
    } else {
        Ok(0)
    }
}

fn mode_text(mode: &VerificationMode) -> String {
    match mode {
        VerificationMode::Exhaustive { n_max } => format!("exhaustive n<={n_max}"),
        VerificationMode::Random { n, samples, .. } => format!("random n={n} x{samples}"),
    }
}

fn table(rows: &[Row]) -> String {
    let mut out = format!(
        "{:<18} {:<22} {:<20} {:>8} {:>6} {:>8} {:>6} {:>8}  verdict\n",
        "case", "family", "mode", "examined", "free", "observed", "bound", "overruns"
    );
    for r in rows {
        let _ = write!(out, "{:<18} {:<22} {:<20} ", r.name, r.family, r.mode);
        match (&r.report, &r.error) {
            (Some(p), _) => {
                let verdict = match p.verdict {
                    Some(Verdict::Pass) => "pass",
                    Some(Verdict::Fail) => "FAIL",
                    None => "-",
                };
                let bound = p.bound.map_or("-".to_string(), |b| b.to_string());
                let _ = writeln!(
                    out,
                    "{:>8} {:>6} {:>8} {:>6} {:>8}  {verdict}",
                    p.examined, p.minor_free, p.observed_max_tw, bound, p.budget_overruns
                );
            }
            (None, Some(e)) => {
                let _ = writeln!(out, "error: {}", e.message);
            }
            (None, None) => unreachable!("every case has a report or an error"),
        }
    }
    out
}
