//! `minorlab`: generate graphs, compute treewidth, build and check
//! certificates, and run the bound verification suites.
//!
//! Exit codes: 0 success, 1 rejected certificate or failed bound,
//! 2 bad input, 3 a size cap or search budget was hit.

mod suite;

use clap::{Args, Parser, Subcommand, ValueEnum};
use minorlab::certificate::{check_certificate, Certificate};
use minorlab::constructions::{
    grid_prism_model, grid_scale, subdivision_grid_model, twisted_prism_grid_model,
};
use minorlab::decomposition::{exact_treewidth, treewidth_bounds_heuristic};
use minorlab::graph::{self as gr, Graph, TwistedPrismSpec};
use minorlab::minor::MinorModel;
use minorlab::SplitMix64;
use std::fmt;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

#[derive(Parser)]
#[command(name = "minorlab", version, about = "Treewidth of graphs excluding a fixed minor")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Generate a graph.
    Gen(GenArgs),
    /// Treewidth of a graph file (JSON or DIMACS).
    Tw(TwArgs),
    /// Check a certificate against a graph.
    Verify(VerifyArgs),
    /// Build a self-checked minor model certificate.
    Embed(EmbedArgs),
    /// Run the bound verification suite.
    CheckBounds(suite::CheckBoundsArgs),
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Json,
    Dimacs,
    Dot,
}

#[derive(Args)]
struct GenArgs {
    #[command(subcommand)]
    family: Family,
    /// Write here instead of stdout.
    #[arg(long, global = true)]
    out: Option<PathBuf>,
    #[arg(long, value_enum, default_value = "json", global = true)]
    format: Format,
}

#[derive(Subcommand)]
enum Family {
    Grid { rows: usize, cols: usize },
    Prism { ell: usize },
    /// Twisted prism; identity permutation unless `--pi` or `--seed` is given.
    TwistedPrism {
        ell: usize,
        /// Comma-separated permutation of 1..=ell.
        #[arg(long, value_delimiter = ',', conflicts_with = "seed")]
        pi: Option<Vec<usize>>,
        /// Draw a uniform permutation from this seed.
        #[arg(long)]
        seed: Option<u64>,
    },
    /// Wheel on `k` vertices, hub included.
    Wheel { k: usize },
    Cycle { n: usize },
    Path { n: usize },
    Complete { n: usize },
    CompleteBipartite { a: usize, b: usize },
    Star { leaves: usize },
    Petersen,
    BinaryTree { height: u32 },
    ErdosRenyi {
        n: usize,
        p: f64,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    Regular {
        n: usize,
        d: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    Tree {
        n: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
}

#[derive(Args)]
struct TwArgs {
    graph: PathBuf,
    /// Exact dynamic program (default).
    #[arg(long, conflicts_with = "heuristic")]
    exact: bool,
    /// Degeneracy / minor-min-degree lower and min-fill upper bound.
    #[arg(long)]
    heuristic: bool,
    /// Write the decomposition as a certificate.
    #[arg(long)]
    cert: Option<PathBuf>,
}

#[derive(Args)]
struct VerifyArgs {
    certificate: PathBuf,
    graph: PathBuf,
}

#[derive(Args)]
struct EmbedArgs {
    #[command(subcommand)]
    construction: Construction,
    /// Certificate output; stdout when absent.
    #[arg(long, global = true)]
    cert: Option<PathBuf>,
    /// Also write the host graph as JSON.
    #[arg(long, global = true)]
    graph_out: Option<PathBuf>,
}

#[derive(Subcommand)]
enum Construction {
    /// The 4 × 4 grid in a twisted prism.
    TwistedPrismGrid {
        #[arg(long)]
        ell: usize,
        #[arg(long, value_delimiter = ',', conflicts_with = "seed")]
        pi: Option<Vec<usize>>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// The (8r² - 4r)-prism in the 4r × 4r grid.
    GridPrism {
        #[arg(long)]
        r: usize,
    },
    /// The `g × g` grid with every edge subdivided `count` times, in the
    /// scaled grid.
    Phi {
        #[arg(long)]
        base_grid: usize,
        #[arg(long)]
        ell: usize,
        /// Subdivisions per edge; defaults to `ell - 1`.
        #[arg(long)]
        count: Option<usize>,
    },
}

/// An error with the exit code it maps to.
pub(crate) struct Failure {
    pub code: u8,
    pub message: String,
}

impl Failure {
    pub fn input(message: impl fmt::Display) -> Self {
        Failure {
            code: 2,
            message: message.to_string(),
        }
    }
}

impl From<minorlab::Error> for Failure {
    fn from(e: minorlab::Error) -> Self {
        use minorlab::Error as E;
        let code = match e {
            E::CapExceeded { .. } | E::BudgetExceeded { .. } => 3,
            E::Internal(_) => 1,
            _ => 2,
        };
        Failure {
            code,
            message: e.to_string(),
        }
    }
}

pub(crate) type CliResult<T> = std::result::Result<T, Failure>;

fn main() -> ExitCode {
    let cli = Cli::parse();
    let outcome = match cli.command {
        Command::Gen(a) => gen(a),
        Command::Tw(a) => tw(a),
        Command::Verify(a) => verify(a),
        Command::Embed(a) => embed(a),
        Command::CheckBounds(a) => suite::run(a),
    };
    match outcome {
        Ok(code) => ExitCode::from(code),
        Err(f) => {
            eprintln!("error: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}

pub(crate) fn read_text(path: &Path) -> CliResult<String> {
    std::fs::read_to_string(path).map_err(|e| Failure::input(format!("{}: {e}", path.display())))
}

pub(crate) fn write_text(path: Option<&Path>, text: &str) -> CliResult<()> {
    match path {
        Some(p) => std::fs::write(p, text).map_err(|e| Failure::input(format!("{}: {e}", p.display()))),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

/// JSON when the file starts with `{`, DIMACS otherwise.
fn read_graph(path: &Path) -> CliResult<Graph> {
    let text = read_text(path)?;
    let g = if text.trim_start().starts_with('{') {
        gr::io::from_json(&text)
    } else {
        gr::io::from_dimacs(&text)
    };
    g.map_err(|e| Failure::input(format!("{}: {e}", path.display())))
}

fn twisted_spec(ell: usize, pi: Option<Vec<usize>>, seed: Option<u64>) -> CliResult<TwistedPrismSpec> {
    let spec = match (pi, seed) {
        (Some(pi), _) => TwistedPrismSpec::new(ell, pi)?,
        (None, Some(s)) => TwistedPrismSpec::random(ell, &mut SplitMix64::new(s))?,
        (None, None) => TwistedPrismSpec::identity(ell)?,
    };
    Ok(spec)
}

fn gen(a: GenArgs) -> CliResult<u8> {
    let g = match a.family {
        Family::Grid { rows, cols } => gr::make_grid(rows, cols),
        Family::Prism { ell } => gr::make_prism(ell)?,
        Family::TwistedPrism { ell, pi, seed } => gr::make_twisted_prism(&twisted_spec(ell, pi, seed)?),
        Family::Wheel { k } => gr::make_wheel(k)?,
        Family::Cycle { n } => gr::cycle(n),
        Family::Path { n } => gr::path(n),
        Family::Complete { n } => gr::complete(n),
        Family::CompleteBipartite { a, b } => gr::complete_bipartite(a, b),
        Family::Star { leaves } => gr::star(leaves),
        Family::Petersen => gr::petersen(),
        Family::BinaryTree { height } => gr::complete_binary_tree(height),
        Family::ErdosRenyi { n, p, seed } => {
            if !(0.0..=1.0).contains(&p) {
                return Err(Failure::input(format!("edge probability {p} is not in [0, 1]")));
            }
            gr::erdos_renyi(n, p, &mut SplitMix64::new(seed))
        }
        Family::Regular { n, d, seed } => gr::random_regular(n, d, &mut SplitMix64::new(seed))?,
        Family::Tree { n, seed } => gr::random_tree(n, &mut SplitMix64::new(seed)),
    };
    let mut text = match a.format {
        Format::Json => gr::io::to_json(&g),
        Format::Dimacs => gr::io::to_dimacs(&g),
        Format::Dot => gr::io::to_dot(&g),
    };
    if !text.ends_with('\n') {
        text.push('\n');
    }
    write_text(a.out.as_deref(), &text)?;
    Ok(0)
}

fn tw(a: TwArgs) -> CliResult<u8> {
    let g = read_graph(&a.graph)?;
    let td = if a.heuristic {
        let b = treewidth_bounds_heuristic(&g);
        println!("lower≥{} upper≤{}", b.lower, b.upper);
        b.witness
    } else {
        let (w, td) = exact_treewidth(&g)?;
        println!("{w}");
        td
    };
    if let Some(p) = a.cert {
        write_text(Some(&p), &Certificate::tree_decomposition(&td).to_json())?;
    }
    Ok(0)
}

fn verify(a: VerifyArgs) -> CliResult<u8> {
    let cert = Certificate::from_json(&read_text(&a.certificate)?)
        .map_err(|e| Failure::input(format!("{}: {e}", a.certificate.display())))?;
    let g = read_graph(&a.graph)?;
    let check = check_certificate(&g, &cert)?;
    println!("{}", serde_json::to_string(&check).expect("check serializes"));
    Ok(if check.accepted { 0 } else { 1 })
}

fn embed(a: EmbedArgs) -> CliResult<u8> {
    let (host, h, model, what): (Graph, Graph, MinorModel, String) = match a.construction {
        Construction::TwistedPrismGrid { ell, pi, seed } => {
            let spec = twisted_spec(ell, pi, Some(seed))?;
            let m = twisted_prism_grid_model(&spec)?;
            (gr::make_twisted_prism(&spec), gr::make_grid(4, 4), m, format!("4x4 grid in twisted {ell}-prism"))
        }
        Construction::GridPrism { r } => {
            let m = grid_prism_model(r)?;
            let k = 8 * r * r - 4 * r;
            let n = 4 * r;
            (gr::make_grid(n, n), gr::make_prism(k)?, m, format!("{k}-prism in {n}x{n} grid"))
        }
        Construction::Phi { base_grid, ell, count } => {
            let count = match count {
                Some(c) => c,
                None => ell
                    .checked_sub(1)
                    .ok_or_else(|| Failure::input("ell must be positive"))?,
            };
            let base = gr::make_grid(base_grid, base_grid);
            let identity = MinorModel::new((0..base.n()).map(|v| vec![v]).collect());
            let counts = gr::uniform_counts(&base, count);
            let m = subdivision_grid_model(&base, base_grid, &identity, &counts, ell)?;
            let side = grid_scale(ell) * base_grid;
            (
                gr::make_grid(side, side),
                gr::subdivide(&base, &counts)?,
                m,
                format!("{base_grid}x{base_grid} grid subdivided {count} times per edge in {side}x{side} grid"),
            )
        }
    };
    let cert = Certificate::minor_model(&h, &model);
    let check = check_certificate(&host, &cert)?;
    if !check.accepted {
        return Err(Failure {
            code: 1,
            message: format!("constructed model rejected: {}", check.reason.unwrap_or_default()),
        });
    }
    if let Some(p) = &a.graph_out {
        write_text(Some(p), &(gr::io::to_json(&host) + "\n"))?;
    }
    write_text(a.cert.as_deref(), &(cert.to_json() + "\n"))?;
    eprintln!("{what}: {} branch sets, verified", model.branch_sets.len());
    Ok(0)
}
