//! The `circsym` command line front end.
//!
//! Subcommands: `info`, `color`, `verify`, `exact`, `table`, `export`.
//! Output is deterministic for fixed arguments. Exit codes: 0 success,
//! 1 certification failure or table mismatch, 2 usage error, 3 search
//! budget exhaustion.

use std::ffi::OsString;
use std::fs;
use std::path::PathBuf;
use std::time::Duration;

use clap::{Args, Parser, Subcommand};
use serde::Serialize;

use crate::autgroups::{self, DEFAULT_SEARCH_BOUND};
use crate::chromatic;
use crate::constructions::{self, Coloring};
use crate::document::ColoringDocument;
use crate::exact_search::{self, SearchBudget, SearchError};
use crate::graph::CirculantGraph;
use crate::verification;

pub const EXIT_OK: i32 = 0;
pub const EXIT_CERTIFICATION: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_BUDGET: i32 = 3;

/// Environment variable overriding the default time budget of `exact`.
pub const BUDGET_ENV: &str = "CIRCSYM_BUDGET_SECONDS";

#[derive(Parser)]
#[command(
    name = "circsym",
    version,
    about = "Distinguishing proper colorings of circulant graphs C_n(1,k)"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct Pair {
    /// Vertex count (n >= 3)
    n: usize,
    /// Second difference (1 <= k <= n/2)
    k: usize,
}

#[derive(Subcommand)]
enum Command {
    /// Automorphism class, group order, chromatic numbers for C_n(1,k)
    Info(Pair),
    /// Construct and certify an optimal distinguishing coloring
    Color {
        #[command(flatten)]
        pair: Pair,
        /// Emit the coloring document as JSON (default)
        #[arg(long)]
        json: bool,
        /// Emit a DOT graph with the colors as node attributes
        #[arg(long, conflicts_with = "json")]
        dot: bool,
    },
    /// Re-certify a coloring document produced by `color`
    Verify {
        /// Path to a coloring JSON file
        #[arg(long)]
        input: PathBuf,
    },
    /// Exact distinguishing chromatic number by exhaustive search
    Exact {
        #[command(flatten)]
        pair: Pair,
        /// Stop after this many colors
        #[arg(long)]
        max_colors: Option<u8>,
        /// Wall-clock limit in seconds
        #[arg(long)]
        time_limit: Option<u64>,
    },
    /// Target table for all canonical (n,k) up to a bound
    Table {
        /// Largest vertex count
        #[arg(long)]
        n_max: usize,
        /// Cross-check each row against the exhaustive oracle
        #[arg(long)]
        exact: bool,
    },
    /// Export the graph structure
    Export {
        #[command(flatten)]
        pair: Pair,
        /// Output format (only `dot`)
        #[arg(long)]
        format: String,
    },
}

#[derive(Serialize)]
struct Info {
    n: usize,
    k: usize,
    class: String,
    aut_order: String,
    chi: u8,
    chi_d_target: u8,
}

/// Parses `argv` and runs one subcommand, printing to stdout. Returns the
/// process exit status.
pub fn run<I, T>(argv: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.exit_code() == 0 {
                EXIT_OK
            } else {
                EXIT_USAGE
            };
        }
    };
    match dispatch(cli.command) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("circsym: {e}");
            e.exit_code()
        }
    }
}

#[derive(Debug, thiserror::Error)]
enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error("{0}")]
    Budget(String),
    #[error("{0}")]
    Failed(String),
}

impl CliError {
    fn exit_code(&self) -> i32 {
        match self {
            CliError::Usage(_) => EXIT_USAGE,
            CliError::Budget(_) => EXIT_BUDGET,
            CliError::Failed(_) => EXIT_CERTIFICATION,
        }
    }
}

fn usage<E: std::fmt::Display>(e: E) -> CliError {
    CliError::Usage(e.to_string())
}

fn dispatch(cmd: Command) -> Result<i32, CliError> {
    match cmd {
        Command::Info(Pair { n, k }) => {
            let class = autgroups::classify(n, k).map_err(usage)?;
            let info = Info {
                n,
                k,
                class: class.to_string(),
                aut_order: autgroups::aut_order(n, k).map_err(usage)?.to_string(),
                chi: chromatic::chi_formula(n, k).map_err(usage)?.value,
                chi_d_target: constructions::chi_d_target(n, k).map_err(usage)?,
            };
            println!(
                "{}",
                serde_json::to_string_pretty(&info).expect("serializable")
            );
            Ok(EXIT_OK)
        }
        Command::Color {
            pair: Pair { n, k },
            dot,
            ..
        } => {
            let (coloring, certificate) =
                constructions::construct_certified(n, k).map_err(|e| match e {
                    constructions::BuildError::NonCanonical { .. } => usage(e),
                    constructions::BuildError::CertificationFailed { .. } => {
                        CliError::Failed(e.to_string())
                    }
                    other => CliError::Failed(other.to_string()),
                })?;
            if dot {
                println!("{}", colored_dot(n, k, &coloring));
            } else {
                let doc = ColoringDocument::new(n, k, &coloring, Some(&certificate));
                println!("{}", doc.to_json());
            }
            Ok(EXIT_OK)
        }
        Command::Verify { input } => {
            let text = fs::read_to_string(&input)
                .map_err(|e| usage(format!("cannot read {}: {e}", input.display())))?;
            let doc = ColoringDocument::from_json(&text).map_err(usage)?;
            let (n, k) = (doc.n as usize, doc.k as usize);
            let coloring = doc.coloring();
            let certificate = verification::certify(n, k, &coloring)
                .map_err(|e| CliError::Failed(e.to_string()))?;
            let out = ColoringDocument::new(n, k, &coloring, Some(&certificate));
            println!("{}", out.to_json());
            if certificate.proper && certificate.distinguishing {
                Ok(EXIT_OK)
            } else {
                Ok(EXIT_CERTIFICATION)
            }
        }
        Command::Exact {
            pair: Pair { n, k },
            max_colors,
            time_limit,
        } => {
            let g = CirculantGraph::one_k(n, k).map_err(usage)?;
            let grp = autgroups::full_group(n, k).map_err(usage)?;
            let budget = budget_from(n, time_limit);
            let result = match max_colors {
                Some(cap) => match exact_search::distinguishing_exists(&g, cap, &grp, &budget) {
                    Ok(Some(_)) => refine_within(&g, &grp, &budget, cap),
                    Ok(None) => Err(SearchError::BudgetExhausted("color cap reached")),
                    Err(e) => Err(e),
                },
                None => exact_search::chi_d_exact(&g, &grp, &budget),
            };
            match result {
                Ok(value) => {
                    println!(
                        "{}",
                        serde_json::json!({ "n": n, "k": k, "chi_d_exact": value })
                    );
                    Ok(EXIT_OK)
                }
                Err(e) => Err(CliError::Budget(e.to_string())),
            }
        }
        Command::Table { n_max, exact } => {
            let mut mismatch = false;
            for n in 3..=n_max {
                for k in 1..=n / 2 {
                    let class = autgroups::classify(n, k).map_err(usage)?;
                    let target = constructions::chi_d_target(n, k).map_err(usage)?;
                    let chi = chromatic::chi_formula(n, k).map_err(usage)?.value;
                    if exact {
                        let g = CirculantGraph::one_k(n, k).map_err(usage)?;
                        let grp = autgroups::generic_search(&g, DEFAULT_SEARCH_BOUND)
                            .map_err(|e| CliError::Budget(e.to_string()))?;
                        let budget = budget_from(n, None);
                        let found = exact_search::chi_d_exact(&g, &grp, &budget)
                            .map_err(|e| CliError::Budget(e.to_string()))?;
                        let verdict = if found == target { "MATCH" } else { "MISMATCH" };
                        mismatch |= found != target;
                        println!(
                            "n={n} k={k} class={class} chi={chi} chi_d={target} exact={found} {verdict}"
                        );
                    } else {
                        println!("n={n} k={k} class={class} chi={chi} chi_d={target}");
                    }
                }
            }
            Ok(if mismatch {
                EXIT_CERTIFICATION
            } else {
                EXIT_OK
            })
        }
        Command::Export {
            pair: Pair { n, k },
            format,
        } => {
            if format != "dot" {
                return Err(CliError::Usage(format!("unsupported format: {format}")));
            }
            let g = CirculantGraph::one_k(n, k).map_err(usage)?;
            print!("{}", g.to_dot());
            Ok(EXIT_OK)
        }
    }
}

/// Smallest palette within the cap that still admits a distinguishing
/// coloring (`exact --max-colors`).
fn refine_within(
    g: &CirculantGraph,
    grp: &autgroups::AutGroup,
    budget: &SearchBudget,
    cap: u8,
) -> Result<u8, SearchError> {
    let mut best = cap;
    for palette in 2..cap {
        if exact_search::distinguishing_exists(g, palette, grp, budget)?.is_some() {
            best = palette;
            break;
        }
    }
    Ok(best)
}

fn budget_from(n: usize, time_limit: Option<u64>) -> SearchBudget {
    let seconds = time_limit.or_else(|| {
        std::env::var(BUDGET_ENV)
            .ok()
            .and_then(|v| v.parse::<u64>().ok())
    });
    SearchBudget {
        max_n: n.max(16),
        max_colorings: 2_000_000_000,
        time_limit: seconds.map(Duration::from_secs),
    }
}

fn colored_dot(n: usize, k: usize, coloring: &Coloring) -> String {
    let g = CirculantGraph::one_k(n, k).expect("canonical parameters");
    let mut out = String::new();
    out.push_str(&format!("graph \"{g}\" {{\n"));
    for i in 0..n {
        out.push_str(&format!(
            "  v{i} [label=\"v{i}\", color=\"{}\"];\n",
            coloring.color(i)
        ));
    }
    g.write_dot_edges(&mut out);
    out.push_str("}\n");
    out
}
