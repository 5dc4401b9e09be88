//! `defect` — batch front door for the low-defect partitioning library.
//!
//! Data goes to stdout (JSON by default, `--format text` for humans),
//! diagnostics to stderr. Exit status: 0 success or property holds, 1
//! negative result (stuck coloring, failed verification, minor found),
//! 2 usage error, 3 search timeout or size guard.

use std::collections::BTreeSet;
use std::fs;
use std::io::{self, Read};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde::{Deserialize, Serialize};

use defect_core::edgelist::{edge_list_string, live_vertex_ids, parse_edge_list};
use defect_core::engine::{defective_coloring, verify_partition, ColoringConfig, ColoringOutcome};
use defect_core::extremal::density_bound_holds;
use defect_core::generate::{
    construct_sharp, gen_forest, gen_grid, gen_ktree, gen_random, GenerateError,
};
use defect_core::graph::{Graph, VertexId};
use defect_core::minor::{has_clique_minor, min_defect, MinorOutcome};
use defect_core::params::Params;

#[derive(Parser)]
#[command(
    name = "defect",
    version,
    about = "Partition graphs with no large clique minor into few parts of small max degree"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Text,
}

#[derive(Subcommand)]
enum Command {
    /// Print the derived density parameter r and degree bound s for t parts
    Params {
        /// Number of parts (forbidden clique is one larger)
        #[arg(short = 't', value_name = "T")]
        t: u32,
        /// Density coefficient behind the derived bound
        #[arg(short = 'C', value_name = "C", default_value_t = 4.0, allow_negative_numbers = true)]
        coefficient: f64,
        /// Replace the coefficient-based density bound with a known one
        #[arg(long, value_name = "R", allow_negative_numbers = true)]
        density_override: Option<f64>,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
    },
    /// Partition a graph into t parts, each inducing degree < s
    Color {
        #[arg(short = 't', value_name = "T")]
        t: u32,
        /// Edge-list file, or '-' for standard input
        #[arg(value_name = "FILE")]
        file: String,
        #[arg(short = 'C', value_name = "C", default_value_t = 4.0, allow_negative_numbers = true)]
        coefficient: f64,
        #[arg(long, value_name = "R", allow_negative_numbers = true)]
        density_override: Option<f64>,
        /// Unsafe: force the degree bound instead of deriving it
        #[arg(long, value_name = "S")]
        s_override: Option<u64>,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
    },
    /// Check a partition file against a graph and a degree bound
    Verify {
        /// Strict degree bound the parts must stay under
        #[arg(short = 's', value_name = "S")]
        s: u64,
        /// Edge-list file, or '-' for standard input
        #[arg(value_name = "FILE")]
        file: String,
        /// Partition JSON file (any object with a "parts" array), or '-'
        #[arg(value_name = "PARTFILE")]
        partfile: String,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
    },
    /// Emit the tight example graph for bound s and t+1 parts as an edge list
    Sharp {
        /// Degree bound the example is tight against
        #[arg(short = 's', value_name = "S")]
        s: u32,
        /// Clique-minor order parameter of the construction
        #[arg(short = 't', value_name = "T")]
        t: u32,
    },
    /// Search for a K_k minor; exit 0 means none exists
    Minor {
        /// Clique order to search for
        #[arg(short = 'k', value_name = "K")]
        k: u32,
        /// Edge-list file, or '-' for standard input
        #[arg(value_name = "FILE")]
        file: String,
        /// Search budget in node expansions
        #[arg(long, value_name = "N", default_value_t = 10_000_000)]
        budget: u64,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
    },
    /// Exhaustively compute the minimum achievable max within-part degree
    Oracle {
        /// Number of parts to partition into
        #[arg(short = 'p', value_name = "P")]
        parts: u32,
        /// Edge-list file, or '-' for standard input
        #[arg(value_name = "FILE")]
        file: String,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
    },
    /// Generate a graph and emit it as an edge list
    Gen {
        #[command(subcommand)]
        kind: GenKind,
    },
    /// Evaluate the edge-density bound for t on a concrete graph
    #[command(name = "density-check")]
    DensityCheck {
        #[arg(short = 't', value_name = "T")]
        t: u32,
        /// Edge-list file, or '-' for standard input
        #[arg(value_name = "FILE")]
        file: String,
        #[arg(short = 'C', value_name = "C", default_value_t = 4.0, allow_negative_numbers = true)]
        coefficient: f64,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
    },
}

#[derive(Subcommand)]
enum GenKind {
    /// Random forest: each vertex attaches to an earlier one or starts a tree
    Forest {
        #[arg(short = 'n', value_name = "N")]
        n: u32,
        #[arg(long, value_name = "SEED", default_value_t = 0)]
        seed: u64,
    },
    /// Random k-tree grown clique by clique
    Ktree {
        #[arg(short = 'n', value_name = "N")]
        n: u32,
        #[arg(short = 'k', value_name = "K")]
        k: u32,
        #[arg(long, value_name = "SEED", default_value_t = 0)]
        seed: u64,
    },
    /// Rectangular grid graph
    Grid {
        #[arg(long, value_name = "W")]
        width: u32,
        #[arg(long, value_name = "H")]
        height: u32,
    },
    /// Erdős–Rényi G(n, p)
    Random {
        #[arg(short = 'n', value_name = "N")]
        n: u32,
        #[arg(short = 'p', value_name = "P", allow_negative_numbers = true)]
        p: f64,
        #[arg(long, value_name = "SEED", default_value_t = 0)]
        seed: u64,
    },
}

/// Failures that end the run without data output.
enum Failure {
    /// Bad flags, unreadable or malformed input: exit 2.
    Usage(String),
    /// Size guard or search construction refused the work: exit 3.
    Guard(String),
}

impl From<defect_core::params::ParamError> for Failure {
    fn from(e: defect_core::params::ParamError) -> Failure {
        Failure::Usage(e.to_string())
    }
}

impl From<GenerateError> for Failure {
    fn from(e: GenerateError) -> Failure {
        match e {
            GenerateError::SharpTooLarge { .. } | GenerateError::TooManyVertices { .. } => {
                Failure::Guard(e.to_string())
            }
            _ => Failure::Usage(e.to_string()),
        }
    }
}

fn read_input(path: &str) -> Result<String, Failure> {
    if path == "-" {
        let mut text = String::new();
        io::stdin()
            .read_to_string(&mut text)
            .map_err(|e| Failure::Usage(format!("standard input: {e}")))?;
        Ok(text)
    } else {
        fs::read_to_string(path).map_err(|e| Failure::Usage(format!("{path}: {e}")))
    }
}

fn read_graph(path: &str) -> Result<Graph, Failure> {
    let text = read_input(path)?;
    parse_edge_list(&text).map_err(|e| Failure::Usage(format!("{path}: {e}")))
}

fn print_json<T: Serialize>(value: &T) {
    println!("{}", serde_json::to_string(value).expect("output types serialize"));
}

fn ids(set: &BTreeSet<VertexId>) -> Vec<u32> {
    set.iter().map(|v| v.0).collect()
}

fn join_ids(list: &[u32]) -> String {
    let strs: Vec<String> = list.iter().map(u32::to_string).collect();
    strs.join(" ")
}

#[derive(Serialize)]
struct ParamsOut {
    t: u32,
    r: f64,
    s: u64,
}

#[derive(Serialize)]
struct PartitionOut {
    t: u32,
    s: u64,
    r: f64,
    parts: Vec<Vec<u32>>,
    trace_len: usize,
}

#[derive(Serialize)]
struct StuckOut {
    stuck: bool,
    remaining_vertices: Vec<u32>,
    hint: String,
}

#[derive(Serialize)]
struct VerifyOut {
    ok: bool,
    violations: Vec<String>,
}

#[derive(Serialize)]
struct MinorOut {
    k: u32,
    outcome: &'static str,
    #[serde(skip_serializing_if = "Option::is_none")]
    branch_sets: Option<Vec<Vec<u32>>>,
}

#[derive(Serialize)]
struct OracleOut {
    parts: u32,
    min_defect: u32,
}

#[derive(Serialize)]
struct DensityOut {
    holds: bool,
    lhs: u64,
    rhs: f64,
}

#[derive(Deserialize)]
struct PartsIn {
    parts: Vec<Vec<u32>>,
}

fn run(command: Command) -> Result<u8, Failure> {
    match command {
        Command::Params { t, coefficient, density_override, format } => {
            let params = Params::derive(t, coefficient, density_override)?;
            match format {
                Format::Json => print_json(&ParamsOut { t, r: params.r, s: params.s }),
                Format::Text => {
                    println!("t = {t}");
                    println!("r = {}", params.r);
                    println!("s = {}", params.s);
                }
            }
            Ok(0)
        }
        Command::Color { t, file, coefficient, density_override, s_override, format } => {
            let g = read_graph(&file)?;
            let config = ColoringConfig { coefficient, density_override, s_override };
            match defective_coloring(&g, t, &config)? {
                ColoringOutcome::Colored { partition, params, trace } => {
                    let parts: Vec<Vec<u32>> = partition.parts().iter().map(ids).collect();
                    match format {
                        Format::Json => print_json(&PartitionOut {
                            t,
                            s: params.s,
                            r: params.r,
                            parts,
                            trace_len: trace.len(),
                        }),
                        Format::Text => {
                            println!(
                                "colored: t = {t}, s = {}, trace_len = {}",
                                params.s,
                                trace.len()
                            );
                            for (i, part) in parts.iter().enumerate() {
                                println!("part {i}: {}", join_ids(part));
                            }
                        }
                    }
                    Ok(0)
                }
                ColoringOutcome::Stuck { remaining, params } => {
                    let vertices = live_vertex_ids(&remaining);
                    let hint =
                        format!("K_{} minor present if parameters valid", t as u64 + 1);
                    match format {
                        Format::Json => print_json(&StuckOut {
                            stuck: true,
                            remaining_vertices: vertices,
                            hint,
                        }),
                        Format::Text => {
                            println!(
                                "stuck: {} vertices remain at s = {}",
                                remaining.order(),
                                params.s
                            );
                            println!("remaining: {}", join_ids(&vertices));
                            println!("hint: {hint}");
                        }
                    }
                    Ok(1)
                }
            }
        }
        Command::Verify { s, file, partfile, format } => {
            if file == "-" && partfile == "-" {
                return Err(Failure::Usage(
                    "only one of FILE and PARTFILE may be standard input".into(),
                ));
            }
            let g = read_graph(&file)?;
            let text = read_input(&partfile)?;
            let parsed: PartsIn = serde_json::from_str(&text)
                .map_err(|e| Failure::Usage(format!("{partfile}: {e}")))?;
            let parts: Vec<BTreeSet<VertexId>> = parsed
                .parts
                .iter()
                .map(|part| part.iter().map(|&v| VertexId(v)).collect())
                .collect();
            let report = verify_partition(&g, &parts, s);
            let violations: Vec<String> =
                report.violations.iter().map(|v| v.to_string()).collect();
            match format {
                Format::Json => print_json(&VerifyOut { ok: report.ok, violations }),
                Format::Text => {
                    if report.ok {
                        println!("ok");
                    } else {
                        println!("violations ({}):", violations.len());
                        for v in &violations {
                            println!("- {v}");
                        }
                    }
                }
            }
            Ok(if report.ok { 0 } else { 1 })
        }
        Command::Sharp { s, t } => {
            let g = construct_sharp(s, t)?;
            print!("{}", edge_list_string(&g));
            Ok(0)
        }
        Command::Minor { k, file, budget, format } => {
            if k < 1 {
                return Err(Failure::Usage("-k must be at least 1".into()));
            }
            if budget < 1 {
                return Err(Failure::Usage("--budget must be at least 1".into()));
            }
            let g = read_graph(&file)?;
            let (outcome, sets, code) = match has_clique_minor(&g, k, budget) {
                MinorOutcome::Found { model } => {
                    let sets: Vec<Vec<u32>> = model.branch_sets.iter().map(ids).collect();
                    ("found", Some(sets), 1)
                }
                MinorOutcome::Absent => ("absent", None, 0),
                MinorOutcome::Timeout => ("timeout", None, 3),
            };
            match format {
                Format::Json => print_json(&MinorOut { k, outcome, branch_sets: sets }),
                Format::Text => {
                    println!("{outcome}");
                    if let Some(sets) = &sets {
                        for (i, set) in sets.iter().enumerate() {
                            println!("branch set {i}: {}", join_ids(set));
                        }
                    }
                }
            }
            Ok(code)
        }
        Command::Oracle { parts, file, format } => {
            if parts < 1 {
                return Err(Failure::Usage("-p must be at least 1".into()));
            }
            let g = read_graph(&file)?;
            let defect = min_defect(&g, parts).map_err(|e| Failure::Guard(e.to_string()))?;
            match format {
                Format::Json => print_json(&OracleOut { parts, min_defect: defect }),
                Format::Text => println!("min_defect = {defect}"),
            }
            Ok(0)
        }
        Command::Gen { kind } => {
            let g = match kind {
                GenKind::Forest { n, seed } => gen_forest(n, seed)?,
                GenKind::Ktree { n, k, seed } => gen_ktree(n, k, seed)?,
                GenKind::Grid { width, height } => gen_grid(width, height)?,
                GenKind::Random { n, p, seed } => gen_random(n, p, seed)?,
            };
            print!("{}", edge_list_string(&g));
            Ok(0)
        }
        Command::DensityCheck { t, file, coefficient, format } => {
            if !(coefficient > 0.0) {
                return Err(Failure::Usage(format!(
                    "density coefficient must be positive, got {coefficient}"
                )));
            }
            let g = read_graph(&file)?;
            let report = density_bound_holds(&g, t, coefficient);
            match format {
                Format::Json => print_json(&DensityOut {
                    holds: report.holds,
                    lhs: report.lhs,
                    rhs: report.rhs,
                }),
                Format::Text => println!(
                    "holds = {} (lhs = {}, rhs = {})",
                    report.holds, report.lhs, report.rhs
                ),
            }
            Ok(if report.holds { 0 } else { 1 })
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::try_parse().unwrap_or_else(|e| e.exit());
    match run(cli.command) {
        Ok(code) => ExitCode::from(code),
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        Err(Failure::Guard(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(3)
        }
    }
}
