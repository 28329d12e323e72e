//! `lfcd` command line.
//!
//! Exit codes: 0 success, 1 usage error, 2 data error, 3 numeric failure.

use std::ffi::OsString;
use std::fs::File;
use std::io::{BufReader, BufWriter, Write};
use std::ops::RangeInclusive;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand, ValueEnum};

use crate::centrality::distance_centrality_all;
use crate::compare::{run_compare, write_csv, CompareConfig};
use crate::error::Error;
use crate::graph::{load_edge_list, write_edge_list, NodeIdMap};
use crate::leader_follower::detect;
use crate::metrics::score;
use crate::partition::{align_partitions, read_partition, write_partition};
use crate::planted::{generate, PlantedSpec};
use crate::spectral::spectral_cluster;

pub const EXIT_OK: i32 = 0;
pub const EXIT_USAGE: i32 = 1;
pub const EXIT_DATA: i32 = 2;
pub const EXIT_NUMERIC: i32 = 3;

#[derive(Debug, Parser)]
#[command(name = "lfcd", version, about = "Leader-follower community detection")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Algo {
    /// leader-follower (learns k)
    Lf,
    /// RatioCut spectral clustering (needs --k)
    Spectral,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Generate a planted-clique instance and its ground truth.
    Generate {
        #[arg(long)]
        communities: usize,
        #[arg(long)]
        min_size: usize,
        #[arg(long)]
        max_size: usize,
        #[arg(long)]
        inter_edges: usize,
        #[arg(long)]
        seed: u64,
        #[arg(long)]
        allow_disconnected: bool,
        #[arg(long)]
        graph_out: PathBuf,
        #[arg(long)]
        truth_out: PathBuf,
    },
    /// Partition an edge-list graph.
    Detect {
        #[arg(long, value_enum)]
        algo: Algo,
        #[arg(long)]
        k: Option<usize>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long)]
        graph: PathBuf,
        #[arg(long)]
        out: PathBuf,
    },
    /// Print per-node distance centrality (within each connected component).
    Centrality {
        #[arg(long)]
        graph: PathBuf,
    },
    /// Score a predicted partition against the truth.
    Score {
        #[arg(long)]
        truth: PathBuf,
        #[arg(long)]
        pred: PathBuf,
    },
    /// Leader-follower vs. spectral over seeds and inter-edge counts.
    Compare {
        #[arg(long)]
        communities: usize,
        #[arg(long)]
        min_size: usize,
        #[arg(long)]
        max_size: usize,
        /// Inclusive seed range `A..B`, or a single seed.
        #[arg(long, value_parser = parse_seed_range)]
        seeds: RangeInclusive<u64>,
        #[arg(long, value_delimiter = ',', required = true)]
        inter_edges: Vec<usize>,
        #[arg(long)]
        csv_out: PathBuf,
    },
}

fn parse_seed_range(s: &str) -> Result<RangeInclusive<u64>, String> {
    let parse = |x: &str| x.trim().parse::<u64>().map_err(|e| format!("bad seed {x:?}: {e}"));
    match s.split_once("..") {
        Some((a, b)) => {
            let (a, b) = (parse(a)?, parse(b.trim_start_matches('='))?);
            if a > b {
                return Err(format!("empty seed range {s}"));
            }
            Ok(a..=b)
        }
        None => {
            let a = parse(s)?;
            Ok(a..=a)
        }
    }
}

enum Failure {
    Usage(String),
    Run(Error),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Run(e)
    }
}

impl From<std::io::Error> for Failure {
    fn from(e: std::io::Error) -> Self {
        Failure::Run(e.into())
    }
}

fn exit_code(e: &Error) -> i32 {
    match e {
        Error::NoConvergence { .. } | Error::NotSymmetric { .. } => EXIT_NUMERIC,
        _ => EXIT_DATA,
    }
}

fn need_input(path: &Path) -> Result<(), Failure> {
    if path.is_file() {
        Ok(())
    } else {
        Err(Failure::Usage(format!("input file {} does not exist", path.display())))
    }
}

fn need_output(path: &Path) -> Result<(), Failure> {
    match path.parent() {
        Some(dir) if !dir.as_os_str().is_empty() && !dir.is_dir() => Err(Failure::Usage(format!(
            "output directory {} does not exist",
            dir.display()
        ))),
        _ => Ok(()),
    }
}

fn create(path: &Path) -> Result<BufWriter<File>, Failure> {
    Ok(BufWriter::new(File::create(path)?))
}

fn open(path: &Path) -> Result<BufReader<File>, Failure> {
    Ok(BufReader::new(File::open(path)?))
}

fn execute(command: Command, stdout: &mut dyn Write) -> Result<(), Failure> {
    match command {
        Command::Generate {
            communities,
            min_size,
            max_size,
            inter_edges,
            seed,
            allow_disconnected,
            graph_out,
            truth_out,
        } => {
            need_output(&graph_out)?;
            need_output(&truth_out)?;
            let spec = PlantedSpec {
                require_connected: !allow_disconnected,
                ..PlantedSpec::new(communities, min_size, max_size, inter_edges, seed)
            };
            let inst = generate(&spec)?;
            let map = NodeIdMap::identity(inst.graph.node_count());
            let mut g = create(&graph_out)?;
            write_edge_list(&inst.graph, &map, &mut g)?;
            g.flush()?;
            let mut t = create(&truth_out)?;
            write_partition(&inst.truth, &map, &mut t)?;
            t.flush()?;
        }
        Command::Detect {
            algo,
            k,
            seed,
            graph,
            out,
        } => {
            need_input(&graph)?;
            need_output(&out)?;
            if algo == Algo::Spectral && k.is_none() {
                return Err(Failure::Usage("--algo spectral requires --k".into()));
            }
            let (g, map) = load_edge_list(open(&graph)?)?;
            let partition = match algo {
                Algo::Lf => detect(&g)?,
                Algo::Spectral => spectral_cluster(&g, k.expect("checked above"), seed)?,
            };
            let mut w = create(&out)?;
            write_partition(&partition, &map, &mut w)?;
            w.flush()?;
        }
        Command::Centrality { graph } => {
            need_input(&graph)?;
            let (g, map) = load_edge_list(open(&graph)?)?;
            let mut rows: Vec<(&str, u64)> = Vec::with_capacity(g.node_count());
            for component in g.connected_components() {
                let dc = distance_centrality_all(&g.induced_subgraph(&component))?;
                rows.extend(component.iter().zip(dc.values()).map(|(&v, &d)| (map.label(v), d)));
            }
            rows.sort_unstable();
            for (label, d) in rows {
                writeln!(stdout, "{label}\t{d}")?;
            }
        }
        Command::Score { truth, pred } => {
            need_input(&truth)?;
            need_input(&pred)?;
            let t = read_partition(open(&truth)?)?;
            let p = read_partition(open(&pred)?)?;
            let (t, p) = align_partitions(&t, &p)?;
            writeln!(stdout, "{}", score(&t, &p)?)?;
        }
        Command::Compare {
            communities,
            min_size,
            max_size,
            seeds,
            inter_edges,
            csv_out,
        } => {
            need_output(&csv_out)?;
            let cfg = CompareConfig {
                communities,
                size_min: min_size,
                size_max: max_size,
                seeds,
                inter_edges,
            };
            let rows = run_compare(&cfg)?;
            let mut w = create(&csv_out)?;
            write_csv(&rows, &mut w)?;
            w.flush()?;
        }
    }
    Ok(())
}

/// Parses `argv` (including the program name) and runs the subcommand.
/// Returns the process exit code.
pub fn run<I, T>(argv: I, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let text = e.render().to_string();
            if e.use_stderr() {
                let _ = write!(stderr, "{text}");
            } else {
                let _ = write!(stdout, "{text}");
            }
            return code;
        }
    };
    match execute(cli.command, stdout) {
        Ok(()) => EXIT_OK,
        Err(Failure::Usage(msg)) => {
            let _ = writeln!(stderr, "error: {msg}");
            EXIT_USAGE
        }
        Err(Failure::Run(e)) => {
            let _ = writeln!(stderr, "error: {e}");
            exit_code(&e)
        }
    }
}
