//! `turanlab`: construct graphs, compute Turán-type quantities, check
//! inequalities and run exhaustive scans from the command line.
//!
//! Structured output is one JSON record per line with a fixed key order.
//! Exit status: 0 success, 1 a violated bound or failed criterion, 2 bad
//! input, capacity or usage errors.

mod commands;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use turanlab::partition::DEFAULT_SEED;

#[derive(Parser, Debug)]
#[command(
    name = "turanlab",
    version,
    about = "Turán-type extremal graph quantities and inequality checks"
)]
struct Cli {
    #[command(flatten)]
    global: Global,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Debug, Clone)]
pub struct Global {
    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    pub format: Format,
    /// Seed for randomised restarts (p-spectral optimiser, partition heuristic).
    #[arg(long, global = true, default_value_t = DEFAULT_SEED)]
    pub seed: u64,
    /// Worker threads; TURANLAB_WORKERS takes precedence when set.
    #[arg(long, global = true)]
    pub parallelism: Option<usize>,
}

#[derive(ValueEnum, Debug, Clone, Copy, PartialEq, Eq)]
pub enum Format {
    /// One JSON record per line.
    Json,
    /// Human-readable columns.
    Text,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Build a named graph family member.
    Construct(ConstructArgs),
    /// Basic statistics and a spectral radius for each input graph.
    Analyze(AnalyzeArgs),
    /// Evaluate one inequality, or all of them, on each input graph.
    Check(CheckArgs),
    /// Fewest deletions to r-partite, or edit distance to T_r(n).
    Partition(PartitionArgs),
    /// Best value and extremal classes over all F-free graphs on n vertices.
    Extremal(ExtremalArgs),
    /// Deficit, edit distance and D_r for every F-free graph on n vertices.
    ScanStability(StabilityArgs),
    /// Largest A_α eigenvalue among K_{r+1}-free graphs for several α.
    AlphaExtremal(AlphaArgs),
    /// Isomorphism classes on n vertices, optionally F-free.
    Enumerate(EnumerateArgs),
    /// Run the acceptance criteria.
    VerifyPaper(VerifyArgs),
}

#[derive(Args, Debug)]
pub struct ConstructArgs {
    /// turan, multipartite, complete, cycle, wheel, book, friendship, split,
    /// splitplus, empty, blowup, join, union
    pub family: String,
    /// Integer parameters, or graph6 strings for blowup/join/union.
    pub params: Vec<String>,
    #[arg(long, value_enum, default_value_t = Emit::Graph6)]
    pub emit: Emit,
}

#[derive(ValueEnum, Debug, Clone, Copy, PartialEq, Eq)]
pub enum Emit {
    Graph6,
    /// `n m` then one `u v` line per edge.
    Edges,
}

#[derive(Args, Debug)]
pub struct AnalyzeArgs {
    /// graph6 string, or `-` for graph6 lines on standard input.
    pub graph: String,
    /// A, Q or Aalpha=x.
    #[arg(long, default_value = "A")]
    pub matrix: String,
    /// Also compute the p-spectral radius (real p >= 1 or `inf`).
    #[arg(long)]
    pub p: Option<String>,
    /// Include the full spectrum.
    #[arg(long)]
    pub spectrum: bool,
}

#[derive(Args, Debug)]
pub struct CheckArgs {
    /// Bound id (e.g. TuranEdges) or `all`.
    pub bound: String,
    pub graph: String,
    #[arg(long)]
    pub r: Option<usize>,
    #[arg(long)]
    pub s: Option<usize>,
    #[arg(long)]
    pub p: Option<String>,
    /// Smaller exponent for PSpectralMonotone.
    #[arg(long)]
    pub q: Option<String>,
    #[arg(long)]
    pub t: Option<usize>,
}

#[derive(Args, Debug)]
pub struct PartitionArgs {
    pub graph: String,
    #[arg(long)]
    pub r: usize,
    #[arg(long, conflicts_with = "heuristic")]
    pub exact: bool,
    #[arg(long)]
    pub heuristic: bool,
    /// Balanced partition minimising the edit distance to T_r(n).
    #[arg(long)]
    pub edit_distance: bool,
}

#[derive(Args, Debug)]
pub struct ExtremalArgs {
    #[arg(long)]
    pub n: usize,
    /// graph6 of the forbidden graph.
    #[arg(long)]
    pub forbid: String,
    /// edges, lambda, q, delta, ks=s, lp=p or aalpha=x.
    #[arg(long)]
    pub objective: String,
    /// graph6 corpus for orders beyond the internal catalog.
    #[arg(long)]
    pub corpus: Option<PathBuf>,
}

#[derive(Args, Debug)]
pub struct StabilityArgs {
    #[arg(long)]
    pub n: usize,
    #[arg(long)]
    pub forbid: String,
    #[arg(long)]
    pub r: usize,
    /// edges, lambda or ks=s.
    #[arg(long, default_value = "edges")]
    pub deficit: String,
    #[arg(long)]
    pub corpus: Option<PathBuf>,
}

#[derive(Args, Debug)]
pub struct AlphaArgs {
    #[arg(long)]
    pub n: usize,
    #[arg(long)]
    pub r: usize,
    /// Comma-separated α values in [0, 1].
    #[arg(long, value_delimiter = ',', required = true)]
    pub alpha: Vec<f64>,
    #[arg(long)]
    pub corpus: Option<PathBuf>,
}

#[derive(Args, Debug)]
pub struct EnumerateArgs {
    #[arg(long)]
    pub n: usize,
    #[arg(long)]
    pub forbid: Option<String>,
}

#[derive(Args, Debug)]
pub struct VerifyArgs {
    #[arg(long, default_value = "quick")]
    pub level: String,
    /// Extra graph6 corpus for the round-trip criterion.
    #[arg(long)]
    pub corpus: Option<PathBuf>,
    /// Run only these criteria (comma-separated, 1-based).
    #[arg(long, value_delimiter = ',')]
    pub criteria: Vec<usize>,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Err(e) = commands::configure_workers(&cli.global) {
        return commands::report_error(&e);
    }
    let mut out = std::io::stdout().lock();
    let result = match cli.command {
        Command::Construct(a) => commands::construct(&cli.global, &a, &mut out),
        Command::Analyze(a) => commands::analyze(&cli.global, &a, &mut out),
        Command::Check(a) => commands::check(&cli.global, &a, &mut out),
        Command::Partition(a) => commands::partition(&cli.global, &a, &mut out),
        Command::Extremal(a) => commands::extremal(&cli.global, &a, &mut out),
        Command::ScanStability(a) => commands::scan_stability(&cli.global, &a, &mut out),
        Command::AlphaExtremal(a) => commands::alpha_extremal(&cli.global, &a, &mut out),
        Command::Enumerate(a) => commands::enumerate(&cli.global, &a, &mut out),
        Command::VerifyPaper(a) => commands::verify_paper(&cli.global, &a, &mut out),
    };
    match result {
        Ok(commands::Outcome::Ok) => ExitCode::SUCCESS,
        Ok(commands::Outcome::Failed) => ExitCode::from(1),
        Err(e) => commands::report_error(&e),
    }
}
