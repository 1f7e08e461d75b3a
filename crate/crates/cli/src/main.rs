use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use corrcoh::coherence::{MeasureKind, ENTROPY_TOL};

mod commands;

#[derive(Parser, Debug)]
#[command(name = "corrcoh", version, about = "Correlated coherence measures and monogamy checks")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Print every applicable measure of one state as JSON.
    Measure(MeasureArgs),
    /// Monogamy gap over a (p, epsilon) grid as CSV `p,epsilon,M`.
    Sweep(SweepArgs),
    /// Run the bundled relation suite; exits 1 if any relation fails.
    Verify(VerifyArgs),
    /// Randomized probe of l1 monogamy; prints a JSON summary.
    Search(SearchArgs),
}

/// A state given either by family tag or by JSON file.
#[derive(Args, Debug, Clone, Default)]
pub struct StateSource {
    /// Family tag: classical_bits, bell_pair, x_interpolation, jiang, ghzw, phi_pe, psi_pe, acin_four.
    #[arg(long)]
    pub family: Option<String>,
    /// Comma-separated family parameters (amplitude families accept re,im pairs).
    #[arg(long, value_delimiter = ',', allow_hyphen_values = true)]
    pub params: Vec<f64>,
    /// JSON state file with `dims` and `matrix` or `vector`.
    #[arg(long, conflicts_with_all = ["family", "params"])]
    pub state_file: Option<PathBuf>,
}

#[derive(Args, Debug)]
pub struct MeasureArgs {
    #[command(flatten)]
    pub source: StateSource,
    /// Write the measured density matrix as a state file.
    #[arg(long)]
    pub dump_state: Option<PathBuf>,
    /// Validation tolerance for matrix state files.
    #[arg(long, default_value_t = corrcoh::state::DENSITY_TOL)]
    pub tolerance: f64,
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Args, Debug)]
pub struct SweepArgs {
    /// phi_pe or psi_pe.
    #[arg(long)]
    pub family: String,
    /// Points per axis over [0, 1].
    #[arg(long, default_value_t = 101, value_parser = clap::value_parser!(u32).range(2..=10_001))]
    pub grid_steps: u32,
    #[arg(long, default_value = "l1", value_parser = parse_measure)]
    pub measure: MeasureKind,
    /// Pivot subsystem: A, B, C or 0, 1, 2.
    #[arg(long, default_value = "A", value_parser = parse_pivot)]
    pub pivot: usize,
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Args, Debug)]
pub struct VerifyArgs {
    /// Random states per relation.
    #[arg(long, default_value_t = 200)]
    pub samples: usize,
    #[arg(long, default_value_t = 1)]
    pub seed: u64,
    /// Points per axis for the (p, epsilon) family checks.
    #[arg(long, default_value_t = 101, value_parser = clap::value_parser!(u32).range(2..=10_001))]
    pub grid_steps: u32,
    /// Tolerance for entropy-level relations.
    #[arg(long, default_value_t = ENTROPY_TOL)]
    pub tolerance: f64,
    /// Also check a user-supplied state.
    #[command(flatten)]
    pub source: StateSource,
    /// Write the full report as JSON.
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Args, Debug)]
pub struct SearchArgs {
    /// Three comma-separated subsystem dimensions.
    #[arg(long, default_value = "2,2,2", value_delimiter = ',')]
    pub dims: Vec<usize>,
    #[arg(long, default_value_t = 1000, value_parser = clap::value_parser!(u64).range(1..))]
    pub samples: u64,
    #[arg(long, default_value_t = 1)]
    pub seed: u64,
    /// Sample full-rank Ginibre mixed states instead of Haar pure states.
    #[arg(long)]
    pub mixed: bool,
    #[arg(long)]
    pub out: Option<PathBuf>,
}

fn parse_measure(s: &str) -> Result<MeasureKind, String> {
    s.parse::<MeasureKind>().map_err(|e| e.to_string())
}

fn parse_pivot(s: &str) -> Result<usize, String> {
    match s {
        "A" | "a" | "0" => Ok(0),
        "B" | "b" | "1" => Ok(1),
        "C" | "c" | "2" => Ok(2),
        _ => Err(format!("pivot must be A, B, C or 0, 1, 2 (got {s:?})")),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match cli.command {
        Command::Measure(a) => commands::measure(&a),
        Command::Sweep(a) => commands::sweep(&a),
        Command::Verify(a) => commands::verify(&a),
        Command::Search(a) => commands::search(&a),
    };
    match result {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::FAILURE
        }
    }
}
