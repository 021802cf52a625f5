//! `tfim-magic`: scans, histograms, gaps, oracle reports and thermodynamic
//! densities for the momentum-space magic of the transverse-field Ising chain.

mod commands;
mod grid;

use std::fmt;
use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

#[derive(Debug, Parser)]
#[command(name = "tfim-magic", version, about = "Momentum-space magic of the transverse-field Ising chain")]
struct Cli {
    #[command(subcommand)]
    command: Command,

    /// Seed for every stochastic path.
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,

    /// Output file; standard output when omitted.
    #[arg(long, global = true)]
    out: Option<PathBuf>,

    /// Output format. `oracle` always writes JSON.
    #[arg(long, global = true, value_enum)]
    format: Option<Format>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Csv,
    Json,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Method {
    Exact,
    Conv,
    Sample,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum NormalizationArg {
    #[value(name = "counts-of-nonzero")]
    NonzeroStrings,
    #[value(name = "full-4^N")]
    AllStrings,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Stabilizer Renyi entropies over a field grid: `N,g,n,M_n,M_n_per_site`.
    Entropy(EntropyArgs),
    /// Histogram of ell = -ln|<Sigma>| (or of x with --x-bins).
    Hist(HistArgs),
    /// Magic gap over a field grid: `N,g,magic_gap`.
    Gap(GapArgs),
    /// Brute-force verification report (JSON).
    Oracle(OracleArgs),
    /// Thermodynamic-limit density, or one-sided derivatives with --derivative.
    Thermo(ThermoArgs),
}

#[derive(Debug, Args)]
struct EntropyArgs {
    #[arg(long)]
    n_sites: usize,
    /// Field value or `min:max:step`.
    #[arg(long)]
    g: String,
    /// Comma-separated Renyi indices.
    #[arg(long, default_value = "2")]
    renyi: String,
}

#[derive(Debug, Args)]
struct HistArgs {
    #[arg(long)]
    n_sites: usize,
    #[arg(long)]
    g: f64,
    #[arg(long, value_enum, default_value_t = Method::Conv)]
    method: Method,
    #[arg(long, default_value_t = 1_000_000)]
    samples: u64,
    /// Upper end of the ell axis; defaults to 40 sqrt(N).
    #[arg(long)]
    l_max: Option<f64>,
    #[arg(long, default_value_t = 1e-3)]
    delta: f64,
    #[arg(long, value_enum, default_value_t = NormalizationArg::NonzeroStrings)]
    normalization: NormalizationArg,
    /// Emit the regular part on this many uniform bins in x instead.
    #[arg(long)]
    x_bins: Option<usize>,
}

#[derive(Debug, Args)]
struct GapArgs {
    #[arg(long, required_unless_present = "doubling")]
    n_sites: Option<usize>,
    #[arg(long)]
    g: String,
    /// Sizes `min:max`, doubling from `min`.
    #[arg(long, conflicts_with = "n_sites")]
    doubling: Option<String>,
}

#[derive(Debug, Args)]
struct OracleArgs {
    #[arg(long)]
    n_sites: usize,
    #[arg(long)]
    g: f64,
}

#[derive(Debug, Args)]
struct ThermoArgs {
    #[arg(long)]
    g: String,
    #[arg(long, default_value = "2")]
    renyi: String,
    /// One-sided derivatives of M_2/N at each grid point.
    #[arg(long)]
    derivative: bool,
    /// Largest finite-difference step for --derivative.
    #[arg(long, default_value_t = 0.01)]
    h: f64,
    /// Finite size for --derivative; thermodynamic limit when omitted.
    #[arg(long, requires = "derivative")]
    n_sites: Option<usize>,
}

/// Failure classes with distinct exit codes.
#[derive(Debug)]
pub enum CliError {
    /// Bad flags or parameters (exit 2).
    Validation(String),
    /// A verification tolerance failed (exit 3).
    Verification(String),
    /// Reading or writing failed (exit 1).
    Io(io::Error),
}

impl CliError {
    fn exit_code(&self) -> u8 {
        match self {
            CliError::Io(_) => 1,
            CliError::Validation(_) => 2,
            CliError::Verification(_) => 3,
        }
    }
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliError::Validation(m) => write!(f, "invalid input: {m}"),
            CliError::Verification(m) => write!(f, "verification failed: {m}"),
            CliError::Io(e) => write!(f, "i/o error: {e}"),
        }
    }
}

impl From<io::Error> for CliError {
    fn from(e: io::Error) -> Self {
        CliError::Io(e)
    }
}

impl From<tfim_magic::Error> for CliError {
    fn from(e: tfim_magic::Error) -> Self {
        CliError::Validation(e.to_string())
    }
}

impl From<serde_json::Error> for CliError {
    fn from(e: serde_json::Error) -> Self {
        CliError::Io(e.into())
    }
}

fn run(cli: Cli) -> Result<(), CliError> {
    let mut buf = Vec::new();
    let format = cli.format.unwrap_or(Format::Csv);
    let outcome = match cli.command {
        Command::Entropy(a) => commands::entropy(&a, format, &mut buf),
        Command::Hist(a) => commands::hist(&a, format, cli.seed, &mut buf),
        Command::Gap(a) => commands::gap(&a, format, &mut buf),
        Command::Oracle(a) => {
            if cli.format == Some(Format::Csv) {
                return Err(CliError::Validation("oracle reports are JSON only".into()));
            }
            commands::oracle(&a, &mut buf)
        }
        Command::Thermo(a) => commands::thermo(&a, format, &mut buf),
    };
    // A failed verification still writes its report.
    if outcome.is_ok() || matches!(outcome, Err(CliError::Verification(_))) {
        match &cli.out {
            Some(path) => {
                let mut w = BufWriter::new(File::create(path)?);
                w.write_all(&buf)?;
                w.flush()?;
            }
            None => io::stdout().lock().write_all(&buf)?,
        }
    }
    outcome
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("tfim-magic: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}
