//! zetalab: regularized determinants, Selberg/Ruelle zeta evaluation from
//! length spectra, graph zeta functions with exact verification, trace
//! formula checks on finite group models, and the `verify` umbrella.
//!
//! Exit codes: 0 success/PASS, 1 verification FAIL, 2 usage error,
//! 3 input validation error. All numeric output is deterministic for
//! fixed inputs and seed.

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use num_complex::Complex64;

mod commands;
mod output;

use commands::CmdError;

#[derive(Parser)]
#[command(name = "zetalab", version, about = "zeta function laboratory", max_term_width = 100)]
struct Cli {
    #[command(subcommand)]
    command: Command,
    /// Absolute tolerance for numeric evaluations.
    #[arg(long, global = true, default_value_t = 1e-10)]
    tol: f64,
    /// Seed for anything randomized.
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
    /// Write primary output to this file instead of stdout.
    #[arg(long, global = true)]
    out: Option<PathBuf>,
    /// Output format for tabular results.
    #[arg(long, global = true, value_enum, default_value_t = Format::Csv)]
    format: Format,
}

#[derive(Copy, Clone, PartialEq, Eq, ValueEnum)]
enum Format {
    Csv,
    Json,
}

#[derive(Subcommand)]
enum Command {
    /// Zeta-regularized determinant of an eigenvalue sequence.
    Regdet(RegdetArgs),
    /// Generalized Selberg zeta function from a spectrum file.
    Selberg(SelbergArgs),
    /// Ruelle zeta function from a spectrum file.
    Ruelle(RuelleArgs),
    /// Graph zeta operations.
    Graph {
        #[command(subcommand)]
        sub: GraphCommand,
    },
    /// Trace formula checks on finite group models.
    Tf {
        #[command(subcommand)]
        sub: TfCommand,
    },
    /// Property suites.
    Verify {
        #[command(subcommand)]
        sub: VerifyCommand,
    },
    /// Generate a synthetic spectrum file.
    Synth(SynthArgs),
}

#[derive(Args)]
struct RegdetArgs {
    /// Finite eigenvalue list, one number per line.
    #[arg(long, conflicts_with_all = ["kappa", "poly"])]
    eigs: Option<PathBuf>,
    /// Shifted-linear sequence a_n = n + kappa.
    #[arg(long, conflicts_with = "poly")]
    kappa: Option<f64>,
    /// Polynomial sequence coefficients "c0,c1,..." (a_n = p(n)).
    #[arg(long, requires = "offset")]
    poly: Option<String>,
    /// First index n0 of the polynomial sequence.
    #[arg(long)]
    offset: Option<u64>,
    /// Shift parameter lambda in det(A + lambda).
    #[arg(long, default_value_t = 0.0)]
    lambda: f64,
    /// Drop exact zero eigenvalues first (det').
    #[arg(long)]
    prime: bool,
}

#[derive(Args)]
struct SelbergArgs {
    /// Spectrum JSON file.
    #[arg(long)]
    spectrum: PathBuf,
    /// Exterior power on the grade-1 root space.
    #[arg(long, default_value_t = 0)]
    q: usize,
    /// Exterior power on the grade-2 root space.
    #[arg(long, default_value_t = 0)]
    p: usize,
    /// Evaluation point "re" or "re,im".
    #[arg(long, conflicts_with = "grid")]
    s: Option<String>,
    /// Real-part grid "re0:re1:n".
    #[arg(long)]
    grid: Option<String>,
    /// Fixed imaginary part used with --grid.
    #[arg(long, default_value_t = 0.0)]
    im: f64,
}

#[derive(Args)]
struct RuelleArgs {
    #[arg(long)]
    spectrum: PathBuf,
    #[arg(long, conflicts_with = "grid")]
    s: Option<String>,
    #[arg(long)]
    grid: Option<String>,
    #[arg(long, default_value_t = 0.0)]
    im: f64,
}

#[derive(Subcommand)]
enum GraphCommand {
    /// Zeta polynomial det(I - T·B) with optional oracle cross-checks.
    Zeta(GraphZetaArgs),
}

#[derive(Args)]
struct GraphZetaArgs {
    /// Graph file: "p <n_vertices> <n_edges>" header then "u v" lines.
    #[arg(long)]
    graph: PathBuf,
    /// Also compare the truncated Euler product to this degree.
    #[arg(long)]
    max_len: Option<usize>,
    /// Which determinant oracle(s) to emit/cross-check.
    #[arg(long, value_enum, default_value_t = Oracle::Hashimoto)]
    oracle: Oracle,
    /// Also emit the divisor (roots with multiplicities) as CSV.
    #[arg(long)]
    divisor: bool,
}

#[derive(Copy, Clone, PartialEq, Eq, ValueEnum)]
enum Oracle {
    Hashimoto,
    Bass,
    Both,
}

#[derive(Subcommand)]
enum TfCommand {
    /// Verify the trace formula on a finite model with random test
    /// functions.
    Verify(TfVerifyArgs),
}

#[derive(Args)]
struct TfVerifyArgs {
    /// Group: cN, dN, sN (N ≤ 4), or file:PATH with a multiplication
    /// table.
    #[arg(long)]
    group: String,
    /// Subgroup: "all", "gen:i,j,...", or "perm:(1 2)(3 4)" for sN.
    #[arg(long, default_value = "all")]
    subgroup: String,
    /// Twist: trivial, sign, or 2dim.
    #[arg(long, default_value = "trivial")]
    omega: String,
    /// Number of random test functions.
    #[arg(long, default_value_t = 50)]
    trials: usize,
}

#[derive(Subcommand)]
enum VerifyCommand {
    /// Run every property suite.
    All,
    /// Ruelle-to-Selberg decomposition residuals on a spectrum file.
    Decomposition(DecompArgs),
}

#[derive(Args)]
struct DecompArgs {
    #[arg(long)]
    spectrum: PathBuf,
    /// Number of sample points above the abscissa.
    #[arg(long, default_value_t = 10)]
    samples: usize,
}

#[derive(Args)]
struct SynthArgs {
    /// Generator kind: arithmetic or random.
    #[arg(long, default_value = "random")]
    kind: String,
    #[arg(long, default_value_t = 5)]
    classes: usize,
    #[arg(long, default_value_t = 1.0)]
    length_base: f64,
    #[arg(long, default_value_t = 1)]
    d1: usize,
    #[arg(long, default_value_t = 0)]
    d2: usize,
    #[arg(long, default_value_t = 1.0)]
    alpha_norm: f64,
    #[arg(long, default_value_t = 1)]
    dim_omega: usize,
}

fn parse_complex(text: &str) -> Result<Complex64, CmdError> {
    let parts: Vec<&str> = text.split(',').collect();
    let bad =
        || CmdError::input(format!("cannot parse complex number '{text}' (want \"re\" or \"re,im\")"));
    match parts.as_slice() {
        [re] => Ok(Complex64::new(re.trim().parse().map_err(|_| bad())?, 0.0)),
        [re, im] => Ok(Complex64::new(
            re.trim().parse().map_err(|_| bad())?,
            im.trim().parse().map_err(|_| bad())?,
        )),
        _ => Err(bad()),
    }
}

fn parse_grid(text: &str, im: f64) -> Result<Vec<Complex64>, CmdError> {
    let parts: Vec<&str> = text.split(':').collect();
    let bad = || CmdError::input(format!("cannot parse grid '{text}' (want \"re0:re1:n\")"));
    let [a, b, n] = parts.as_slice() else { return Err(bad()) };
    let a: f64 = a.trim().parse().map_err(|_| bad())?;
    let b: f64 = b.trim().parse().map_err(|_| bad())?;
    let n: usize = n.trim().parse().map_err(|_| bad())?;
    if n == 0 {
        return Err(CmdError::input("grid needs at least one point".into()));
    }
    Ok((0..n)
        .map(|k| {
            let t = if n == 1 { 0.0 } else { k as f64 / (n - 1) as f64 };
            Complex64::new(a + t * (b - a), im)
        })
        .collect())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match &cli.command {
        Command::Regdet(args) => commands::regdet(args, &cli),
        Command::Selberg(args) => commands::selberg(args, &cli),
        Command::Ruelle(args) => commands::ruelle(args, &cli),
        Command::Graph { sub: GraphCommand::Zeta(args) } => commands::graph_zeta(args, &cli),
        Command::Tf { sub: TfCommand::Verify(args) } => commands::tf_verify(args, &cli),
        Command::Verify { sub: VerifyCommand::All } => commands::verify_all(&cli),
        Command::Verify { sub: VerifyCommand::Decomposition(args) } => {
            commands::verify_decomposition(args, &cli)
        }
        Command::Synth(args) => commands::synth(args, &cli),
    };
    match result {
        Ok(code) => code,
        Err(e) => {
            eprintln!("zetalab: {e}");
            e.exit_code()
        }
    }
}
