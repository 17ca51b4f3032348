//! `fermijack` command-line front-end. Every subcommand writes one JSON
//! document (or a LaTeX string) to stdout.
//!
//! Exit codes: 0 success, 1 verification failure, 2 usage error,
//! 3 resonance or degeneracy at a specialized coupling.

mod verify;

use std::io::{Read, Write};
use std::process::ExitCode;
use std::str::FromStr;

use clap::{Parser, Subcommand, ValueEnum};
use fermijack::halperin::{omega_eigenstate, HalperinError};
use fermijack::partitions::Partition;
use fermijack::spectral_solver::{eigenstate, spectrum, to_polynomial, Model, Normalization, SolverError, Spectrum};
use fermijack::symfunc::{SymBasis, SymmetricPolynomial};
use num_rational::BigRational;
use serde_json::{json, Value};
use thiserror::Error;

#[derive(Debug, Error)]
enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error(transparent)]
    Solver(SolverError),
    #[error(transparent)]
    Halperin(HalperinError),
    #[error("verification failed")]
    VerifyFailed,
}

impl CliError {
    fn exit_code(&self) -> u8 {
        match self {
            CliError::Usage(_) => 2,
            CliError::VerifyFailed => 1,
            CliError::Solver(SolverError::Resonance { .. } | SolverError::Degenerate { .. }) => 3,
            CliError::Halperin(HalperinError::Resonance { .. }) => 3,
            CliError::Halperin(HalperinError::Solver(SolverError::Resonance { .. } | SolverError::Degenerate { .. })) => 3,
            CliError::Solver(_) | CliError::Halperin(_) => 2,
        }
    }
}

impl From<SolverError> for CliError {
    fn from(e: SolverError) -> Self {
        CliError::Solver(e)
    }
}

#[derive(Parser)]
#[command(name = "fermijack", version, about = "Exact Jack, Laughlin and Halperin eigenstates")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum ModelArg {
    Cs,
    Laughlin,
}

impl From<ModelArg> for Model {
    fn from(m: ModelArg) -> Model {
        match m {
            ModelArg::Cs => Model::Cs,
            ModelArg::Laughlin => Model::Laughlin,
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum BasisArg {
    Schur,
    Powersum,
    Monomial,
}

impl From<BasisArg> for SymBasis {
    fn from(b: BasisArg) -> SymBasis {
        match b {
            BasisArg::Schur => SymBasis::Schur,
            BasisArg::Powersum => SymBasis::Powersum,
            BasisArg::Monomial => SymBasis::Monomial,
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum NormalizeArg {
    Monic,
    Paper,
}

impl From<NormalizeArg> for Normalization {
    fn from(n: NormalizeArg) -> Normalization {
        match n {
            NormalizeArg::Monic => Normalization::MonicSchur,
            NormalizeArg::Paper => Normalization::OneK,
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum SuiteArg {
    Identities,
    Fermionization,
    Oracle,
    Squeeze,
    All,
}

#[derive(Clone, Copy, ValueEnum)]
enum FormatArg {
    Json,
    Latex,
}

/// The coupling b², given as `--beta p/q` or as `--beta-num p --beta-den q`.
#[derive(clap::Args)]
struct BetaArgs {
    /// Value of b² as an integer or `p/q`.
    #[arg(long, allow_hyphen_values = true, conflicts_with_all = ["beta_num", "beta_den"])]
    beta: Option<String>,
    #[arg(long, allow_hyphen_values = true)]
    beta_num: Option<i64>,
    #[arg(long, requires = "beta_num")]
    beta_den: Option<i64>,
}

impl BetaArgs {
    fn value(&self) -> Result<Option<BigRational>, CliError> {
        if let Some(s) = &self.beta {
            return BigRational::from_str(s.trim())
                .map(Some)
                .map_err(|_| CliError::Usage(format!("cannot parse coupling `{s}`")));
        }
        match (self.beta_num, self.beta_den) {
            (None, _) => Ok(None),
            (Some(_), Some(0)) => Err(CliError::Usage("coupling denominator is zero".into())),
            (Some(n), d) => Ok(Some(BigRational::new(n.into(), d.unwrap_or(1).into()))),
        }
    }
}

#[derive(Subcommand)]
enum Command {
    /// One Jack eigenstate.
    Jack {
        #[arg(long, value_enum)]
        model: ModelArg,
        /// Parts separated by commas, e.g. 2,2,1,1.
        #[arg(long, allow_hyphen_values = true)]
        lambda: String,
        #[command(flatten)]
        beta: BetaArgs,
        #[arg(long, value_enum, default_value = "schur")]
        basis: BasisArg,
        #[arg(long, value_enum, default_value = "monic")]
        normalize: NormalizeArg,
    },
    /// All energies and eigenstates at one level.
    Spectrum {
        #[arg(long, value_enum)]
        model: ModelArg,
        #[arg(long)]
        level: u32,
        #[command(flatten)]
        beta: BetaArgs,
        #[arg(long, value_enum, default_value = "schur")]
        basis: BasisArg,
    },
    /// A two-layer Halperin eigenstate in the symbols u, v, r.
    Halperin {
        #[arg(long, allow_hyphen_values = true)]
        lambda: String,
        #[arg(long, allow_hyphen_values = true)]
        mu: String,
        /// Particle number of layer 1, the eigenvalue of a¹₀/u.
        #[arg(long = "N1", default_value_t = 0, allow_hyphen_values = true)]
        n1: i64,
    },
    /// Runs exact consistency checks and reports each one.
    Verify {
        #[arg(long, value_enum)]
        suite: SuiteArg,
        #[arg(long, default_value_t = 6)]
        max_weight: u32,
    },
    /// A Jack polynomial (or a polynomial read from JSON) as JSON or LaTeX.
    Export {
        #[arg(long, value_enum)]
        format: FormatArg,
        /// Polynomial JSON to re-emit; `-` reads stdin.
        #[arg(long, conflicts_with_all = ["model", "lambda"])]
        input: Option<String>,
        #[arg(long, value_enum, required_unless_present = "input")]
        model: Option<ModelArg>,
        #[arg(long, required_unless_present = "input")]
        lambda: Option<String>,
        #[command(flatten)]
        beta: BetaArgs,
        #[arg(long, value_enum, default_value = "powersum")]
        basis: BasisArg,
        #[arg(long, value_enum, default_value = "monic")]
        normalize: NormalizeArg,
    },
}

fn parse_partition(s: &str) -> Result<Partition, CliError> {
    let s = s.trim().trim_start_matches(['(', '[']).trim_end_matches([')', ']']);
    let parts = s
        .split(',')
        .map(str::trim)
        .filter(|t| !t.is_empty())
        .map(|t| t.parse::<u32>().map_err(|_| CliError::Usage(format!("`{t}` is not a positive integer part"))))
        .collect::<Result<Vec<_>, _>>()?;
    Partition::new(parts).map_err(|e| CliError::Usage(e.to_string()))
}

fn solve(model: Model, lambda: &Partition, beta: &Option<BigRational>, norm: Normalization) -> Result<Spectrum, CliError> {
    let s = eigenstate(model, lambda)?;
    let s = match beta {
        Some(b) => s.specialize(b)?,
        None => s,
    };
    Ok(s.normalized(norm)?)
}

fn run(cli: Cli) -> Result<String, CliError> {
    let value: Value = match cli.command {
        Command::Jack {
            model,
            lambda,
            beta,
            basis,
            normalize,
        } => solve(model.into(), &parse_partition(&lambda)?, &beta.value()?, normalize.into())?.to_json(basis.into()),
        Command::Spectrum { model, level, beta, basis } => {
            let beta = beta.value()?;
            let states = spectrum(model.into(), level)?
                .into_iter()
                .map(|s| match &beta {
                    Some(b) => s.specialize(b),
                    None => Ok(s),
                })
                .collect::<Result<Vec<_>, _>>()?;
            json!({
                "model": Model::from(model).name(),
                "level": level,
                "states": states.iter().map(|s| s.to_json(basis.into())).collect::<Vec<_>>(),
            })
        }
        Command::Halperin { lambda, mu, n1 } => omega_eigenstate(&parse_partition(&lambda)?, &parse_partition(&mu)?, n1)
            .map_err(CliError::Halperin)?
            .to_json(),
        Command::Verify { suite, max_weight } => {
            let report = verify::run(suite, max_weight);
            let out = serde_json::to_string_pretty(&report.to_json()).expect("serializable");
            if report.passed() {
                return Ok(out);
            }
            emit(&out);
            return Err(CliError::VerifyFailed);
        }
        Command::Export {
            format,
            input,
            model,
            lambda,
            beta,
            basis,
            normalize,
        } => {
            let poly = match input {
                Some(path) => read_polynomial(&path)?,
                None => {
                    let (model, lambda) = model.zip(lambda).ok_or_else(|| CliError::Usage("--model and --lambda are required".into()))?;
                    let s = solve(model.into(), &parse_partition(&lambda)?, &beta.value()?, normalize.into())?;
                    to_polynomial(&s).convert(basis.into())
                }
            };
            match format {
                FormatArg::Json => poly.to_json(),
                FormatArg::Latex => return Ok(poly.to_latex()),
            }
        }
    };
    Ok(serde_json::to_string_pretty(&value).expect("serializable"))
}

fn read_polynomial(path: &str) -> Result<SymmetricPolynomial<fermijack::coeffield::ParamScalar>, CliError> {
    let mut text = String::new();
    let read = if path == "-" {
        std::io::stdin().read_to_string(&mut text).map(|_| ())
    } else {
        std::fs::read_to_string(path).map(|t| text = t)
    };
    read.map_err(|e| CliError::Usage(format!("cannot read {path}: {e}")))?;
    let v: Value = serde_json::from_str(&text).map_err(|e| CliError::Usage(format!("invalid JSON: {e}")))?;
    SymmetricPolynomial::from_json(&v).map_err(|e| CliError::Usage(e.to_string()))
}

/// Writes to stdout, tolerating a closed pipe.
fn emit(out: &str) {
    let mut stdout = std::io::stdout().lock();
    let _ = writeln!(stdout, "{out}");
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 2 } else { 0 });
        }
    };
    match run(cli) {
        Ok(out) => {
            emit(&out);
            ExitCode::SUCCESS
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}
