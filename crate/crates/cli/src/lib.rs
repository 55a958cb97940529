//! Command-line front end for `invcount-core`: single counts, Poincaré series
//! tables, cross-method verification and method timing.

pub mod bench;
pub mod output;
pub mod reference;
pub mod verify;

use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use invcount_core::invariant_counts::{count, poincare_series};
use invcount_core::{CountError, Form, Method, WorkBudget, DEFAULT_WORK_LIMIT};
use thiserror::Error;

use crate::output::{CountRecord, SeriesFormat, SeriesRecord};

#[derive(Debug, Parser)]
#[command(name = "invcount", version, about = "Counts invariants of binary and ternary forms")]
pub struct Cli {
    /// Upper bound on DP cells / diagram states per computation.
    #[arg(long, global = true, default_value_t = DEFAULT_WORK_LIMIT)]
    pub work_limit: u64,

    /// Write stdout content to this file instead.
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Print one coefficient of the Poincaré series.
    Count(CountArgs),
    /// Print the Poincaré series up to a degree.
    Series(SeriesArgs),
    /// Cross-check all methods and the structural identities.
    Verify(VerifyArgs),
    /// Time every ternary method per degree, as CSV.
    Bench(BenchArgs),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum FormArg {
    Binary,
    Ternary,
}

impl From<FormArg> for Form {
    fn from(f: FormArg) -> Self {
        match f {
            FormArg::Binary => Form::Binary,
            FormArg::Ternary => Form::Ternary,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum MethodArg {
    Counting,
    Genfunc,
    Pqbinom,
    Peel,
    Omega,
    Qbinom,
}

impl From<MethodArg> for Method {
    fn from(m: MethodArg) -> Self {
        match m {
            MethodArg::Counting => Method::Counting,
            MethodArg::Genfunc => Method::Genfunc,
            MethodArg::Pqbinom => Method::Pqbinom,
            MethodArg::Peel => Method::Peel,
            MethodArg::Omega => Method::Omega,
            MethodArg::Qbinom => Method::Qbinom,
        }
    }
}

#[derive(Debug, Args)]
pub struct CountArgs {
    #[arg(long, value_enum)]
    pub form: FormArg,
    /// Degree of the form.
    #[arg(long)]
    pub d: u32,
    /// Degree of the invariants.
    #[arg(long)]
    pub n: u32,
    #[arg(long, value_enum)]
    pub method: Option<MethodArg>,
    /// Emit a JSON object instead of the bare number.
    #[arg(long)]
    pub json: bool,
}

#[derive(Debug, Args)]
pub struct SeriesArgs {
    #[arg(long, value_enum)]
    pub form: FormArg,
    #[arg(long)]
    pub d: u32,
    /// Highest degree to print.
    #[arg(long)]
    pub max: u32,
    #[arg(long, value_enum)]
    pub method: Option<MethodArg>,
    #[arg(long, value_enum, default_value_t = SeriesFormat::Text)]
    pub format: SeriesFormat,
    /// Omit degrees whose coefficient is zero.
    #[arg(long)]
    pub skip_zeros: bool,
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    #[arg(long, default_value_t = 4)]
    pub d_max: u32,
    #[arg(long, default_value_t = 9)]
    pub n_max: u32,
    #[arg(long, default_value_t = 20)]
    pub lambda_max: u32,
}

#[derive(Debug, Args)]
pub struct BenchArgs {
    #[arg(long)]
    pub d: u32,
    #[arg(long)]
    pub max: u32,
    /// Runs per measurement; the fastest is reported.
    #[arg(long, default_value_t = 1, value_parser = clap::value_parser!(u32).range(1..))]
    pub repeat: u32,
}

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error("{0}")]
    WorkLimit(String),
    #[error("verification failed: {0}")]
    VerificationFailed(String),
    #[error("{0}")]
    Internal(String),
    #[error(transparent)]
    Io(#[from] io::Error),
}

impl CliError {
    /// 0 ok, 1 verification failure, 2 usage, 3 resource limit.
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::VerificationFailed(_) | CliError::Internal(_) | CliError::Io(_) => 1,
            CliError::Usage(_) => 2,
            CliError::WorkLimit(_) => 3,
        }
    }
}

impl From<CountError> for CliError {
    fn from(e: CountError) -> Self {
        match e {
            CountError::UnsupportedMethod { .. } => CliError::Usage(e.to_string()),
            CountError::WorkLimit(_) => CliError::WorkLimit(e.to_string()),
            CountError::Decompose(_) => CliError::Internal(e.to_string()),
        }
    }
}

/// Runs `cli`, sending data to `--out` or stdout.
pub fn run(cli: &Cli) -> Result<(), CliError> {
    match &cli.out {
        Some(path) => {
            let mut w = BufWriter::new(File::create(path)?);
            execute(cli, &mut w)?;
            w.flush()?;
            Ok(())
        }
        None => {
            let stdout = io::stdout();
            let mut w = stdout.lock();
            execute(cli, &mut w)
        }
    }
}

fn resolve_method(form: Form, method: Option<MethodArg>) -> Result<Method, CliError> {
    let method = method.map(Method::from).unwrap_or(form.default_method());
    if !method.supports(form) {
        return Err(CliError::Usage(format!("method `{method}` does not apply to {form} forms")));
    }
    Ok(method)
}

pub fn execute(cli: &Cli, out: &mut dyn Write) -> Result<(), CliError> {
    match &cli.command {
        Command::Count(a) => {
            let form = Form::from(a.form);
            let method = resolve_method(form, a.method)?;
            let value = count(form, method, a.d, a.n, &mut WorkBudget::new(cli.work_limit))?;
            if a.json {
                let rec = CountRecord::new(form, a.d, a.n, method, &value);
                writeln!(out, "{}", serde_json::to_string(&rec).expect("plain struct serializes"))?;
            } else {
                writeln!(out, "{value}")?;
            }
        }
        Command::Series(a) => {
            let form = Form::from(a.form);
            let method = resolve_method(form, a.method)?;
            let rows = poincare_series(form, a.d, a.max, method, &mut WorkBudget::new(cli.work_limit))?;
            let rec = SeriesRecord::new(form, a.d, method, &rows, a.skip_zeros);
            rec.write(a.format, out)?;
        }
        Command::Verify(a) => {
            let report = verify::run_checks(&verify::VerifyConfig {
                d_max: a.d_max,
                n_max: a.n_max,
                lambda_max: a.lambda_max,
                work_limit: cli.work_limit,
            });
            report.write(out)?;
            if let Some(first) = report.first_failure() {
                return Err(CliError::VerificationFailed(first.to_string()));
            }
        }
        Command::Bench(a) => {
            bench::run(a.d, a.max, a.repeat, cli.work_limit, out)?;
        }
    }
    Ok(())
}
