//! `lring`: load instance files, compute radicals and decompositions, and
//! run the theorem suite.
//!
//! Exit status: 0 on success, 1 on a parse or validation error, 2 when a
//! result is unavailable (cap exceeded, hypothesis not met), 3 when a
//! theorem check fails.

mod commands;
mod instance;

use std::ffi::OsString;
use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};
use lring_core::Error;

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("{0}")]
    Validation(String),
    #[error("{0}")]
    Unavailable(String),
    #[error("{0}")]
    Failed(String),
}

impl CliError {
    pub fn code(&self) -> u8 {
        match self {
            CliError::Validation(_) => 1,
            CliError::Unavailable(_) => 2,
            CliError::Failed(_) => 3,
        }
    }
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        match e {
            Error::CapExceeded { .. } => CliError::Unavailable(format!("{e}; try smaller carriers or a larger --cap")),
            Error::Hypothesis(_) | Error::NoDecomposition(_) | Error::SumZeroMismatch(..) | Error::NotIdeal(_) => {
                CliError::Unavailable(e.to_string())
            }
            Error::Inconsistent(_) => CliError::Failed(e.to_string()),
            _ => CliError::Validation(e.to_string()),
        }
    }
}

#[derive(Parser)]
#[command(
    name = "lring",
    version,
    about = "Ideals, radicals and primary decompositions in L-subrings of finite rings"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
pub enum Target {
    Radical,
    PrimeRadical,
    SemiprimeRadical,
    Sum,
    Cut,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
pub enum MuArg {
    /// `mu ≡ top` only
    Top,
    /// every L-subring of each ring
    All,
}

#[derive(Subcommand)]
enum Command {
    /// Validate an instance file and classify its ideals.
    Validate { file: PathBuf },
    /// Compute a radical, a sum or a level cut.
    Compute {
        file: PathBuf,
        #[arg(value_enum)]
        target: Target,
        /// Name of the ideal (`mu` for mu itself).
        #[arg(long)]
        ideal: String,
        /// Second ideal, for `sum`.
        #[arg(long)]
        other: Option<String>,
        /// Level label, for `cut`.
        #[arg(long)]
        level: Option<String>,
        /// Strong cut (values strictly above the level).
        #[arg(long)]
        strong: bool,
        /// Bound on the number of candidates a radical search may visit.
        #[arg(long)]
        cap: Option<u128>,
    },
    /// Build a primary decomposition of an ideal (chain lattices only).
    Decompose {
        file: PathBuf,
        #[arg(long)]
        ideal: String,
        /// Exit with status 2 unless the decomposition is reduced.
        #[arg(long)]
        require_reduced: bool,
        #[arg(long)]
        cap: Option<u128>,
    },
    /// Check the theorem table over generated instances.
    Verify(VerifyArgs),
}

#[derive(clap::Args, Debug)]
pub struct VerifyArgs {
    /// Seed for sampled runs.
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    /// Check every instance instead of a sample.
    #[arg(long)]
    pub exhaustive: bool,
    /// Number of sampled instances.
    #[arg(long, default_value_t = 200)]
    pub limit: usize,
    #[arg(long, value_delimiter = ',', default_value = "Z4,Z6")]
    pub rings: Vec<String>,
    #[arg(long, value_delimiter = ',', default_value = "chain2,chain3")]
    pub lattices: Vec<String>,
    #[arg(long, value_enum, default_value_t = MuArg::Top)]
    pub mu: MuArg,
    /// Theorem ids to check (default: all).
    #[arg(long, value_delimiter = ',')]
    pub theorems: Option<Vec<String>>,
    #[arg(long)]
    pub cap: Option<u128>,
    /// Evaluate clauses even when their hypotheses fail.
    #[arg(long)]
    pub no_hypothesis_gate: bool,
    /// Skip pair instances.
    #[arg(long)]
    pub no_pairs: bool,
    /// Also write one JSON record per check to this file.
    #[arg(long)]
    pub json: Option<PathBuf>,
}

/// Printed output and exit status.
fn run(cli: Cli) -> Result<(String, u8), CliError> {
    match cli.command {
        Command::Validate { file } => Ok((commands::validate(&instance::load(&file)?)?, 0)),
        Command::Compute {
            file,
            target,
            ideal,
            other,
            level,
            strong,
            cap,
        } => {
            let mut inst = instance::load(&file)?;
            if let Some(cap) = cap {
                inst.lring = inst.lring.with_cap(cap);
            }
            Ok((
                commands::compute(&inst, target, &ideal, other.as_deref(), level.as_deref(), strong)?,
                0,
            ))
        }
        Command::Decompose {
            file,
            ideal,
            require_reduced,
            cap,
        } => {
            let mut inst = instance::load(&file)?;
            if let Some(cap) = cap {
                inst.lring = inst.lring.with_cap(cap);
            }
            commands::decompose(&inst, &ideal, require_reduced)
        }
        Command::Verify(args) => commands::verify(&args),
    }
}

/// Runs the command line `args` (program name first) and returns what
/// would be printed to stdout and stderr, and the exit status.
pub fn run_args<I, T>(args: I) -> (String, String, u8)
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let text = e.render().to_string();
            return if e.use_stderr() {
                (String::new(), text, 1)
            } else {
                (text, String::new(), 0)
            };
        }
    };
    match run(cli) {
        Ok((out, code)) => (out, String::new(), code),
        Err(e) => (String::new(), format!("error: {e}\n"), e.code()),
    }
}
