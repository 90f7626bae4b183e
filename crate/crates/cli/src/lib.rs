//! Command-line front end for `qubit-indirect`.
//!
//! Each invocation reads one JSON configuration file (see [`config`]) and
//! writes JSON, or CSV for `sample`, to stdout or `--output`.

pub mod commands;
pub mod config;
pub mod error;
pub mod points;

use std::ffi::OsString;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand};
use serde::Serialize;

use config::{ConfigFile, Overrides};
use error::{CliError, CliResult};

#[derive(Debug, Parser)]
#[command(name = "qindirect", version, about = "Indirect controllability of a qubit through an accessor qubit")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
    #[command(flatten)]
    pub flags: Flags,
}

#[derive(Debug, Args)]
pub struct Flags {
    /// Seed for random draws; overrides the file.
    #[arg(long, global = true)]
    pub seed: Option<u64>,
    /// Number of random draws (or points for `sample`); overrides the file.
    #[arg(long, global = true)]
    pub draws: Option<usize>,
    /// Write the result here instead of stdout.
    #[arg(long, short, global = true)]
    pub output: Option<PathBuf>,
    /// Rank tolerance; overrides the file.
    #[arg(long, global = true)]
    pub tol_rank: Option<f64>,
    /// Equality tolerance; overrides the file.
    #[arg(long, global = true)]
    pub tol_eq: Option<f64>,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Case of the classification, or the single-axis test.
    Classify { config: PathBuf },
    /// Dimension of the dynamical Lie algebra.
    Closure {
        config: PathBuf,
        /// Include an orthonormal basis.
        #[arg(long)]
        basis: bool,
    },
    /// Invariant-space obstruction for the states `rho_S`, `rho_A`.
    Negat { config: PathBuf },
    /// Steering with a pure accessor; random draws unless `X` is given.
    Steer { config: Option<PathBuf> },
    /// Steering to a target state; random draws unless `target` is given.
    Fic { config: Option<PathBuf> },
    /// Reachable target states as CSV.
    Sample { config: PathBuf },
    /// Identity suites over random parameters.
    Verify { config: Option<PathBuf> },
}

fn load(path: Option<&Path>) -> CliResult<ConfigFile> {
    path.map_or_else(|| Ok(ConfigFile::default()), ConfigFile::load)
}

fn emit(output: Option<&Path>, bytes: &[u8]) -> CliResult<()> {
    let io_err = |source| CliError::Io {
        context: "writing output".into(),
        source,
    };
    match output {
        Some(p) => std::fs::write(p, bytes).map_err(io_err),
        None => std::io::stdout().lock().write_all(bytes).map_err(io_err),
    }
}

fn json(value: &impl Serialize) -> Vec<u8> {
    let mut v = serde_json::to_vec_pretty(value).expect("serializable");
    v.push(b'\n');
    v
}

/// Executes a parsed command line.
pub fn execute(cli: &Cli) -> CliResult<()> {
    let f = &cli.flags;
    let o = Overrides {
        seed: f.seed,
        draws: f.draws,
        tol_rank: f.tol_rank,
        tol_eq: f.tol_eq,
    };
    let out = f.output.as_deref();
    let bytes = match &cli.command {
        Command::Classify { config } => json(&commands::classify(&load(Some(config))?, &o)?),
        Command::Closure { config, basis } => json(&commands::closure(&load(Some(config))?, &o, *basis)?),
        Command::Negat { config } => json(&commands::negat(&load(Some(config))?, &o)?),
        Command::Steer { config } => json(&commands::steer(&load(config.as_deref())?, &o)?),
        Command::Fic { config } => json(&commands::fic(&load(config.as_deref())?, &o)?),
        Command::Verify { config } => json(&commands::verify(&load(config.as_deref())?, &o)?),
        Command::Sample { config } => {
            let (seed, pts) = commands::sample(&load(Some(config))?, &o)?;
            let mut buf = Vec::new();
            points::write_points(&mut buf, Some(seed), &pts)?;
            buf
        }
    };
    emit(out, &bytes)
}

/// Parses `args` and runs; returns the process exit code.
///
/// 0 on success (negative verdicts included), 1 for malformed input, 2 when
/// an operation's precondition fails.
pub fn run<I, T>(args: I) -> u8
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 1 } else { 0 };
            let _ = e.print();
            return code;
        }
    };
    match execute(&cli) {
        Ok(()) => 0,
        Err(e) => {
            eprintln!("error: {e}");
            e.exit_code()
        }
    }
}
