//! Command-line front end for the `brauer-core` library.
//!
//! Every subcommand produces a [`CommandResult`]; `--format json` prints it
//! as JSON and `--format text` renders the same payload as indented text.

mod commands;
mod config;
mod render;

use std::io::Write;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::{Deserialize, Serialize};
use serde_json::Value;
use thiserror::Error;

pub use config::Config;
pub use render::render_text;

pub const PRECISION_CAP_ENV: &str = "CUBIC_BRAUER_PRECISION_CAP";

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error(transparent)]
    Compute(#[from] brauer_core::Error),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Usage(_) => 2,
            CliError::Compute(_) => 1,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct CommandResult {
    pub command: String,
    pub inputs: Value,
    pub result: Value,
    /// The statement the output reproduces.
    pub anchor: String,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Text,
}

#[derive(Debug, Parser)]
#[command(name = "cubic-brauer", version, about = "Brauer groups of complements of hyperplane sections of cubic surfaces")]
pub struct Cli {
    /// Output format (default json)
    #[arg(long, global = true, value_enum)]
    pub format: Option<Format>,
    /// TOML file supplying defaults for any flag
    #[arg(long, global = true)]
    pub config: Option<PathBuf>,
    /// Run every acceptance check and print a pass/fail matrix
    #[arg(long, hide = true)]
    pub seed_check: bool,
    #[command(subcommand)]
    pub command: Option<Command>,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// The 27 line classes in the basis (l, e1, ..., e6)
    Lines,
    /// The 45 tritangent trios
    Trios,
    /// Order of W(E6) and checks on its generators
    Weyl,
    /// Pairs (Br1(U), Br(X)) over Galois actions stabilizing a trio
    Tables(TablesArgs),
    /// Geometric Brauer group and transcendental bound for a boundary
    Classify(ClassifyArgs),
    /// Galois invariants of the twisted module Z/n(-1) over Q(sqrt d)
    Invariants(InvariantsArgs),
    /// Transcendental Brauer group of an explicit rational example
    Example(ExampleArgs),
}

#[derive(Debug, Args)]
pub struct TablesArgs {
    /// 1: trio in one orbit, 2: two orbits, 3: three fixed lines
    #[arg(long, value_parser = clap::value_parser!(u8).range(1..=3))]
    pub case: Option<u8>,
}

#[derive(Debug, Args)]
pub struct ClassifyArgs {
    /// Boundary descriptor as JSON, e.g. {"type":"line_conic","intersection":"tangent"}
    #[arg(long)]
    pub boundary: Option<String>,
}

#[derive(Debug, Args)]
pub struct InvariantsArgs {
    #[arg(long, allow_negative_numbers = true)]
    pub d: Option<i64>,
    /// A prime power
    #[arg(long)]
    pub n: Option<u64>,
}

#[derive(Debug, Args)]
pub struct ExampleArgs {
    /// Coefficients of the cubic F, ascending, comma separated
    #[arg(long, allow_hyphen_values = true)]
    pub poly: Option<String>,
    /// Shift a (integer or p/q)
    #[arg(long, allow_hyphen_values = true)]
    pub a: Option<String>,
    /// Search a = 1, 2, ... up to this bound instead of giving --a
    #[arg(long)]
    pub auto_a: Option<u32>,
    /// Precision cap in bits for the Eckardt check
    #[arg(long, env = PRECISION_CAP_ENV)]
    pub precision_cap: Option<u32>,
}

/// Parses `argv` (including the program name), runs the command and writes
/// to `out` / `err`. Returns the process exit code.
pub fn run<I, S>(argv: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = S>,
    S: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(c) => c,
        Err(e) => {
            let code = e.exit_code();
            let text = e.render().to_string();
            if code == 0 {
                let _ = write!(out, "{text}");
            } else {
                let _ = write!(err, "{text}");
            }
            return code;
        }
    };
    if cli.seed_check {
        return seed_check(out);
    }
    match execute(&cli) {
        Ok((format, result)) => {
            let text = match format {
                Format::Json => serde_json::to_string_pretty(&result).expect("serializable") + "\n",
                Format::Text => render_text(&serde_json::to_value(&result).expect("serializable")),
            };
            let _ = write!(out, "{text}");
            0
        }
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            e.exit_code()
        }
    }
}

fn execute(cli: &Cli) -> Result<(Format, CommandResult), CliError> {
    let config = match &cli.config {
        Some(p) => Config::load(p)?,
        None => Config::default(),
    };
    let format = match (cli.format, config.format.as_deref()) {
        (Some(f), _) => f,
        (None, None) => Format::Json,
        (None, Some(s)) => {
            Format::from_str(s, true).map_err(|_| CliError::Usage(format!("bad format in config: {s}")))?
        }
    };
    let command = cli
        .command
        .as_ref()
        .ok_or_else(|| CliError::Usage("a subcommand is required (see --help)".into()))?;
    let result = commands::dispatch(command, &config)?;
    Ok((format, result))
}

fn seed_check(out: &mut dyn Write) -> i32 {
    let outcomes = brauer_core::checks::run_all();
    for o in &outcomes {
        let _ = writeln!(out, "{}", o.line());
    }
    let failed = outcomes.iter().filter(|o| !o.passed).count();
    let _ = writeln!(out, "acceptance: {} passed, {failed} failed", outcomes.len() - failed);
    i32::from(failed > 0)
}
