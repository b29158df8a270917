//! `quivermod`: batch command-line front end. Every command prints one JSON
//! document tagged `"schema": "v1"`.

mod commands;
mod selftest;

use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use quivermod::Error;
use serde_json::{json, Map, Value};

#[derive(Parser, Debug)]
#[command(
    name = "quivermod",
    version,
    about = "Canonical decompositions and matrix normal forms for quiver representations"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
    /// Write the JSON document to this file instead of stdout.
    #[arg(long, global = true)]
    output: Option<PathBuf>,
    /// Pretty-print the JSON document.
    #[arg(long, global = true)]
    pretty: bool,
    /// Seed for every sampled representation.
    #[arg(long, global = true, env = "QUIVERMOD_SEED", default_value_t = 0)]
    seed: u64,
    /// Prime for the finite field used by sampling commands.
    #[arg(long, global = true, default_value_t = quivermod::DEFAULT_PRIME)]
    field_prime: u64,
}

#[derive(Args, Debug, Clone)]
pub struct Target {
    /// Quiver file: {"vertices": [...], "arrows": [["a","v","w"], ...]}.
    #[arg(long)]
    pub quiver: PathBuf,
    /// Dimension vector, as `v=2,w=1` or positional `2,1`.
    #[arg(long)]
    pub dim: String,
}

#[derive(Args, Debug, Clone)]
pub struct OracleArgs {
    /// Use the exhaustive search instead of the fast algorithm.
    #[arg(long)]
    pub oracle: bool,
    /// Largest total dimension the exhaustive search accepts.
    #[arg(long, default_value_t = 24)]
    pub max_total: i64,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Euler and Kac forms of one or two dimension vectors.
    Euler {
        #[command(flatten)]
        target: Target,
        /// Second argument of the forms; defaults to `--dim`.
        #[arg(long)]
        other: Option<String>,
    },
    /// Reflection of a dimension vector at a vertex.
    Reflect {
        #[command(flatten)]
        target: Target,
        #[arg(long)]
        vertex: String,
    },
    /// Whether a dimension vector is a Schur root.
    Schur {
        #[command(flatten)]
        target: Target,
        #[command(flatten)]
        oracle: OracleArgs,
    },
    /// Canonical decomposition of a dimension vector.
    Candecomp {
        #[command(flatten)]
        target: Target,
        #[command(flatten)]
        oracle: OracleArgs,
    },
    /// Classification on the generalized Kronecker quiver with `n` arrows.
    Kronecker {
        #[arg(long)]
        n: u64,
        /// Pair `a,b` (source, sink).
        #[arg(long)]
        dim: String,
    },
    /// Greatest divisor, parameter count and rationality verdicts.
    Moduli {
        #[command(flatten)]
        target: Target,
    },
    /// Reduction of a Kronecker dimension vector to matrices up to conjugacy.
    Normalform {
        #[command(flatten)]
        target: Target,
        /// Number of reduce/inverse round trips to sample.
        #[arg(long, default_value_t = 5)]
        trials: usize,
    },
    /// Tree of reductions of a Schur root.
    Tower {
        #[command(flatten)]
        target: Target,
    },
    /// Runs the built-in corpus checks.
    Selftest,
}

impl Command {
    fn name(&self) -> &'static str {
        match self {
            Command::Euler { .. } => "euler",
            Command::Reflect { .. } => "reflect",
            Command::Schur { .. } => "schur",
            Command::Candecomp { .. } => "candecomp",
            Command::Kronecker { .. } => "kronecker",
            Command::Moduli { .. } => "moduli",
            Command::Normalform { .. } => "normalform",
            Command::Tower { .. } => "tower",
            Command::Selftest => "selftest",
        }
    }
}

/// Resolved settings shared by all commands.
pub struct Settings {
    pub seed: u64,
    pub field_prime: u64,
}

/// Command output: the configuration echo, the result, and whether the
/// command itself judged the run a failure (selftest only).
pub struct Report {
    pub config: Map<String, Value>,
    pub result: Value,
    pub failed: bool,
}

fn exit_code(e: &Error) -> u8 {
    match e {
        Error::Input(_) | Error::UnsupportedVertex(_) | Error::FieldMismatch(_) => 2,
        Error::Resource(_) | Error::Genericity(_) | Error::Obstruction(_) | Error::Undecided(_) => 3,
        Error::Internal(_) => 1,
    }
}

fn run(command: &Command, s: &Settings) -> Result<Report, Error> {
    match command {
        Command::Euler { target, other } => commands::euler(target, other.as_deref()),
        Command::Reflect { target, vertex } => commands::reflect(target, vertex),
        Command::Schur { target, oracle } => commands::schur(target, oracle),
        Command::Candecomp { target, oracle } => commands::candecomp(target, oracle),
        Command::Kronecker { n, dim } => commands::kronecker(*n, dim),
        Command::Moduli { target } => commands::moduli(target),
        Command::Normalform { target, trials } => commands::normalform(target, *trials, s),
        Command::Tower { target } => commands::tower(target),
        Command::Selftest => selftest::run(s),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let settings = Settings { seed: cli.seed, field_prime: cli.field_prime };
    let name = cli.command.name();
    let (doc, code) = match run(&cli.command, &settings) {
        Ok(report) => {
            let doc = json!({
                "schema": "v1",
                "command": name,
                "config": report.config,
                "result": report.result,
            });
            (doc, if report.failed { 1 } else { 0 })
        }
        Err(e) => {
            eprintln!("quivermod {name}: {e}");
            let doc = json!({
                "schema": "v1",
                "command": name,
                "error": { "reason": e.reason(), "message": e.to_string() },
            });
            (doc, exit_code(&e))
        }
    };
    let mut text = if cli.pretty { serde_json::to_string_pretty(&doc) } else { serde_json::to_string(&doc) }
        .expect("documents serialize");
    text.push('\n');
    match &cli.output {
        Some(path) => {
            if let Err(e) = fs::write(path, text) {
                eprintln!("quivermod: cannot write {}: {e}", path.display());
                return ExitCode::from(1);
            }
        }
        None => print!("{text}"),
    }
    ExitCode::from(code)
}
