//! `randtopo`: experiments on random clique, Čech and Vietoris–Rips complexes.
//!
//! Exit status 0 on success, 2 for configuration errors, 3 for runtime or
//! I/O failures; errors go to stderr as one line of JSON.

mod commands;
mod config;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};

use config::{CensusArgs, ExperimentArgs, MuArgs, SweepArgs};

#[derive(Debug, Parser)]
#[command(name = "randtopo", version, about = "Random simplicial complex experiments")]
struct Cli {
    /// JSON file with default values for the subcommand's flags
    #[arg(long, global = true)]
    config: Option<PathBuf>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Run seeded trials of one regime; writes per-trial CSV and summary JSON
    Experiment(ExperimentArgs),
    /// Mean statistics over a grid of p or r values
    Sweep(SweepArgs),
    /// Census of a single instance as flat JSON
    Census(CensusArgs),
    /// Isomorphism classes reached by extending a (k+1)-clique to 2k+3 vertices
    ExtensionTypes {
        #[arg(long)]
        k: usize,
    },
    /// Monte Carlo estimate of the empty-simplex constant
    EstimateMu(MuArgs),
}

#[derive(Debug)]
pub enum CliError {
    Config(String),
    Runtime(String),
}

impl CliError {
    fn code(&self) -> u8 {
        match self {
            CliError::Config(_) => 2,
            CliError::Runtime(_) => 3,
        }
    }

    fn to_json(&self) -> String {
        let (kind, message) = match self {
            CliError::Config(m) => ("config", m),
            CliError::Runtime(m) => ("runtime", m),
        };
        serde_json::json!({ "error": kind, "message": message }).to_string()
    }
}

impl From<std::io::Error> for CliError {
    fn from(e: std::io::Error) -> Self {
        CliError::Runtime(e.to_string())
    }
}

fn run(cli: Cli) -> Result<(), CliError> {
    let cfg = cli.config.as_deref();
    match cli.command {
        Command::Experiment(args) => commands::experiment(config::merge(args, cfg)?),
        Command::Sweep(args) => commands::sweep(config::merge(args, cfg)?),
        Command::Census(args) => commands::census(config::merge(args, cfg)?),
        Command::ExtensionTypes { k } => commands::extension_types(k),
        Command::EstimateMu(args) => commands::estimate_mu(config::merge(args, cfg)?),
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) if !e.use_stderr() => {
            // --help and --version
            print!("{e}");
            return ExitCode::SUCCESS;
        }
        Err(e) => {
            let msg = e.to_string();
            let first = msg.lines().next().unwrap_or("invalid arguments").trim_start_matches("error: ");
            eprintln!("{}", CliError::Config(first.to_string()).to_json());
            return ExitCode::from(2);
        }
    };
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("{}", e.to_json());
            ExitCode::from(e.code())
        }
    }
}
