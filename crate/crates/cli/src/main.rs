//! `hyprank`: rank invariants, properness tests and standard compact
//! Clifford–Klein form obstructions from the command line.
//!
//! Exit codes: 0 when the computation completed (whatever the verdict),
//! 2 for usage, parse and file errors, 3 when the Weyl group exceeds `--cap`.

mod commands;
mod report;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use hyprank::weyl::DEFAULT_CAP;
use hyprank::Error;

use commands::CliError;

#[derive(Parser)]
#[command(name = "hyprank", version, about = "Rank invariants and properness criteria for reductive homogeneous spaces")]
struct Cli {
    /// Emit a JSON report instead of text.
    #[arg(long, global = true)]
    json: bool,

    /// Largest Weyl group order the embedded checker will enumerate.
    #[arg(long, global = true, default_value_t = DEFAULT_CAP)]
    cap: u64,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Invariants of a reductive algebra, e.g. "sl(7,R)" or "so(4,7)+R^1".
    Info { algebra: String },

    /// Recompute the table of real forms whose real and a-hyperbolic ranks differ.
    Table1 {
        #[arg(default_value_t = 8, value_parser = clap::value_parser!(u64).range(1..=64))]
        k_max: u64,
    },

    /// Rank tests for L acting on G/H (catalog mode), or the exact Weyl-orbit
    /// test for explicit split subspaces (with --system, --ah, --al).
    CheckProper {
        /// G, H, L as descriptors (catalog mode).
        #[arg(num_args = 0..=3)]
        algebras: Vec<String>,

        /// Root system of g as TYPE,RANK, e.g. A,4 or A,1+A,1.
        #[arg(long, requires_all = ["ah", "al"], conflicts_with = "algebras")]
        system: Option<String>,

        /// File spanning a_h.
        #[arg(long, requires = "system")]
        ah: Option<PathBuf>,

        /// File spanning a_l.
        #[arg(long, requires = "system")]
        al: Option<PathBuf>,
    },

    /// Search for a standard compact Clifford–Klein form of G/H.
    StandardForm { g: String, h: String },
}

fn run(cli: &Cli) -> commands::Outcome {
    match &cli.command {
        Command::Info { algebra } => commands::info(algebra),
        Command::Table1 { k_max } => commands::table1(*k_max as usize),
        Command::CheckProper { algebras, system, ah, al } => match (system, ah, al) {
            (Some(system), Some(ah), Some(al)) => commands::check_proper_embedded_files(system, ah, al, cli.cap),
            _ => match algebras.as_slice() {
                [g, h, l] => commands::check_proper_catalog(g, h, l),
                _ => Err(CliError::Lib(Error::Parse(
                    "check-proper needs three descriptors G H L, or --system with --ah and --al".to_string(),
                ))),
            },
        },
        Command::StandardForm { g, h } => commands::standard_form(g, h),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok((report, text)) => {
            if cli.json {
                let rendered = serde_json::to_string_pretty(&report.to_json()).expect("report serializes");
                println!("{rendered}");
            } else {
                print!("{text}");
            }
            ExitCode::SUCCESS
        }
        Err(CliError::Lib(e @ Error::CapExceeded { .. })) => {
            eprintln!("error: {e}; raise --cap to enumerate it");
            ExitCode::from(3)
        }
        Err(CliError::Lib(e)) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
        Err(CliError::File(msg)) => {
            eprintln!("error: cannot read {msg}");
            ExitCode::from(2)
        }
    }
}
