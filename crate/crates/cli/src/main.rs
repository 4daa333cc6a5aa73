//! `ktree-lab`: generate random k-trees, emit theory tables and run analyses.
//!
//! Exit codes: 0 success, 1 usage error, 2 I/O or parse error, 3 internal
//! invariant violation.

mod args;
mod commands;

use std::process::ExitCode;

use clap::Parser;

use args::{Cli, Command};
use commands::Failure;

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            if matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion) {
                e.exit();
            }
            let _ = e.print();
            return ExitCode::from(Failure::USAGE);
        }
    };
    let result = match &cli.command {
        Command::Generate(a) => commands::generate(a),
        Command::Theory(a) => commands::theory(a),
        Command::Analyze(a) => commands::analyze(a, cli.threads),
        Command::Concentration(a) => commands::concentration(a, cli.threads),
    };
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(failure) => {
            eprintln!("error: {:#}", failure.error);
            ExitCode::from(failure.code)
        }
    }
}
