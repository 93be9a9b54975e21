//! `vilenkin`: batch front end for step-function analysis.
//!
//! Exit codes: 0 success, 1 failed check, 2 parse or usage error, 3 oracle
//! mismatch, 4 empty support, 5 blocked set, 6 input not binary, 7 strata
//! not covering, 8 not a Parseval frame.

mod commands;
mod config;
mod exit;

use std::process::ExitCode;

use clap::Parser;

use config::{Cli, RunConfig};

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(e.exit_code() as u8);
        }
    };
    match RunConfig::from_cli(cli).and_then(|config| commands::run(&config)) {
        Ok(()) => ExitCode::SUCCESS,
        Err(failure) => {
            eprintln!("error: {failure}");
            ExitCode::from(failure.code)
        }
    }
}
