//! Batch verification front end.
//!
//! Exit codes: 0 all checks passed, 1 a check failed (reports still written),
//! 2 input or configuration error.

mod args;
mod commands;
mod complex_arg;
mod inputs;
mod reports;

use args::{Cli, Command};
use clap::Parser;
use std::process::ExitCode;

fn dispatch(cli: &Cli) -> Result<bool, String> {
    match &cli.command {
        Command::Validate(a) => commands::criteria::run_validate(a),
        Command::Criteria(a) => commands::criteria::run_criteria(a),
        Command::Factorize(a) => commands::factorize::run(a),
        Command::Bounds(a) => commands::bounds::run(a),
        Command::PlateSpectrum(a) => commands::plate::run_spectrum(a),
        Command::PlateSolve(a) => commands::plate::run_solve(a),
        Command::PlateVerify(a) => commands::plate::run_verify(a),
        Command::Render(a) => commands::render::run(a),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match dispatch(&cli) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(message) => {
            eprintln!("error: {message}");
            ExitCode::from(2)
        }
    }
}
