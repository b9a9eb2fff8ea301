//! Command-line front end for cubeforest.
//!
//! Exit codes: 0 success, 1 verification failure, 2 usage or input error,
//! 3 budget exceeded.

mod args;
mod commands;

use std::process::ExitCode;

use clap::Parser;

fn main() -> ExitCode {
    let cli = args::Cli::parse();
    match commands::run(&cli) {
        Ok(code) => code,
        Err(failure) => {
            eprintln!("cubeforest: {failure}");
            failure.exit_code()
        }
    }
}
