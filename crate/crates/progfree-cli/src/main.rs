//! Command-line front end: construct, detect, count, verify-claims, and
//! density, with deterministic machine-readable output.
//!
//! Exit codes: 0 on success (for verify-claims, additionally verdict true),
//! 1 when a claim verdict is false, 2 on usage or validation errors.

mod commands;
mod io_util;

use std::process::ExitCode;

use clap::Parser;
use clap::error::ErrorKind;

use commands::{Cli, VERDICT_FALSE};

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(err) => {
            // Help and version are success paths, everything else is usage.
            let code = match err.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => 0,
                _ => 2,
            };
            let _ = err.print();
            return ExitCode::from(code);
        }
    };
    match commands::run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(err) if err.is::<VerdictFalse>() => ExitCode::from(1),
        Err(err) => {
            eprintln!("error: {err:#}");
            ExitCode::from(2)
        }
    }
}

/// Marker error: the requested claim ran fine and its verdict is false.
#[derive(Debug)]
pub struct VerdictFalse;

impl std::fmt::Display for VerdictFalse {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{VERDICT_FALSE}")
    }
}

impl std::error::Error for VerdictFalse {}
