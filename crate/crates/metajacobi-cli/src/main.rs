//! `metajacobi <verb> [flags]`: evaluation, coefficient tables, spectra and
//! verification reports.
//!
//! Exit codes: 0 success, 1 a verification failed, 2 usage error, 3 numeric error.

mod args;
mod commands;
mod output;

use std::io::Write;
use std::process::ExitCode;

use clap::Parser;
use thiserror::Error;

use args::{Cli, Command};

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error(transparent)]
    Numeric(#[from] metajacobi::Error),
    #[error("cannot write output: {0}")]
    Io(#[from] std::io::Error),
}

impl CliError {
    fn exit_code(&self) -> u8 {
        match self {
            CliError::Usage(_) => 2,
            CliError::Numeric(metajacobi::Error::InvalidParams(_)) => 2,
            CliError::Numeric(_) | CliError::Io(_) => 3,
        }
    }
}

fn run(cli: Cli) -> Result<bool, CliError> {
    let (out, path) = match &cli.command {
        Command::Eval(a) => (commands::eval(a)?, a.out.out.clone()),
        Command::Coeffs(a) => (commands::coeffs(a)?, a.out.out.clone()),
        Command::Spectrum(a) => (commands::spectrum(a)?, a.out.out.clone()),
        Command::Verify(a) => (commands::verify(a)?, a.out.out.clone()),
        Command::Table(a) => (commands::table(a)?, a.out.out.clone()),
    };
    match path {
        Some(p) => std::fs::write(p, out.text.as_bytes())?,
        None => std::io::stdout().lock().write_all(out.text.as_bytes())?,
    }
    Ok(out.pass)
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return match e.kind() {
                clap::error::ErrorKind::DisplayHelp | clap::error::ErrorKind::DisplayVersion => ExitCode::SUCCESS,
                _ => ExitCode::from(2),
            };
        }
    };
    match run(cli) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}
