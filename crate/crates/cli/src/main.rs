//! `rscount`: characteristic numbers and Rarita-Schwinger bounds from the
//! command line.
//!
//! Exit codes: 0 success, 1 malformed arguments, 2 the bound does not apply
//! to the given manifold, 3 a verification check failed.

mod args;
mod commands;
mod output;

use std::io::Write;
use std::process::ExitCode;

use clap::error::ErrorKind;
use clap::Parser;

use args::{Cli, Command};
use commands::Failure;
use output::{render, Report};

fn emit<T: Report>(cli: &Cli, name: &str, result: Result<T, Failure>) -> Result<(), Failure> {
    let result = result?;
    if !cli.quiet {
        let text = render(name, &result, cli.format, cli.meta);
        let mut stdout = std::io::stdout().lock();
        // a closed pipe is not worth a panic
        let _ = stdout.write_all(text.as_bytes());
    }
    Ok(())
}

fn run(cli: &Cli) -> Result<u8, Failure> {
    match &cli.command {
        Command::Compute(a) => emit(cli, "compute", commands::compute(a))?,
        Command::Table(a) => emit(cli, "table", commands::table(a))?,
        Command::Search(a) => emit(cli, "search", commands::search(a))?,
        Command::Product(a) => emit(cli, "product", commands::product(a))?,
        Command::Verify(a) => {
            let result = commands::verify(a)?;
            if !cli.quiet {
                for c in &result.checks {
                    let tag = if c.passed { "PASS" } else { "FAIL" };
                    eprintln!("{tag} {} {}: {}", result.suite, c.name, c.detail);
                }
            }
            let ok = result.all_passed;
            emit(cli, "verify", Ok(result))?;
            if !ok {
                return Ok(3);
            }
        }
    }
    Ok(0)
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => ExitCode::SUCCESS,
                _ => ExitCode::from(1),
            };
        }
    };
    match run(&cli) {
        Ok(code) => ExitCode::from(code),
        Err(f) => {
            eprintln!("error: {}", f.message());
            ExitCode::from(f.exit_code() as u8)
        }
    }
}
