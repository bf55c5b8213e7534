//! Command-line front end for `rankone-core`: an expression language for
//! classes on the base, the `transform`, `verify` and `demo` subcommands,
//! and JSON/LaTeX output.

pub mod args;
pub mod ast;
pub mod commands;
pub mod emit;
pub mod eval;
pub mod parser;
pub mod verify;

use std::ffi::OsString;
use std::io::Write;

use clap::Parser as _;

use args::{Cli, Command};
use commands::{EXIT_OK, EXIT_USAGE};

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("cannot parse {flag}: {source}")]
    Parse {
        flag: &'static str,
        source: parser::ParseError,
    },
    #[error("invalid {flag}: {source}")]
    Eval {
        flag: &'static str,
        source: rankone_core::CycleError,
    },
    #[error("config: {0}")]
    Config(String),
    #[error(transparent)]
    Io(#[from] std::io::Error),
    #[error("cannot start worker threads: {0}")]
    Threads(#[from] rayon::ThreadPoolBuildError),
}

/// Runs the CLI on `args` (program name first) and returns the exit status.
pub fn run(args: impl IntoIterator<Item = impl Into<OsString>>, out: &mut dyn Write, err: &mut dyn Write) -> i32 {
    match try_run(args.into_iter().map(Into::into).collect(), out, err) {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            EXIT_USAGE
        }
    }
}

fn try_run(args: Vec<OsString>, out: &mut dyn Write, err: &mut dyn Write) -> Result<i32, CliError> {
    let args = args::expand_config(args)?;
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) if !e.use_stderr() => {
            write!(out, "{}", e.render())?;
            return Ok(EXIT_OK);
        }
        Err(e) => {
            write!(err, "{}", e.render())?;
            return Ok(EXIT_USAGE);
        }
    };
    match &cli.command {
        Command::Transform(a) => commands::transform(a, out),
        Command::Verify(a) => commands::verify(a, out, err),
        Command::Demo(a) => commands::demo(a, out),
    }
}
