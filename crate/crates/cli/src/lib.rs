//! Command-line front end for `rank2-cluster`: region and expansion exporters
//! plus the verification harness behind `rank2 verify`.

pub mod args;
pub mod commands;
pub mod golden;
pub mod report;
pub mod verify;

use std::ffi::OsString;
use std::io::Write;

use clap::Parser;
use rank2_cluster::AlgebraParams;
use thiserror::Error;

use crate::args::{Cli, Command, Format};
use crate::verify::VerifyOptions;

#[derive(Debug, Error)]
pub enum CliError {
    #[error(transparent)]
    Core(#[from] rank2_cluster::Error),
    #[error("{0}")]
    Usage(String),
    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

/// Rendered output of one invocation; `passed` is false only for failed verifications.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Execution {
    pub output: String,
    pub passed: bool,
}

fn algebra_params(cli: &Cli) -> Result<AlgebraParams, CliError> {
    match (cli.global.b, cli.global.c) {
        (Some(b), Some(c)) => Ok(AlgebraParams::new(b, c)?),
        _ => Err(CliError::Usage("--b and --c are required for this command".into())),
    }
}

pub fn execute(cli: &Cli) -> Result<Execution, CliError> {
    let g = &cli.global;
    let done = |output: String| Ok(Execution { output, passed: true });
    match &cli.command {
        Command::Dominance { lambda } => done(commands::dominance(&algebra_params(cli)?, *lambda, g.format, g.precision)?),
        Command::Support { lambda } => done(commands::support(&algebra_params(cli)?, *lambda, g.format, g.precision)?),
        Command::Expand(args) => done(commands::expand(&algebra_params(cli)?, args, g.format, g.term_cap)?),
        Command::Verify { suite } => {
            let report = verify::run_suite(*suite, VerifyOptions { depth: g.depth, term_cap: g.term_cap });
            let output = match g.format {
                Format::Json => serde_json::to_string_pretty(&report)? + "\n",
                Format::Text => report.to_text(),
                Format::Svg => return Err(CliError::Usage("verify has no svg output".into())),
            };
            Ok(Execution { output, passed: report.passed() })
        }
    }
}

pub const EXIT_VERIFICATION_FAILED: u8 = 1;
pub const EXIT_USAGE: u8 = 2;

/// Executes `cli`, writes the output to `--out` or `stdout`, and returns the process exit code.
pub fn run_cli(cli: &Cli, stdout: &mut dyn Write, stderr: &mut dyn Write) -> u8 {
    let result = execute(cli).and_then(|ex| {
        match &cli.global.out {
            Some(path) => std::fs::write(path, &ex.output)
                .map_err(|e| CliError::Usage(format!("cannot write {}: {e}", path.display())))?,
            None => {
                let _ = stdout.write_all(ex.output.as_bytes());
            }
        }
        Ok(ex.passed)
    });
    match result {
        Ok(true) => 0,
        Ok(false) => EXIT_VERIFICATION_FAILED,
        Err(e) => {
            let _ = writeln!(stderr, "error: {e}");
            EXIT_USAGE
        }
    }
}

/// Parses a full argument list (program name first) and executes it.
pub fn run_args<I, T>(args: I) -> Result<Execution, CliError>
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = Cli::try_parse_from(args).map_err(|e| CliError::Usage(e.to_string()))?;
    execute(&cli)
}
