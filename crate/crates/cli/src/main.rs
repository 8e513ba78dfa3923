use std::process::ExitCode;

use clap::Parser;
use rank2_tool::args::Cli;

fn main() -> ExitCode {
    // clap exits with status 2 on malformed arguments
    let cli = Cli::parse();
    ExitCode::from(rank2_tool::run_cli(&cli, &mut std::io::stdout(), &mut std::io::stderr()))
}
