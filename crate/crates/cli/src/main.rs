use std::process::ExitCode;

use clap::Parser;

mod args;
mod commands;
mod error;
mod output;

use args::{Cli, Command};

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = cli
        .command
        .args()
        .clone()
        .resolve()
        .and_then(|cfg| match &cli.command {
            Command::Constants(_) => commands::constants(&cfg),
            Command::Scan(_) => commands::scan(&cfg),
            Command::Death(_) => commands::death(&cfg),
            Command::Validate(_) => commands::validate(&cfg),
            Command::Sweep(_) => commands::sweep(&cfg),
        });
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}
