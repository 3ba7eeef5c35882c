mod cli;
mod commands;
mod source;

use std::process::ExitCode;

use clap::error::ErrorKind;
use clap::Parser;

use cli::{Cli, Command};

/// Exit 1 for anything the user can fix, 2 for internal failures and oracle mismatches.
#[derive(Debug)]
pub enum Failure {
    BadInput(anyhow::Error),
    Internal(anyhow::Error),
    Mismatch(String),
}

impl From<anyhow::Error> for Failure {
    fn from(e: anyhow::Error) -> Self {
        Failure::BadInput(e)
    }
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

    let result = std::panic::catch_unwind(|| match cli.command {
        Command::Analyze(args) => commands::run_analyze(args),
        Command::Generate(args) => commands::run_generate(args),
        Command::Bench(args) => commands::run_bench_command(args),
    });

    match result {
        Ok(Ok(())) => ExitCode::SUCCESS,
        Ok(Err(Failure::BadInput(e))) => {
            eprintln!("error: {e:#}");
            ExitCode::from(1)
        }
        Ok(Err(Failure::Internal(e))) => {
            eprintln!("internal error: {e:#}");
            ExitCode::from(2)
        }
        Ok(Err(Failure::Mismatch(details))) => {
            eprintln!("oracle verification failed:\n{details}");
            ExitCode::from(2)
        }
        // The panic message has already been printed by the default hook.
        Err(_) => ExitCode::from(2),
    }
}
