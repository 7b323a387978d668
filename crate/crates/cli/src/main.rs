mod args;
mod matchings;
mod mc;
mod moments;
mod numbers;
mod output;
mod verify;

use std::process::ExitCode;

use clap::error::ErrorKind;
use clap::Parser;
use serde_json::json;

use args::{Cli, Command};

/// Why a command did not succeed.
#[derive(Debug)]
pub enum Failure {
    /// Bad flags or input; exit code 1.
    Usage(String),
    /// An identity or route comparison failed; exit code 2.
    Check(String),
}

impl From<levy_shuffle::Error> for Failure {
    fn from(e: levy_shuffle::Error) -> Self {
        Failure::Usage(e.to_string())
    }
}

#[derive(Debug, Clone, Copy)]
pub struct Limits {
    pub max_n: usize,
    pub max_level: usize,
    pub max_samples: u64,
}

fn echo_config(cli: &Cli) {
    let (name, args) = match &cli.command {
        Command::Moments(a) => ("moments", json!(a)),
        Command::Verify(a) => ("verify", json!(a)),
        Command::Mc(a) => ("mc", json!(a)),
        Command::Numbers(a) => ("numbers", json!(a)),
        Command::Matchings(a) => ("matchings", json!(a)),
    };
    let config = json!({
        "command": name,
        "args": args,
        "format": cli.format,
        "limits": {
            "max_n": cli.max_n,
            "max_level": cli.max_level,
            "max_samples": cli.max_samples,
        },
    });
    eprintln!("config: {config}");
}

fn main() -> ExitCode {
    env_logger::Builder::from_env(env_logger::Env::default().default_filter_or("warn")).init();
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
    echo_config(&cli);
    let limits = Limits {
        max_n: cli.max_n,
        max_level: cli.max_level,
        max_samples: cli.max_samples,
    };
    let result = match &cli.command {
        Command::Moments(a) => moments::run(a, &limits, cli.format),
        Command::Verify(a) => verify::run(a, &limits, cli.format),
        Command::Mc(a) => mc::run(a, &limits, cli.format),
        Command::Numbers(a) => numbers::run(a, cli.format),
        Command::Matchings(a) => matchings::run(a, &limits, cli.format),
    };
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
        Err(Failure::Check(msg)) => {
            eprintln!("check failed: {msg}");
            ExitCode::from(2)
        }
    }
}
