mod args;
mod commands;

use std::process::ExitCode;

use clap::Parser;

fn main() -> ExitCode {
    let cli = args::Cli::parse();

    if let Ok(raw) = std::env::var("SGDIGIT_MAX_TABLE") {
        match raw.parse::<usize>() {
            Ok(limit) => sgdigit::monoid::set_table_limit(limit),
            Err(_) => {
                eprintln!("error: SGDIGIT_MAX_TABLE must be a positive integer, got {raw:?}");
                return ExitCode::from(commands::EXIT_USAGE);
            }
        }
    }

    match commands::run(&cli) {
        Ok(out) => {
            if !out.stdout.is_empty() {
                println!("{}", out.stdout);
            }
            ExitCode::from(out.code)
        }
        Err(err) => {
            if !err.stdout.is_empty() {
                println!("{}", err.stdout);
            }
            if !err.message.is_empty() {
                eprintln!("error: {}", err.message);
            }
            ExitCode::from(err.code)
        }
    }
}
