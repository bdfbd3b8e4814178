#![allow(clippy::neg_cmp_op_on_partial_ord)]

mod commands;
mod config;
mod output;
mod parse;
mod svg;

use std::process::ExitCode;

use clap::Parser;

use crate::config::{Cli, JobConfig};

const EXIT_DOMAIN: u8 = 1;
const EXIT_USAGE: u8 = 2;

fn main() -> ExitCode {
    let cli = Cli::parse();
    let config = match JobConfig::try_from(cli.command) {
        Ok(c) => c,
        Err(msg) => {
            eprintln!("radial-eigen: invalid arguments: {msg}");
            return ExitCode::from(EXIT_USAGE);
        }
    };
    let outcome = match commands::run(&config) {
        Ok(o) => o,
        Err(e) => {
            eprintln!("radial-eigen: {e}");
            return ExitCode::from(EXIT_DOMAIN);
        }
    };
    if let Err(e) = output::emit(config.output.as_deref(), &outcome.body) {
        eprintln!("radial-eigen: {e:#}");
        return ExitCode::from(EXIT_DOMAIN);
    }
    if let Some(summary) = outcome.summary {
        eprintln!("{summary}");
    }
    ExitCode::SUCCESS
}
