mod args;
mod commands;
mod envelope;

use std::process::ExitCode;

use clap::Parser;

use args::{Cli, Command};

/// Every graph passed (or nothing to check).
pub const EXIT_OK: u8 = 0;
/// At least one report has a failing clause.
pub const EXIT_FAIL: u8 = 1;
/// Unreadable or malformed input, bad arguments.
pub const EXIT_INPUT: u8 = 2;

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match cli.command {
        Command::Analyze(a) => commands::analyze(a),
        Command::Verify(a) => commands::verify(a),
        Command::Degseq(a) => commands::degseq(a),
        Command::Tables(a) => commands::tables(a),
        Command::Partition(a) => commands::partition(a),
        Command::Layers(a) => commands::layers(a),
        Command::Audit(f) => commands::audit(f.format),
        Command::Gen(a) => commands::gen(a),
    };
    match result {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(EXIT_INPUT)
        }
    }
}
