mod args;
mod commands;
mod input;
mod report;

use std::io::Write;
use std::process::ExitCode;

use clap::Parser;

fn main() -> ExitCode {
    let cli = args::Cli::parse();
    let (command, result) = commands::run(&cli.command);
    let (text, code) = report::render(command, result);
    // A closed pipe downstream is not an error of ours.
    let _ = writeln!(std::io::stdout(), "{text}");
    ExitCode::from(code)
}
