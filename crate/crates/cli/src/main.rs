use std::io::Write;
use std::process::ExitCode;

use chroma_cli::cli::Cli;
use chroma_cli::run::execute;
use clap::Parser;

fn main() -> ExitCode {
    let outcome = execute(Cli::parse());
    print!("{}", outcome.stdout);
    eprint!("{}", outcome.stderr);
    let _ = std::io::stdout().flush();
    ExitCode::from(outcome.code as u8)
}
