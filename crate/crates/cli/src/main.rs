use std::io::Write;
use std::process::ExitCode;

use clap::Parser;

use christoffel_cli::{execute, Cli};

fn main() -> ExitCode {
    let cli = Cli::parse();
    let outcome = match execute(&cli) {
        Ok(outcome) => outcome,
        Err(err) => {
            eprintln!("chword: {err}");
            return ExitCode::from(2);
        }
    };
    let written = match &cli.output {
        Some(path) => std::fs::write(path, &outcome.text),
        None => std::io::stdout().lock().write_all(outcome.text.as_bytes()),
    };
    if let Err(err) = written {
        eprintln!("chword: cannot write output: {err}");
        return ExitCode::from(2);
    }
    ExitCode::from(outcome.code)
}
