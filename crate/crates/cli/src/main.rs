use std::process::ExitCode;

use clap::Parser;
use newton_strata_cli::{run, RunConfig, EXIT_INPUT};

fn main() -> ExitCode {
    let config = RunConfig::parse();
    let outcome = run(&config);
    if outcome.report.is_none() {
        eprint!("{}", outcome.rendered);
        return ExitCode::from(EXIT_INPUT as u8);
    }
    match &config.out {
        Some(path) => {
            if let Err(e) = std::fs::write(path, &outcome.rendered) {
                eprintln!("error: {}: {e}", path.display());
                return ExitCode::from(EXIT_INPUT as u8);
            }
        }
        None => print!("{}", outcome.rendered),
    }
    ExitCode::from(outcome.code as u8)
}
