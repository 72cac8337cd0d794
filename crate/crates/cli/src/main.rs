use std::io::Write;
use std::process::ExitCode;

use clap::Parser;
use vpq_cli::{run, Cli, CliError};

fn emit(outcome: &vpq_cli::Outcome) -> Result<(), CliError> {
    match &outcome.out {
        Some(path) => std::fs::write(path, &outcome.output).map_err(|source| CliError::Io {
            path: path.clone(),
            source,
        }),
        None => {
            let mut stdout = std::io::stdout().lock();
            // A closed pipe is not an error worth reporting.
            let _ = stdout.write_all(outcome.output.as_bytes());
            Ok(())
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli).and_then(|o| emit(&o).map(|()| o)) {
        Ok(outcome) => {
            if let Some(note) = &outcome.note {
                eprintln!("{note}");
            }
            ExitCode::from(outcome.code)
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
