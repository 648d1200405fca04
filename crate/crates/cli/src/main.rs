use std::process::ExitCode;
use std::time::Instant;

use clap::Parser;

use metagroup_cli::{run, Cli, EXIT_BAD_INPUT};

fn main() -> ExitCode {
    let cli = Cli::parse();
    let start = Instant::now();
    let result = run(&cli);
    eprintln!("elapsed_ms: {}", start.elapsed().as_millis());
    match result {
        Ok(report) => {
            let text = report.render();
            match &report.out {
                Some(path) => {
                    if let Err(e) = std::fs::write(path, text) {
                        eprintln!("error: cannot write {}: {e}", path.display());
                        return ExitCode::from(EXIT_BAD_INPUT as u8);
                    }
                }
                None => print!("{text}"),
            }
            ExitCode::from(report.code as u8)
        }
        Err(failure) => {
            eprintln!("error: {failure}");
            ExitCode::from(failure.code as u8)
        }
    }
}
