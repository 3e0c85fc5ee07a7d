use std::io::Write;
use std::process::ExitCode;

use clap::Parser;
use frontier_core::Error;
use graphbench::{run, Cli};

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(report) => {
            let mut out = std::io::stdout().lock();
            if let Err(e) = report.write(cli.format, &mut out).and_then(|_| Ok(out.flush()?)) {
                eprintln!("error: {e:#}");
                return ExitCode::from(1);
            }
            if report.validation.is_failed() {
                ExitCode::from(1)
            } else {
                ExitCode::SUCCESS
            }
        }
        Err(e) => {
            eprintln!("error: {e:#}");
            match e.downcast_ref::<Error>() {
                Some(Error::Usage(_)) => ExitCode::from(2),
                _ => ExitCode::from(1),
            }
        }
    }
}
