use std::io::Write;
use std::process::ExitCode;
use std::time::Instant;

use clap::Parser;
use latpoly::{run, Cli};

fn main() -> ExitCode {
    let cli = Cli::parse();
    let start = Instant::now();
    match run(&cli) {
        Ok(mut report) => {
            if cli.timing {
                report.elapsed = Some(start.elapsed());
            }
            let mut out = std::io::stdout().lock();
            if out.write_all(report.render().as_bytes()).is_err() {
                return ExitCode::from(1);
            }
            if report.consistent {
                ExitCode::SUCCESS
            } else {
                eprintln!("latpoly: cross-check failed");
                ExitCode::from(3)
            }
        }
        Err(e) => {
            eprintln!("latpoly: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
