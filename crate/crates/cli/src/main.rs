//! `credence` binary: exit 0 on success, 1 on usage or configuration errors,
//! 2 when a validation suite fails.

use std::process::ExitCode;

use clap::Parser;
use credence_cli::args::Cli;
use credence_cli::commands::dispatch;

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 1 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match dispatch(&cli) {
        Ok(o) => {
            print!("{}", o.report);
            if o.failed {
                ExitCode::from(2)
            } else {
                ExitCode::SUCCESS
            }
        }
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(1)
        }
    }
}
