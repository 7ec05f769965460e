use std::io::Write;
use std::process::ExitCode;

use clap::Parser;
use coxpoly_cli::{run, Cli, CliError};

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(out) => {
            let text = out.render(cli.output_format());
            let mut stdout = std::io::stdout().lock();
            if stdout.write_all(text.as_bytes()).is_err() {
                return ExitCode::from(3);
            }
            if out.all_hold() {
                ExitCode::SUCCESS
            } else {
                ExitCode::FAILURE
            }
        }
        Err(e) => {
            eprintln!("coxpoly: {e}");
            match e {
                CliError::Usage(_) => ExitCode::from(2),
                CliError::Domain(_) | CliError::Io(_) => ExitCode::from(3),
            }
        }
    }
}
