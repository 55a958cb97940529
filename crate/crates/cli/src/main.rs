use std::process::ExitCode;

use clap::Parser;
use invcount::{run, Cli};

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => e.exit(),
    };
    match run(&cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("invcount: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}
