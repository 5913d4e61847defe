use std::io;
use std::process::ExitCode;

use bipareto::{run, RunConfig};
use clap::Parser;

fn main() -> ExitCode {
    let cfg = RunConfig::parse();
    match run(&cfg, io::stdout().lock()) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("bipareto: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
