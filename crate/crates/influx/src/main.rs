use std::process::ExitCode;

use clap::Parser;
use influx::cli::{self, Cli};

fn main() -> ExitCode {
    let args = Cli::parse();
    match cli::run(&args) {
        Ok(summary) => {
            for file in &summary.files {
                println!("wrote {}", file.display());
            }
            ExitCode::SUCCESS
        }
        Err(e) => {
            eprintln!("influx: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
