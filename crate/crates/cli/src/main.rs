//! `esl` — command-line surface of the empty-state library.
//!
//! Exit codes: 0 success, 2 configuration error, 3 truncation overflow,
//! 4 limit divergence, 5 necessary condition not met, 1 I/O or validation
//! failure. Errors print a single line `error[<kind>]: <message>` on
//! stderr.

mod config;
mod error;
mod figures;
mod output;
mod run;

use clap::Parser;

fn main() {
    let cli = config::Cli::parse();
    match run::dispatch(&cli) {
        Ok(code) => std::process::exit(code),
        Err(e) => {
            eprintln!("error[{}]: {}", e.kind(), e);
            std::process::exit(e.exit_code());
        }
    }
}
