// `!(x > 0)` deliberately rejects NaN along with non-positive values.
#![allow(clippy::neg_cmp_op_on_partial_ord)]

mod args;
mod config;
mod format;
mod run;

use std::process::ExitCode;

use clap::Parser;

fn main() -> ExitCode {
    let config = args::Cli::parse().into_config();
    if let Err(msg) = config.validate() {
        eprintln!("error: {msg}");
        return ExitCode::from(2);
    }
    match run::run(&config) {
        Ok(outcome) if outcome.passed() => ExitCode::SUCCESS,
        Ok(outcome) => {
            for f in &outcome.failures {
                eprintln!(
                    "FAIL check={} value={} limit={}",
                    f.check,
                    format::sig(f.value),
                    format::sig(f.limit)
                );
            }
            eprintln!("FAILED checks={}", outcome.failures.len());
            ExitCode::from(1)
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(1)
        }
    }
}
