//! Command-line front end: batch verification and data export.
//!
//! Exit codes: 0 on success or verified equality, 1 on a verified
//! mismatch (diagnostics on stdout as JSON), 2 on usage errors.

use clap::Parser;

pub fn run() -> i32 {
    let _cli = Cli::parse();
    0
}

#[derive(Parser, Debug)]
#[command(name = "cnchars", version, about)]
enum Cli {
    /// Placeholder while the verification commands are wired up.
    Noop,
}
