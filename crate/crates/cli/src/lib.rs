//! Library side of the `bgposet` command-line tool: argument parsing,
//! output records, DOT rendering and the verification suites. The
//! binary in `main.rs` is a thin clap wrapper over [`commands`].

pub mod commands;
pub mod config;
pub mod dot;
pub mod output;
pub mod parse;
pub mod verify;

/// A command failure carrying the process exit code.
///
/// Codes: 1 formula/oracle mismatch or verify failure, 2 invalid
/// input, 3 method precondition violation, 4 unwritable output path.
#[derive(Debug)]
pub struct CliError {
    pub code: i32,
    pub message: String,
}

impl CliError {
    pub fn new(code: i32, message: impl Into<String>) -> Self {
        CliError {
            code,
            message: message.into(),
        }
    }
}

/// Output format for tabular commands. JSON is the default everywhere;
/// CSV is available for the `enumerate` and `stats` tables.
#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum Format {
    Json,
    Csv,
}
