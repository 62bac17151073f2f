//! Batch front end for `nlalg-core`: problem files in, JSON reports out,
//! plus the brute-force oracle suite.

pub mod commands;
pub mod oracle;
pub mod problem;
pub mod report;

use thiserror::Error;

pub use commands::run_command;
pub use oracle::{run_oracle, OracleKind};
pub use problem::{parse_problem, parse_problem_file, ProblemFile};
pub use report::Report;

/// Failures before a command runs. Usage errors exit with 2, engine errors
/// surfaced while loading (such as an invalid n-field) with 1.
#[derive(Debug, Error)]
pub enum CliError {
    #[error("syntax error{}: {message}", line.map(|l| format!(" at line {l}")).unwrap_or_default())]
    Syntax { line: Option<usize>, message: String },
    #[error("unknown field {0}")]
    UnknownField(String),
    #[error("undefined name {0:?}")]
    UndefinedName(String),
    #[error("{0}")]
    Io(String),
    #[error(transparent)]
    Engine(#[from] nlalg_core::Error),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Engine(_) => 1,
            _ => 2,
        }
    }

    pub fn kind(&self) -> &'static str {
        match self {
            CliError::Syntax { .. } => "SyntaxError",
            CliError::UnknownField(_) => "UnknownField",
            CliError::UndefinedName(_) => "UndefinedName",
            CliError::Io(_) => "IoError",
            CliError::Engine(e) => e.kind(),
        }
    }

    pub fn line(&self) -> Option<usize> {
        match self {
            CliError::Syntax { line, .. } => *line,
            _ => None,
        }
    }
}

/// Parses and runs a problem document; parse failures become error
/// reports.
pub fn run_text(text: &str) -> Report {
    match parse_problem(text) {
        Ok(p) => run_command(&p),
        Err(e) => Report::from_error(&e),
    }
}
