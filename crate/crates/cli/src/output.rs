use std::fmt;
use std::io::{self, Write};

use clap::ValueEnum;
use serde::Serialize;

/// Output format; `CLIFFORD3_OUTPUT` overrides each command's default.
#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Csv,
}

#[derive(Debug)]
pub enum CliError {
    Core(clifford3_core::Error),
    Usage { code: &'static str, message: String },
    Io(String),
}

impl CliError {
    pub fn usage(code: &'static str, message: impl Into<String>) -> Self {
        CliError::Usage { code, message: message.into() }
    }

    pub fn code(&self) -> &'static str {
        match self {
            CliError::Core(e) => e.code(),
            CliError::Usage { code, .. } => code,
            CliError::Io(_) => "Io",
        }
    }

    /// Validation errors exit with 2, IO failures with 1.
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Io(_) => 1,
            _ => 2,
        }
    }
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliError::Core(e) => write!(f, "{e}"),
            CliError::Usage { message, .. } => f.write_str(message),
            CliError::Io(message) => f.write_str(message),
        }
    }
}

impl From<clifford3_core::Error> for CliError {
    fn from(e: clifford3_core::Error) -> Self {
        CliError::Core(e)
    }
}

impl From<io::Error> for CliError {
    fn from(e: io::Error) -> Self {
        CliError::Io(e.to_string())
    }
}

impl From<csv::Error> for CliError {
    fn from(e: csv::Error) -> Self {
        CliError::Io(e.to_string())
    }
}

impl From<serde_json::Error> for CliError {
    fn from(e: serde_json::Error) -> Self {
        CliError::Io(e.to_string())
    }
}

pub type CliResult<T = ()> = Result<T, CliError>;

#[derive(Serialize)]
struct ErrorBody<'a> {
    code: &'a str,
    message: String,
}

pub fn error_json(code: &str, message: String) -> String {
    serde_json::to_string(&ErrorBody { code, message }).expect("error body serializes")
}

pub fn print_json<T: Serialize>(value: &T) -> CliResult {
    let mut out = io::stdout().lock();
    serde_json::to_writer(&mut out, value)?;
    writeln!(out)?;
    Ok(())
}

/// CSV writer on stdout with the given header.
pub fn csv_writer(header: &[&str]) -> CliResult<csv::Writer<io::Stdout>> {
    let mut w = csv::WriterBuilder::new().has_headers(false).from_writer(io::stdout());
    w.write_record(header)?;
    Ok(w)
}
