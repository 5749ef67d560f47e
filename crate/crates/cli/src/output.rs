use std::time::Instant;

use clap::ValueEnum;
use serde::Serialize;
use serde_json::Value;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Csv,
    Json,
}

/// JSON wrapper for every command result. Big integers are rendered as strings upstream.
#[derive(Debug, Serialize)]
pub struct OutputEnvelope {
    pub query: Value,
    pub result: Value,
    pub method: String,
    pub elapsed_ms: u128,
}

impl OutputEnvelope {
    pub fn new(query: Value, result: Value, method: impl Into<String>, start: Instant) -> Self {
        Self {
            query,
            result,
            method: method.into(),
            elapsed_ms: start.elapsed().as_millis(),
        }
    }

    pub fn print(&self) {
        println!("{}", serde_json::to_string(self).expect("envelope serializes"));
    }
}

/// Process exit status: 1 for a failed check, 2 for bad input.
#[derive(Debug)]
pub enum CliError {
    Failure(String),
    Usage(String),
}

impl CliError {
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Failure(_) => 1,
            CliError::Usage(_) => 2,
        }
    }

    pub fn message(&self) -> &str {
        match self {
            CliError::Failure(m) | CliError::Usage(m) => m,
        }
    }
}

impl From<klm_core::Error> for CliError {
    fn from(e: klm_core::Error) -> Self {
        match e {
            // A non-integer closed form is an internal inconsistency, not bad input.
            klm_core::Error::NonIntegerResult { .. } => CliError::Failure(e.to_string()),
            _ => CliError::Usage(e.to_string()),
        }
    }
}

pub type CliResult = Result<(), CliError>;

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn exit_codes() {
        assert_eq!(CliError::Failure("x".into()).exit_code(), 1);
        assert_eq!(CliError::Usage("x".into()).exit_code(), 2);
        let bad = klm_core::RhoUniformParams::new(0, 3, 0).unwrap_err();
        assert_eq!(CliError::from(bad).exit_code(), 2);
    }
}
