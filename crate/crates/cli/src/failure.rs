use std::path::Path;

use sieve_sparing::Error;

pub const USAGE: u8 = 2;
pub const INPUT: u8 = 3;
pub const DOMAIN: u8 = 4;
pub const BUDGET: u8 = 5;

/// A fatal error with its process exit code.
#[derive(Debug)]
pub struct Failure {
    pub code: u8,
    pub message: String,
}

/// Non-fatal completion. `Findings` exits with status 1: the run finished
/// but found a disagreement that must not be ignored.
pub enum Outcome {
    Success,
    Findings(String),
}

impl Failure {
    pub fn usage(message: impl Into<String>) -> Self {
        Failure {
            code: USAGE,
            message: message.into(),
        }
    }

    pub fn input(message: impl Into<String>) -> Self {
        Failure {
            code: INPUT,
            message: message.into(),
        }
    }

    pub fn budget(message: impl Into<String>) -> Self {
        Failure {
            code: BUDGET,
            message: message.into(),
        }
    }

    pub fn io(path: &Path, err: std::io::Error) -> Self {
        Failure::input(format!("{}: {err}", path.display()))
    }
}

impl From<Error> for Failure {
    fn from(err: Error) -> Self {
        let code = match err {
            Error::InvalidGraph(_) | Error::Format(_) | Error::MissingLabel(_) => INPUT,
            Error::Domain(_) | Error::SizeCap { .. } | Error::NotIndependent(..) => DOMAIN,
        };
        Failure {
            code,
            message: err.to_string(),
        }
    }
}
