use serde::{Deserialize, Serialize};
use thiserror::Error;

#[derive(Debug, Error)]
pub enum CliError {
    #[error(transparent)]
    Core(#[from] suppvar::Error),

    #[error("invalid input: {0}")]
    Input(String),

    #[error("i/o error on {path}: {source}")]
    Io {
        path: String,
        source: std::io::Error,
    },

    #[error("serialization error: {0}")]
    Json(#[from] serde_json::Error),
}

/// Process exit codes.
pub mod exit {
    pub const PASS: i32 = 0;
    pub const FAIL: i32 = 1;
    pub const INVALID_INPUT: i32 = 2;
    pub const CAPACITY: i32 = 3;
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Core(e) => match e {
                suppvar::Error::Capacity { .. } => exit::CAPACITY,
                suppvar::Error::VerificationFailure { .. }
                | suppvar::Error::InvariantViolation(_) => exit::FAIL,
                _ => exit::INVALID_INPUT,
            },
            CliError::Input(_) => exit::INVALID_INPUT,
            CliError::Io { .. } | CliError::Json(_) => exit::FAIL,
        }
    }

    pub fn kind(&self) -> &'static str {
        match self {
            CliError::Core(e) => match e {
                suppvar::Error::InvalidCartanType { .. } => "invalid_type",
                suppvar::Error::InvalidLevel { .. } => "invalid_level",
                suppvar::Error::Capacity { .. } => "capacity",
                suppvar::Error::VerificationFailure { .. } => "verification_failure",
                suppvar::Error::InvariantViolation(_) => "invariant_violation",
                suppvar::Error::NotMinimalInCoset => "not_minimal_in_coset",
                suppvar::Error::NotDominant(_) => "not_dominant",
                suppvar::Error::AssumptionViolation(_) => "assumption_violation",
                _ => "invalid_input",
            },
            CliError::Input(_) => "invalid_input",
            CliError::Io { .. } => "io",
            CliError::Json(_) => "serialization",
        }
    }

    pub fn report(&self) -> ErrorReport {
        ErrorReport {
            error: ErrorBody {
                kind: self.kind().into(),
                message: self.to_string(),
                exit_code: self.exit_code(),
            },
        }
    }
}

/// The machine-readable form printed when a command cannot produce a certificate.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ErrorReport {
    pub error: ErrorBody,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ErrorBody {
    pub kind: String,
    pub message: String,
    pub exit_code: i32,
}
