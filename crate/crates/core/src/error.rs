use std::io;

use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("division by zero")]
    DivisionByZero,

    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),

    /// Malformed text input. `line` is 1-based when known.
    #[error("parse error{}: {message}", location(*.line, .field.as_deref()))]
    Parse {
        line: Option<usize>,
        field: Option<String>,
        message: String,
    },

    /// A construction produced a value that contradicts its own invariants,
    /// e.g. a nonzero imaginary part in a tensor that must be real.
    #[error("internal consistency error: {0}")]
    InternalConsistency(String),

    #[error("unknown suite {0:?}")]
    UnknownSuite(String),

    #[error("unknown quantity {0:?}")]
    UnknownQuantity(String),

    #[error("arithmetic overflow: {0}")]
    Overflow(String),

    #[error(transparent)]
    Io(#[from] io::Error),
}

fn location(line: Option<usize>, field: Option<&str>) -> String {
    match (line, field) {
        (Some(l), Some(f)) => format!(" at line {l}, field {f}"),
        (Some(l), None) => format!(" at line {l}"),
        (None, Some(f)) => format!(" in field {f}"),
        (None, None) => String::new(),
    }
}

impl Error {
    pub fn parse(message: impl Into<String>) -> Self {
        Error::Parse {
            line: None,
            field: None,
            message: message.into(),
        }
    }

    pub fn parse_at(line: usize, field: impl Into<String>, message: impl Into<String>) -> Self {
        Error::Parse {
            line: Some(line),
            field: Some(field.into()),
            message: message.into(),
        }
    }

    pub fn consistency(message: impl Into<String>) -> Self {
        Error::InternalConsistency(message.into())
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
