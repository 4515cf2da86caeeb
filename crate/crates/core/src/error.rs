use std::fmt;

use serde::Serialize;

/// A failed identity: which axiom or relation, and where.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Violation {
    pub axiom: String,
    pub location: String,
}

impl Violation {
    pub fn new(axiom: impl Into<String>, location: impl Into<String>) -> Self {
        Violation {
            axiom: axiom.into(),
            location: location.into(),
        }
    }
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} fails at {}", self.axiom, self.location)
    }
}

#[derive(Debug, thiserror::Error)]
pub enum Error {
    #[error("invalid input: {0}")]
    Input(String),
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
    #[error("dimension cap exceeded: {dim} > {cap} ({what})")]
    DimensionCap { dim: usize, cap: usize, what: String },
    #[error("{0}")]
    Violation(Violation),
    #[error("unsupported: {0}")]
    Unsupported(String),
    #[error("not well defined: {0}")]
    NotWellDefined(String),
}

impl From<Violation> for Error {
    fn from(v: Violation) -> Self {
        Error::Violation(v)
    }
}

pub type Result<T> = std::result::Result<T, Error>;

/// Fails with [`Error::DimensionCap`] when `dim` exceeds `cap`.
pub fn check_cap(dim: usize, cap: usize, what: impl FnOnce() -> String) -> Result<()> {
    if dim > cap {
        Err(Error::DimensionCap {
            dim,
            cap,
            what: what(),
        })
    } else {
        Ok(())
    }
}
