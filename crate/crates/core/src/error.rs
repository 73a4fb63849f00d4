use alloc::boxed::Box;
use alloc::string::String;

use crate::report::CheckReport;
use crate::scalar::Field;

/// Structural errors. Axiom failures are not errors: they are reported in a
/// [`CheckReport`]. A `Precondition` error wraps the report of the checker
/// that rejected the input of a construction.
#[derive(Debug, thiserror::Error)]
pub enum Error {
    #[error("{0} is not a prime below 2^31")]
    NotPrime(u64),
    #[error("invalid scalar `{0}`")]
    InvalidScalar(String),
    #[error("field mismatch: expected {expected}, found {found}")]
    FieldMismatch { expected: Field, found: Field },
    #[error("dimension mismatch in {what}: expected {expected}, found {found}")]
    DimensionMismatch {
        what: String,
        expected: usize,
        found: usize,
    },
    #[error("precondition failed: {} reported {} violation(s)", .0.check, .0.violations.len())]
    Precondition(Box<CheckReport>),
    #[error("{0}")]
    Invalid(String),
}

impl Error {
    pub fn dim(what: impl Into<String>, expected: usize, found: usize) -> Error {
        Error::DimensionMismatch {
            what: what.into(),
            expected,
            found,
        }
    }

    pub fn precondition(report: CheckReport) -> Error {
        Error::Precondition(Box::new(report))
    }
}

pub type Result<T> = core::result::Result<T, Error>;

pub(crate) fn same_field(expected: Field, found: Field) -> Result<()> {
    if expected != found {
        return Err(Error::FieldMismatch { expected, found });
    }
    Ok(())
}

pub(crate) fn same_dim(what: &str, expected: usize, found: usize) -> Result<()> {
    if expected != found {
        return Err(Error::dim(what, expected, found));
    }
    Ok(())
}
