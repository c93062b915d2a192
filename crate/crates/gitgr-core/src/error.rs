use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

use num_bigint::BigUint;

pub type Result<T> = core::result::Result<T, Error>;

/// One `(a, b)` candidate tried during calibration, with the dimension it
/// produced in each checked degree.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CalibrationCandidate {
    pub a: i64,
    pub b: i64,
    pub dims: Vec<BigUint>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Error {
    /// An argument is outside the domain of the operation.
    Domain(String),
    /// An enumeration would walk more items than the configured cap.
    Resource { what: &'static str, needed: u128, cap: u64 },
    /// The operation only exists in the parabolic-induction case.
    Unsupported(String),
    /// An internal consistency check failed.
    Invariant(String),
    /// No `(a, b)` in the search grid reproduces the Hilbert function.
    Calibration { targets: Vec<BigUint>, candidates: Vec<CalibrationCandidate> },
}

impl Error {
    pub(crate) fn domain(msg: impl Into<String>) -> Self {
        Error::Domain(msg.into())
    }

    pub(crate) fn invariant(msg: impl Into<String>) -> Self {
        Error::Invariant(msg.into())
    }

    pub(crate) fn unsupported(msg: impl Into<String>) -> Self {
        Error::Unsupported(msg.into())
    }
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::Domain(msg) => write!(f, "domain error: {msg}"),
            Error::Resource { what, needed, cap } => {
                write!(f, "resource error: {what} needs {needed} items, enumeration cap is {cap}")
            }
            Error::Unsupported(msg) => write!(f, "unsupported case: {msg}"),
            Error::Invariant(msg) => write!(f, "invariant violation: {msg}"),
            Error::Calibration { targets, candidates } => {
                write!(f, "calibration failed: targets [")?;
                for (i, t) in targets.iter().enumerate() {
                    if i > 0 {
                        f.write_str(", ")?;
                    }
                    write!(f, "{t}")?;
                }
                write!(f, "], {} candidates tried", candidates.len())
            }
        }
    }
}

impl core::error::Error for Error {}
