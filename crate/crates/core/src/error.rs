use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("shift amount {0} is not an integer")]
    NonIntegralShift(String),
    #[error("degree {0} is too small (need d >= 2)")]
    DegreeTooSmall(i64),
    #[error("negative multiplicity {mult} at {at}")]
    NegativeMultiplicity { at: String, mult: i64 },
    #[error("table is not monotone along the weight filtration at {at}")]
    NotWeightMonotone { at: String },
    #[error("singularity is not isolated: {0}")]
    NonIsolated(String),
    #[error("inconsistent global data: {clause} gives {value} at {at}")]
    InconsistentGlobalData {
        clause: &'static str,
        at: String,
        value: i64,
    },
    #[error("closed-form curve formula {clause} is negative ({value})")]
    NegativeFormula { clause: &'static str, value: i64 },
    #[error("mod-2 spectral pairs do not decompose into Jordan chains: {0}")]
    AmbiguousResidue(String),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("validation error at `{path}`: {message}")]
    Validation { path: String, message: String },
}

impl Error {
    /// Process exit code: 1 for malformed or invalid input, 2 for input that is
    /// well formed but inconsistent, 3 for an internal property failure.
    pub fn exit_code(&self) -> i32 {
        match self {
            Error::InconsistentGlobalData { .. } | Error::NegativeFormula { .. } => 2,
            Error::AmbiguousResidue(_) => 3,
            _ => 1,
        }
    }

    pub(crate) fn validation(path: impl Into<String>, message: impl Into<String>) -> Self {
        Error::Validation {
            path: path.into(),
            message: message.into(),
        }
    }
}
