use thiserror::Error;

use crate::report::ValidationReport;

#[derive(Debug, Error)]
pub enum Error {
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),

    #[error("field mismatch: {0} vs {1}")]
    FieldMismatch(String, String),

    #[error("objects live over different Hopf algebras")]
    HopfMismatch,

    #[error("no antipode: the antipode equations are inconsistent")]
    NoAntipode,

    #[error("not cosemisimple: no normalized integral exists")]
    NotCosemisimple,

    #[error("{0} is not commutative")]
    NotCommutative(String),

    #[error("not simple or not split: {0}")]
    NotSimple(String),

    #[error("hypothesis failed: {0}")]
    Hypothesis(String),

    #[error("resource guard: {what} needs ambient dimension {needed}, cap is {cap}")]
    ResourceLimit { what: String, needed: usize, cap: usize },

    #[error("{object}: {report}")]
    Validation { object: String, report: ValidationReport },

    #[error("parse error: {0}")]
    Parse(String),

    #[error("unknown name: {0}")]
    UnknownName(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;

impl Error {
    /// Process exit code: 3 for malformed input and unknown names, 1 for everything else.
    pub fn exit_code(&self) -> i32 {
        match self {
            Error::Parse(_) | Error::UnknownName(_) | Error::Io(_) => 3,
            _ => 1,
        }
    }
}
