use thiserror::Error;

use crate::exactlin::{DescentFailure, LinAlgError};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error(transparent)]
    LinAlg(#[from] LinAlgError),
    #[error("{operator} does not descend to the quotient (relation {}, coordinate {})", .failure.relation, .failure.coordinate)]
    Descent { operator: String, failure: DescentFailure },
    #[error("invalid data: {0}")]
    InvalidData(String),
    #[error("cyclic homology requires characteristic zero")]
    CharNotZero,
    #[error("operation requires a commutative {0}")]
    NotCommutative(String),
    #[error("operation requires a cocommutative coalgebra")]
    NotCocommutative,
    #[error("word length {needed} exceeds cutoff {cutoff}")]
    CutoffExceeded { needed: usize, cutoff: usize },
    #[error("{0}")]
    NoSolution(String),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("unknown reference: {0}")]
    Reference(String),
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
    #[error("coefficient module {0} is not stable")]
    StabilityFailure(String),
    #[error("{0} is not invertible")]
    NotInvertible(String),
    #[error("certificate failed: {0}")]
    CertificateFailure(String),
}

impl Error {
    /// Stable name of the variant, used in reports.
    pub fn kind(&self) -> &'static str {
        match self {
            Error::LinAlg(_) => "LinAlg",
            Error::Descent { .. } => "Descent",
            Error::InvalidData(_) => "InvalidData",
            Error::CharNotZero => "CharNotZero",
            Error::NotCommutative(_) => "NotCommutative",
            Error::NotCocommutative => "NotCocommutative",
            Error::CutoffExceeded { .. } => "CutoffExceeded",
            Error::NoSolution(_) => "NoSolution",
            Error::Parse(_) => "ParseError",
            Error::Reference(_) => "ReferenceError",
            Error::DimensionMismatch(_) => "DimensionMismatch",
            Error::StabilityFailure(_) => "StabilityFailure",
            Error::NotInvertible(_) => "NotInvertible",
            Error::CertificateFailure(_) => "CertificateFailure",
        }
    }

    pub fn descent(operator: impl Into<String>, failure: DescentFailure) -> Error {
        Error::Descent { operator: operator.into(), failure }
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
