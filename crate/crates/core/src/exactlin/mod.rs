//! Exact linear algebra over ℚ and 𝔽ₚ: sparse matrices, row reduction,
//! tensor products, quotient presentations and descent of maps to quotients.

mod matrix;
mod quotient;
mod scalar;
mod space;
mod sparse;
pub mod tensor;

pub use matrix::{Matrix, Rref, Solver, DENSE_FILL_THRESHOLD};
pub use quotient::{descend, quotient_by, DescentFailure, QuotientPresentation};
pub use scalar::{FieldSpec, Rat, Scalar};
pub use space::{tensor_map, tensor_maps, tensor_space, tensor_spaces, LinMap, Space};
pub use sparse::{from_dense, Accum, SparseVec};
pub use tensor::TensorShape;

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LinAlgError {
    #[error("dimension mismatch: expected {expected:?}, found {found:?}")]
    DimensionMismatch { expected: (usize, usize), found: (usize, usize) },
    #[error("operands live over different fields")]
    FieldMismatch,
    #[error("linear system has no solution")]
    NoSolution,
    #[error("map does not descend: relation {} survives at coordinate {}", .0.relation, .0.coordinate)]
    Descent(DescentFailure),
    #[error("zero denominator")]
    ZeroDenominator,
    #[error("cannot parse scalar {0:?}")]
    ParseScalar(String),
    #[error("invalid field: {0}")]
    InvalidField(String),
}

impl From<DescentFailure> for LinAlgError {
    fn from(d: DescentFailure) -> Self {
        LinAlgError::Descent(d)
    }
}

/// `rref(m)` as a free function: (reduced matrix, pivot columns, rank).
pub fn rref(m: &Matrix) -> Rref {
    m.rref()
}

pub fn kernel(m: &LinMap) -> LinMap {
    m.kernel()
}

pub fn solve(m: &LinMap, target: &SparseVec) -> Result<SparseVec, LinAlgError> {
    m.solve(target)
}
