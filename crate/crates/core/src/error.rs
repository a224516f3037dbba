use thiserror::Error;

use crate::lie::ValidationReport;
use crate::linalg::LinalgError;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error(transparent)]
    Linalg(#[from] LinalgError),

    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },

    #[error("basis index {index} out of range for dimension {dim}")]
    IndexOutOfRange { index: usize, dim: usize },

    #[error("structure constant c[{i},{j}]^{k} given twice")]
    DuplicateConstant { i: usize, j: usize, k: usize },

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("invalid Lie (super)algebra: {0}")]
    InvalidAlgebra(ValidationReport),

    #[error("invalid representation: bracket relation fails on basis pairs {0:?}")]
    InvalidRepresentation(Vec<(usize, usize)>),

    #[error("subspace lives in dimension {found}, algebra has dimension {expected}")]
    AmbientMismatch { expected: usize, found: usize },

    #[error("subspace is not closed under the bracket")]
    NotSubalgebra,

    #[error("representations act on different algebras")]
    AlgebraMismatch,

    #[error("operation requires an ungraded Lie algebra")]
    GradedInput,

    #[error("operation requires a graded Lie superalgebra")]
    UngradedInput,

    #[error("gradings differ: one algebra is graded and the other is not")]
    GradingMismatch,

    #[error("subspace is not contained in the even part")]
    NotInEvenPart,

    #[error("action does not preserve the symplectic form: {0}")]
    NotSymplectic(ValidationReport),

    #[error("operation needs a solution space in {expected} mode, got {found}")]
    WrongMode { expected: &'static str, found: String },

    #[error("hypotheses not met: {0}")]
    HypothesesViolated(String),

    #[error("skew solution {index} does not factor through the bracket")]
    NoFactorization { index: usize },

    #[error("line {line}, column {column}: {message}")]
    Parse { line: usize, column: usize, message: String },

    #[error("unknown {kind} {name:?}")]
    Unknown { kind: &'static str, name: String },

    #[error("brute-force oracle limited to {limit} unknowns, instance has {unknowns}")]
    SizeGuard { unknowns: usize, limit: usize },
}
