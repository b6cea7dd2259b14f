use std::fmt::Write as _;

use thiserror::Error;

use crate::exactla::Rational;

pub type Result<T> = std::result::Result<T, Error>;

/// Everything that can go wrong in the library.
///
/// Variants split into two severities: bad input (the caller handed us
/// something that is not a valid nilpotent Lie algebra, or asked for an
/// operation outside its domain) and internal failures (a proved identity
/// or a cross-check did not hold, which means the implementation is wrong).
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },

    #[error("invalid structure constants: {0}")]
    InvalidInput(String),

    /// Triple indices are 0-based; the message prints them 1-based.
    #[error(
        "Jacobi identity fails on basis triple ({}, {}, {}); defect {}",
        .triple.0 + 1, .triple.1 + 1, .triple.2 + 1, fmt_vector(.defect)
    )]
    JacobiViolation {
        triple: (usize, usize, usize),
        defect: Vec<Rational>,
    },

    #[error("not nilpotent: lower central series stabilizes at a nonzero term of dimension {}", .stable_term.len())]
    NotNilpotent { stable_term: Vec<Vec<Rational>> },

    #[error("subspace is not an ideal; [L, K] leaves K at {}", fmt_vector(.witness))]
    NotAnIdeal { witness: Vec<Rational> },

    #[error("subspace is not closed under the bracket (basis pair ({}, {}))", .pair.0 + 1, .pair.1 + 1)]
    NotClosed { pair: (usize, usize) },

    #[error("matrix is singular")]
    SingularMatrix,

    #[error("subspace is not central")]
    NotCentral,

    #[error("subspace is not contained in the derived algebra")]
    NotInsideDerived,

    #[error("algebra has nilpotency class {class}, expected exactly 2")]
    NotClassTwo { class: usize },

    #[error("algebra has nilpotency class {class}, at least 3 is required")]
    ClassTooSmall { class: usize },

    #[error("index {index} out of range {min}..={max}")]
    IndexOutOfRange { index: usize, min: usize, max: usize },

    #[error("precondition failed: {0}")]
    PreconditionFailed(String),

    #[error("domain violation: {0}")]
    DomainViolation(String),

    #[error("unknown algebra name `{0}`")]
    UnknownName(String),

    #[error("bad parameter: {0}")]
    BadParameter(String),

    #[error("parse error at position {position}: {message}")]
    Parse { position: usize, message: String },

    #[error("internal inconsistency: {0}")]
    InternalInconsistency(String),

    #[error("theorem violation: {0}")]
    TheoremViolation(String),
}

impl Error {
    /// True for failures that indicate a bug rather than bad input.
    pub fn is_internal(&self) -> bool {
        matches!(
            self,
            Error::InternalInconsistency(_) | Error::TheoremViolation(_)
        )
    }
}

pub(crate) fn fmt_vector(v: &[Rational]) -> String {
    let mut out = String::from("(");
    for (i, c) in v.iter().enumerate() {
        if i > 0 {
            out.push_str(", ");
        }
        let _ = write!(out, "{c}");
    }
    out.push(')');
    out
}
