use crate::scalar::FieldKind;

/// Errors raised by gidkit operations.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("division by zero")]
    DivisionByZero,

    #[error("scalar kinds differ: {left} and {right}")]
    KindMismatch { left: FieldKind, right: FieldKind },

    #[error("{op}: incompatible shapes {}x{} and {}x{}", left.0, left.1, right.0, right.1)]
    DimensionMismatch {
        op: &'static str,
        left: (usize, usize),
        right: (usize, usize),
    },

    #[error("{op}: expected an endomorphism, got {rows}x{cols}")]
    NotSquare {
        op: &'static str,
        rows: usize,
        cols: usize,
    },

    #[error("matrix is singular")]
    Singular,

    /// The Drazin index is at least 2.
    #[error("no group inverse: Drazin index is {index}")]
    NoGroupInverse { index: usize },

    /// The dagger-Drazin index is at least 2.
    #[error("no dagger-group inverse: dagger-Drazin index is {index}")]
    NoDaggerGroupInverse { index: usize },

    #[error("map is not self-adjoint")]
    NotSelfAdjoint,

    #[error("invalid partial injection: {0}")]
    InvalidPartialInjection(String),

    #[error("malformed input: {0}")]
    Parse(String),

    /// Two routes to the same quantity disagreed. Always a bug in exact mode.
    #[error("internal inconsistency: {0}")]
    Inconsistent(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
