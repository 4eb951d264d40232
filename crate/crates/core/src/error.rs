//! Error type shared by every engine.

use crate::field::Field;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("division by zero")]
    DivisionByZero,
    #[error("field mismatch: {0} vs {1}")]
    FieldMismatch(Field, Field),
    #[error("invalid field: {0}")]
    InvalidField(String),
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
    #[error("right-hand side is not in the column space")]
    Inconsistent,
    #[error("matrix is not {0} triangular")]
    NotTriangular(&'static str),
    #[error("shape violation: {0}")]
    ShapeViolation(String),
    #[error("block structure violation: {0}")]
    BlockStructureViolation(String),
    #[error("duplicate simplex {0:?}")]
    DuplicateSimplex(Vec<usize>),
    #[error("image simplex {0:?} is missing from the target complex")]
    ImageSimplexMissing(Vec<usize>),
    #[error("maps {0} and {1} are not composable")]
    NotComposable(usize, usize),
    #[error("chain map property fails in dimension {0}")]
    ChainMapViolation(usize),
    #[error("matrix is not invertible")]
    NotInvertible,
    #[error("block {0} is not a pivot matrix")]
    NotBarcodeForm(usize),
    #[error("arrows must all point the same way")]
    NotPersistenceType,
    #[error("line {line}: {msg}")]
    Parse { line: usize, msg: String },
    #[error("{0}")]
    Validation(String),
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn parse_err(line: usize, msg: impl Into<String>) -> Error {
    Error::Parse { line, msg: msg.into() }
}
