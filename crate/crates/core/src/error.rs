use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    #[error("operands live on different inner-product spaces")]
    SpaceMismatch,
    #[error("degree error: {0}")]
    Degree(String),
    #[error("dimension error: {0}")]
    Dimension(String),
    #[error("invalid input: {0}")]
    InvalidInput(String),
    #[error("unsupported metric: {0}")]
    UnsupportedMetric(String),
    #[error("degenerate plane: X and Y are linearly dependent")]
    DegeneratePlane,
    #[error("basis not closed under commutator: [{0}, {1}] leaves the span")]
    Closure(usize, usize),
    #[error("not diagonalizable over the rationals: {0}")]
    NotDiagonalizable(String),
    #[error("unknown generator `{0}`")]
    UnknownGenerator(String),
    #[error("d^2 != 0 on generator `{0}`")]
    DifferentialSquare(String),
    #[error("parse error at line {line}, column {column}: {msg}")]
    Parse { line: usize, column: usize, msg: String },
    #[error("unsupported: {0}")]
    Unsupported(String),
    #[error("io error: {0}")]
    Io(String),
}

pub type Result<T> = std::result::Result<T, Error>;
