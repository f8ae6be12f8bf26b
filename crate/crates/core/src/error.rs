use thiserror::Error;

/// Errors raised while building or combining morphisms.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("index {index} is out of range for a boundary of size {size}")]
    IndexOutOfRange { index: usize, size: usize },
    #[error("index {index} appears in more than one block")]
    OverlappingIndex { index: usize },
    #[error("index {index} is not covered by any block")]
    MissingIndex { index: usize },
    #[error("empty block in partition")]
    EmptyBlock,
    #[error("cannot compose: first morphism has codomain {cod} but second has domain {dom}")]
    ArityMismatch { cod: usize, dom: usize },
    #[error("row {row} has length {found}, expected {expected}")]
    RowLength { row: usize, expected: usize, found: usize },
    #[error("vector lengths {left} and {right} do not match a form on {dim} coordinates")]
    FormLength { left: usize, right: usize, dim: usize },
    #[error("dimension {0} is odd and cannot carry a pair layout")]
    OddDimension(usize),
    #[error("invalid rational `{0}`")]
    InvalidRational(String),
    #[error("unknown generator `{0}`")]
    UnknownGenerator(String),
    #[error("unknown signature `{0}`")]
    UnknownSignature(String),
    #[error("unknown suite `{0}`")]
    UnknownSuite(String),
    #[error("type error at {path}: {message}")]
    Type { path: String, message: String },
    #[error("signature `{signature}` has no interpretation in the {backend} backend")]
    Uninterpretable { signature: String, backend: String },
    #[error("syntax error at line {line}, column {column}: {message}")]
    Syntax { line: usize, column: usize, message: String },
    #[error("malformed input: {0}")]
    Malformed(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
