use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("variable count mismatch: {left} vs {right}")]
    VarcountMismatch { left: usize, right: usize },
    #[error("length mismatch: expected {expected}, got {got}")]
    LengthMismatch { expected: usize, got: usize },
    #[error("matrix is not square ({rows}x{cols})")]
    NonSquare { rows: usize, cols: usize },
    #[error("negative input {0}")]
    NegativeInput(i64),
    #[error("{0} is not an element of the semigroup")]
    NotAMember(u64),
    #[error("invalid generators: {0}")]
    InvalidGenerators(String),
    #[error("invalid parameters: {constraint}")]
    InvalidParams { constraint: &'static str },
    #[error("polynomial is not homogeneous")]
    NotHomogeneous,
    #[error("polynomial is zero")]
    ZeroPolynomial,
    #[error("degree {degree} out of range (allowed 0..={max})")]
    DegreeOutOfRange { degree: usize, max: usize },
    #[error("contraction vanishes; quotient has no dual generator of this form")]
    ZeroContraction,
    #[error("not applicable: {0}")]
    NotApplicable(String),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("linear system has no solution: {0}")]
    InconsistentSystem(String),
    #[error("{0}")]
    Spec(String),
}

pub type Result<T> = std::result::Result<T, Error>;
