use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AlgebraError {
    #[error("ring mismatch: [{left}] vs [{right}]")]
    RingMismatch { left: String, right: String },
    #[error("arity mismatch: expected {expected} images, got {got}")]
    ArityMismatch { expected: usize, got: usize },
    #[error("truncation caps differ: {left} vs {right}")]
    CapMismatch { left: u32, right: u32 },
    #[error("empty input list")]
    EmptyInput,
    #[error("not a binary form: {0}")]
    NotBinaryForm(String),
    #[error("zero binary form in gcd input")]
    ZeroForm,
    #[error("series is not invertible: zero constant term")]
    NotInvertible,
    #[error("parse error: {0}")]
    Parse(String),
}
