use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("ring mismatch: {0}")]
    RingMismatch(String),
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
    #[error("missing binding for {kind} role `{role}`")]
    MissingBinding { kind: &'static str, role: String },
    #[error("the zero polynomial has no finite root set")]
    ZeroPolynomial,
    #[error("division by zero")]
    DivisionByZero,
    #[error("singular matrix: {0}")]
    Singular(String),
    #[error("unknown axiom `{0}`")]
    UnknownAxiom(String),
    #[error("precondition failed: {0}")]
    PreconditionFailed(String),
    #[error("invalid presentation: {0}")]
    InvalidPresentation(String),
}

pub type Result<T> = std::result::Result<T, Error>;
