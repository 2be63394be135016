use thiserror::Error;

/// Errors shared across the crate.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("the dimension must be at least 1")]
    EmptyDomain,

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("matrix is not skeletal nilpotent: {0}")]
    NotSkeletal(String),

    #[error("matrix is singular")]
    SingularMatrix,

    #[error("matrix is not in normalized Schubert form: {0}")]
    NotSchubertForm(String),

    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),

    #[error("flag is not a member of the Hessenberg variety")]
    NotMember,

    #[error("operation requires n >= 4, got n = {0}")]
    UnsupportedDimension(usize),

    #[error("invalid witness seed: {0}")]
    InvalidWitness(String),

    #[error("torus is not regular: a root character is trivial on it")]
    NonRegularTorus,
}
