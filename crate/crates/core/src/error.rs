use thiserror::Error;

/// Errors raised by the tensor, trace, spectral and fixture routines.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("invalid permutation: {0:?} is not a bijection on 0..{len}", len = .0.len())]
    InvalidPermutation(Vec<usize>),

    #[error("invalid index: {0}")]
    InvalidIndex(String),

    #[error("shape mismatch: {0}")]
    Shape(String),

    #[error("invalid order: {0}")]
    Order(String),

    #[error("matrix is not Hermitian: max |A - A^H| = {deviation:e} exceeds {tol:e}")]
    Hermiticity { deviation: f64, tol: f64 },

    #[error("convergence failure: {0}")]
    Convergence(String),

    #[error("degenerate input: {0}")]
    DegenerateInput(String),

    #[error("multiplicity mismatch: {0}")]
    MultiplicityMismatch(String),

    #[error("numerical rank {found} of the reduced complement differs from multiplicity {expected}")]
    RankMismatch { expected: usize, found: usize },

    #[error("dimension {n} exceeds the supported maximum {max} for {what}")]
    Guard { n: usize, max: usize, what: &'static str },

    #[error("two-level system is degenerate (omega = 0)")]
    DegenerateTwoLevel,

    #[error("massless limit: the projector (p + m)/2m is undefined at m = 0")]
    MasslessLimit,

    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
