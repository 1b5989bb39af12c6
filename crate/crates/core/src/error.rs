use thiserror::Error;

/// Errors raised by constructions, checks and counts.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("singular model: {0}")]
    Singular(String),

    #[error("polynomial is not squarefree")]
    NotSquarefree,

    #[error("unsupported j-invariant {0}: the construction requires j != 0 and j != 1728")]
    UnsupportedJ(String),

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("point is not on the curve")]
    OffCurve,

    #[error("pole of the parametrisation at t = {0}")]
    Pole(String),

    #[error("j-invariants differ: {0} vs {1}")]
    JMismatch(String, String),

    #[error("divisor is not monic in the reduction variable")]
    NotMonic,

    #[error("A = 27/4: the involution (x, y) -> (1/x, -y/x^6) has a fixed point at x = 1")]
    Ramified,

    #[error("bad prime {0}: {1}")]
    BadPrime(u64, String),

    #[error("point counts violate the Weil bound: {0}")]
    WeilBound(String),

    #[error("factoring budget exceeded for {0}")]
    Unfactored(String),

    #[error("no irreducible polynomial of degree {k} over F_{p} found in {attempts} attempts")]
    SearchExhausted { p: u64, k: usize, attempts: usize },

    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
