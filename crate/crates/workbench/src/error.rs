use thiserror::Error;

/// Errors surfaced by the exact-arithmetic and algebra layers.
///
/// Everything here is a *data* error: bad inputs, non-units, window
/// overflows. Internal invariant violations panic instead.
#[derive(Debug, Error)]
pub enum Error {
    #[error("{0} is not an odd prime")]
    NotOddPrime(u64),

    #[error("chart mismatch: {0}")]
    ChartMismatch(String),

    #[error("Laurent window overflow: degree {degree} outside [{lo}, {hi}]")]
    WindowOverflow { degree: i64, lo: i64, hi: i64 },

    #[error("not a unit: {0}")]
    NonUnit(String),

    #[error("algebra mismatch: {0}")]
    SpecMismatch(String),

    #[error("relation violated by generator images: {0}")]
    RelationViolation(String),

    #[error("morphism is not invertible")]
    NotInvertible,

    #[error("input form is not closed")]
    NotClosed,

    #[error("input derivation is not Poisson (L_xi omega != 0)")]
    NotPoisson,

    #[error("linear system has no solution: {0}")]
    NoSolution(String),

    #[error("h-torsion detected: {0}")]
    TorsionDetected(String),

    #[error("operator is not a scalar multiple of the identity")]
    NonScalar,

    #[error("internal consistency failure: {0}")]
    Inconsistency(String),

    #[error("classification failure: {0}")]
    ClassificationFailure(String),

    #[error("invalid input: {0}")]
    InvalidInput(String),

    #[error("filtration is not multiplicative: {0}")]
    BadFiltration(String),

    #[error("json: {0}")]
    Json(String),
}

pub type Result<T> = std::result::Result<T, Error>;
