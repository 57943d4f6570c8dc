use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("q must be ≥ 5 (got {0})")]
    InvalidQ(i64),

    #[error("k must be >= {min} for this operation (got {got})")]
    InvalidK { min: u32, got: u32 },

    #[error("malformed row {index}: {reason}")]
    MalformedRow { index: usize, reason: String },

    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },

    #[error("interpolation produced a non-integer coefficient (degree bound {bound} too small?)")]
    NonIntegralInterpolation { bound: usize },

    #[error("interpolation needs at least {needed} points with distinct abscissae, got {got}")]
    NotEnoughPoints { needed: usize, got: usize },

    #[error("degree bound violated: interpolant disagrees at verification point {at}: {detail}")]
    DegreeBound { at: i64, detail: String },

    #[error("initial vectors not independent")]
    SingularOrbit,

    #[error("polynomial is zero")]
    ZeroPolynomial,

    #[error("polynomial is not monic up to sign: leading coefficient {0}")]
    NotMonic(String),

    #[error("row {n} exceeds the entry cap of {cap} (s_n = {len})")]
    Truncated { n: usize, len: String, cap: usize },

    #[error("invalid argument: {0}")]
    InvalidArgument(String),
}

pub type Result<T> = std::result::Result<T, Error>;
