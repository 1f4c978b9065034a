use thiserror::Error;

/// Errors produced by the library.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("a page surface needs at least one boundary component (got r = 0)")]
    NoBoundary,

    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },

    #[error("unknown token `{0}`")]
    UnknownToken(String),

    #[error("generator index out of range in `{token}`: {reason}")]
    IndexOutOfRange { token: String, reason: String },

    #[error("zero exponent in `{0}`")]
    ZeroExponent(String),

    #[error("braid must have at least one strand")]
    NoStrands,

    #[error("twist curve {0:?} is neither zero nor primitive")]
    NonPrimitiveCurve(Vec<i64>),

    #[error("twist power must be nonzero")]
    ZeroPower,

    #[error("invalid band generator ({i}, {j}) on {n} strands")]
    InvalidBand { i: usize, j: usize, n: usize },

    #[error("not a permutation of {len} letter positions: {reason}")]
    NotAPermutation { len: usize, reason: String },

    #[error("the closed braid is not null-homologous (no Seifert class solves [b] = a - phi_*(a))")]
    NotNullHomologous,

    #[error("supplied Seifert class does not satisfy [b] = a - phi_*(a)")]
    InvalidSeifertClass,

    #[error("the binding push-off word needs genus at least 1")]
    ZeroGenus,

    #[error("surface of genus {0} is not planar")]
    NonPlanarSurface(u32),

    #[error("algebraic intersection of the Seifert class with the surgery curve is {0}, not zero")]
    NonzeroIntersection(i64),

    #[error("twist factor {index} has nonzero curve class {curve:?}; not separating")]
    NonSeparatingFactor { index: usize, curve: Vec<i64> },

    #[error("precondition failed: {0}")]
    PreconditionFailed(String),

    #[error("arithmetic overflow")]
    Overflow,
}

pub type Result<T> = std::result::Result<T, Error>;
