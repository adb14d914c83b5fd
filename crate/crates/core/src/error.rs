use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("unsupported root system {0}")]
    UnsupportedSystem(String),

    #[error("dimension mismatch: expected {expected} coordinates, found {found}")]
    DimensionMismatch { expected: usize, found: usize },

    #[error("vector {0} does not lie in the span of the roots")]
    NotInSpan(String),

    #[error("cannot reflect in the zero vector")]
    ZeroRoot,

    #[error("Weyl group of order {order} exceeds the enumeration cap {cap}")]
    CapExceeded { order: u128, cap: u64 },

    #[error("parse error: {0}")]
    Parse(String),

    #[error("{input} is not semisimple: it is isomorphic to {suggestion}; enter it as \"{suggestion}\"")]
    NotSemisimple { input: String, suggestion: String },

    #[error("{0} is not a single noncompact simple algebra")]
    NotSimple(String),

    #[error("G/H is already obstructed: {0}")]
    SpaceObstruction(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
