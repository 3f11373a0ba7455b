use thiserror::Error;

/// Errors reported by the structural layers (groups, characters, signals,
/// banks). Numerical routines report defects as values, not errors.
#[derive(Debug, Error)]
pub enum Error {
    #[error("group must have at least one cyclic factor")]
    EmptyModuli,

    #[error("modulus at position {0} is zero; every modulus must be >= 1")]
    ZeroModulus(usize),

    #[error("group order overflows the addressable range")]
    OrderOverflow,

    #[error("element has {got} coordinates, group has rank {expected}")]
    RankMismatch { expected: usize, got: usize },

    #[error("coordinate {value} at position {position} is not reduced modulo {modulus}")]
    CoordinateOutOfRange {
        position: usize,
        value: u32,
        modulus: u32,
    },

    #[error("element index {index} out of range for group of order {order}")]
    IndexOutOfRange { index: usize, order: usize },

    #[error("element does not belong to the subgroup's ambient group")]
    AmbientMismatch,

    #[error("signals are defined on different groups")]
    SpecMismatch,

    #[error("value list has {got} entries, expected {expected}")]
    LengthMismatch { expected: usize, got: usize },

    #[error("value table does not define a character: {0}")]
    InvalidCharacter(String),

    #[error("no character of the ambient group restricts to the given table")]
    EmptyFiber,

    #[error("element lies in the subgroup; a character extension needs x outside H")]
    ElementInSubgroup,

    #[error("filter bank needs at least one filter")]
    EmptyFilterBank,

    #[error("invalid design problem: {0}")]
    InvalidProblem(String),
}

pub type Result<T> = std::result::Result<T, Error>;
