use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    /// Malformed input: out-of-range elements, size mismatches, unparsable text.
    #[error("input error: {0}")]
    Input(String),

    /// The table does not have the structure an operation requires
    /// (e.g. a row that is not a permutation).
    #[error("structural error: {0}")]
    Structural(String),

    /// A required identity fails; the triple is a witness.
    #[error("identity {identity} fails at (x, y, z) = {witness:?}")]
    IdentityViolation {
        identity: String,
        witness: (usize, usize, usize),
    },

    #[error("i/o error: {0}")]
    Io(String),

    #[error("group closure exceeded the cap of {cap} elements")]
    Overflow { cap: usize },

    #[error("order {n} outside the supported range {min}..={max}")]
    Range { n: usize, min: usize, max: usize },

    #[error("time budget exceeded after {completed} of {total} work units")]
    Budget { completed: usize, total: usize },

    /// Two independent computations that must agree did not.
    #[error("internal consistency failure: {0}")]
    Consistency(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
