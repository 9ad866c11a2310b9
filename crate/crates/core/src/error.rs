use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("index out of range: {0}")]
    Index(String),
    #[error("negative exponent {exp} on X{var}; only X0 and X1 may carry negative exponents")]
    NegativeExponent { var: usize, exp: i64 },
    #[error("no value assigned to X{0}")]
    MissingAssignment(usize),
    #[error("X{0} is assigned zero but occurs with a negative exponent")]
    Pole(usize),
    #[error("inexact division while building A({n},{k})")]
    InexactDivision { n: usize, k: usize },
    #[error("series error: {0}")]
    Series(String),
    #[error("custom weights: expected {expected} values, got {got}")]
    WeightLength { expected: usize, got: usize },
    #[error("cannot parse polynomial: {0}")]
    Parse(String),
    #[error("unknown identity `{0}`")]
    UnknownIdentity(String),
    #[error("unknown family `{0}`")]
    UnknownFamily(String),
    #[error("range {nmax}x{kmax} exceeds the limit {limit} for `{identity}`")]
    LimitExceeded {
        identity: String,
        nmax: usize,
        kmax: usize,
        limit: usize,
    },
}
