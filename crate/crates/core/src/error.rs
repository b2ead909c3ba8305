use thiserror::Error;

/// Errors raised by the library.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("unknown Cartan type `{0}`")]
    UnknownType(String),
    #[error("rank {rank} is not valid for type {ty}")]
    RankMismatch { ty: String, rank: usize },
    #[error("invalid lattice choice: {0}")]
    InvalidLattice(String),
    #[error("Weyl group too large: more than {0} elements")]
    GroupTooLarge(usize),
    #[error("invalid quadratic form: {0}")]
    InvalidForm(String),
    #[error("invalid covering degree {0}")]
    InvalidDegree(i64),
    #[error("xi must be 1 or -1, and 1 when n is odd (got {xi} with n = {n})")]
    InvalidXi { xi: i64, n: i64 },
    #[error("invalid character: {0}")]
    InvalidCharacter(String),
    #[error("character is not regular")]
    NotRegular,
    #[error("W_Gamma is not a union of right cells")]
    NotCellUnion,
    #[error("pole: a denominator vanishes ({0})")]
    Pole(String),
    #[error("orbit not persistent: {0}")]
    NotPersistent(String),
    #[error("numeric rank unstable across seeds: {0:?}")]
    Unstable(Vec<usize>),
    #[error("unsupported in exact mode: {0}")]
    ExactUnsupported(String),
    #[error("{0}")]
    Invalid(String),
}

pub type Result<T> = std::result::Result<T, Error>;
