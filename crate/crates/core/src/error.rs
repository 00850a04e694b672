use thiserror::Error;

use crate::rootsys::{Family, RootSystemId};

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("unsupported rank {rank} for family {family:?}")]
    UnsupportedRank { family: Family, rank: usize },

    #[error("cannot parse system id `{0}`")]
    BadSystemId(String),

    #[error("root does not belong to {expected}")]
    ForeignRoot { expected: RootSystemId },

    #[error("root must be positive")]
    NotPositive,

    #[error("reflection image is not a catalogued root")]
    NotARoot,

    #[error("roots #{0} and #{1} are not orthogonal")]
    NotOrthogonal(usize, usize),

    #[error("root #{0} appears twice")]
    DuplicateRoot(usize),

    #[error("{got} scalars given for {expected} roots")]
    XiMismatch { expected: usize, got: usize },

    #[error("scalar for root #{0} vanishes in the field")]
    ZeroXi(usize),

    #[error("{0} is not prime")]
    NotPrime(u64),

    #[error("field characteristic {p} is below the Coxeter number {coxeter} of {system}")]
    FieldTooSmall {
        p: u32,
        coxeter: usize,
        system: RootSystemId,
    },

    #[error("coordinate subspace is not isotropic")]
    NotIsotropic,

    #[error("operation requires {expected}, got {got}")]
    WrongSystem {
        expected: RootSystemId,
        got: RootSystemId,
    },

    #[error("{system} has {positives} positive roots; exhaustive scan is limited to {limit}")]
    TooLarge {
        system: RootSystemId,
        positives: usize,
        limit: usize,
    },

    #[error("{0}")]
    Domain(String),

    #[error("cannot parse root `{expr}`: {reason}")]
    Parse { expr: String, reason: String },
}
