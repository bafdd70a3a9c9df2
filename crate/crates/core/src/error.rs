use thiserror::Error;

/// Errors raised by the constructions and algorithms in this crate.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("no primitive root of unity of order {0} in Q(zeta_8)")]
    InvalidRootOrder(u32),
    #[error("closure exceeded the limit of {limit} elements")]
    LimitExceeded { limit: usize },
    #[error("matrix group closure requires 1 or 2 qubits, got {0}")]
    UnsupportedQubitCount(usize),
    #[error("subgroup is not normal")]
    NotNormal,
    #[error("subgroup belongs to a different group")]
    ForeignSubgroup,
    #[error("no complement found after {attempts} attempts (split uncertified)")]
    ComplementNotFound { attempts: u64 },
    #[error("permutation degree mismatch: expected {expected}, got {found}")]
    DegreeMismatch { expected: usize, found: usize },
    #[error("group of order {order} is too large to enumerate")]
    TooLarge { order: u128 },
    #[error("group action is inconsistent: {0}")]
    ActionInconsistent(String),
    #[error("line operators do not share an eigenbasis: {0}")]
    InconsistentLine(String),
    #[error("construction self-check failed: {0}")]
    ConstructionFailed(String),
    #[error("not a Steiner system: {0}")]
    NotSteiner(String),
    #[error("unexpected group structure: {0}")]
    UnexpectedStructure(String),
    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
