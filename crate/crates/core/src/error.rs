use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("parts must be weakly decreasing: {0:?}")]
    InvalidPartition(Vec<u32>),

    #[error("no bead at position {0}")]
    BeadAbsent(i64),

    #[error("position {0} already holds a bead")]
    PositionOccupied(i64),

    #[error("charge vectors {left:?} and {right:?} differ")]
    ChargeMismatch { left: Vec<i64>, right: Vec<i64> },

    #[error("{candidates} candidate multipartitions exceed the limit of {limit}")]
    ExplosionGuard { candidates: u128, limit: u64 },

    #[error("{0}")]
    NotACoreBlock(String),

    #[error("block is neither a core block nor a Rouquier block")]
    NotEligible,

    #[error("expected {expected} entries, found {found}")]
    ShapeMismatch { expected: usize, found: usize },

    #[error("step {step}: {reason}")]
    InvalidStep { step: usize, reason: String },

    #[error("{0}")]
    Parse(String),
}

impl Error {
    /// The bare variant name, as echoed by the command-line front end.
    pub fn name(&self) -> &'static str {
        match self {
            Error::InvalidPartition(_) => "InvalidPartition",
            Error::BeadAbsent(_) => "BeadAbsent",
            Error::PositionOccupied(_) => "PositionOccupied",
            Error::ChargeMismatch { .. } => "ChargeMismatch",
            Error::ExplosionGuard { .. } => "ExplosionGuard",
            Error::NotACoreBlock(_) => "NotACoreBlock",
            Error::NotEligible => "NotEligible",
            Error::ShapeMismatch { .. } => "ShapeMismatch",
            Error::InvalidStep { .. } => "InvalidStep",
            Error::Parse(_) => "Parse",
        }
    }
}
