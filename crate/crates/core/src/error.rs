use thiserror::Error;

use crate::notation::ParseError;
use crate::root_data::Series;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid rank {rank} for series {series}: {reason}")]
    InvalidRank {
        series: Series,
        rank: usize,
        reason: &'static str,
    },

    #[error("weight has {got} labels but the group has rank {expected}")]
    LabelCount { expected: usize, got: usize },

    #[error("weight {0} is not dominant")]
    NotDominant(String),

    #[error("empty group: at least one simple factor is required")]
    EmptyGroup,

    #[error("representation does not match the group: {0}")]
    RepMismatch(String),

    #[error("expected a single tensor summand, got {0}")]
    NotIrreducible(usize),

    #[error("representation is of {0} type; a quaternionic representation is required")]
    NotQuaternionic(&'static str),

    #[error("rank cap must be at least 2, got {0}")]
    RankCap(usize),

    #[error("invalid reducible decomposition: {0}")]
    InvalidReducible(String),

    #[error("unknown catalog entry `{0}`")]
    UnknownEntry(String),

    #[error("catalog row `{row}`: {message}")]
    CatalogRow { row: String, message: String },

    #[error("catalog file: {0}")]
    CatalogFormat(String),

    #[error(transparent)]
    Parse(#[from] ParseError),
}
