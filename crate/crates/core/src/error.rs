use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("parse error at byte {offset}: {message}")]
    Parse { offset: usize, message: String },

    #[error("invalid permutation: {0}")]
    InvalidPermutation(String),

    #[error("leaf counts disagree: domain {domain}, range {range}, permutation {perm}")]
    LeafCountMismatch {
        domain: usize,
        range: usize,
        perm: usize,
    },

    #[error("contract violation: {0}")]
    Contract(String),

    #[error(transparent)]
    Resource(#[from] ResourceError),
}

/// The Cayley-graph search ran out of its memory allowance.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ResourceError {
    #[error(
        "memory budget of {budget_bytes} bytes exceeded after completing radius {completed_radius} \
         (estimated {estimated_bytes} bytes)"
    )]
    MemoryBudget {
        budget_bytes: usize,
        estimated_bytes: usize,
        completed_radius: usize,
    },
}

pub type Result<T, E = Error> = std::result::Result<T, E>;

impl Error {
    pub(crate) fn parse(offset: usize, message: impl Into<String>) -> Self {
        Error::Parse {
            offset,
            message: message.into(),
        }
    }
}
