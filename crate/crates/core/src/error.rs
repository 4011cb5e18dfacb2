use thiserror::Error;

/// Errors shared by every structure in the crate.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("position {index} out of range for length {len}")]
    OutOfRange { index: usize, len: usize },

    #[error("no such element")]
    NotFound,

    #[error("malformed encoding at position {position}: {reason}")]
    Malformed {
        position: usize,
        reason: &'static str,
    },

    #[error("position {0} is not a valid node handle")]
    InvalidHandle(usize),

    #[error("precondition violated at position {position}: {reason}")]
    Precondition {
        position: usize,
        reason: &'static str,
    },

    #[error("tree is empty")]
    EmptyTree,

    #[error("invalid range [{lo}, {hi}] for length {len}")]
    InvalidRange { lo: usize, hi: usize, len: usize },

    #[error("bad serialized data: {0}")]
    Format(String),
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn check_index(index: usize, len: usize) -> Result<()> {
    if index < len {
        Ok(())
    } else {
        Err(Error::OutOfRange { index, len })
    }
}
