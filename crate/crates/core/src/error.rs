use std::io;

use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    /// A ruleset whose parameters violate the family's standing assumptions.
    #[error("invalid ruleset: {0}")]
    InvalidRuleset(String),

    /// Parameters that do not satisfy an operation's precondition.
    #[error("invalid parameters: {0}")]
    InvalidParams(String),

    #[error("Beatty index {index} exceeds the supported maximum {max}")]
    IndexTooLarge { index: u64, max: u64 },

    #[error("bound {bound} exceeds the table memory limit (maximum bound {max})")]
    BoundTooLarge { bound: u32, max: u32 },

    #[error("tables have different bounds ({left} vs {right})")]
    BoundMismatch { left: u32, right: u32 },

    #[error("malformed table data at line {line}: {reason}")]
    Parse { line: usize, reason: String },

    #[error(transparent)]
    Io(#[from] io::Error),

    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

impl Error {
    /// True for errors caused by bad input rather than by the environment.
    pub fn is_usage(&self) -> bool {
        matches!(
            self,
            Error::InvalidRuleset(_)
                | Error::InvalidParams(_)
                | Error::IndexTooLarge { .. }
                | Error::BoundTooLarge { .. }
                | Error::BoundMismatch { .. }
        )
    }
}
