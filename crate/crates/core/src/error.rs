use alloc::string::String;

use thiserror::Error;

pub type Result<T, E = Error> = core::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid symbol {0}: symbols are positive integers")]
    InvalidSymbol(u64),

    #[error("parse error at position {position}: {message}")]
    Parse { position: usize, message: String },

    #[error("class too large: {size} words exceeds guard {guard}")]
    ClassTooLarge { size: u128, guard: u64 },

    #[error("invalid tableau: {0}")]
    InvalidTableau(&'static str),

    #[error("delayed readings undefined: {0}")]
    DelayedReadingsUndefined(&'static str),

    #[error("word is not standard")]
    NotStandard,

    #[error("center defined for n ≥ 3 with content {{1,…,n}}")]
    CenterUndefined,

    #[error("graph is disconnected")]
    Disconnected,

    #[error("operands use different variants")]
    VariantMismatch,

    #[error("precondition violated: {0}")]
    Precondition(&'static str),

    #[error("path construction did not reach its target within {0} steps")]
    PathConstruction(usize),
}

/// Upper bound on the number of words a single enumeration may visit.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Guard(u64);

impl Guard {
    pub const DEFAULT: Guard = Guard(500_000);

    pub fn new(limit: u64) -> Option<Guard> {
        (limit >= 1).then_some(Guard(limit))
    }

    pub fn limit(self) -> u64 {
        self.0
    }

    pub fn check(self, size: u128) -> Result<()> {
        if size > u128::from(self.0) {
            Err(Error::ClassTooLarge { size, guard: self.0 })
        } else {
            Ok(())
        }
    }
}

impl Default for Guard {
    fn default() -> Self {
        Guard::DEFAULT
    }
}
