use thiserror::Error;

/// Errors shared by all modules of the crate.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    /// The sixfold decomposition only covers naturals from 5 upward.
    #[error("n = {0} is out of domain; the sixfold decomposition starts at 5")]
    BelowDomain(u64),

    /// Progression indices start at 1.
    #[error("m = 0 is out of range; progression indices start at 1")]
    ZeroIndex,

    /// Checked arithmetic overflowed the native word.
    #[error("arithmetic overflow computing {0}")]
    Overflow(&'static str),

    /// An argument violated a documented contract.
    #[error("contract violation: {0}")]
    Contract(&'static str),

    /// The requested sieve exceeds the configured memory cap.
    #[error("sieve limit {requested} exceeds the configured cap {cap}")]
    SieveCapExceeded { requested: u64, cap: u64 },
}

pub type Result<T> = std::result::Result<T, Error>;
