use thiserror::Error;

/// Errors raised across the library. Resource exhaustion is kept separate
/// from logical failures so callers can report it distinctly.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("ring mismatch: {0}")]
    RingMismatch(String),
    #[error("degree guard exceeded: intermediate degree {degree} above cap {cap}")]
    DegreeGuard { degree: u32, cap: u32 },
    #[error("invalid input: {0}")]
    InvalidInput(String),
    #[error("{line}:{column}: {message}")]
    Parse {
        line: usize,
        column: usize,
        message: String,
    },
    #[error("hypothesis not met: {0}")]
    Hypothesis(String),
    #[error("precondition violated: {0}")]
    Precondition(String),
    #[error("not well defined: {0}")]
    NotWellDefined(String),
    #[error("internal inconsistency: {0}")]
    Internal(String),
}

impl Error {
    pub fn is_resource(&self) -> bool {
        matches!(self, Error::DegreeGuard { .. })
    }
}

pub type Result<T> = std::result::Result<T, Error>;
