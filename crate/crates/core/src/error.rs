use alloc::string::String;

pub type Result<T, E = Error> = core::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("invalid range: lo {lo} > hi {hi}")]
    InvalidRange { lo: i64, hi: i64 },

    #[error("invalid instance: {0}")]
    InvalidInstance(String),

    #[error("goal is unreachable from the initial state")]
    Unreachable,

    #[error("search exceeded the state limit of {0}")]
    StateLimit(usize),

    #[error("search exceeded the depth limit of {0}")]
    DepthLimit(usize),

    #[error("degenerate instance: {0}")]
    Degenerate(String),

    #[error("instance violates a puzzle assumption: {0}")]
    AssumptionViolated(String),

    #[error("board too large: {cells} cells (max {max})")]
    TooLarge { cells: usize, max: usize },

    #[error("generator gave up after {attempts} attempts: {reason}")]
    Generator { attempts: usize, reason: String },

    #[error("parse error: {0}")]
    Parse(String),
}

impl Error {
    pub(crate) fn invalid(msg: impl Into<String>) -> Self {
        Error::InvalidInstance(msg.into())
    }

    pub(crate) fn gave_up(attempts: usize, reason: impl Into<String>) -> Self {
        Error::Generator {
            attempts,
            reason: reason.into(),
        }
    }
}
