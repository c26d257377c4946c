use thiserror::Error;

/// Errors produced by parameter validation and signal-processing routines.
#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid parameter `{name}`: {reason}")]
    InvalidParameter { name: &'static str, reason: String },

    #[error("non-finite input for `{0}`")]
    NonFinite(&'static str),

    #[error("negative variance {0}")]
    NegativeVariance(f64),

    #[error("correlation {0} outside [-1, 1]")]
    CorrelationOutOfRange(f64),

    #[error("frame length {0} must be even and >= 4")]
    BadFrameLength(usize),

    #[error("frame length mismatch: {0} vs {1}")]
    LengthMismatch(usize, usize),

    #[error("empty input")]
    EmptyInput,

    #[error("unknown downlink model `{0}` (expected `joint` or `superposed`)")]
    UnknownDownlinkModel(String),
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    pub(crate) fn param(name: &'static str, reason: impl Into<String>) -> Self {
        Error::InvalidParameter {
            name,
            reason: reason.into(),
        }
    }
}
