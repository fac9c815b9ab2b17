use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AlgebraError {
    #[error("invalid field characteristic {0}: need an odd prime below 2^31")]
    InvalidField(u32),
    #[error("structural error: {0}")]
    Structural(String),
    #[error("ring mismatch: {0}")]
    RingMismatch(String),
    #[error("parse error at position {pos}: {msg}")]
    Parse { pos: usize, msg: String },
    #[error("input error: {0}")]
    Input(String),
    #[error("unsupported: {0}")]
    Unsupported(String),
    #[error("window exhausted: {0}")]
    WindowExhausted(String),
}

pub type Result<T, E = AlgebraError> = std::result::Result<T, E>;
