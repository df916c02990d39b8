use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("angle must be positive, got {0}")]
    NonPositiveAngle(String),
    #[error("angles must sum to 180, got {0}")]
    BadAngleSum(String),
    #[error("parameter t={t} outside the open range ({lo}, {hi})")]
    ParameterOutOfRange { t: String, lo: i64, hi: i64 },
    #[error("cyclotomic level {m} exceeds cap {cap}")]
    LevelOverCap { m: u64, cap: u64 },
    #[error("tuple does not satisfy the Ceva sine identity")]
    NotASolution,
    #[error("integer-degree input required: {0}")]
    NotIntegerDegree(String),
    #[error("sample rejected: {0}")]
    SampleRejected(String),
    #[error("budget exceeded: {0}")]
    Budget(String),
    #[error("ill-conditioned embedding: {0}")]
    IllConditioned(String),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("i/o error: {0}")]
    Io(String),
}

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}

pub type Result<T> = std::result::Result<T, Error>;
