use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid partition {0:?}: entries must be non-negative and non-increasing")]
    InvalidPartition(Vec<i64>),

    #[error("label padding undefined: need n >= {required}, got {n}")]
    PadUndefined { n: u32, required: u32 },

    #[error("level mismatch: {0} vs {1}")]
    LevelMismatch(u32, u32),

    #[error("target level {target} exceeds source level {source_level}")]
    LevelTooHigh { target: u32, source_level: u32 },

    #[error("division by the zero rational function")]
    DivisionByZero,

    #[error("pole at {0}")]
    Pole(String),

    #[error("rational function is not a polynomial: denominator {0}")]
    NotPolynomial(String),

    #[error("horizon exceeded: {0}")]
    Horizon(String),

    #[error("input is not symmetric: {0}")]
    NotSymmetric(String),

    #[error("too few variables: shape has {rows} rows but only {vars} variables")]
    TooFewVariables { rows: usize, vars: usize },

    #[error("stabilization not detected by level {0}")]
    NoStabilization(u32),

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("parse error: {0}")]
    Parse(String),

    #[error("internal consistency failure: {0}")]
    Internal(String),
}

pub type Result<T> = std::result::Result<T, Error>;
