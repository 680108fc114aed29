//! Error type shared by all model operations.

use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum ModelError {
    #[error("invalid parameters: {0}")]
    InvalidParams(String),
    #[error("obfuscated mode cannot be combined with investment: post-investment precision is common knowledge")]
    ObfuscatedInvestment,
    #[error("unknown parameter key `{0}`")]
    UnknownKey(String),
    #[error("cannot parse value `{value}` for `{key}`")]
    BadValue { key: String, value: String },
    #[error("unmodeled attraction cell: {0}")]
    UnmodeledCell(String),
    #[error("unknown condition `{0}`")]
    UnknownCondition(String),
    #[error("invalid region parameters: {0}")]
    InvalidRegion(String),
    #[error("configuration error: {0}")]
    Config(String),
}

pub type Result<T> = std::result::Result<T, ModelError>;
