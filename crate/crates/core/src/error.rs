use thiserror::Error;

use crate::parser::ParseError;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("{what} index {index} out of range {range}")]
    IndexOutOfRange { what: &'static str, index: i64, range: &'static str },

    #[error("unsupported shape: {0}")]
    UnsupportedShape(String),

    #[error(transparent)]
    Parse(#[from] ParseError),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
