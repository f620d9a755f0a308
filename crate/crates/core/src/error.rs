use thiserror::Error;

use crate::scalars::Mode;

/// Errors raised by the exact engine.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("division by zero")]
    DivisionByZero,

    #[error("pole at the primitive {order}-th root of unity: {what}")]
    Pole { order: u32, what: String },

    #[error(
        "Jones-Wenzl projector f_{k} does not exist at root r={r}: Delta_{vanishing} vanishes"
    )]
    JonesWenzlPole { k: usize, r: u32, vanishing: usize },

    #[error("arity mismatch: {0}")]
    Arity(String),

    #[error("out of range: {0}")]
    OutOfRange(String),

    #[error("invalid diagram: {0}")]
    InvalidDiagram(String),

    #[error("line {line}: {msg}")]
    Parse { line: usize, msg: String },

    #[error("color {color} is not allowed in mode {mode}")]
    InvalidColor { color: u32, mode: Mode },

    #[error("invalid mode: {0}")]
    InvalidMode(String),

    #[error("diagram is not closed: {0}")]
    NotClosed(String),

    #[error("verification failure: {0}")]
    Verification(String),
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    pub fn parse(line: usize, msg: impl Into<String>) -> Self {
        Error::Parse {
            line,
            msg: msg.into(),
        }
    }
}
