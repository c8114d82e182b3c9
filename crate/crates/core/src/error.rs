use crate::arith::CyclotomicNumber;

/// Errors raised by the exact-arithmetic, summation and verification layers.
#[derive(Debug, thiserror::Error)]
pub enum Error {
    #[error("domain error: {0}")]
    Domain(String),

    #[error("order mismatch: Q(zeta_{left}) vs Q(zeta_{right})")]
    OrderMismatch { left: u32, right: u32 },

    #[error("value is not rational: {0}")]
    NotRational(Box<CyclotomicNumber>),

    #[error("parse error: {0}")]
    Parse(String),

    #[error("unknown identity `{0}`")]
    UnknownIdentity(String),

    #[error("i/o error: {0}")]
    Io(#[from] std::io::Error),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;

pub(crate) fn domain<T>(msg: impl Into<String>) -> Result<T> {
    Err(Error::Domain(msg.into()))
}
