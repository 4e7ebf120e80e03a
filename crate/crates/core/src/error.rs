use thiserror::Error;

use crate::ring::RingSpec;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid ring: {0}")]
    InvalidRing(String),

    #[error("ring mismatch: {left} vs {right}")]
    RingMismatch { left: RingSpec, right: RingSpec },

    #[error("length mismatch: {left} vs {right}")]
    LengthMismatch { left: usize, right: usize },

    #[error("invalid p-adic digits: {0}")]
    InvalidDigits(String),

    #[error("value {value} out of range for Z_{modulus}")]
    OutOfRange { value: u64, modulus: u64 },

    #[error("trivial code: no nonzero codeword")]
    TrivialCode,

    #[error("enumeration of {needed} items exceeds the cap of {cap}")]
    CapExceeded { needed: u128, cap: u64 },

    #[error("xi is only tabulated for s in {{2, 3, 4}}; undefined beyond s=4 (requested s={0})")]
    XiUndefined(u32),

    #[error("unsupported map parameters: {0}")]
    UnsupportedMap(String),

    #[error("parse error on line {line}: {msg}")]
    Parse { line: usize, msg: String },

    #[error("unknown fixture `{0}`")]
    UnknownFixture(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
