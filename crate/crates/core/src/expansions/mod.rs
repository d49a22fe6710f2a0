//! Certified base-`b` digit prefixes of the supported constants and
//! symbolic word families, with an on-disk cache.
//!
//! All certification goes through exact rational interval enclosures —
//! never bare floating point.  A digit prefix is emitted only once the
//! enclosure pins every requested digit; see [`generate_digits`].

mod cache;
mod enclose;
mod families;
mod generate;
mod quad;
mod spec;

use thiserror::Error;

pub use cache::DigitCache;
pub use generate::{
    certify_integer_part, generate_digits, generate_digits_capped, generate_word,
    lacunary_positions, Certificate, CertifiedDigits, DEFAULT_PRECISION_CAP,
};
pub use quad::{Quad, QuadError};
pub use spec::ConstantSpec;

use crate::words::WordError;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum ExpansionError {
    #[error("invalid constant spec: {0}")]
    InvalidSpec(String),
    #[error("digit certification failed at maximum working precision ({bits} bits)")]
    PrecisionExhausted { bits: u32 },
    #[error(transparent)]
    Quad(#[from] QuadError),
    #[error(transparent)]
    Word(#[from] WordError),
    #[error("malformed digit cache: {0}")]
    BadCache(String),
    #[error("i/o error: {0}")]
    Io(String),
}
