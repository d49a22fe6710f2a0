//! Digit-expansion complexity toolkit.
//!
//! Computes subword-complexity profiles `p(n)` and smallest-return profiles
//! `r(n)` of finite symbol words, generates certified base-`b` digit prefixes
//! of classical constants, extracts certified continued fractions with
//! irrationality-exponent estimates, and compares measured repetition
//! exponents against the exact rational bound formulas that link them.
//!
//! The crate is organized around six modules:
//!
//! * [`words`] — finite symbol sequences over a bounded integer alphabet,
//!   with a canonical text encoding.
//! * [`analysis`] — `p(n)` / `r(n)` profiles and windowed exponent proxies,
//!   built on an online suffix automaton.
//! * [`expansions`] — certified digit generation for the supported constant
//!   recipes, plus symbolic word families and an on-disk digit cache.
//! * [`diophantine`] — continued fractions, irrationality-exponent
//!   estimation, and the bound formulas.
//! * [`structure`] — word periodicity: smallest periods, fractional powers,
//!   overlap-implies-period, and commuting-word decomposition.
//! * [`verify`] — the end-to-end pipeline producing machine-readable
//!   verification reports.
//!
//! All certified quantities use exact rational interval enclosures; reported
//! ratios are exact rationals with an auxiliary 6-place decimal rendering.
//!
//! With the default `parallel` feature, batch verification runs distribute
//! cases across a rayon pool; disabling the feature falls back to an
//! equivalent sequential driver with identical output.

pub mod analysis;
pub mod diophantine;
pub mod expansions;
pub mod numeric;
pub mod structure;
pub mod verify;
pub mod words;

pub use words::{Alphabet, Factor, SymbolWord, WordBuilder};
