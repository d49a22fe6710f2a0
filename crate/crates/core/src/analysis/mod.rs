//! Subword complexity and smallest-return profiles of a finite word, plus
//! windowed repetition-exponent estimates.
//!
//! For a word `x` and `n >= 1`:
//!
//! * `p(n)` counts the distinct factors of length `n`;
//! * `r(n)` is the length of the smallest prefix of `x` containing two
//!   (possibly overlapping) occurrences of some word of length `n`.
//!
//! Both profiles are computed from one online suffix automaton pass: after
//! extending the automaton by the `m`-th symbol, `L(m)` — the length of the
//! longest suffix of `x_1..x_m` with another occurrence ending strictly
//! before `m` — is available in amortized constant time, and
//! `r(n) = min { m : L(m) >= n }`.  Distinct-factor counts per length come
//! from the state length intervals in one pass at the end.
//!
//! A prefix witnesses `r(n)` only up to `defined_up_to = max_m L(m)`; values
//! beyond that are reported absent, never extrapolated.

mod suffix_automaton;

use std::io::Write;

use num::BigRational;
use thiserror::Error;

use crate::numeric::{decimal_string, ratio_of};
use crate::words::SymbolWord;

pub use suffix_automaton::SuffixAutomaton;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum AnalysisError {
    #[error("word too short: need length > {n_max}, have {len}")]
    WordTooShort { len: usize, n_max: usize },
    #[error("empty estimation window")]
    EmptyWindow,
    #[error("window [{n_lo}, {n_hi}] outside defined range 1..={defined_up_to}")]
    WindowOutOfRange {
        n_lo: usize,
        n_hi: usize,
        defined_up_to: usize,
    },
    #[error("r({n}) has no witness in the prefix (defined up to {defined_up_to})")]
    Undefined { n: usize, defined_up_to: usize },
    #[error("profile length mismatch: p has n_max={p_n_max}, r has n_max={r_n_max}")]
    ProfileMismatch { p_n_max: usize, r_n_max: usize },
    #[error("i/o error: {0}")]
    Io(String),
}

/// Exact counts `p(1..=n_max)` of distinct factors per length.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ComplexityProfile {
    n_max: usize,
    p: Vec<u64>,
}

impl ComplexityProfile {
    pub fn n_max(&self) -> usize {
        self.n_max
    }

    /// `p(n)`, 1-based; panics if `n` is outside `1..=n_max`.
    pub fn p(&self, n: usize) -> u64 {
        self.p[n - 1]
    }

    pub fn values(&self) -> &[u64] {
        &self.p
    }
}

/// Exact values `r(1..=defined_up_to)` of the smallest-return function.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ReturnProfile {
    n_max: usize,
    r: Vec<u64>,
}

impl ReturnProfile {
    pub fn n_max(&self) -> usize {
        self.n_max
    }

    /// Largest `n` for which `r(n)` is witnessed inside the prefix.
    pub fn defined_up_to(&self) -> usize {
        self.r.len()
    }

    /// `r(n)`, or `None` when the prefix contains no witness.
    pub fn r(&self, n: usize) -> Option<u64> {
        if n == 0 {
            return None;
        }
        self.r.get(n - 1).copied()
    }

    pub fn values(&self) -> &[u64] {
        &self.r
    }
}

/// Windowed proxies for the repetition exponents: the minimum and maximum of
/// `r(n)/n` over `n` in `[n_lo, n_hi]`, as exact rationals.
#[derive(Debug, Clone, PartialEq)]
pub struct ExponentEstimate {
    pub rep_min: BigRational,
    pub rep_max: BigRational,
    pub window: (usize, usize),
}

fn check_len(word: &SymbolWord, n_max: usize) -> Result<(), AnalysisError> {
    if n_max == 0 || n_max >= word.len() {
        return Err(AnalysisError::WordTooShort {
            len: word.len(),
            n_max,
        });
    }
    Ok(())
}

/// Computes `p(n)` for `n = 1..=n_max`.
pub fn complexity_profile(
    word: &SymbolWord,
    n_max: usize,
) -> Result<ComplexityProfile, AnalysisError> {
    check_len(word, n_max)?;
    let mut sa = SuffixAutomaton::with_capacity(word.len());
    for &c in word.symbols() {
        sa.push(c);
    }
    Ok(ComplexityProfile {
        n_max,
        p: sa.distinct_counts(n_max),
    })
}

/// Computes `r(n)` for `n = 1..` as far as the prefix witnesses it, capped
/// at `n_max`.  Stops extending the automaton once the cap is reached.
pub fn return_profile(word: &SymbolWord, n_max: usize) -> Result<ReturnProfile, AnalysisError> {
    check_len(word, n_max)?;
    let mut sa = SuffixAutomaton::with_capacity(word.len().min(4 * n_max));
    let mut r = Vec::new();
    for (i, &c) in word.symbols().iter().enumerate() {
        let m = (i + 1) as u64;
        let l = sa.push(c);
        while r.len() < l.min(n_max) {
            r.push(m);
        }
        if r.len() == n_max {
            break;
        }
    }
    Ok(ReturnProfile { n_max, r })
}

/// Computes both profiles from a single automaton pass.
pub fn both_profiles(
    word: &SymbolWord,
    n_max: usize,
) -> Result<(ComplexityProfile, ReturnProfile), AnalysisError> {
    check_len(word, n_max)?;
    let mut sa = SuffixAutomaton::with_capacity(word.len());
    let mut r = Vec::new();
    for (i, &c) in word.symbols().iter().enumerate() {
        let m = (i + 1) as u64;
        let l = sa.push(c);
        while r.len() < l.min(n_max) {
            r.push(m);
        }
    }
    let p = sa.distinct_counts(n_max);
    Ok((ComplexityProfile { n_max, p }, ReturnProfile { n_max, r }))
}

/// Default estimation window `[ceil(n_max / 8), n_max]`, skipping the
/// small-`n` transient that dominates ratio extrema.
pub fn default_window(n_max: usize) -> (usize, usize) {
    (n_max.div_ceil(8).max(1), n_max)
}

/// Windowed min/max of `r(n)/n` in exact rational arithmetic.
pub fn exponent_estimate(
    profile: &ReturnProfile,
    n_lo: usize,
    n_hi: usize,
) -> Result<ExponentEstimate, AnalysisError> {
    if n_lo > n_hi {
        return Err(AnalysisError::EmptyWindow);
    }
    if n_lo < 1 || n_hi > profile.defined_up_to() {
        return Err(AnalysisError::WindowOutOfRange {
            n_lo,
            n_hi,
            defined_up_to: profile.defined_up_to(),
        });
    }
    let mut rep_min: Option<BigRational> = None;
    let mut rep_max: Option<BigRational> = None;
    for n in n_lo..=n_hi {
        let ratio = ratio_of(profile.r(n).expect("window checked"), n as u64);
        if rep_min.as_ref().is_none_or(|m| ratio < *m) {
            rep_min = Some(ratio.clone());
        }
        if rep_max.as_ref().is_none_or(|m| ratio > *m) {
            rep_max = Some(ratio);
        }
    }
    Ok(ExponentEstimate {
        rep_min: rep_min.expect("nonempty window"),
        rep_max: rep_max.expect("nonempty window"),
        window: (n_lo, n_hi),
    })
}

/// All `n < defined_up_to` with `r(n+1) >= r(n) + 2`, ascending.
pub fn jump_indices(profile: &ReturnProfile) -> Vec<usize> {
    let r = profile.values();
    (1..r.len())
        .filter(|&i| r[i] >= r[i - 1] + 2) // index i holds r(i+1); the jump is at n = i
        .collect()
}

/// The proven pointwise lower bound `p(n) >= r(n) - n`.
pub fn complexity_lower_from_return(
    profile: &ReturnProfile,
    n: usize,
) -> Result<u64, AnalysisError> {
    match profile.r(n) {
        Some(r) => Ok(r - n as u64),
        None => Err(AnalysisError::Undefined {
            n,
            defined_up_to: profile.defined_up_to(),
        }),
    }
}

/// Writes the profile table as CSV with header `n,p,r,p_over_n,r_over_n`.
/// Absent `r` values render as empty fields; ratios as 6-place decimals.
pub fn write_profile_csv<W: Write>(
    complexity: &ComplexityProfile,
    returns: &ReturnProfile,
    mut out: W,
) -> Result<(), AnalysisError> {
    if complexity.n_max() != returns.n_max() {
        return Err(AnalysisError::ProfileMismatch {
            p_n_max: complexity.n_max(),
            r_n_max: returns.n_max(),
        });
    }
    let io = |e: std::io::Error| AnalysisError::Io(e.to_string());
    writeln!(out, "n,p,r,p_over_n,r_over_n").map_err(io)?;
    for n in 1..=complexity.n_max() {
        let p = complexity.p(n);
        let p_ratio = decimal_string(&ratio_of(p, n as u64), 6);
        match returns.r(n) {
            Some(r) => {
                let r_ratio = decimal_string(&ratio_of(r, n as u64), 6);
                writeln!(out, "{n},{p},{r},{p_ratio},{r_ratio}").map_err(io)?;
            }
            None => writeln!(out, "{n},{p},,{p_ratio},").map_err(io)?,
        }
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::words::{word_from_text, Alphabet};

    fn word(text: &str) -> SymbolWord {
        let base = text
            .chars()
            .map(|c| c.to_digit(36).unwrap() + 1)
            .max()
            .unwrap_or(2)
            .max(2);
        word_from_text(text, Alphabet::new(base).unwrap()).unwrap()
    }

    #[test]
    fn complexity_of_constant_word() {
        let w = word("0000000000");
        let cp = complexity_profile(&w, 3).unwrap();
        assert_eq!(cp.p(3), 1);
    }

    #[test]
    fn complexity_of_0110() {
        let cp = complexity_profile(&word("0110"), 2).unwrap();
        assert_eq!(cp.p(2), 3);
    }

    #[test]
    fn return_profile_of_unary_word() {
        let w = word("00000000");
        let rp = return_profile(&w, 6).unwrap();
        for n in 1..=6 {
            assert_eq!(rp.r(n), Some(n as u64 + 1));
        }
    }

    #[test]
    fn return_profile_of_alternating_word() {
        let rp = return_profile(&word("01010101"), 4).unwrap();
        assert_eq!(rp.r(2), Some(4));
    }

    #[test]
    fn return_profile_of_fibonacci_prefix() {
        let rp = return_profile(&word("0100101001"), 3).unwrap();
        assert_eq!(rp.r(1), Some(3));
    }

    #[test]
    fn word_too_short_rejected() {
        let w = word("0101");
        assert!(matches!(
            complexity_profile(&w, 4),
            Err(AnalysisError::WordTooShort { .. })
        ));
        assert!(matches!(
            return_profile(&w, 9),
            Err(AnalysisError::WordTooShort { .. })
        ));
    }

    #[test]
    fn defined_up_to_is_not_extrapolated() {
        // 012: no factor repeats at all
        let rp = return_profile(&word("012"), 2).unwrap();
        assert_eq!(rp.defined_up_to(), 0);
        assert_eq!(rp.r(1), None);
    }

    #[test]
    fn exponent_estimate_monotone_case() {
        // unary word: r(n) = n + 1, ratio (n+1)/n decreasing
        let rp = return_profile(&word("000000000000"), 8).unwrap();
        let est = exponent_estimate(&rp, 2, 8).unwrap();
        assert_eq!(est.rep_min, ratio_of(9, 8));
        assert_eq!(est.rep_max, ratio_of(3, 2));
    }

    #[test]
    fn exponent_estimate_window_errors() {
        let rp = return_profile(&word("000000000000"), 8).unwrap();
        assert_eq!(
            exponent_estimate(&rp, 5, 4),
            Err(AnalysisError::EmptyWindow)
        );
        assert!(matches!(
            exponent_estimate(&rp, 1, 9),
            Err(AnalysisError::WindowOutOfRange { .. })
        ));
    }

    #[test]
    fn jumps_absent_for_unary_word() {
        let rp = return_profile(&word("0000000000"), 8).unwrap();
        assert!(jump_indices(&rp).is_empty());
    }

    #[test]
    fn jumps_absent_for_alternating_tail() {
        let rp = return_profile(&word("010101010101"), 8).unwrap();
        // r(1)=3, r(2)=4, r(3)=5, ...: all unit steps after the start
        assert!(jump_indices(&rp).is_empty());
    }

    #[test]
    fn complexity_lower_bound_values() {
        let rp = return_profile(&word("00000000"), 5).unwrap();
        assert_eq!(complexity_lower_from_return(&rp, 3).unwrap(), 1);
        assert!(matches!(
            complexity_lower_from_return(&rp, 6),
            Err(AnalysisError::Undefined { .. })
        ));
    }

    #[test]
    fn csv_shape() {
        let w = word("012");
        let (cp, rp) = both_profiles(&w, 2).unwrap();
        let mut buf = Vec::new();
        write_profile_csv(&cp, &rp, &mut buf).unwrap();
        let text = String::from_utf8(buf).unwrap();
        assert_eq!(
            text,
            "n,p,r,p_over_n,r_over_n\n1,3,,3.000000,\n2,2,,1.000000,\n"
        );
    }

    #[test]
    fn default_window_rounds_up() {
        assert_eq!(default_window(2048), (256, 2048));
        assert_eq!(default_window(9), (2, 9));
        assert_eq!(default_window(1), (1, 1));
    }
}
