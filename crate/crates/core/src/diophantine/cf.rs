//! Certified continued-fraction extraction from digit enclosures.
//!
//! The expansions of the two rational enclosure endpoints are compared
//! term by term; the common prefix, minus one final term (which truncation
//! may corrupt), is certified to agree with the expansion of the enclosed
//! irrational.  Convergents follow the standard recurrence
//! `p_k = a_k p_{k-1} + p_{k-2}`, `q_k = a_k q_{k-1} + q_{k-2}`.

use num::{BigInt, BigRational, Integer, One, Signed, Zero};

use super::DiophantineError;
use crate::expansions::CertifiedDigits;

/// Certified partial quotients and convergents.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ContinuedFraction {
    pub a0: BigInt,
    /// Certified partial quotients `a_1 .. a_K` (all positive).
    pub partial_quotients: Vec<BigInt>,
    /// `(p_k, q_k)` for `k = 0 ..= K`.
    pub convergents: Vec<(BigInt, BigInt)>,
}

impl ContinuedFraction {
    pub fn terms(&self) -> usize {
        self.partial_quotients.len()
    }

    pub fn q(&self, k: usize) -> &BigInt {
        &self.convergents[k].1
    }
}

/// Terminating continued fraction of a rational (floor convention:
/// `x = a0 + 1/(a1 + 1/(...))` with `a_k >= 1` for `k >= 1`).
pub fn rational_cf(x: &BigRational) -> Vec<BigInt> {
    let mut terms = Vec::new();
    let mut num = x.numer().clone();
    let mut den = x.denom().clone();
    loop {
        let (q, r) = num.div_mod_floor(&den);
        terms.push(q);
        if r.is_zero() {
            return terms;
        }
        num = den;
        den = r;
    }
}

fn convergents_of(a0: &BigInt, quotients: &[BigInt]) -> Vec<(BigInt, BigInt)> {
    let mut out = Vec::with_capacity(quotients.len() + 1);
    let (mut p_prev, mut q_prev) = (BigInt::one(), BigInt::zero());
    let (mut p, mut q) = (a0.clone(), BigInt::one());
    out.push((p.clone(), q.clone()));
    for a in quotients {
        let p_next = a * &p + &p_prev;
        let q_next = a * &q + &q_prev;
        p_prev = p;
        q_prev = q;
        p = p_next;
        q = q_next;
        out.push((p.clone(), q.clone()));
    }
    out
}

/// Extracts the certified continued fraction of the constant enclosed by a
/// digit prefix.
pub fn continued_fraction(digits: &CertifiedDigits) -> Result<ContinuedFraction, DiophantineError> {
    if digits.count() < 8 {
        return Err(DiophantineError::DigitsTooFew {
            count: digits.count(),
        });
    }
    let (lo, hi) = digits.enclosure();
    let cf_lo = rational_cf(&lo);
    let cf_hi = rational_cf(&hi);
    let mut common: Vec<BigInt> = cf_lo
        .iter()
        .zip(cf_hi.iter())
        .take_while(|(a, b)| a == b)
        .map(|(a, _)| a.clone())
        .collect();
    // the last common term may be corrupted by the truncation
    common.pop();
    if common.len() < 4 {
        return Err(DiophantineError::RationalSuspected {
            certified_terms: common.len().saturating_sub(1),
        });
    }
    let a0 = common.remove(0);
    let convergents = convergents_of(&a0, &common);
    debug_assert!(common.iter().all(|a| a.is_positive()));
    Ok(ContinuedFraction {
        a0,
        partial_quotients: common,
        convergents,
    })
}

/// `p_k q_{k-1} - p_{k-1} q_k` for every consecutive convergent pair;
/// always `+1` or `-1`.
pub fn convergent_determinants(cf: &ContinuedFraction) -> Vec<BigInt> {
    cf.convergents
        .windows(2)
        .map(|w| {
            let (ref p_prev, ref q_prev) = w[0];
            let (ref p, ref q) = w[1];
            p * q_prev - p_prev * q
        })
        .collect()
}
