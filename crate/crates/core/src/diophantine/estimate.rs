//! Irrationality-exponent estimation from certified partial quotients.
//!
//! The step ratio `ln q_{k+1} / ln q_k` estimates `mu - 1` at denominator
//! scale `q_k`; the estimate is `1 +` the maximum ratio over certified
//! steps, with per-step ratios exposed for limsup inspection.  Steps with
//! tiny denominators are excluded from the maximum (their ratios reflect
//! the `O(1)` startup regime, not approximation quality); when no step
//! clears the threshold the maximum falls back to all steps with
//! `q_k >= 2`.  Logarithms are evaluated as enclosures and rounded
//! outward, so the reported estimate is never silently optimistic.

use num::{BigInt, BigRational, One};

use super::cf::ContinuedFraction;
use super::DiophantineError;
use crate::numeric::ln_ratio_enclosure;

/// Denominators below this bound are excluded from the maximum.
const SMALL_DENOMINATOR_BOUND: u64 = 1 << 16;

#[derive(Debug, Clone, PartialEq)]
pub struct StepRatio {
    /// Convergent index `k` of the ratio `ln q_{k+1} / ln q_k`.
    pub k: usize,
    /// Upper bound of the ratio enclosure.
    pub ratio: BigRational,
}

#[derive(Debug, Clone, PartialEq)]
pub struct IrrationalityEstimate {
    /// `1 + max_k ln q_{k+1} / ln q_k` (outward-rounded upper bound).
    pub mu_hat: BigRational,
    /// Index attaining the maximum.
    pub k_used: usize,
    /// All step ratios with `q_k >= 2`.
    pub per_step: Vec<StepRatio>,
}

pub fn mu_estimate(cf: &ContinuedFraction) -> Result<IrrationalityEstimate, DiophantineError> {
    if cf.terms() < 3 {
        return Err(DiophantineError::TooFewTerms { terms: cf.terms() });
    }
    let threshold = BigInt::from(SMALL_DENOMINATOR_BOUND);
    let mut per_step = Vec::new();
    let mut best: Option<(usize, BigRational)> = None;
    let mut best_small: Option<(usize, BigRational)> = None;
    for k in 1..cf.terms() {
        let q_k = cf.q(k);
        if q_k <= &BigInt::one() {
            continue;
        }
        let q_next = cf.q(k + 1);
        let (_, hi) = ln_ratio_enclosure(
            &BigRational::from(q_next.clone()),
            &BigRational::from(q_k.clone()),
        );
        per_step.push(StepRatio {
            k,
            ratio: hi.clone(),
        });
        if q_k >= &threshold {
            if best.as_ref().is_none_or(|(_, b)| hi > *b) {
                best = Some((k, hi));
            }
        } else if best_small.as_ref().is_none_or(|(_, b)| hi > *b) {
            best_small = Some((k, hi));
        }
    }
    let (k_used, max_ratio) = best
        .or(best_small)
        .ok_or(DiophantineError::TooFewTerms { terms: cf.terms() })?;
    Ok(IrrationalityEstimate {
        mu_hat: BigRational::one() + max_ratio,
        k_used,
        per_step,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::numeric::{decimal_string, ratio_of};

    fn cf_from_quotients(a0: i64, quotients: &[i64]) -> ContinuedFraction {
        let a0 = BigInt::from(a0);
        let pq: Vec<BigInt> = quotients.iter().map(|&a| BigInt::from(a)).collect();
        let mut convergents = vec![(a0.clone(), BigInt::one())];
        let (mut p_prev, mut q_prev) = (BigInt::one(), BigInt::from(0));
        let (mut p, mut q) = (a0.clone(), BigInt::one());
        for a in &pq {
            let p_next = a * &p + &p_prev;
            let q_next = a * &q + &q_prev;
            p_prev = p;
            q_prev = q;
            p = p_next;
            q = q_next;
            convergents.push((p.clone(), q.clone()));
        }
        convergents.truncate(pq.len() + 1);
        ContinuedFraction {
            a0,
            partial_quotients: pq,
            convergents,
        }
    }

    #[test]
    fn golden_ratio_estimate_approaches_two() {
        // all partial quotients 1: q_k are Fibonacci numbers
        let cf = cf_from_quotients(1, &vec![1; 120]);
        let est = mu_estimate(&cf).unwrap();
        let mu = est.mu_hat;
        assert!(mu > ratio_of(2, 1), "mu_hat = {}", decimal_string(&mu, 6));
        assert!(mu < ratio_of(21, 10), "mu_hat = {}", decimal_string(&mu, 6));
    }

    #[test]
    fn spike_after_threshold_is_caught() {
        // bounded quotients until q is large, then one huge quotient
        let mut quotients = vec![2i64; 40];
        quotients.push(1_000_000_000);
        quotients.extend([2, 2, 2]);
        let cf = cf_from_quotients(0, &quotients);
        let est = mu_estimate(&cf).unwrap();
        assert!(est.mu_hat > ratio_of(2, 1));
        assert_eq!(est.k_used, 40);
    }

    #[test]
    fn too_few_terms_rejected() {
        let cf = cf_from_quotients(1, &[1, 1]);
        assert!(matches!(
            mu_estimate(&cf),
            Err(DiophantineError::TooFewTerms { terms: 2 })
        ));
    }

    #[test]
    fn small_denominator_fallback() {
        // all denominators below the threshold: fallback still estimates
        let cf = cf_from_quotients(0, &[3, 6, 4]);
        let est = mu_estimate(&cf).unwrap();
        assert!(est.mu_hat > ratio_of(2, 1));
    }
}
