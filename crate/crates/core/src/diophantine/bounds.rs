//! Exact rational evaluation of the lower-bound formulas linking the
//! irrationality exponent `mu`, the repetition exponents, and the subword
//! complexity ratios.
//!
//! With `N(mu) = 1 - 2 mu (mu-1) (mu-2)`:
//!
//! * `F_liminf(mu) = 1 + N(mu) / (mu^3 (mu-1))` bounds `liminf p(n)/n`;
//! * `F_limsup(mu) = 1 + N(mu) / (3 mu^3 - 6 mu^2 + 4 mu - 1)` bounds
//!   `limsup p(n)/n`;
//! * `G_rep(mu) = 2 + N(mu) / (3 mu^3 - 6 mu^2 + 4 mu - 1)` bounds
//!   `limsup r(n)/n`.
//!
//! The repetition-side forms are `h_Rep(rho) = rho + 1/(1 + rho + rho^2)`
//! and `P_low(rho) = rho - 1 + 1/rho^3`; composing them with
//! `rho = mu/(mu-1)` reproduces `G_rep` and `F_liminf` exactly.

use num::{BigInt, BigRational, One, Signed};

use super::DiophantineError;
use crate::numeric::{ln_ratio_enclosure, primitive_power_root, ratio_of};

fn int(n: i64) -> BigRational {
    BigRational::from(BigInt::from(n))
}

fn numerator_term(mu: &BigRational) -> BigRational {
    // 1 - 2 mu (mu-1) (mu-2)
    let one = BigRational::one();
    &one - int(2) * mu * (mu - &one) * (mu - int(2))
}

fn cubic_denominator(mu: &BigRational) -> BigRational {
    // 3 mu^3 - 6 mu^2 + 4 mu - 1
    int(3) * mu * mu * mu - int(6) * mu * mu + int(4) * mu - int(1)
}

/// Bound values at a given `mu`, with vacuousness flags: a complexity
/// bound at or below the trivial floor 1 is vacuous, as is a return bound
/// at or below the universal floor 2.
#[derive(Debug, Clone, PartialEq)]
pub struct BoundTable {
    pub mu: BigRational,
    pub f_liminf: BigRational,
    pub f_limsup: BigRational,
    pub g_rep: BigRational,
    pub f_liminf_vacuous: bool,
    pub f_limsup_vacuous: bool,
    pub g_rep_vacuous: bool,
    /// Repetition-side values, filled in when `rho` is supplied.
    pub rep_side: Option<RepSideBounds>,
}

/// `h_Rep(rho)` and `P_low(rho)`, with vacuousness flags against the
/// `Rep >= 2` and `liminf p/n >= 1` floors.
#[derive(Debug, Clone, PartialEq)]
pub struct RepSideBounds {
    pub rho: BigRational,
    pub h_rep: BigRational,
    pub p_low: BigRational,
    pub h_rep_vacuous: bool,
    pub p_low_vacuous: bool,
}

/// Evaluates the three bound formulas at `mu >= 2`.
pub fn bound_table(mu: &BigRational) -> Result<BoundTable, DiophantineError> {
    if mu < &int(2) {
        return Err(DiophantineError::InvalidMu(mu.clone()));
    }
    let n = numerator_term(mu);
    let one = BigRational::one();
    let f_liminf = &one + &n / (mu * mu * mu * (mu - &one));
    let f_limsup = &one + &n / cubic_denominator(mu);
    let g_rep = int(2) + &n / cubic_denominator(mu);
    Ok(BoundTable {
        mu: mu.clone(),
        f_liminf_vacuous: f_liminf <= one,
        f_limsup_vacuous: f_limsup <= one,
        g_rep_vacuous: g_rep <= int(2),
        f_liminf,
        f_limsup,
        g_rep,
        rep_side: None,
    })
}

/// Evaluates the repetition-side bounds at `rho >= 1`.
pub fn rep_side_bounds(rho: &BigRational) -> Result<RepSideBounds, DiophantineError> {
    if rho < &BigRational::one() {
        return Err(DiophantineError::InvalidRep(rho.clone()));
    }
    let one = BigRational::one();
    let h_rep = rho + &one / (&one + rho + rho * rho);
    let p_low = rho - &one + &one / (rho * rho * rho);
    Ok(RepSideBounds {
        rho: rho.clone(),
        h_rep_vacuous: h_rep <= int(2),
        p_low_vacuous: p_low <= one,
        h_rep,
        p_low,
    })
}

/// `bound_table` with the repetition-side values filled in.
pub fn bound_table_with_rep(
    mu: &BigRational,
    rho: &BigRational,
) -> Result<BoundTable, DiophantineError> {
    let mut table = bound_table(mu)?;
    table.rep_side = Some(rep_side_bounds(rho)?);
    Ok(table)
}

/// Enclosure of width at most `10^-6` of the root of
/// `2 mu (mu-1) (mu-2) = 1` in `(2, 3)`, by exact sign-change bisection.
pub fn critical_mu() -> (BigRational, BigRational) {
    let mut lo = int(2);
    let mut hi = int(3);
    let width = BigRational::new(BigInt::one(), BigInt::from(1_000_000));
    // N(mu) is positive at 2 and negative at 3
    debug_assert!(numerator_term(&lo).is_positive());
    debug_assert!(numerator_term(&hi).is_negative());
    while &hi - &lo > width {
        let mid = (&lo + &hi) / int(2);
        if numerator_term(&mid).is_positive() {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    (lo, hi)
}

/// `rep(x) >= mu/(mu-1)` for the digit word of a number with irrationality
/// exponent `mu > 1`.
pub fn rep_lower_from_mu(mu: &BigRational) -> Result<BigRational, DiophantineError> {
    if mu <= &BigRational::one() {
        return Err(DiophantineError::InvalidMu(mu.clone()));
    }
    Ok(mu / (mu - BigRational::one()))
}

/// Lower bound for the irrationality exponent implied by a repetition
/// exponent; infinite at `rep = 1`.
#[derive(Debug, Clone, PartialEq)]
pub enum MuLowerBound {
    Finite(BigRational),
    Infinite,
}

/// `mu >= rep/(rep-1)`, infinite when `rep = 1`.
pub fn mu_lower_from_rep(rep: &BigRational) -> Result<MuLowerBound, DiophantineError> {
    let one = BigRational::one();
    if rep < &one {
        return Err(DiophantineError::InvalidRep(rep.clone()));
    }
    if rep == &one {
        return Ok(MuLowerBound::Infinite);
    }
    Ok(MuLowerBound::Finite(rep / (rep - one)))
}

/// The explicit logarithmic bound `9/8 - 4 ln(s)/ln(t)` for `s, t >= 2`,
/// rounded downward (never optimistic); exact when `s` and `t` are powers
/// of a common integer.  Negative values are flagged vacuous.
#[derive(Debug, Clone, PartialEq)]
pub struct LogExampleBound {
    pub value: BigRational,
    pub vacuous: bool,
}

pub fn log_example_bound(s: u64, t: u64) -> Result<LogExampleBound, DiophantineError> {
    if s < 2 || t < 2 {
        return Err(DiophantineError::InvalidArgs(format!(
            "need s >= 2 and t >= 2, got ({s},{t})"
        )));
    }
    let (root_s, exp_s) = primitive_power_root(&BigInt::from(s));
    let (root_t, exp_t) = primitive_power_root(&BigInt::from(t));
    let ratio_hi = if root_s == root_t {
        // ln s / ln t = exp_s / exp_t exactly
        ratio_of(exp_s as u64, exp_t as u64)
    } else {
        let (_, hi) = ln_ratio_enclosure(
            &BigRational::from(BigInt::from(s)),
            &BigRational::from(BigInt::from(t)),
        );
        hi
    };
    let value = ratio_of(9, 8) - int(4) * ratio_hi;
    Ok(LogExampleBound {
        vacuous: value.is_negative(),
        value,
    })
}
