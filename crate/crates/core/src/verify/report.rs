//! Verification reports: measured profile statistics, theoretical bound
//! tables, and per-inequality verdicts.
//!
//! Verdict semantics split pointwise from asymptotic claims.  Pointwise
//! inequalities hold for every `n` and a finite prefix can legitimately
//! refute them, so they may be `violated`.  Asymptotic (liminf/limsup)
//! bounds can only ever be supported by finite data: a window statistic at
//! or above the bound is `consistent`, below it `inconclusive`, and a
//! bound at its trivial floor is `vacuous`.

use std::io::Write;

use num::BigRational;
use serde::Serialize;

use super::case::VerificationCase;
use super::VerifyError;
use crate::analysis::{write_profile_csv, ComplexityProfile, ExponentEstimate, ReturnProfile};
use crate::diophantine::{rep_lower_from_mu, BoundTable, IrrationalityEstimate};
use crate::numeric::{decimal_string, ratio_of, rational_to_string};

/// Exact rational plus a fixed 6-place decimal rendering.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct RatioRepr {
    pub exact: String,
    pub decimal: String,
}

impl RatioRepr {
    pub fn new(r: &BigRational) -> Self {
        RatioRepr {
            exact: rational_to_string(r),
            decimal: decimal_string(r, 6),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum VerdictStatus {
    Consistent,
    Violated,
    Vacuous,
    Inconclusive,
}

#[derive(Debug, Clone, Serialize)]
pub struct Verdict {
    pub check: String,
    pub status: VerdictStatus,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub measured: Option<RatioRepr>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub bound: Option<RatioRepr>,
    pub note: String,
}

#[derive(Debug, Clone, Serialize)]
pub struct MeasuredBlock {
    pub defined_up_to: usize,
    pub window_used: [usize; 2],
    pub p_min_over_n: RatioRepr,
    pub p_max_over_n: RatioRepr,
    pub rep_hat: RatioRepr,
    #[serde(rename = "Rep_hat")]
    pub rep_sup: RatioRepr,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub mu_hat: Option<RatioRepr>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub mu_k_used: Option<usize>,
    pub jump_count: usize,
    /// Set when the continued-fraction stage suspects a rational value
    /// (periodic digits); asymptotic comparisons are skipped.
    pub degenerate: bool,
}

#[derive(Debug, Clone, Serialize)]
pub struct BoundsBlock {
    pub mu: RatioRepr,
    pub f_liminf: RatioRepr,
    pub f_limsup: RatioRepr,
    pub g_rep: RatioRepr,
    pub f_liminf_vacuous: bool,
    pub f_limsup_vacuous: bool,
    pub g_rep_vacuous: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub rho: Option<RatioRepr>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub h_rep: Option<RatioRepr>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub p_low: Option<RatioRepr>,
}

impl BoundsBlock {
    pub fn from_table(table: &BoundTable) -> Self {
        BoundsBlock {
            mu: RatioRepr::new(&table.mu),
            f_liminf: RatioRepr::new(&table.f_liminf),
            f_limsup: RatioRepr::new(&table.f_limsup),
            g_rep: RatioRepr::new(&table.g_rep),
            f_liminf_vacuous: table.f_liminf_vacuous,
            f_limsup_vacuous: table.f_limsup_vacuous,
            g_rep_vacuous: table.g_rep_vacuous,
            rho: table.rep_side.as_ref().map(|s| RatioRepr::new(&s.rho)),
            h_rep: table.rep_side.as_ref().map(|s| RatioRepr::new(&s.h_rep)),
            p_low: table.rep_side.as_ref().map(|s| RatioRepr::new(&s.p_low)),
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct TheoreticalBlock {
    #[serde(skip_serializing_if = "Option::is_none")]
    pub from_hint: Option<BoundsBlock>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub from_estimate: Option<BoundsBlock>,
}

#[derive(Debug, Clone, Serialize)]
pub struct VerificationReport {
    pub case: VerificationCase,
    pub measured: MeasuredBlock,
    pub theoretical: TheoreticalBlock,
    pub verdicts: Vec<Verdict>,
    pub timestamp: u64,
    #[serde(skip)]
    pub complexity: ComplexityProfile,
    #[serde(skip)]
    pub returns: ReturnProfile,
}

impl VerificationReport {
    pub fn to_json(&self) -> String {
        let mut text = serde_json::to_string_pretty(self).expect("report serializes");
        text.push('\n');
        text
    }

    pub fn has_violation(&self) -> bool {
        self.verdicts
            .iter()
            .any(|v| v.status == VerdictStatus::Violated)
    }

    /// Flattened profile table (`n,p,r,p_over_n,r_over_n`).
    pub fn write_csv<W: Write>(&self, out: W) -> Result<(), VerifyError> {
        write_profile_csv(&self.complexity, &self.returns, out).map_err(|e| VerifyError::Analysis {
            case: self.case.id(),
            source: e,
        })
    }
}

pub(crate) struct MeasuredInputs<'a> {
    pub complexity: &'a ComplexityProfile,
    pub returns: &'a ReturnProfile,
    pub estimate: &'a ExponentEstimate,
    pub p_min: &'a BigRational,
    pub p_max: &'a BigRational,
}

/// Pointwise checks over the whole profile plus asymptotic comparisons
/// against the primary bound table.
pub(crate) fn build_verdicts(
    inputs: &MeasuredInputs<'_>,
    primary: Option<&BoundTable>,
) -> Vec<Verdict> {
    let mut verdicts = Vec::new();
    let rp = inputs.returns;
    let cp = inputs.complexity;

    // r(n) >= n + 1, every defined n
    let floor_ok = (1..=rp.defined_up_to()).all(|n| rp.r(n).unwrap() > n as u64);
    verdicts.push(Verdict {
        check: "return_floor".into(),
        status: if floor_ok {
            VerdictStatus::Consistent
        } else {
            VerdictStatus::Violated
        },
        measured: None,
        bound: None,
        note: format!(
            "r(n) >= n+1 checked pointwise for n = 1..={}",
            rp.defined_up_to()
        ),
    });

    // r(n+1) >= r(n) + 1, every defined step
    let growth_ok = (2..=rp.defined_up_to()).all(|n| rp.r(n).unwrap() > rp.r(n - 1).unwrap());
    verdicts.push(Verdict {
        check: "return_growth".into(),
        status: if growth_ok {
            VerdictStatus::Consistent
        } else {
            VerdictStatus::Violated
        },
        measured: None,
        bound: None,
        note: format!(
            "r(n+1) >= r(n)+1 checked pointwise for n = 1..={}",
            rp.defined_up_to().saturating_sub(1)
        ),
    });

    // p(n) >= r(n) - n, every n defined in both profiles
    let upto = rp.defined_up_to().min(cp.n_max());
    let pointwise_ok = (1..=upto).all(|n| cp.p(n) >= rp.r(n).unwrap() - n as u64);
    verdicts.push(Verdict {
        check: "complexity_return_pointwise".into(),
        status: if pointwise_ok {
            VerdictStatus::Consistent
        } else {
            VerdictStatus::Violated
        },
        measured: None,
        bound: None,
        note: format!("p(n) >= r(n) - n checked pointwise for n = 1..={upto}"),
    });

    let Some(table) = primary else {
        return verdicts;
    };

    let asymptotic = |measured: &BigRational, bound: &BigRational, vacuous: bool| {
        if vacuous {
            VerdictStatus::Vacuous
        } else if measured >= bound {
            VerdictStatus::Consistent
        } else {
            VerdictStatus::Inconclusive
        }
    };

    verdicts.push(Verdict {
        check: "return_limsup_bound".into(),
        status: asymptotic(&inputs.estimate.rep_max, &table.g_rep, table.g_rep_vacuous),
        measured: Some(RatioRepr::new(&inputs.estimate.rep_max)),
        bound: Some(RatioRepr::new(&table.g_rep)),
        note: "windowed max r(n)/n vs limsup lower bound G_rep(mu)".into(),
    });
    verdicts.push(Verdict {
        check: "complexity_liminf_bound".into(),
        status: asymptotic(inputs.p_min, &table.f_liminf, table.f_liminf_vacuous),
        measured: Some(RatioRepr::new(inputs.p_min)),
        bound: Some(RatioRepr::new(&table.f_liminf)),
        note: "windowed min p(n)/n vs liminf lower bound F_liminf(mu)".into(),
    });
    verdicts.push(Verdict {
        check: "complexity_limsup_bound".into(),
        status: asymptotic(inputs.p_max, &table.f_limsup, table.f_limsup_vacuous),
        measured: Some(RatioRepr::new(inputs.p_max)),
        bound: Some(RatioRepr::new(&table.f_limsup)),
        note: "windowed max p(n)/n vs limsup lower bound F_limsup(mu)".into(),
    });
    if let Ok(rep_floor) = rep_lower_from_mu(&table.mu) {
        verdicts.push(Verdict {
            check: "repetition_mu_chain".into(),
            status: asymptotic(&inputs.estimate.rep_min, &rep_floor, false),
            measured: Some(RatioRepr::new(&inputs.estimate.rep_min)),
            bound: Some(RatioRepr::new(&rep_floor)),
            note: "windowed min r(n)/n vs the liminf floor mu/(mu-1)".into(),
        });
    }
    verdicts
}

/// Convenience used by verdict tests: window ratio extrema of `p(n)/n`.
pub(crate) fn complexity_window_extrema(
    cp: &ComplexityProfile,
    n_lo: usize,
    n_hi: usize,
) -> (BigRational, BigRational) {
    let mut min: Option<BigRational> = None;
    let mut max: Option<BigRational> = None;
    for n in n_lo..=n_hi {
        let ratio = ratio_of(cp.p(n), n as u64);
        if min.as_ref().is_none_or(|m| ratio < *m) {
            min = Some(ratio.clone());
        }
        if max.as_ref().is_none_or(|m| ratio > *m) {
            max = Some(ratio);
        }
    }
    (min.expect("nonempty window"), max.expect("nonempty window"))
}

/// Bound tables evaluated at an exponent, with the chained repetition-side
/// values filled in.
pub(crate) fn bounds_for(mu: &BigRational) -> Option<BoundTable> {
    let rho = rep_lower_from_mu(mu).ok()?;
    crate::diophantine::bound_table_with_rep(mu, &rho).ok()
}

/// Measured block assembly shared by the runner.
pub(crate) fn measured_block(
    inputs: &MeasuredInputs<'_>,
    window_used: (usize, usize),
    mu: Option<&IrrationalityEstimate>,
    jump_count: usize,
    degenerate: bool,
) -> MeasuredBlock {
    MeasuredBlock {
        defined_up_to: inputs.returns.defined_up_to(),
        window_used: [window_used.0, window_used.1],
        p_min_over_n: RatioRepr::new(inputs.p_min),
        p_max_over_n: RatioRepr::new(inputs.p_max),
        rep_hat: RatioRepr::new(&inputs.estimate.rep_min),
        rep_sup: RatioRepr::new(&inputs.estimate.rep_max),
        mu_hat: mu.map(|m| RatioRepr::new(&m.mu_hat)),
        mu_k_used: mu.map(|m| m.k_used),
        jump_count,
        degenerate,
    }
}
