//! The end-to-end pipeline: digits, profiles, exponent estimates,
//! continued fraction, bound tables, verdicts.
//!
//! Batch runs parallelize across cases only (each case's pipeline is
//! sequential); with the `parallel` feature disabled the batch driver runs
//! the same cases in order with identical results.

use std::fs;
use std::path::PathBuf;
use std::time::{SystemTime, UNIX_EPOCH};

use super::case::{RunConfig, VerificationCase};
use super::report::{
    bounds_for, build_verdicts, complexity_window_extrema, measured_block, BoundsBlock,
    MeasuredInputs, TheoreticalBlock, VerificationReport,
};
use super::VerifyError;
use crate::analysis::{both_profiles, exponent_estimate, jump_indices};
use crate::diophantine::{continued_fraction, mu_estimate, DiophantineError};
use crate::expansions::{generate_digits_capped, DigitCache};

/// Outcome of one case inside a batch.
#[derive(Debug)]
pub struct CaseOutcome {
    pub case_id: String,
    pub result: Result<CaseArtifacts, VerifyError>,
}

#[derive(Debug)]
pub struct CaseArtifacts {
    pub json_path: PathBuf,
    pub csv_path: PathBuf,
    pub violation: bool,
}

fn now_unix() -> u64 {
    SystemTime::now()
        .duration_since(UNIX_EPOCH)
        .map(|d| d.as_secs())
        .unwrap_or(0)
}

/// Runs one case and assembles its report.
pub fn run_case(
    case: &VerificationCase,
    config: &RunConfig,
) -> Result<VerificationReport, VerifyError> {
    case.validate()?;
    let case_id = case.id();
    let expansion_err = |e| VerifyError::Expansion {
        case: case_id.clone(),
        source: e,
    };
    let analysis_err = |e| VerifyError::Analysis {
        case: case_id.clone(),
        source: e,
    };

    let digits = match &config.cache_dir {
        Some(dir) => DigitCache::new(dir)
            .and_then(|cache| {
                cache.get_or_generate(
                    &case.spec,
                    case.base,
                    case.digit_count,
                    config.precision_cap_bits,
                )
            })
            .map_err(expansion_err)?,
        None => generate_digits_capped(
            &case.spec,
            case.base,
            case.digit_count,
            config.precision_cap_bits,
        )
        .map_err(expansion_err)?,
    };

    let (complexity, returns) = both_profiles(&digits.digits, case.n_max).map_err(analysis_err)?;

    // the window may extend past the last witnessed r(n); clamp and echo
    let n_lo = case.window.0;
    let n_hi = case.window.1.min(returns.defined_up_to());
    if n_lo > n_hi {
        return Err(VerifyError::InvalidCase {
            case: case_id,
            msg: format!(
                "window start {n_lo} exceeds the witnessed range (defined_up_to = {})",
                returns.defined_up_to()
            ),
        });
    }
    let estimate = exponent_estimate(&returns, n_lo, n_hi).map_err(analysis_err)?;
    let (p_min, p_max) = complexity_window_extrema(&complexity, n_lo, n_hi);
    let jumps = jump_indices(&returns);

    // a periodic (rational-looking) digit stream is reported, not an error
    let (mu, degenerate) = match continued_fraction(&digits) {
        Ok(cf) => match mu_estimate(&cf) {
            Ok(est) => (Some(est), false),
            Err(DiophantineError::TooFewTerms { .. }) => (None, true),
            Err(e) => {
                return Err(VerifyError::Diophantine {
                    case: case_id,
                    source: e,
                })
            }
        },
        Err(DiophantineError::RationalSuspected { .. } | DiophantineError::DigitsTooFew { .. }) => {
            (None, true)
        }
        Err(e) => {
            return Err(VerifyError::Diophantine {
                case: case_id,
                source: e,
            })
        }
    };

    let from_hint = case.mu_hint.as_ref().and_then(bounds_for);
    let from_estimate = mu.as_ref().and_then(|m| bounds_for(&m.mu_hat));
    // bounds from the hint carry external certainty; the estimate table is
    // reported alongside for comparison
    let primary = from_hint.as_ref().or(from_estimate.as_ref());

    let inputs = MeasuredInputs {
        complexity: &complexity,
        returns: &returns,
        estimate: &estimate,
        p_min: &p_min,
        p_max: &p_max,
    };
    let verdicts = build_verdicts(&inputs, primary);
    let measured = measured_block(&inputs, (n_lo, n_hi), mu.as_ref(), jumps.len(), degenerate);

    Ok(VerificationReport {
        case: case.clone(),
        measured,
        theoretical: TheoreticalBlock {
            from_hint: from_hint.as_ref().map(BoundsBlock::from_table),
            from_estimate: from_estimate.as_ref().map(BoundsBlock::from_table),
        },
        verdicts,
        timestamp: now_unix(),
        complexity,
        returns,
    })
}

fn sanitize(id: &str) -> String {
    id.chars()
        .map(|c| {
            if c.is_ascii_alphanumeric() || matches!(c, '.' | '_' | '-') {
                c
            } else {
                '_'
            }
        })
        .collect()
}

fn run_and_emit(index: usize, case: &VerificationCase, config: &RunConfig) -> CaseOutcome {
    let case_id = case.id();
    let result = run_case(case, config).and_then(|report| {
        let stem = format!("case-{index:03}-{}", sanitize(&case_id));
        let json_path = config.output_dir.join(format!("{stem}.json"));
        let csv_path = config.output_dir.join(format!("{stem}.csv"));
        fs::write(&json_path, report.to_json()).map_err(|e| VerifyError::Io(e.to_string()))?;
        let mut csv = Vec::new();
        report.write_csv(&mut csv)?;
        fs::write(&csv_path, csv).map_err(|e| VerifyError::Io(e.to_string()))?;
        Ok(CaseArtifacts {
            json_path,
            csv_path,
            violation: report.has_violation(),
        })
    });
    CaseOutcome { case_id, result }
}

/// Runs every case in order, emitting one JSON and one CSV report per case.
pub fn run_batch_sequential(config: &RunConfig) -> Result<Vec<CaseOutcome>, VerifyError> {
    config.validate()?;
    fs::create_dir_all(&config.output_dir).map_err(|e| VerifyError::Io(e.to_string()))?;
    Ok(config
        .cases
        .iter()
        .enumerate()
        .map(|(i, case)| run_and_emit(i, case, config))
        .collect())
}

/// Runs the batch across a rayon pool (case-level parallelism only).
#[cfg(feature = "parallel")]
pub fn run_batch(config: &RunConfig) -> Result<Vec<CaseOutcome>, VerifyError> {
    use rayon::prelude::*;
    config.validate()?;
    fs::create_dir_all(&config.output_dir).map_err(|e| VerifyError::Io(e.to_string()))?;
    Ok(config
        .cases
        .par_iter()
        .enumerate()
        .map(|(i, case)| run_and_emit(i, case, config))
        .collect())
}

/// Sequential fallback when the `parallel` feature is disabled.
#[cfg(not(feature = "parallel"))]
pub fn run_batch(config: &RunConfig) -> Result<Vec<CaseOutcome>, VerifyError> {
    run_batch_sequential(config)
}
