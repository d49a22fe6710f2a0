//! Orchestration and reporting: the digits -> profiles -> exponents ->
//! continued fraction -> bound comparison pipeline, machine-readable
//! reports, and batch execution.

mod case;
mod report;
mod run;

use thiserror::Error;

pub use case::{RunConfig, VerificationCase};
pub use report::{
    BoundsBlock, MeasuredBlock, RatioRepr, TheoreticalBlock, Verdict, VerdictStatus,
    VerificationReport,
};
pub use run::{run_batch, run_batch_sequential, run_case, CaseArtifacts, CaseOutcome};

use crate::analysis::AnalysisError;
use crate::diophantine::DiophantineError;
use crate::expansions::ExpansionError;

#[derive(Debug, Error)]
pub enum VerifyError {
    #[error("case {case}: {source}")]
    Expansion {
        case: String,
        source: ExpansionError,
    },
    #[error("case {case}: {source}")]
    Analysis { case: String, source: AnalysisError },
    #[error("case {case}: {source}")]
    Diophantine {
        case: String,
        source: DiophantineError,
    },
    #[error("invalid case {case}: {msg}")]
    InvalidCase { case: String, msg: String },
    #[error("invalid config: {0}")]
    InvalidConfig(String),
    #[error("i/o error: {0}")]
    Io(String),
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::numeric::parse_rational;
    use crate::words::Alphabet;

    fn config(cases: Vec<VerificationCase>) -> RunConfig {
        RunConfig {
            cache_dir: None,
            precision_cap_bits: 1 << 16,
            output_dir: std::env::temp_dir(),
            cases,
        }
    }

    #[test]
    fn degenerate_rational_input_is_marked() {
        // sqrt(1) = 1 exactly: all-zero digit word, periodic, no certified CF
        let case = VerificationCase {
            spec: "sqrt(1)".parse().unwrap(),
            base: Alphabet::binary(),
            digit_count: 128,
            n_max: 16,
            window: (2, 16),
            mu_hint: None,
        };
        let report = run_case(&case, &config(vec![])).unwrap();
        assert!(report.measured.degenerate);
        assert!(report.measured.mu_hat.is_none());
        assert!(!report.has_violation());
        // pointwise checks still run; asymptotic ones are absent
        assert_eq!(report.verdicts.len(), 3);
    }

    #[test]
    fn kmosek_small_case_runs_clean() {
        let case = VerificationCase {
            spec: "kmosek_shallit".parse().unwrap(),
            base: Alphabet::binary(),
            digit_count: 512,
            n_max: 64,
            window: (8, 64),
            mu_hint: Some(parse_rational("2").unwrap()),
        };
        let report = run_case(&case, &config(vec![])).unwrap();
        assert!(!report.has_violation());
        assert!(report.theoretical.from_hint.is_some());
        assert!(report.theoretical.from_estimate.is_some());
        for v in &report.verdicts {
            assert_ne!(v.status, VerdictStatus::Violated, "check {}", v.check);
        }
    }
}
