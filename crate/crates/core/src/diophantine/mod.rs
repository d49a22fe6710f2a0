//! Certified continued fractions, irrationality-exponent estimation, and
//! the exact bound formulas.

mod bounds;
mod cf;
mod estimate;

use num::BigRational;
use thiserror::Error;

pub use bounds::{
    bound_table, bound_table_with_rep, critical_mu, log_example_bound, mu_lower_from_rep,
    rep_lower_from_mu, rep_side_bounds, BoundTable, LogExampleBound, MuLowerBound, RepSideBounds,
};
pub use cf::{continued_fraction, convergent_determinants, rational_cf, ContinuedFraction};
pub use estimate::{mu_estimate, IrrationalityEstimate, StepRatio};

#[derive(Debug, Error, PartialEq)]
pub enum DiophantineError {
    #[error("need at least 8 digits for continued-fraction extraction, got {count}")]
    DigitsTooFew { count: usize },
    #[error("enclosure expansion terminates after {certified_terms} certified terms; the value may be rational")]
    RationalSuspected { certified_terms: usize },
    #[error("need at least 3 certified partial quotients, got {terms}")]
    TooFewTerms { terms: usize },
    #[error("bound formulas need mu >= 2 (estimators mu > 1), got {0}")]
    InvalidMu(BigRational),
    #[error("repetition exponents are >= 1, got {0}")]
    InvalidRep(BigRational),
    #[error("invalid arguments: {0}")]
    InvalidArgs(String),
}
