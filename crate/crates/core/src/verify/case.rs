//! Verification cases and run configuration, with a JSON representation.

use std::fs;
use std::path::{Path, PathBuf};

use num::BigRational;
use serde::{Deserialize, Serialize};

use super::VerifyError;
use crate::expansions::{ConstantSpec, DEFAULT_PRECISION_CAP};
use crate::numeric::{parse_rational, rational_to_string};
use crate::words::Alphabet;

/// One end-to-end pipeline run: digits of a constant, profile bounds, and
/// the comparison window.
#[derive(Debug, Clone, PartialEq)]
pub struct VerificationCase {
    pub spec: ConstantSpec,
    pub base: Alphabet,
    pub digit_count: usize,
    pub n_max: usize,
    pub window: (usize, usize),
    /// Externally known irrationality exponent (or upper bound), if any.
    pub mu_hint: Option<BigRational>,
}

impl VerificationCase {
    /// Short identifier used in report file names.
    pub fn id(&self) -> String {
        format!(
            "{}-b{}-n{}",
            self.spec.canonical_id(),
            self.base.size(),
            self.digit_count
        )
    }

    pub fn validate(&self) -> Result<(), VerifyError> {
        let invalid = |msg: String| {
            Err(VerifyError::InvalidCase {
                case: self.id(),
                msg,
            })
        };
        if self.n_max >= self.digit_count {
            return invalid(format!(
                "n_max ({}) must be below the digit count ({})",
                self.n_max, self.digit_count
            ));
        }
        if self.n_max < 1 {
            return invalid("n_max must be >= 1".into());
        }
        let (lo, hi) = self.window;
        if lo < 1 || lo > hi || hi > self.n_max {
            return invalid(format!(
                "window [{lo}, {hi}] must satisfy 1 <= lo <= hi <= n_max ({})",
                self.n_max
            ));
        }
        self.spec.validate().map_err(|e| VerifyError::Expansion {
            case: self.id(),
            source: e,
        })?;
        Ok(())
    }
}

#[derive(Serialize, Deserialize)]
struct CaseDto {
    #[serde(rename = "const")]
    spec: String,
    base: u32,
    digits: usize,
    n_max: usize,
    window: [usize; 2],
    #[serde(default, skip_serializing_if = "Option::is_none")]
    mu_hint: Option<String>,
}

impl Serialize for VerificationCase {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        CaseDto {
            spec: self.spec.canonical_id(),
            base: self.base.size(),
            digits: self.digit_count,
            n_max: self.n_max,
            window: [self.window.0, self.window.1],
            mu_hint: self.mu_hint.as_ref().map(rational_to_string),
        }
        .serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for VerificationCase {
    fn deserialize<D: serde::Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        use serde::de::Error;
        let dto = CaseDto::deserialize(deserializer)?;
        let spec: ConstantSpec = dto.spec.parse().map_err(D::Error::custom)?;
        let base = Alphabet::new(dto.base).map_err(D::Error::custom)?;
        let mu_hint = dto
            .mu_hint
            .map(|s| parse_rational(&s))
            .transpose()
            .map_err(D::Error::custom)?;
        Ok(VerificationCase {
            spec,
            base,
            digit_count: dto.digits,
            n_max: dto.n_max,
            window: (dto.window[0], dto.window[1]),
            mu_hint,
        })
    }
}

/// Batch configuration: digit cache, precision cap, output directory, and
/// the case list.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct RunConfig {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub cache_dir: Option<PathBuf>,
    #[serde(default = "default_precision_cap")]
    pub precision_cap_bits: u32,
    pub output_dir: PathBuf,
    pub cases: Vec<VerificationCase>,
}

fn default_precision_cap() -> u32 {
    DEFAULT_PRECISION_CAP
}

impl RunConfig {
    pub fn validate(&self) -> Result<(), VerifyError> {
        if self.precision_cap_bits < (1 << 16) {
            return Err(VerifyError::InvalidConfig(format!(
                "precision cap must be at least 2^16 bits, got {}",
                self.precision_cap_bits
            )));
        }
        for case in &self.cases {
            case.validate()?;
        }
        Ok(())
    }

    pub fn from_json(text: &str) -> Result<Self, VerifyError> {
        let config: RunConfig =
            serde_json::from_str(text).map_err(|e| VerifyError::InvalidConfig(e.to_string()))?;
        config.validate()?;
        Ok(config)
    }

    pub fn from_json_file(path: &Path) -> Result<Self, VerifyError> {
        let text = fs::read_to_string(path).map_err(|e| VerifyError::Io(e.to_string()))?;
        Self::from_json(&text)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("config serializes")
    }
}
