//! Certified digit generation: every emitted digit is pinned by a rational
//! enclosure `[lo, hi]` of the constant with `floor(lo * b^N) =
//! floor(hi * b^N)`, so the digit prefix is invariant under any refinement
//! of the enclosure.  Working precision doubles on certification failure,
//! up to a configurable cap.

use num::{BigInt, BigRational, BigUint, Integer, One};

use super::enclose::{certificate_name, enclose};
use super::families::{fibonacci_prefix, mechanical_prefix};
use super::quad::Quad;
use super::spec::ConstantSpec;
use super::ExpansionError;
use crate::words::{Alphabet, SymbolWord};

/// Default cap on the working precision (bits).
pub const DEFAULT_PRECISION_CAP: u32 = 1 << 20;

/// Describes how a digit prefix was certified.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Certificate {
    /// Name of the analytic tail bound used by the enclosure.
    pub tail_bound: String,
    /// Working precision (bits) at which certification succeeded.
    pub precision_bits: u32,
}

/// A proven-correct digit prefix of a constant in a given base.
#[derive(Debug, Clone, PartialEq)]
pub struct CertifiedDigits {
    pub spec: ConstantSpec,
    /// Certified integer part of the constant.
    pub int_part: BigInt,
    /// Fractional-part digits `a_1 a_2 ... a_count`.
    pub digits: SymbolWord,
    pub certificate: Certificate,
}

impl CertifiedDigits {
    pub fn base(&self) -> Alphabet {
        self.digits.alphabet()
    }

    pub fn count(&self) -> usize {
        self.digits.len()
    }

    /// The rational enclosure implied by the digits: the constant lies in
    /// `[int + D/b^N, int + (D+1)/b^N]` where `D` is the digit value.
    pub fn enclosure(&self) -> (BigRational, BigRational) {
        let base = self.base().size();
        let n = self.count() as u32;
        let value = BigUint::from_radix_be(self.digits.symbols(), base).expect("digits below base");
        let scale = BigInt::from(base).pow(n);
        let lo = BigRational::from(self.int_part.clone())
            + BigRational::new(BigInt::from(value), scale.clone());
        let hi = &lo + BigRational::new(BigInt::one(), scale);
        (lo, hi)
    }

    /// A shorter certified prefix of the same expansion.
    pub fn truncated(&self, count: usize) -> CertifiedDigits {
        assert!(count <= self.count());
        CertifiedDigits {
            spec: self.spec.clone(),
            int_part: self.int_part.clone(),
            digits: self.digits.prefix(count),
            certificate: self.certificate.clone(),
        }
    }
}

fn initial_bits(base: u32, count: usize) -> u32 {
    let digit_bits = (count as f64 * (base as f64).log2()).ceil() as u32;
    digit_bits + 32
}

/// Generates `count` certified fractional digits of `spec` in `base`,
/// escalating the working precision up to `cap_bits`.
pub fn generate_digits_capped(
    spec: &ConstantSpec,
    base: Alphabet,
    count: usize,
    cap_bits: u32,
) -> Result<CertifiedDigits, ExpansionError> {
    spec.validate()?;
    if count == 0 {
        return Err(ExpansionError::InvalidSpec(
            "digit count must be >= 1".into(),
        ));
    }
    let scale = BigInt::from(base.size()).pow(count as u32);
    let scale_r = BigRational::from(scale.clone());
    let mut bits = initial_bits(base.size(), count).min(cap_bits);
    loop {
        let (lo, hi) = enclose(spec, bits)?;
        let m_lo = (lo * &scale_r).floor().to_integer();
        let m_hi = (hi * &scale_r).floor().to_integer();
        if m_lo == m_hi {
            let (int_part, frac) = m_lo.div_mod_floor(&scale);
            let frac = frac.to_biguint().expect("mod_floor is non-negative");
            let mut symbols = frac.to_radix_be(base.size());
            while symbols.len() < count {
                symbols.insert(0, 0);
            }
            let digits = SymbolWord::from_symbols(base, symbols)?;
            return Ok(CertifiedDigits {
                spec: spec.clone(),
                int_part,
                digits,
                certificate: Certificate {
                    tail_bound: certificate_name(spec).to_string(),
                    precision_bits: bits,
                },
            });
        }
        if bits >= cap_bits {
            return Err(ExpansionError::PrecisionExhausted { bits: cap_bits });
        }
        bits = bits.saturating_mul(2).min(cap_bits);
    }
}

/// [`generate_digits_capped`] with the default precision cap.
pub fn generate_digits(
    spec: &ConstantSpec,
    base: Alphabet,
    count: usize,
) -> Result<CertifiedDigits, ExpansionError> {
    generate_digits_capped(spec, base, count, DEFAULT_PRECISION_CAP)
}

/// Certified integer part of the constant.
pub fn certify_integer_part(spec: &ConstantSpec, cap_bits: u32) -> Result<BigInt, ExpansionError> {
    spec.validate()?;
    let mut bits = 32u32.min(cap_bits);
    loop {
        let (lo, hi) = enclose(spec, bits)?;
        let f_lo = lo.floor().to_integer();
        let f_hi = hi.floor().to_integer();
        if f_lo == f_hi {
            return Ok(f_lo);
        }
        if bits >= cap_bits {
            return Err(ExpansionError::PrecisionExhausted { bits: cap_bits });
        }
        bits = bits.saturating_mul(2).min(cap_bits);
    }
}

/// Generates a prefix of a symbolic word family (Fibonacci or mechanical);
/// other recipes are numbers, not words.
pub fn generate_word(spec: &ConstantSpec, length: usize) -> Result<SymbolWord, ExpansionError> {
    spec.validate()?;
    if length == 0 {
        return Err(ExpansionError::InvalidSpec(
            "word length must be >= 1".into(),
        ));
    }
    let binary = Alphabet::binary();
    match spec {
        ConstantSpec::FibonacciWord => {
            Ok(SymbolWord::from_symbols(binary, fibonacci_prefix(length))?)
        }
        ConstantSpec::Sturmian { theta, rho } => Ok(SymbolWord::from_symbols(
            binary,
            mechanical_prefix(theta, rho, length)?,
        )?),
        other => Err(ExpansionError::InvalidSpec(format!(
            "{other} is a number recipe, not a word family"
        ))),
    }
}

/// `floor(mu^k)` for `k = 1..=count`; exact for rational `mu`, certified
/// surd floors otherwise.
pub fn lacunary_positions(mu: &Quad, count: usize) -> Result<Vec<BigInt>, ExpansionError> {
    let two = Quad::from_int(2);
    if mu.cmp_exact(&two)? == std::cmp::Ordering::Less {
        return Err(ExpansionError::InvalidSpec(format!(
            "lacunary exponent needs mu >= 2, got {mu}"
        )));
    }
    let mut positions = Vec::with_capacity(count);
    let mut power = mu.clone();
    for _ in 0..count {
        positions.push(power.floor().map_err(|e| match e {
            super::quad::QuadError::FloorPrecision => {
                ExpansionError::PrecisionExhausted { bits: 1 << 20 }
            }
            other => ExpansionError::Quad(other),
        })?);
        power = power.mul(mu)?;
    }
    Ok(positions)
}
