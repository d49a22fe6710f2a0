//! Rational interval enclosures of the supported constants, with
//! analytically bounded series tails.  Every enclosure `[lo, hi]` satisfies
//! `lo <= value <= hi` and `hi - lo <= 2^-bits`.

use num::{BigInt, BigRational, BigUint, One, Zero};

use super::families::{
    champernowne_prefix, fibonacci_prefix, lacunary_exponents_up_to, mechanical_prefix,
};
use super::spec::ConstantSpec;
use super::ExpansionError;
use crate::numeric::{pow2, sqrt_enclosure};

type Enclosure = (BigRational, BigRational);

fn eps(bits: u32) -> BigRational {
    BigRational::new(BigInt::one(), pow2(bits))
}

/// Name of the tail bound backing each kind's certificate.
pub(crate) fn certificate_name(spec: &ConstantSpec) -> &'static str {
    match spec {
        ConstantSpec::E => "factorial-series",
        ConstantSpec::Log1p { .. } => "atanh-series",
        ConstantSpec::ArcsinForm { .. } => "arcsin-series",
        ConstantSpec::Sqrt { .. } => "dyadic-sqrt",
        ConstantSpec::KmosekShallit | ConstantSpec::Lacunary { .. } => "lacunary-tail",
        ConstantSpec::Champernowne { .. }
        | ConstantSpec::FibonacciWord
        | ConstantSpec::Sturmian { .. } => "digit-prefix",
    }
}

/// Enclosure of the constant with width at most `2^-bits`.
pub(crate) fn enclose(spec: &ConstantSpec, bits: u32) -> Result<Enclosure, ExpansionError> {
    match spec {
        ConstantSpec::E => Ok(enclose_e(bits)),
        ConstantSpec::Log1p { s, t } => Ok(enclose_log1p(*s, *t, bits)),
        ConstantSpec::ArcsinForm { s, t } => Ok(enclose_arcsin_form(*s, *t, bits)),
        ConstantSpec::Sqrt { d } => Ok(sqrt_enclosure(&BigInt::from(*d), bits)),
        ConstantSpec::KmosekShallit => Ok(enclose_kmosek_shallit(bits)),
        ConstantSpec::Lacunary { series_base, mu } => enclose_lacunary(*series_base, mu, bits),
        ConstantSpec::Champernowne { base } => Ok(enclose_digit_prefix(
            *base,
            champernowne_prefix(*base, bits as usize + 1),
        )),
        ConstantSpec::FibonacciWord => {
            Ok(enclose_digit_prefix(2, fibonacci_prefix(bits as usize + 1)))
        }
        ConstantSpec::Sturmian { theta, rho } => Ok(enclose_digit_prefix(
            2,
            mechanical_prefix(theta, rho, bits as usize + 1)?,
        )),
    }
}

/// `e = sum 1/k!` with tail `sum_{k>K} 1/k! < 2/(K+1)!`.
fn enclose_e(bits: u32) -> Enclosure {
    let target = eps(bits + 1);
    // running sum as N_K / K! with N_K = N_{K-1} * K + 1
    let mut numer = BigInt::one();
    let mut fact = BigInt::one();
    let mut k: u64 = 0;
    loop {
        k += 1;
        numer = numer * BigInt::from(k) + 1;
        fact *= BigInt::from(k);
        let tail = BigRational::new(BigInt::from(2), &fact * BigInt::from(k + 1));
        if tail <= target {
            let lo = BigRational::new(numer, fact);
            let hi = &lo + tail;
            return (lo, hi);
        }
    }
}

/// `log(1 + s/t) = 2 atanh(y)` with `y = s / (2t + s)`; the tail after the
/// `J`-th odd power is below `2 y^(2J+3) / ((2J+3)(1 - y^2))`.
fn enclose_log1p(s: u64, t: u64, bits: u32) -> Enclosure {
    let y = BigRational::new(BigInt::from(s), BigInt::from(2 * t + s));
    let y2 = &y * &y;
    let one = BigRational::one();
    let target = eps(bits + 1);
    let mut sum = BigRational::zero();
    let mut power = y.clone();
    let mut j: u64 = 0;
    loop {
        sum += &power / BigRational::from(BigInt::from(2 * j + 1));
        power *= &y2;
        j += 1;
        let tail = &power * BigRational::from(BigInt::from(2))
            / (BigRational::from(BigInt::from(2 * j + 1)) * (&one - &y2));
        if tail <= target {
            let lo = &sum * BigRational::from(BigInt::from(2));
            return (lo.clone(), lo + tail);
        }
    }
}

/// `arcsin(x) = sum_j C(2j,j) x^(2j+1) / (4^j (2j+1))` for `x = s/t`; since
/// `C(2j,j)/4^j <= 1` the tail after `J` is below `x^(2J+3)/(1-x^2)`.  The
/// series enclosure is then multiplied by a dyadic enclosure of
/// `sqrt(t^2 - s^2)`.
fn enclose_arcsin_form(s: u64, t: u64, bits: u32) -> Enclosure {
    let x = BigRational::new(BigInt::from(s), BigInt::from(t));
    let x2 = &x * &x;
    let one = BigRational::one();
    // arcsin factor below 2, sqrt factor below t: split the error budget
    let asin_target = eps(bits + 2) / BigRational::from(BigInt::from(t));
    let mut sum = BigRational::zero();
    let mut central = BigRational::one(); // C(2j,j) / 4^j
    let mut power = x.clone(); // x^(2j+1)
    let mut j: u64 = 0;
    let (asin_lo, asin_hi) = loop {
        sum += &central * &power / BigRational::from(BigInt::from(2 * j + 1));
        central *= BigRational::new(BigInt::from(2 * j + 1), BigInt::from(2 * j + 2));
        power *= &x2;
        j += 1;
        let tail = &power / (&one - &x2);
        if tail <= asin_target {
            break (sum.clone(), sum + tail);
        }
    };
    let d = BigInt::from(t * t - s * s);
    let (sqrt_lo, sqrt_hi) = sqrt_enclosure(&d, bits + 4);
    (sqrt_lo * asin_lo, sqrt_hi * asin_hi)
}

/// `sum_{k>=1} 2^(-2^k)`; the tail after `K` terms is below `2^(1 - 2^(K+1))`.
fn enclose_kmosek_shallit(bits: u32) -> Enclosure {
    let mut sum = BigRational::zero();
    let mut exp: u32 = 2;
    // positions 2^k grow past the precision target quickly
    while exp <= bits + 2 {
        sum += BigRational::new(BigInt::one(), pow2(exp));
        exp = exp.saturating_mul(2);
    }
    let tail = BigRational::new(BigInt::from(2), pow2(exp));
    let hi = &sum + tail;
    (sum, hi)
}

/// `sum_{k>=1} B^(-floor(mu^k))`; exponents strictly increase, so the tail
/// from the first omitted exponent `E` is below `B^(-E) * B/(B-1)`.
fn enclose_lacunary(
    base: u32,
    mu: &super::quad::Quad,
    bits: u32,
) -> Result<Enclosure, ExpansionError> {
    // B^-P <= 2^-P, so P = bits + 2 suffices for any base >= 2
    let limit = BigInt::from(bits + 2);
    let (exponents, next) = lacunary_exponents_up_to(mu, &limit)?;
    let b = BigInt::from(base);
    let mut sum = BigRational::zero();
    for e in &exponents {
        let e: u32 = e.try_into().expect("exponent within precision limit");
        sum += BigRational::new(BigInt::one(), b.pow(e));
    }
    // cap the tail exponent so the bound stays cheap even for huge jumps
    let tail_exp: u32 = next.try_into().unwrap_or(bits + 3).min(bits + 3);
    let tail = BigRational::new(b.clone(), b.pow(tail_exp) * BigInt::from(base - 1));
    let hi = &sum + tail;
    Ok((sum, hi))
}

/// Value of a word prefix read as base-`base` fractional digits; the
/// unread tail contributes at most `base^-len`.
fn enclose_digit_prefix(base: u32, digits: Vec<u8>) -> Enclosure {
    let len = digits.len();
    let value = BigUint::from_radix_be(&digits, base).expect("digits below base");
    let scale = BigInt::from(base).pow(len as u32);
    let lo = BigRational::new(BigInt::from(value), scale.clone());
    let hi = &lo + BigRational::new(BigInt::one(), scale);
    (lo, hi)
}
