//! Exact rational helpers shared across the crate: decimal rendering,
//! rational parsing, dyadic square-root enclosures, and natural-logarithm
//! enclosures with directed (outward) rounding.

use num::bigint::Sign;
use num::{BigInt, BigRational, One, Signed, Zero};

/// Working precision (bits) for logarithm enclosures.  Log ratios feed
/// exponent estimates rendered to 6 decimal places, so 128 bits leaves a
/// wide certified margin.
const LN_BITS: u32 = 128;
/// Mantissa truncation width used before the series evaluation, so that
/// arbitrarily large inputs cost the same.
const MANTISSA_BITS: u32 = 160;

pub fn ratio_of(num: u64, den: u64) -> BigRational {
    BigRational::new(BigInt::from(num), BigInt::from(den))
}

pub fn ratio_int(n: i64) -> BigRational {
    BigRational::from(BigInt::from(n))
}

pub fn pow2(exp: u32) -> BigInt {
    BigInt::one() << exp
}

pub fn floor_ratio(r: &BigRational) -> BigInt {
    r.floor().to_integer()
}

/// Renders a rational as `p/q` (or just `p` for integers).
pub fn rational_to_string(r: &BigRational) -> String {
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

/// Fixed-point decimal rendering with `places` fractional digits, rounding
/// half away from zero.
pub fn decimal_string(r: &BigRational, places: u32) -> String {
    let scale = BigInt::from(10u32).pow(places);
    let num = r.numer().magnitude() * scale.magnitude();
    let den = r.denom().magnitude().clone();
    let (mut q, rem) = num::Integer::div_rem(&num, &den);
    if &rem * 2u32 >= den {
        q += 1u32;
    }
    let scale = scale.magnitude();
    let int_part = &q / scale;
    let frac_part = &q % scale;
    let sign = if r.is_negative() && !q.is_zero() {
        "-"
    } else {
        ""
    };
    if places == 0 {
        format!("{sign}{int_part}")
    } else {
        format!(
            "{sign}{int_part}.{frac:0>width$}",
            frac = frac_part,
            width = places as usize
        )
    }
}

/// Parses `p/q`, an integer, or a plain decimal (`2.5`, `-0.125`) into an
/// exact rational.
pub fn parse_rational(text: &str) -> Result<BigRational, String> {
    let s = text.trim();
    if s.is_empty() {
        return Err("empty rational".into());
    }
    if let Some((num, den)) = s.split_once('/') {
        let n: BigInt = num
            .trim()
            .parse()
            .map_err(|_| format!("bad numerator in {s:?}"))?;
        let d: BigInt = den
            .trim()
            .parse()
            .map_err(|_| format!("bad denominator in {s:?}"))?;
        if d.is_zero() {
            return Err(format!("zero denominator in {s:?}"));
        }
        return Ok(BigRational::new(n, d));
    }
    if let Some((int, frac)) = s.split_once('.') {
        if frac.is_empty() || !frac.bytes().all(|b| b.is_ascii_digit()) {
            return Err(format!("bad decimal {s:?}"));
        }
        let negative = int.starts_with('-');
        let int_mag = int.trim_start_matches(['-', '+']);
        if !int_mag.is_empty() && !int_mag.bytes().all(|b| b.is_ascii_digit()) {
            return Err(format!("bad decimal {s:?}"));
        }
        let digits = format!("{}{}", if int_mag.is_empty() { "0" } else { int_mag }, frac);
        let n: BigInt = digits.parse().map_err(|_| format!("bad decimal {s:?}"))?;
        let d = BigInt::from(10u32).pow(frac.len() as u32);
        let r = BigRational::new(n, d);
        return Ok(if negative { -r } else { r });
    }
    s.parse::<BigInt>()
        .map(BigRational::from)
        .map_err(|_| format!("bad rational {s:?}"))
}

/// Rational enclosure of `sqrt(d)` of width at most `2^-bits`; exact (a
/// point interval) when `d` is a perfect square.
pub fn sqrt_enclosure(d: &BigInt, bits: u32) -> (BigRational, BigRational) {
    assert!(!d.is_negative(), "sqrt of a negative integer");
    let root = d.sqrt();
    if &root * &root == *d {
        let exact = BigRational::from(root);
        return (exact.clone(), exact);
    }
    let scaled = d << (2 * bits);
    let a = scaled.sqrt();
    let den = pow2(bits);
    (
        BigRational::new(a.clone(), den.clone()),
        BigRational::new(a + 1, den),
    )
}

/// Compares `x` with `2^e` (any sign of `e`).
fn cmp_pow2(x: &BigRational, e: i64) -> std::cmp::Ordering {
    // x >= 2^e  <=>  num >= den * 2^e
    let num = x.numer();
    let den = x.denom();
    if e >= 0 {
        num.cmp(&(den << e as u64))
    } else {
        (num << (-e) as u64).cmp(den)
    }
}

/// Largest `e` with `2^e <= x` (requires `x > 0`).
fn floor_log2(x: &BigRational) -> i64 {
    let mut e = x.numer().bits() as i64 - x.denom().bits() as i64;
    while cmp_pow2(x, e) == std::cmp::Ordering::Less {
        e -= 1;
    }
    while cmp_pow2(x, e + 1) != std::cmp::Ordering::Less {
        e += 1;
    }
    e
}

/// Enclosure of `ln y` for rational `y` in `[1, 2]`, via the series
/// `ln y = 2 * atanh((y-1)/(y+1))` whose argument lies in `[0, 1/3]`.
/// The tail after `J` terms is at most `t^(2J+3) / ((2J+3)(1-t^2))`.
///
/// Terms are accumulated in dyadic fixed point at `bits + 48` fractional
/// bits with directed rounding on both sides, so the cost per term stays
/// constant regardless of the size of `y`'s numerator and denominator.
fn ln_mantissa(y: &BigRational, bits: u32) -> (BigRational, BigRational) {
    use num::Integer;
    if y.is_one() {
        return (BigRational::zero(), BigRational::zero());
    }
    let fbits = bits + 48;
    let scale = pow2(fbits);
    let t_num = y.numer() - y.denom();
    let t_den = y.numer() + y.denom();
    let t2_num = &t_num * &t_num;
    let t2_den = &t_den * &t_den;
    let t2_gap = &t2_den - &t2_num;
    // p_lo/scale <= t^(2j+1) <= p_hi/scale, maintained by directed rounding
    let mut p_lo = (&t_num * &scale).div_floor(&t_den);
    let mut p_hi = &p_lo + BigInt::one();
    let mut sum_lo = BigInt::zero();
    let mut sum_hi = BigInt::zero();
    let threshold = pow2(fbits - bits - 2);
    let mut j: u64 = 0;
    loop {
        let odd = BigInt::from(2 * j + 1);
        sum_lo += p_lo.div_floor(&odd);
        sum_hi += p_hi.div_ceil(&odd);
        p_lo = (&p_lo * &t2_num).div_floor(&t2_den);
        p_hi = (&p_hi * &t2_num).div_ceil(&t2_den);
        j += 1;
        let tail_hi = (&p_hi * &t2_den).div_ceil(&(BigInt::from(2 * j + 1) * &t2_gap));
        if tail_hi <= threshold {
            let two = BigInt::from(2);
            return (
                BigRational::new(&two * sum_lo, scale.clone()),
                BigRational::new(&two * (sum_hi + tail_hi), scale),
            );
        }
    }
}

fn ln2(bits: u32) -> (BigRational, BigRational) {
    ln_mantissa(&ratio_of(2, 1), bits)
}

/// Enclosure of `ln x` for `x > 0` with directed rounding at 128-bit
/// working precision.  Inputs of any size are reduced to `x = 2^e * y`
/// with a truncated mantissa `y` in `[1, 2)`.
pub fn ln_enclosure(x: &BigRational) -> (BigRational, BigRational) {
    assert!(x.is_positive(), "ln of a non-positive value");
    if x.is_one() {
        return (BigRational::zero(), BigRational::zero());
    }
    let e = floor_log2(x);
    let y = if e >= 0 {
        x / BigRational::from(BigInt::one() << e as u64)
    } else {
        x * BigRational::from(BigInt::one() << (-e) as u64)
    };
    // y in [1, 2): truncate to MANTISSA_BITS so the series argument stays
    // small no matter how large x is
    let scale = pow2(MANTISSA_BITS);
    let a = floor_ratio(&(&y * BigRational::from(scale.clone())));
    let y_lo = BigRational::new(a.clone(), scale.clone());
    let y_hi = BigRational::new(a + 1, scale);
    let (lo_y, _) = ln_mantissa(&y_lo, LN_BITS + 16);
    let (_, hi_y) = ln_mantissa(&y_hi, LN_BITS + 16);
    let (lo2, hi2) = ln2(LN_BITS + 16);
    let e_r = BigRational::from(BigInt::from(e));
    if e >= 0 {
        (&e_r * lo2 + lo_y, &e_r * hi2 + hi_y)
    } else {
        (&e_r * hi2 + lo_y, &e_r * lo2 + hi_y)
    }
}

/// Outward-rounded enclosure of `ln a / ln b` for `a, b > 1`.
pub fn ln_ratio_enclosure(a: &BigRational, b: &BigRational) -> (BigRational, BigRational) {
    let (la_lo, la_hi) = ln_enclosure(a);
    let (lb_lo, lb_hi) = ln_enclosure(b);
    assert!(lb_lo.is_positive(), "ln ratio needs b > 1");
    (la_lo / lb_hi, la_hi / lb_lo)
}

/// `x` as `m^k` with `k` maximal (`k = 1` when `x` is not a perfect power).
pub fn primitive_power_root(x: &BigInt) -> (BigInt, u32) {
    assert!(x.sign() == Sign::Plus && x > &BigInt::one());
    let max_k = x.bits() as u32;
    for k in (2..=max_k).rev() {
        let root = x.nth_root(k);
        if root.pow(k) == *x {
            return (root, k);
        }
    }
    (x.clone(), 1)
}
