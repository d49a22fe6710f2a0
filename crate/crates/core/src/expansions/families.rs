//! Symbolic word families: the Fibonacci substitution fixed point,
//! mechanical (Sturmian) words with exact surd floors, base-`b`
//! Champernowne digit streams, and lacunary exponent sequences.

use num::BigInt;

use super::quad::{Quad, QuadError};
use super::ExpansionError;

/// Prefix of the fixed point of `0 -> 01`, `1 -> 0`.
pub(crate) fn fibonacci_prefix(len: usize) -> Vec<u8> {
    let mut word = vec![0u8];
    while word.len() < len {
        let mut next = Vec::with_capacity(2 * word.len());
        for &c in &word {
            if c == 0 {
                next.push(0);
                next.push(1);
            } else {
                next.push(0);
            }
        }
        word = next;
    }
    word.truncate(len);
    word
}

fn floor_err(e: QuadError) -> ExpansionError {
    match e {
        QuadError::FloorPrecision => ExpansionError::PrecisionExhausted { bits: 1 << 20 },
        other => ExpansionError::Quad(other),
    }
}

/// Mechanical word `s_k = floor((k+1)theta + rho) - floor(k theta + rho)`
/// for `k = 1..=len`, with every floor certified by exact surd arithmetic.
pub(crate) fn mechanical_prefix(
    theta: &Quad,
    rho: &Quad,
    len: usize,
) -> Result<Vec<u8>, ExpansionError> {
    let mut symbols = Vec::with_capacity(len);
    let mut prev = theta
        .mul(&Quad::from_int(1))?
        .add(rho)?
        .floor()
        .map_err(floor_err)?;
    for k in 1..=len as i64 {
        let next = theta
            .mul(&Quad::from_int(k + 1))?
            .add(rho)?
            .floor()
            .map_err(floor_err)?;
        let step = &next - &prev;
        let symbol = if step == BigInt::from(0) {
            0u8
        } else if step == BigInt::from(1) {
            1u8
        } else {
            return Err(ExpansionError::InvalidSpec(format!(
                "mechanical step {step} is not a binary symbol"
            )));
        };
        symbols.push(symbol);
        prev = next;
    }
    Ok(symbols)
}

/// First `len` digits of the base-`base` Champernowne stream
/// (the counting numbers written out in base `base` and concatenated).
pub(crate) fn champernowne_prefix(base: u32, len: usize) -> Vec<u8> {
    let mut digits = Vec::with_capacity(len);
    let mut counter: u64 = 1;
    let mut scratch = Vec::new();
    while digits.len() < len {
        scratch.clear();
        let mut n = counter;
        while n > 0 {
            scratch.push((n % base as u64) as u8);
            n /= base as u64;
        }
        digits.extend(scratch.iter().rev());
        counter += 1;
    }
    digits.truncate(len);
    digits
}

/// Exponents `floor(mu^k)` for `k = 1, 2, ...` while they stay `<= limit`;
/// also returns the first exponent exceeding the limit (for tail bounds).
pub(crate) fn lacunary_exponents_up_to(
    mu: &Quad,
    limit: &BigInt,
) -> Result<(Vec<BigInt>, BigInt), ExpansionError> {
    let mut exponents = Vec::new();
    let mut power = mu.clone();
    loop {
        let e = power.floor().map_err(floor_err)?;
        if &e > limit {
            return Ok((exponents, e));
        }
        exponents.push(e);
        power = power.mul(mu)?;
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn fibonacci_prefixes() {
        assert_eq!(fibonacci_prefix(2), vec![0, 1]);
        assert_eq!(fibonacci_prefix(8), vec![0, 1, 0, 0, 1, 0, 1, 0]);
    }

    #[test]
    fn champernowne_base10() {
        assert_eq!(
            champernowne_prefix(10, 12),
            vec![1, 2, 3, 4, 5, 6, 7, 8, 9, 1, 0, 1]
        );
    }

    #[test]
    fn champernowne_base2() {
        // 1 10 11 100 101 ...
        assert_eq!(champernowne_prefix(2, 9), vec![1, 1, 0, 1, 1, 1, 0, 0, 1]);
    }

    #[test]
    fn mechanical_golden_slope() {
        let theta: Quad = "(sqrt(5)-1)/2".parse().unwrap();
        let rho = Quad::from_int(0);
        let w = mechanical_prefix(&theta, &rho, 8).unwrap();
        assert_eq!(w, vec![1, 0, 1, 1, 0, 1, 0, 1]);
    }

    #[test]
    fn lacunary_exponent_sequences() {
        let two = Quad::from_int(2);
        let (e, next) = lacunary_exponents_up_to(&two, &BigInt::from(16)).unwrap();
        assert_eq!(
            e,
            vec![2, 4, 8, 16]
                .into_iter()
                .map(BigInt::from)
                .collect::<Vec<_>>()
        );
        assert_eq!(next, BigInt::from(32));

        let mu: Quad = "5/2".parse().unwrap();
        let (e, _) = lacunary_exponents_up_to(&mu, &BigInt::from(40)).unwrap();
        assert_eq!(
            e,
            vec![2, 6, 15, 39]
                .into_iter()
                .map(BigInt::from)
                .collect::<Vec<_>>()
        );
    }
}
