//! Exact arithmetic in a real quadratic field: values `a + b*sqrt(d)` with
//! rational `a`, `b` and squarefree `d`.  Comparisons, floors, and powers
//! are exact; no floating point is involved anywhere.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use num::{BigInt, BigRational, One, Signed, Zero};
use thiserror::Error;

use crate::numeric::{parse_rational, rational_to_string, sqrt_enclosure};

#[derive(Debug, Error, PartialEq, Eq)]
pub enum QuadError {
    #[error("values lie in different quadratic fields (sqrt({0}) vs sqrt({1}))")]
    IncompatibleRoots(u64, u64),
    #[error("cannot parse quadratic value: {0}")]
    Parse(String),
    #[error("floor could not be certified at maximum precision")]
    FloorPrecision,
}

/// `rat + coeff * sqrt(root)`, with `root` squarefree and `>= 2` whenever
/// `coeff != 0` (purely rational values carry `root = 0`).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Quad {
    rat: BigRational,
    coeff: BigRational,
    root: u64,
}

/// Splits `n = s^2 * f` with `f` squarefree; returns `(s, f)`.
fn squarefree_split(mut n: u64) -> (u64, u64) {
    let mut square = 1u64;
    let mut free = 1u64;
    let mut p = 2u64;
    while p * p <= n {
        let mut e = 0;
        while n.is_multiple_of(p) {
            n /= p;
            e += 1;
        }
        square *= p.pow(e / 2);
        if e % 2 == 1 {
            free *= p;
        }
        p += 1;
    }
    if n > 1 {
        free *= n;
    }
    (square, free)
}

impl Quad {
    pub fn from_rational(rat: BigRational) -> Self {
        Quad {
            rat,
            coeff: BigRational::zero(),
            root: 0,
        }
    }

    pub fn from_int(n: i64) -> Self {
        Quad::from_rational(BigRational::from(BigInt::from(n)))
    }

    /// Builds `rat + coeff * sqrt(root)`, normalizing the radicand to its
    /// squarefree part and folding perfect squares into the rational part.
    pub fn new(rat: BigRational, coeff: BigRational, root: u64) -> Self {
        if coeff.is_zero() || root == 0 {
            return Quad::from_rational(rat);
        }
        let (square, free) = squarefree_split(root);
        let coeff = coeff * BigRational::from(BigInt::from(square));
        if free == 1 {
            return Quad::from_rational(rat + coeff);
        }
        Quad {
            rat,
            coeff,
            root: free,
        }
    }

    pub fn is_rational(&self) -> bool {
        self.coeff.is_zero()
    }

    pub fn as_rational(&self) -> Option<&BigRational> {
        self.is_rational().then_some(&self.rat)
    }

    pub fn is_zero(&self) -> bool {
        self.rat.is_zero() && self.coeff.is_zero()
    }

    fn common_root(&self, other: &Quad) -> Result<u64, QuadError> {
        match (self.root, other.root) {
            (0, r) | (r, 0) => Ok(r),
            (a, b) if a == b => Ok(a),
            (a, b) => Err(QuadError::IncompatibleRoots(a, b)),
        }
    }

    pub fn add(&self, other: &Quad) -> Result<Quad, QuadError> {
        let root = self.common_root(other)?;
        Ok(Quad::new(
            &self.rat + &other.rat,
            &self.coeff + &other.coeff,
            root,
        ))
    }

    pub fn sub(&self, other: &Quad) -> Result<Quad, QuadError> {
        let root = self.common_root(other)?;
        Ok(Quad::new(
            &self.rat - &other.rat,
            &self.coeff - &other.coeff,
            root,
        ))
    }

    pub fn mul(&self, other: &Quad) -> Result<Quad, QuadError> {
        let root = self.common_root(other)?;
        let d = BigRational::from(BigInt::from(root));
        Ok(Quad::new(
            &self.rat * &other.rat + &self.coeff * &other.coeff * d,
            &self.rat * &other.coeff + &self.coeff * &other.rat,
            root,
        ))
    }

    pub fn mul_rational(&self, r: &BigRational) -> Quad {
        Quad::new(&self.rat * r, &self.coeff * r, self.root)
    }

    pub fn add_int(&self, n: i64) -> Quad {
        Quad::new(
            &self.rat + BigRational::from(BigInt::from(n)),
            self.coeff.clone(),
            self.root,
        )
    }

    pub fn pow(&self, exp: u32) -> Quad {
        let mut result = Quad::from_int(1);
        let mut base = self.clone();
        let mut e = exp;
        while e > 0 {
            if e & 1 == 1 {
                result = result.mul(&base).expect("same field");
            }
            base = base.mul(&base).expect("same field");
            e >>= 1;
        }
        result
    }

    /// Exact sign of `rat + coeff * sqrt(root)`.
    pub fn sign(&self) -> Ordering {
        if self.coeff.is_zero() {
            return self.rat.cmp(&BigRational::zero());
        }
        if self.rat.is_zero() {
            return self.coeff.cmp(&BigRational::zero());
        }
        let rat_pos = self.rat.is_positive();
        let coeff_pos = self.coeff.is_positive();
        if rat_pos && coeff_pos {
            return Ordering::Greater;
        }
        if !rat_pos && !coeff_pos {
            return Ordering::Less;
        }
        // mixed signs: compare rat^2 with coeff^2 * d; the sign of the
        // larger magnitude side wins (equality is impossible, d squarefree)
        let lhs = &self.rat * &self.rat;
        let rhs = &self.coeff * &self.coeff * BigRational::from(BigInt::from(self.root));
        match lhs.cmp(&rhs) {
            Ordering::Greater => self.rat.cmp(&BigRational::zero()),
            _ => self.coeff.cmp(&BigRational::zero()),
        }
    }

    pub fn cmp_exact(&self, other: &Quad) -> Result<Ordering, QuadError> {
        Ok(self.sub(other)?.sign())
    }

    /// Exact floor.  Rational values floor directly; irrational values are
    /// bracketed by dyadic square-root enclosures, refined until both ends
    /// agree (which always happens, the value not being an integer).
    pub fn floor(&self) -> Result<BigInt, QuadError> {
        if self.is_rational() {
            return Ok(self.rat.floor().to_integer());
        }
        let d = BigInt::from(self.root);
        let mut bits = 32u32;
        while bits <= 1 << 20 {
            let (lo_s, hi_s) = sqrt_enclosure(&d, bits);
            let (lo, hi) = if self.coeff.is_positive() {
                (
                    &self.rat + &self.coeff * lo_s,
                    &self.rat + &self.coeff * hi_s,
                )
            } else {
                (
                    &self.rat + &self.coeff * hi_s,
                    &self.rat + &self.coeff * lo_s,
                )
            };
            let f_lo = lo.floor().to_integer();
            let f_hi = hi.floor().to_integer();
            if f_lo == f_hi {
                return Ok(f_lo);
            }
            bits *= 2;
        }
        Err(QuadError::FloorPrecision)
    }

    /// Rational enclosure of width at most `2^-bits`.
    pub fn enclosure(&self, bits: u32) -> (BigRational, BigRational) {
        if self.is_rational() {
            return (self.rat.clone(), self.rat.clone());
        }
        // widen the sqrt precision by the coefficient magnitude
        let extra =
            (self.coeff.numer().bits() as u32).saturating_sub(self.coeff.denom().bits() as u32);
        let (lo_s, hi_s) = sqrt_enclosure(&BigInt::from(self.root), bits + extra + 2);
        if self.coeff.is_positive() {
            (
                &self.rat + &self.coeff * lo_s,
                &self.rat + &self.coeff * hi_s,
            )
        } else {
            (
                &self.rat + &self.coeff * hi_s,
                &self.rat + &self.coeff * lo_s,
            )
        }
    }

    /// Approximate value for diagnostics only.
    pub fn to_f64(&self) -> Option<f64> {
        let (lo, _) = self.enclosure(80);
        let num = lo.numer();
        let den = lo.denom();
        let shift = num.bits().max(den.bits()).saturating_sub(60);
        let n = (num >> shift).to_string().parse::<f64>().ok()?;
        let d = (den >> shift).to_string().parse::<f64>().ok()?;
        Some(n / d)
    }
}

impl fmt::Display for Quad {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_rational() {
            return f.write_str(&rational_to_string(&self.rat));
        }
        let coeff_mag = self.coeff.abs();
        let surd = if coeff_mag.is_one() {
            format!("sqrt({})", self.root)
        } else {
            format!("{}*sqrt({})", rational_to_string(&coeff_mag), self.root)
        };
        if self.rat.is_zero() {
            if self.coeff.is_negative() {
                return write!(f, "-{surd}");
            }
            return f.write_str(&surd);
        }
        let join = if self.coeff.is_negative() { '-' } else { '+' };
        write!(f, "{}{}{}", rational_to_string(&self.rat), join, surd)
    }
}

fn parse_uint(s: &str) -> Result<u64, QuadError> {
    s.parse::<u64>()
        .map_err(|_| QuadError::Parse(format!("bad integer {s:?}")))
}

/// One additive term: an optional rational coefficient times an optional
/// `sqrt(d)` literal.
fn parse_term(term: &str) -> Result<Quad, QuadError> {
    let (negative, body) = match term.strip_prefix('-') {
        Some(rest) => (true, rest),
        None => (false, term.strip_prefix('+').unwrap_or(term)),
    };
    let quad = if let Some(idx) = body.find("sqrt(") {
        let inner = body[idx + 5..]
            .strip_suffix(')')
            .ok_or_else(|| QuadError::Parse(format!("unclosed sqrt in {term:?}")))?;
        let d = parse_uint(inner)?;
        let coeff = if idx == 0 {
            BigRational::one()
        } else {
            let coeff_str = body[..idx]
                .strip_suffix('*')
                .ok_or_else(|| QuadError::Parse(format!("expected '*' before sqrt in {term:?}")))?;
            parse_rational(coeff_str).map_err(QuadError::Parse)?
        };
        Quad::new(BigRational::zero(), coeff, d)
    } else {
        Quad::from_rational(parse_rational(body).map_err(QuadError::Parse)?)
    };
    Ok(if negative {
        quad.mul_rational(&-BigRational::one())
    } else {
        quad
    })
}

/// Splits a sum at top-level `+`/`-` signs (never inside parentheses, never
/// at the leading sign position).
fn split_terms(s: &str) -> Vec<&str> {
    let mut parts = Vec::new();
    let mut depth = 0usize;
    let mut start = 0usize;
    for (i, c) in s.char_indices() {
        match c {
            '(' => depth += 1,
            ')' => depth = depth.saturating_sub(1),
            '+' | '-' if depth == 0 && i > start => {
                // a sign right after '/' or '*' belongs to the literal
                let prev = s.as_bytes()[i - 1];
                if prev != b'/' && prev != b'*' {
                    parts.push(&s[start..i]);
                    start = i;
                }
            }
            _ => {}
        }
    }
    parts.push(&s[start..]);
    parts
}

impl FromStr for Quad {
    type Err = QuadError;

    /// Accepts rationals (`3`, `5/2`, `2.5`), surds (`sqrt(5)`,
    /// `3/2*sqrt(2)`), sums (`1+sqrt(5)`), and scaled sums
    /// (`(sqrt(5)-1)/2`).
    fn from_str(text: &str) -> Result<Self, Self::Err> {
        let s: String = text.chars().filter(|c| !c.is_whitespace()).collect();
        if s.is_empty() {
            return Err(QuadError::Parse("empty value".into()));
        }
        if let Some(rest) = s.strip_prefix('(') {
            if let Some(idx) = rest.rfind(")/") {
                let inner = &rest[..idx];
                let den = parse_uint(&rest[idx + 2..])?;
                if den == 0 {
                    return Err(QuadError::Parse("zero denominator".into()));
                }
                let sum = parse_sum(inner)?;
                return Ok(sum.mul_rational(&BigRational::new(BigInt::one(), BigInt::from(den))));
            }
        }
        parse_sum(&s)
    }
}

fn parse_sum(s: &str) -> Result<Quad, QuadError> {
    let mut acc = Quad::from_int(0);
    for term in split_terms(s) {
        acc = acc.add(&parse_term(term)?)?;
    }
    Ok(acc)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(s: &str) -> Quad {
        s.parse().unwrap()
    }

    #[test]
    fn parse_and_display_roundtrip() {
        for text in ["5/2", "-7", "sqrt(5)", "3/2*sqrt(2)", "-1/2+1/2*sqrt(5)"] {
            let v = q(text);
            assert_eq!(v.to_string(), text);
            assert_eq!(q(&v.to_string()), v);
        }
        // non-canonical inputs normalize
        assert_eq!(q("(sqrt(5)-1)/2").to_string(), "-1/2+1/2*sqrt(5)");
        assert_eq!(q("2.5").to_string(), "5/2");
        assert_eq!(q("sqrt(8)").to_string(), "2*sqrt(2)");
        assert_eq!(q("sqrt(9)").to_string(), "3");
    }

    #[test]
    fn golden_ratio_satisfies_its_equation() {
        // x = (1+sqrt(5))/2 satisfies x^2 = x + 1
        let x = q("(1+sqrt(5))/2");
        let lhs = x.pow(2);
        let rhs = x.add_int(1);
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn floors() {
        assert_eq!(q("sqrt(2)").floor().unwrap(), BigInt::from(1));
        assert_eq!(q("(sqrt(5)-1)/2").floor().unwrap(), BigInt::from(0));
        assert_eq!(q("-sqrt(2)").floor().unwrap(), BigInt::from(-2));
        assert_eq!(q("7/2").floor().unwrap(), BigInt::from(3));
        // floor((5/2)^4) = floor(39.0625)
        let mu = q("5/2");
        assert_eq!(mu.pow(4).floor().unwrap(), BigInt::from(39));
    }

    #[test]
    fn signs_with_mixed_terms() {
        assert_eq!(q("2-sqrt(2)").sign(), Ordering::Greater);
        assert_eq!(q("1-sqrt(2)").sign(), Ordering::Less);
        assert_eq!(q("-3+2*sqrt(2)").sign(), Ordering::Less);
        assert_eq!(q("-2+3/2*sqrt(2)").sign(), Ordering::Greater);
    }

    #[test]
    fn incompatible_roots_rejected() {
        let a = q("sqrt(2)");
        let b = q("sqrt(3)");
        assert_eq!(a.add(&b), Err(QuadError::IncompatibleRoots(2, 3)));
    }

    #[test]
    fn powers_stay_in_field() {
        let mu = q("1+sqrt(2)");
        let p3 = mu.pow(3); // (1+sqrt2)^3 = 7 + 5 sqrt2
        assert_eq!(p3, q("7+5*sqrt(2)"));
    }

    #[test]
    fn enclosure_brackets_value() {
        let x = q("sqrt(2)");
        let (lo, hi) = x.enclosure(64);
        assert!(lo < hi);
        assert!(&lo * &lo < BigRational::from(BigInt::from(2)));
        assert!(&hi * &hi > BigRational::from(BigInt::from(2)));
    }
}
