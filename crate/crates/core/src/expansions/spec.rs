//! Named real-number recipes and their canonical text grammar.
//!
//! The canonical id doubles as the cache key and the CLI `--const`
//! argument.  Grammar (no whitespace):
//!
//! ```text
//! e | kmosek_shallit | fibonacci
//! log1p(S,T)        natural log of 1 + S/T, integers S, T >= 1
//! arcsin(S,T)       sqrt(T^2 - S^2) * arcsin(S/T), 0 < S < T
//! sqrt(D)           square root of the positive integer D
//! lacunary(B,MU)    sum of B^-floor(MU^k), MU rational or quadratic surd
//! champernowne(B)   0.123... digit concatenation in base B
//! sturmian(TH,RH)   mechanical word with slope TH, intercept RH
//! ```
//!
//! Quadratic values use the surd grammar of [`Quad`], e.g.
//! `(sqrt(5)-1)/2` or `5/2`.

use std::fmt;
use std::str::FromStr;

use num::{BigInt, BigRational};

use super::quad::Quad;
use super::ExpansionError;

#[derive(Debug, Clone, PartialEq)]
pub enum ConstantSpec {
    /// Euler's number.
    E,
    /// `log(1 + s/t)`.
    Log1p { s: u64, t: u64 },
    /// `sqrt(t^2 - s^2) * arcsin(s/t)`.
    ArcsinForm { s: u64, t: u64 },
    /// `sqrt(d)`.
    Sqrt { d: u64 },
    /// `sum_{k>=1} base^(-floor(mu^k))` for `mu >= 2`.
    Lacunary { series_base: u32, mu: Quad },
    /// `sum_{k>=1} 2^(-2^k)`.
    KmosekShallit,
    /// The number whose base-`base` digits concatenate `1, 2, 3, ...`.
    Champernowne { base: u32 },
    /// The number whose binary digits form the Fibonacci word (fixed point
    /// of `0 -> 01`, `1 -> 0`).
    FibonacciWord,
    /// The number whose binary digits form the mechanical word
    /// `s_k = floor((k+1)theta + rho) - floor(k theta + rho)`.
    Sturmian { theta: Quad, rho: Quad },
}

impl ConstantSpec {
    /// Canonical text form; stable across parse/print round trips.
    pub fn canonical_id(&self) -> String {
        self.to_string()
    }

    /// Checks the parameter invariants of the recipe.
    pub fn validate(&self) -> Result<(), ExpansionError> {
        let invalid = |msg: String| Err(ExpansionError::InvalidSpec(msg));
        match self {
            ConstantSpec::E | ConstantSpec::KmosekShallit | ConstantSpec::FibonacciWord => Ok(()),
            ConstantSpec::Log1p { s, t } => {
                if *s < 1 || *t < 1 {
                    return invalid(format!("log1p needs s >= 1 and t >= 1, got ({s},{t})"));
                }
                Ok(())
            }
            ConstantSpec::ArcsinForm { s, t } => {
                if !(*s >= 1 && s < t) {
                    return invalid(format!("arcsin needs 0 < s < t, got ({s},{t})"));
                }
                Ok(())
            }
            ConstantSpec::Sqrt { d } => {
                if *d < 1 {
                    return invalid("sqrt needs d >= 1".into());
                }
                Ok(())
            }
            ConstantSpec::Lacunary { series_base, mu } => {
                if !(2..=36).contains(series_base) {
                    return invalid(format!("lacunary base {series_base} out of range (2..=36)"));
                }
                let two = Quad::from_int(2);
                if mu.cmp_exact(&two)? == std::cmp::Ordering::Less {
                    return invalid(format!("lacunary needs mu >= 2, got {mu}"));
                }
                Ok(())
            }
            ConstantSpec::Champernowne { base } => {
                if !(2..=36).contains(base) {
                    return invalid(format!("champernowne base {base} out of range (2..=36)"));
                }
                Ok(())
            }
            ConstantSpec::Sturmian { theta, rho } => {
                if theta.is_rational() {
                    return invalid(format!("sturmian slope must be irrational, got {theta}"));
                }
                let zero = Quad::from_int(0);
                let one = Quad::from_int(1);
                if theta.cmp_exact(&zero)? != std::cmp::Ordering::Greater
                    || theta.cmp_exact(&one)? != std::cmp::Ordering::Less
                {
                    return invalid(format!(
                        "sturmian slope must satisfy 0 < theta < 1, got {theta}"
                    ));
                }
                if rho.cmp_exact(&zero)? == std::cmp::Ordering::Less
                    || rho.cmp_exact(&one)? != std::cmp::Ordering::Less
                {
                    return invalid(format!(
                        "sturmian intercept must satisfy 0 <= rho < 1, got {rho}"
                    ));
                }
                Ok(())
            }
        }
    }

    /// Exact value when the recipe denotes a rational number (used to flag
    /// degenerate inputs): only `sqrt(d)` of a perfect square qualifies.
    pub fn rational_value(&self) -> Option<BigRational> {
        if let ConstantSpec::Sqrt { d } = self {
            let root = BigInt::from(*d).sqrt();
            if &root * &root == BigInt::from(*d) {
                return Some(BigRational::from(root));
            }
        }
        None
    }
}

impl fmt::Display for ConstantSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ConstantSpec::E => f.write_str("e"),
            ConstantSpec::Log1p { s, t } => write!(f, "log1p({s},{t})"),
            ConstantSpec::ArcsinForm { s, t } => write!(f, "arcsin({s},{t})"),
            ConstantSpec::Sqrt { d } => write!(f, "sqrt({d})"),
            ConstantSpec::Lacunary { series_base, mu } => write!(f, "lacunary({series_base},{mu})"),
            ConstantSpec::KmosekShallit => f.write_str("kmosek_shallit"),
            ConstantSpec::Champernowne { base } => write!(f, "champernowne({base})"),
            ConstantSpec::FibonacciWord => f.write_str("fibonacci"),
            ConstantSpec::Sturmian { theta, rho } => write!(f, "sturmian({theta},{rho})"),
        }
    }
}

/// Splits `args` at top-level commas (commas inside parentheses belong to
/// surd literals).
fn split_args(args: &str) -> Vec<&str> {
    let mut parts = Vec::new();
    let mut depth = 0usize;
    let mut start = 0usize;
    for (i, c) in args.char_indices() {
        match c {
            '(' => depth += 1,
            ')' => depth = depth.saturating_sub(1),
            ',' if depth == 0 => {
                parts.push(&args[start..i]);
                start = i + 1;
            }
            _ => {}
        }
    }
    parts.push(&args[start..]);
    parts
}

impl FromStr for ConstantSpec {
    type Err = ExpansionError;

    fn from_str(text: &str) -> Result<Self, Self::Err> {
        let s: String = text.chars().filter(|c| !c.is_whitespace()).collect();
        let bad = |msg: String| Err(ExpansionError::InvalidSpec(msg));
        let spec = match s.as_str() {
            "e" => ConstantSpec::E,
            "kmosek_shallit" => ConstantSpec::KmosekShallit,
            "fibonacci" | "fibonacci_word" => ConstantSpec::FibonacciWord,
            _ => {
                let (name, rest) = match s.split_once('(') {
                    Some(pair) => pair,
                    None => return bad(format!("unknown constant {s:?}")),
                };
                let args_str = match rest.strip_suffix(')') {
                    Some(a) => a,
                    None => return bad(format!("unbalanced parentheses in {s:?}")),
                };
                let args = split_args(args_str);
                let uint = |a: &str| -> Result<u64, ExpansionError> {
                    a.parse::<u64>().map_err(|_| {
                        ExpansionError::InvalidSpec(format!("bad integer {a:?} in {s:?}"))
                    })
                };
                match (name, args.as_slice()) {
                    ("log1p", [a, b]) => ConstantSpec::Log1p {
                        s: uint(a)?,
                        t: uint(b)?,
                    },
                    ("arcsin", [a, b]) => ConstantSpec::ArcsinForm {
                        s: uint(a)?,
                        t: uint(b)?,
                    },
                    ("sqrt", [a]) => {
                        // `sqrt(5)` standing alone is the constant; inside a
                        // surd argument it is handled by the Quad parser
                        ConstantSpec::Sqrt { d: uint(a)? }
                    }
                    ("lacunary", [a, b]) => ConstantSpec::Lacunary {
                        series_base: uint(a)? as u32,
                        mu: b.parse::<Quad>()?,
                    },
                    ("champernowne", [a]) => ConstantSpec::Champernowne {
                        base: uint(a)? as u32,
                    },
                    ("sturmian", [a, b]) => ConstantSpec::Sturmian {
                        theta: a.parse::<Quad>()?,
                        rho: b.parse::<Quad>()?,
                    },
                    _ => return bad(format!("unknown constant {s:?}")),
                }
            }
        };
        spec.validate()?;
        Ok(spec)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn parse(s: &str) -> ConstantSpec {
        s.parse().unwrap()
    }

    #[test]
    fn roundtrip_canonical_ids() {
        for id in [
            "e",
            "log1p(1,1)",
            "arcsin(1,2)",
            "sqrt(2)",
            "lacunary(2,3)",
            "lacunary(2,5/2)",
            "kmosek_shallit",
            "champernowne(10)",
            "fibonacci",
            "sturmian(-1/2+1/2*sqrt(5),0)",
        ] {
            let spec = parse(id);
            assert_eq!(spec.canonical_id(), id);
            assert_eq!(parse(&spec.canonical_id()), spec);
        }
    }

    #[test]
    fn non_canonical_inputs_normalize() {
        assert_eq!(
            parse("sturmian((sqrt(5)-1)/2, 0)").canonical_id(),
            "sturmian(-1/2+1/2*sqrt(5),0)"
        );
        assert_eq!(parse("lacunary(2, 2.5)").canonical_id(), "lacunary(2,5/2)");
        assert_eq!(parse("fibonacci_word").canonical_id(), "fibonacci");
    }

    #[test]
    fn invalid_specs_rejected() {
        assert!("log1p(0,1)".parse::<ConstantSpec>().is_err());
        assert!("arcsin(2,2)".parse::<ConstantSpec>().is_err());
        assert!("arcsin(3,2)".parse::<ConstantSpec>().is_err());
        assert!("lacunary(2,3/2)".parse::<ConstantSpec>().is_err());
        assert!("champernowne(1)".parse::<ConstantSpec>().is_err());
        assert!("sturmian(1/2,0)".parse::<ConstantSpec>().is_err()); // rational slope
        assert!("sturmian(sqrt(5),0)".parse::<ConstantSpec>().is_err()); // slope > 1
        assert!("nope(1)".parse::<ConstantSpec>().is_err());
    }

    #[test]
    fn rational_value_detection() {
        assert_eq!(
            parse("sqrt(4)").rational_value(),
            Some(BigRational::from(BigInt::from(2)))
        );
        assert_eq!(parse("sqrt(2)").rational_value(), None);
        assert_eq!(parse("e").rational_value(), None);
    }
}
