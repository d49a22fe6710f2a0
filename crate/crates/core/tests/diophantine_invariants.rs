mod common;

use num::BigRational;

use repx_core::diophantine::{continued_fraction, mu_estimate, DiophantineError};
use repx_core::expansions::{generate_digits, ConstantSpec};
use repx_core::numeric::parse_rational;
use repx_core::words::Alphabet;

fn spec(s: &str) -> ConstantSpec {
    s.parse().unwrap()
}

fn rat(s: &str) -> BigRational {
    parse_rational(s).unwrap()
}

#[test]
fn consecutive_convergents_bracket_the_enclosure() {
    // certified convergents are convergents of both enclosure endpoints,
    // so each consecutive pair brackets the whole digit interval
    for (id, base, count) in [
        ("e", 10u32, 120usize),
        ("kmosek_shallit", 2, 1024),
        ("sqrt(2)", 10, 60),
    ] {
        let digits = generate_digits(&spec(id), Alphabet::new(base).unwrap(), count).unwrap();
        let (lo, hi) = digits.enclosure();
        let cf = continued_fraction(&digits).unwrap();
        for pair in cf.convergents.windows(2) {
            let a = BigRational::new(pair[0].0.clone(), pair[0].1.clone());
            let b = BigRational::new(pair[1].0.clone(), pair[1].1.clone());
            let (low, high) = if a < b { (a, b) } else { (b, a) };
            assert!(
                low <= lo && hi <= high,
                "{id}: convergent pair does not bracket the enclosure"
            );
        }
    }
}

#[test]
fn kmosek_mu_estimate_window() {
    // bounded partial quotients: the estimate sits just above 2
    let digits = generate_digits(&spec("kmosek_shallit"), Alphabet::binary(), 1 << 12).unwrap();
    let cf = continued_fraction(&digits).unwrap();
    let est = mu_estimate(&cf).unwrap();
    assert!(
        est.mu_hat >= rat("2") && est.mu_hat <= rat("2.2"),
        "mu_hat = {}",
        est.mu_hat
    );
    // per-step ratios are reported for every usable step
    assert!(est.per_step.len() > 100);
}

#[test]
fn rational_input_is_suspected() {
    // sqrt(9) = 3: all-zero fractional digits terminate the expansion
    let digits = generate_digits(&spec("sqrt(9)"), Alphabet::new(10).unwrap(), 32).unwrap();
    match continued_fraction(&digits) {
        Err(DiophantineError::RationalSuspected { .. }) => {}
        other => panic!("expected RationalSuspected, got {other:?}"),
    }
}

#[test]
fn short_prefixes_are_rejected() {
    let digits = generate_digits(&spec("e"), Alphabet::new(10).unwrap(), 6).unwrap();
    assert!(matches!(
        continued_fraction(&digits),
        Err(DiophantineError::DigitsTooFew { count: 6 })
    ));
}

#[test]
fn certified_prefix_grows_with_digit_count() {
    let ten = Alphabet::new(10).unwrap();
    let short = continued_fraction(&generate_digits(&spec("e"), ten, 40).unwrap()).unwrap();
    let long = continued_fraction(&generate_digits(&spec("e"), ten, 200).unwrap()).unwrap();
    assert!(long.terms() > short.terms());
    // and the short certified prefix is a prefix of the long one
    assert_eq!(
        short.partial_quotients[..],
        long.partial_quotients[..short.terms()]
    );
}
