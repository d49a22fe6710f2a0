mod common;

use num::{BigInt, BigRational};
use proptest::prelude::*;

use repx_core::structure::{
    build_power, overlap_period, power_decompose, smallest_period, StructureError,
};
use repx_core::words::{Alphabet, SymbolWord};

fn arb_small_word(max_len: usize) -> impl Strategy<Value = SymbolWord> {
    (2u32..=4).prop_flat_map(move |base| {
        proptest::collection::vec(0..base as u8, 1..=max_len).prop_map(move |symbols| {
            SymbolWord::from_symbols(Alphabet::new(base).unwrap(), symbols).unwrap()
        })
    })
}

/// Naive period check straight from the definition.
fn is_period(symbols: &[u8], p: usize) -> bool {
    (0..symbols.len().saturating_sub(p)).all(|i| symbols[i] == symbols[i + p])
}

proptest! {
    #[test]
    fn smallest_period_matches_naive_scan(word in arb_small_word(40)) {
        let p = smallest_period(&word);
        prop_assert!(is_period(word.symbols(), p));
        for q in 1..p {
            prop_assert!(!is_period(word.symbols(), q), "period {q} < {p} missed");
        }
    }

    #[test]
    fn decompose_rebuilds_exactly(word in arb_small_word(60)) {
        let d = power_decompose(&word);
        prop_assert_eq!(d.total_length, word.len());
        prop_assert_eq!(d.rebuild(), word);
    }

    #[test]
    fn build_then_decompose_roundtrips(
        root in arb_small_word(8),
        whole in 1u64..4,
        num in 0u64..8,
    ) {
        // t = whole + num/8 >= 1
        let t = BigRational::new(BigInt::from(8 * whole + num), BigInt::from(8));
        let power = build_power(&root, &t).unwrap();
        let d = power_decompose(&power);
        prop_assert_eq!(d.rebuild(), power);
    }

    /// Two equal overlapping occurrences force a verified period.
    #[test]
    fn overlap_period_is_sound(root in arb_small_word(6), copies in 2usize..5) {
        let t = BigRational::from(BigInt::from(copies as u64));
        let word = build_power(&root, &t).unwrap();
        let p = smallest_period(&word);
        let len = word.len() - p;
        if len > p {
            let d = overlap_period(&word, 1, 1 + p, len).unwrap();
            prop_assert_eq!(d, p);
            prop_assert!(is_period(word.symbols(), d));
        }
    }
}

#[test]
fn overlap_rejects_non_occurrences() {
    let word = SymbolWord::from_symbols(Alphabet::binary(), vec![0, 0, 1, 1, 0, 0]).unwrap();
    assert!(matches!(
        overlap_period(&word, 1, 3, 3),
        Err(StructureError::NotOccurrences { .. })
    ));
}
