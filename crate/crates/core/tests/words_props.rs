mod common;

use proptest::prelude::*;

use repx_core::words::{
    factor_equal, parse_word_text, word_from_text, word_to_text, write_word_text, Alphabet, Factor,
    SymbolWord,
};

fn arb_word() -> impl Strategy<Value = SymbolWord> {
    (2u32..=36).prop_flat_map(|base| {
        proptest::collection::vec(0..base as u8, 0..200).prop_map(move |symbols| {
            SymbolWord::from_symbols(Alphabet::new(base).unwrap(), symbols).unwrap()
        })
    })
}

proptest! {
    #[test]
    fn text_roundtrip(word in arb_word()) {
        let text = word_to_text(&word);
        let back = word_from_text(&text, word.alphabet()).unwrap();
        prop_assert_eq!(back, word);
    }

    #[test]
    fn file_format_roundtrip(word in arb_word()) {
        let text = write_word_text(&word);
        prop_assert!(!text.ends_with("\n\n"), "trailing blank line");
        for line in text.lines().skip(1) {
            prop_assert!(line.len() <= 80);
        }
        let back = parse_word_text(&text).unwrap();
        prop_assert_eq!(back, word);
    }

    /// factor_equal is an equivalence relation on fixed-length factors.
    #[test]
    fn factor_equivalence(
        word in arb_word().prop_filter("need symbols", |w| w.len() >= 3),
        seed in any::<u64>(),
    ) {
        let mut rng = common::TestRng::new(seed);
        let len = 1 + rng.below(word.len() as u64 - 1) as usize;
        let pick = |rng: &mut common::TestRng| {
            Factor::new(1 + rng.below((word.len() - len + 1) as u64) as usize, len)
        };
        let (a, b, c) = (pick(&mut rng), pick(&mut rng), pick(&mut rng));
        // reflexive
        prop_assert!(factor_equal(&word, a, a).unwrap());
        // symmetric
        prop_assert_eq!(
            factor_equal(&word, a, b).unwrap(),
            factor_equal(&word, b, a).unwrap()
        );
        // transitive
        if factor_equal(&word, a, b).unwrap() && factor_equal(&word, b, c).unwrap() {
            prop_assert!(factor_equal(&word, a, c).unwrap());
        }
    }
}
