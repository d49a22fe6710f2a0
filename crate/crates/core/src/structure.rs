//! Word periodicity: smallest periods, fractional powers of primitive
//! roots, overlap-implies-period verification, and commuting-word
//! decomposition.
//!
//! The `t`-th power of a word `W` (for rational `t >= 1`) is the
//! concatenation of `floor(t)` copies of `W` followed by the prefix of `W`
//! of length `ceil((t - floor(t)) * |W|)`.

use num::{BigInt, BigRational, One};
use thiserror::Error;

use crate::numeric::floor_ratio;
use crate::words::{Factor, SymbolWord, WordError};

#[derive(Debug, Error, PartialEq, Eq)]
pub enum StructureError {
    #[error("factors at {i} and {j} (length {len}) are not equal occurrences")]
    NotOccurrences { i: usize, j: usize, len: usize },
    #[error("factors at {i} and {j} (length {len}) do not overlap")]
    NoOverlap { i: usize, j: usize, len: usize },
    #[error("power exponent {0} is below 1")]
    InvalidExponent(String),
    #[error("words are over different alphabets")]
    AlphabetMismatch,
    #[error("operation requires a nonempty word")]
    EmptyWord,
    #[error(transparent)]
    Word(#[from] WordError),
}

/// KMP border (failure) array: `border[i]` is the length of the longest
/// proper border of the prefix of length `i + 1`.
pub fn border_array(s: &[u8]) -> Vec<usize> {
    let mut border = vec![0usize; s.len()];
    let mut b = 0;
    for i in 1..s.len() {
        while b > 0 && s[i] != s[b] {
            b = border[b - 1];
        }
        if s[i] == s[b] {
            b += 1;
        }
        border[i] = b;
    }
    border
}

/// The least `p >= 1` with `w_i = w_{i+p}` wherever both sides are defined.
/// Panics on the empty word.
pub fn smallest_period(word: &SymbolWord) -> usize {
    assert!(!word.is_empty(), "smallest_period of empty word");
    let s = word.symbols();
    let border = border_array(s);
    s.len() - border[s.len() - 1]
}

/// `true` when the word is not an integer power of a strictly shorter word.
pub fn is_primitive(word: &SymbolWord) -> bool {
    let p = smallest_period(word);
    p == word.len() || !word.len().is_multiple_of(p)
}

/// The primitive word `u` and maximal `k >= 1` with `word = u^k`.
pub fn primitive_root(word: &SymbolWord) -> (SymbolWord, usize) {
    let p = smallest_period(word);
    if p < word.len() && word.len().is_multiple_of(p) {
        (word.prefix(p), word.len() / p)
    } else {
        (word.clone(), 1)
    }
}

/// A word expressed as a (possibly fractional) power of a primitive root.
#[derive(Debug, Clone, PartialEq)]
pub struct PowerDecomposition {
    pub root: SymbolWord,
    pub exponent: BigRational,
    pub total_length: usize,
}

impl PowerDecomposition {
    /// Rebuilds the decomposed word from the root and exponent.
    pub fn rebuild(&self) -> SymbolWord {
        build_power(&self.root, &self.exponent).expect("exponent >= 1 by construction")
    }
}

/// Decomposes a word as a power of its primitive root.  When the word is at
/// least twice its smallest period `p`, the root is the length-`p` prefix
/// and the exponent is the exact rational `|w| / p`; shorter words are
/// their own root with exponent 1.
pub fn power_decompose(word: &SymbolWord) -> PowerDecomposition {
    assert!(!word.is_empty(), "power_decompose of empty word");
    let p = smallest_period(word);
    if word.len() >= 2 * p {
        PowerDecomposition {
            root: word.prefix(p),
            exponent: BigRational::new(BigInt::from(word.len()), BigInt::from(p)),
            total_length: word.len(),
        }
    } else {
        PowerDecomposition {
            root: word.clone(),
            exponent: BigRational::one(),
            total_length: word.len(),
        }
    }
}

/// Builds the `t`-th power of a word for rational `t >= 1`.
pub fn build_power(word: &SymbolWord, t: &BigRational) -> Result<SymbolWord, StructureError> {
    if t < &BigRational::one() {
        return Err(StructureError::InvalidExponent(t.to_string()));
    }
    if word.is_empty() {
        return Err(StructureError::EmptyWord);
    }
    let whole = floor_ratio(t);
    let frac = t - BigRational::from(whole.clone());
    let prefix_len = (frac * BigRational::from(BigInt::from(word.len())))
        .ceil()
        .to_integer();
    let whole: usize = whole.try_into().expect("exponent fits usize");
    let prefix_len: usize = prefix_len.try_into().expect("length fits usize");
    let mut symbols = Vec::with_capacity(whole * word.len() + prefix_len);
    for _ in 0..whole {
        symbols.extend_from_slice(word.symbols());
    }
    symbols.extend_from_slice(&word.symbols()[..prefix_len]);
    Ok(SymbolWord::from_symbols(word.alphabet(), symbols).expect("symbols already valid"))
}

/// Given two equal overlapping occurrences of a length-`len` factor at
/// 1-based positions `i < j` with `j - i < len`, returns the verified
/// period `d = j - i` of the combined span `x_i .. x_{j+len-1}`.
///
/// Verification is literal symbol comparison; the distance is only returned
/// once every position of the overlapped span has been checked.
pub fn overlap_period(
    word: &SymbolWord,
    i: usize,
    j: usize,
    len: usize,
) -> Result<usize, StructureError> {
    Factor::new(i, len).resolve(word)?;
    Factor::new(j, len).resolve(word)?;
    if i >= j || j - i >= len {
        return Err(StructureError::NoOverlap { i, j, len });
    }
    let d = j - i;
    let s = word.symbols();
    // span x_i .. x_{j+len-1} has period d iff the occurrences are equal
    for x in i..=(j + len - 1 - d) {
        if s[x - 1] != s[x - 1 + d] {
            return Err(StructureError::NotOccurrences { i, j, len });
        }
    }
    Ok(d)
}

/// If `z1 z2 = z2 z1`, returns the primitive word `T` and exponents
/// `(k, l)` with `z1 = T^k`, `z2 = T^l`; otherwise `None`.
pub fn commuting_roots(
    z1: &SymbolWord,
    z2: &SymbolWord,
) -> Result<Option<(SymbolWord, usize, usize)>, StructureError> {
    if z1.alphabet() != z2.alphabet() {
        return Err(StructureError::AlphabetMismatch);
    }
    if z1.is_empty() || z2.is_empty() {
        return Err(StructureError::EmptyWord);
    }
    let mut ab = Vec::with_capacity(z1.len() + z2.len());
    ab.extend_from_slice(z1.symbols());
    ab.extend_from_slice(z2.symbols());
    let mut ba = Vec::with_capacity(ab.len());
    ba.extend_from_slice(z2.symbols());
    ba.extend_from_slice(z1.symbols());
    if ab != ba {
        return Ok(None);
    }
    let (root, k) = primitive_root(z1);
    // commuting words are integer powers of a common primitive word, so z2
    // must be an exact power of the same root
    debug_assert_eq!(z2.len() % root.len(), 0);
    let l = z2.len() / root.len();
    debug_assert!(z2
        .symbols()
        .chunks(root.len())
        .all(|chunk| chunk == root.symbols()));
    Ok(Some((root, k, l)))
}
