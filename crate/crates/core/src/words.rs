//! Finite symbol words over a bounded integer alphabet.
//!
//! A [`SymbolWord`] is an immutable, frozen sequence of symbols drawn from
//! `{0, .., b-1}` for an [`Alphabet`] of size `b` with `2 <= b <= 36`.  The
//! cap at 36 keeps the text encoding one character per symbol (`0-9`, `a-z`).
//! Public index contracts ([`Factor`], the analysis profiles) are 1-based;
//! raw storage is exposed 0-based through [`SymbolWord::symbols`].

use std::fmt;
use std::fs;
use std::path::Path;
use std::sync::Arc;

use thiserror::Error;

/// Maximum number of digit characters per line in the word text format.
const LINE_WIDTH: usize = 80;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum WordError {
    #[error("alphabet size {0} out of range (2..=36)")]
    InvalidAlphabet(u32),
    #[error("invalid symbol at position {position}")]
    InvalidSymbol { position: usize },
    #[error("factor (start={start}, len={len}) out of bounds for word of length {word_len}")]
    OutOfBounds {
        start: usize,
        len: usize,
        word_len: usize,
    },
    #[error("factor lengths differ ({0} vs {1})")]
    LengthMismatch(usize, usize),
    #[error("malformed word text: {0}")]
    BadFormat(String),
    #[error("i/o error: {0}")]
    Io(String),
}

/// Symbol alphabet `{0, .., size-1}` with `2 <= size <= 36`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Alphabet {
    size: u8,
}

impl Alphabet {
    pub fn new(size: u32) -> Result<Self, WordError> {
        if !(2..=36).contains(&size) {
            return Err(WordError::InvalidAlphabet(size));
        }
        Ok(Alphabet { size: size as u8 })
    }

    pub fn binary() -> Self {
        Alphabet { size: 2 }
    }

    pub fn size(&self) -> u32 {
        u32::from(self.size)
    }

    pub fn contains(&self, symbol: u8) -> bool {
        symbol < self.size
    }

    /// Decodes a digit character (`0-9`, `a-z`) into a symbol value.
    pub fn symbol_of_char(&self, c: char) -> Option<u8> {
        let v = match c {
            '0'..='9' => c as u8 - b'0',
            'a'..='z' => c as u8 - b'a' + 10,
            _ => return None,
        };
        self.contains(v).then_some(v)
    }

    /// Encodes a symbol as its digit character.
    pub fn char_of_symbol(&self, symbol: u8) -> Option<char> {
        if !self.contains(symbol) {
            return None;
        }
        Some(if symbol < 10 {
            (b'0' + symbol) as char
        } else {
            (b'a' + symbol - 10) as char
        })
    }
}

/// An immutable finite word.  Cloning is cheap (shared storage).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SymbolWord {
    alphabet: Alphabet,
    symbols: Arc<[u8]>,
}

impl SymbolWord {
    /// Builds a word from raw symbol values, validating each against the
    /// alphabet.  Error positions are 1-based.
    pub fn from_symbols(alphabet: Alphabet, symbols: Vec<u8>) -> Result<Self, WordError> {
        for (i, &s) in symbols.iter().enumerate() {
            if !alphabet.contains(s) {
                return Err(WordError::InvalidSymbol { position: i + 1 });
            }
        }
        Ok(SymbolWord {
            alphabet,
            symbols: symbols.into(),
        })
    }

    pub fn empty(alphabet: Alphabet) -> Self {
        SymbolWord {
            alphabet,
            symbols: Vec::new().into(),
        }
    }

    pub fn alphabet(&self) -> Alphabet {
        self.alphabet
    }

    pub fn len(&self) -> usize {
        self.symbols.len()
    }

    pub fn is_empty(&self) -> bool {
        self.symbols.is_empty()
    }

    /// Raw 0-based symbol slice.
    pub fn symbols(&self) -> &[u8] {
        &self.symbols
    }

    /// 1-based symbol access.
    pub fn symbol_at(&self, position: usize) -> Option<u8> {
        if position == 0 {
            return None;
        }
        self.symbols.get(position - 1).copied()
    }

    /// The prefix of the first `len` symbols (copied).
    pub fn prefix(&self, len: usize) -> SymbolWord {
        let len = len.min(self.len());
        SymbolWord {
            alphabet: self.alphabet,
            symbols: self.symbols[..len].to_vec().into(),
        }
    }
}

impl fmt::Display for SymbolWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for &s in self.symbols.iter() {
            // symbols are validated at construction
            f.write_fmt(format_args!(
                "{}",
                self.alphabet.char_of_symbol(s).unwrap_or('?')
            ))?;
        }
        Ok(())
    }
}

/// Streaming single-owner builder producing a frozen [`SymbolWord`].
#[derive(Debug)]
pub struct WordBuilder {
    alphabet: Alphabet,
    symbols: Vec<u8>,
}

impl WordBuilder {
    pub fn new(alphabet: Alphabet) -> Self {
        WordBuilder {
            alphabet,
            symbols: Vec::new(),
        }
    }

    pub fn with_capacity(alphabet: Alphabet, capacity: usize) -> Self {
        WordBuilder {
            alphabet,
            symbols: Vec::with_capacity(capacity),
        }
    }

    pub fn len(&self) -> usize {
        self.symbols.len()
    }

    pub fn is_empty(&self) -> bool {
        self.symbols.is_empty()
    }

    pub fn push(&mut self, symbol: u8) -> Result<(), WordError> {
        if !self.alphabet.contains(symbol) {
            return Err(WordError::InvalidSymbol {
                position: self.symbols.len() + 1,
            });
        }
        self.symbols.push(symbol);
        Ok(())
    }

    pub fn freeze(self) -> SymbolWord {
        SymbolWord {
            alphabet: self.alphabet,
            symbols: self.symbols.into(),
        }
    }
}

/// A factor `x_start .. x_{start+len-1}` of a word, 1-based.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Factor {
    pub start: usize,
    pub len: usize,
}

impl Factor {
    pub fn new(start: usize, len: usize) -> Self {
        Factor { start, len }
    }

    /// Resolves the factor against a word, returning its symbol slice.
    pub fn resolve<'a>(&self, word: &'a SymbolWord) -> Result<&'a [u8], WordError> {
        if self.start == 0 || self.len == 0 || self.start + self.len - 1 > word.len() {
            return Err(WordError::OutOfBounds {
                start: self.start,
                len: self.len,
                word_len: word.len(),
            });
        }
        Ok(&word.symbols()[self.start - 1..self.start - 1 + self.len])
    }
}

/// Decodes a digit string into a word.  Error positions are 1-based
/// character indices.
pub fn word_from_text(text: &str, alphabet: Alphabet) -> Result<SymbolWord, WordError> {
    let mut symbols = Vec::with_capacity(text.len());
    for (i, c) in text.chars().enumerate() {
        match alphabet.symbol_of_char(c) {
            Some(s) => symbols.push(s),
            None => return Err(WordError::InvalidSymbol { position: i + 1 }),
        }
    }
    Ok(SymbolWord {
        alphabet,
        symbols: symbols.into(),
    })
}

/// Encodes a word as its digit string.
pub fn word_to_text(word: &SymbolWord) -> String {
    word.to_string()
}

/// Symbol-by-symbol equality of two equal-length factors.
pub fn factor_equal(word: &SymbolWord, f1: Factor, f2: Factor) -> Result<bool, WordError> {
    if f1.len != f2.len {
        return Err(WordError::LengthMismatch(f1.len, f2.len));
    }
    let a = f1.resolve(word)?;
    let b = f2.resolve(word)?;
    Ok(a == b)
}

/// Renders a word in the `WORD v1` text format: a header line followed by
/// digit characters, at most 80 per line, no trailing blank lines.
pub fn write_word_text(word: &SymbolWord) -> String {
    let mut out = format!(
        "WORD v1 base={} length={}\n",
        word.alphabet().size(),
        word.len()
    );
    let digits = word.to_string();
    let bytes = digits.as_bytes();
    for chunk in bytes.chunks(LINE_WIDTH) {
        out.push_str(std::str::from_utf8(chunk).expect("ascii digits"));
        out.push('\n');
    }
    out
}

/// Parses the `WORD v1` text format.
pub fn parse_word_text(text: &str) -> Result<SymbolWord, WordError> {
    let mut lines = text.lines();
    let header = lines
        .next()
        .ok_or_else(|| WordError::BadFormat("empty input".into()))?;
    let rest = header
        .strip_prefix("WORD v1 ")
        .ok_or_else(|| WordError::BadFormat(format!("bad header: {header:?}")))?;
    let mut base = None;
    let mut length = None;
    for field in rest.split_whitespace() {
        if let Some(v) = field.strip_prefix("base=") {
            base = v.parse::<u32>().ok();
        } else if let Some(v) = field.strip_prefix("length=") {
            length = v.parse::<usize>().ok();
        } else {
            return Err(WordError::BadFormat(format!("unknown field: {field:?}")));
        }
    }
    let base = base.ok_or_else(|| WordError::BadFormat("missing base=".into()))?;
    let length = length.ok_or_else(|| WordError::BadFormat("missing length=".into()))?;
    let alphabet = Alphabet::new(base)?;
    let mut digits = String::with_capacity(length);
    for line in lines {
        if line.is_empty() {
            return Err(WordError::BadFormat("blank line in digit block".into()));
        }
        digits.push_str(line);
    }
    if digits.len() != length {
        return Err(WordError::BadFormat(format!(
            "length mismatch: header says {length}, found {}",
            digits.len()
        )));
    }
    word_from_text(&digits, alphabet)
}

pub fn write_word_file(path: &Path, word: &SymbolWord) -> Result<(), WordError> {
    fs::write(path, write_word_text(word)).map_err(|e| WordError::Io(e.to_string()))
}

pub fn read_word_file(path: &Path) -> Result<SymbolWord, WordError> {
    let text = fs::read_to_string(path).map_err(|e| WordError::Io(e.to_string()))?;
    parse_word_text(&text)
}
