#![allow(dead_code)] // each test binary uses a different subset

//! Shared test support: independent brute-force oracles computed straight
//! from the definitions (no suffix automaton, no shared code paths with
//! the implementations under test), reference word constructions, and a
//! deterministic RNG.

use std::collections::HashSet;

use repx_core::words::{Alphabet, SymbolWord};

/// Number of distinct length-`n` factors, by hashing every substring.
pub fn brute_complexity(symbols: &[u8], n: usize) -> u64 {
    if n == 0 || n > symbols.len() {
        return 0;
    }
    let mut seen: HashSet<&[u8]> = HashSet::new();
    for start in 0..=symbols.len() - n {
        seen.insert(&symbols[start..start + n]);
    }
    seen.len() as u64
}

/// Smallest `m` such that the prefix of length `m` contains two (possibly
/// overlapping) occurrences of some length-`n` word, by scanning all `m`
/// and all earlier occurrence starts.
pub fn brute_return(symbols: &[u8], n: usize) -> Option<u64> {
    if n == 0 {
        return None;
    }
    for m in (n + 1)..=symbols.len() {
        let suffix = &symbols[m - n..m];
        // an occurrence starting at i (1-based i <= m - n) ends before m
        for i in 0..=(m - n - 1) {
            if &symbols[i..i + n] == suffix {
                return Some(m as u64);
            }
        }
    }
    None
}

/// Full brute-force profiles up to `n_max`.
pub fn brute_profiles(symbols: &[u8], n_max: usize) -> (Vec<u64>, Vec<u64>) {
    let p: Vec<u64> = (1..=n_max).map(|n| brute_complexity(symbols, n)).collect();
    let mut r = Vec::new();
    for n in 1..=n_max {
        match brute_return(symbols, n) {
            Some(m) => r.push(m),
            None => break,
        }
    }
    (p, r)
}

/// Binary word with ones exactly at positions `2^k` (1-based), `k >= 1`.
pub fn ks_reference(len: usize) -> Vec<u8> {
    let mut word = vec![0u8; len];
    let mut position = 2usize;
    while position <= len {
        word[position - 1] = 1;
        position *= 2;
    }
    word
}

/// Fibonacci word by direct recurrence on blocks (independent of the
/// substitution iteration in the library).
pub fn fibonacci_reference(len: usize) -> Vec<u8> {
    // f_1 = 0, f_2 = 01, f_{k+1} = f_k f_{k-1}
    let mut prev = vec![0u8];
    let mut cur = vec![0u8, 1];
    while cur.len() < len {
        let mut next = cur.clone();
        next.extend_from_slice(&prev);
        prev = cur;
        cur = next;
    }
    cur.truncate(len);
    cur
}

pub fn word(symbols: Vec<u8>, base: u32) -> SymbolWord {
    SymbolWord::from_symbols(Alphabet::new(base).unwrap(), symbols).unwrap()
}

/// Small deterministic RNG (xorshift64*), so random suites are stable.
pub struct TestRng(u64);

impl TestRng {
    pub fn new(seed: u64) -> Self {
        TestRng(seed.max(1))
    }

    pub fn next_u64(&mut self) -> u64 {
        let mut x = self.0;
        x ^= x >> 12;
        x ^= x << 25;
        x ^= x >> 27;
        self.0 = x;
        x.wrapping_mul(0x2545F4914F6CDD1D)
    }

    pub fn below(&mut self, bound: u64) -> u64 {
        self.next_u64() % bound
    }

    pub fn word(&mut self, base: u32, len: usize) -> Vec<u8> {
        (0..len).map(|_| self.below(base as u64) as u8).collect()
    }
}
