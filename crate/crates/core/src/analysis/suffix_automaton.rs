//! Online suffix automaton over small alphabets.
//!
//! Supports extension by one symbol in amortized constant time and, at the
//! end, extraction of the number of distinct factors of every length in one
//! pass over the states.  After each `push` the automaton also reports the
//! length of the longest suffix of the current prefix that has another
//! occurrence ending strictly earlier, which drives the smallest-return
//! profile.

const NONE: u32 = u32::MAX;

#[derive(Debug, Clone)]
struct State {
    len: u32,
    link: u32,
    // association list; the alphabet is at most 36 symbols and most states
    // carry very few transitions
    trans: Vec<(u8, u32)>,
}

impl State {
    fn get(&self, c: u8) -> Option<u32> {
        self.trans.iter().find_map(|&(s, v)| (s == c).then_some(v))
    }

    fn set(&mut self, c: u8, v: u32) {
        for entry in self.trans.iter_mut() {
            if entry.0 == c {
                entry.1 = v;
                return;
            }
        }
        self.trans.push((c, v));
    }
}

#[derive(Debug)]
pub struct SuffixAutomaton {
    states: Vec<State>,
    last: u32,
    word_len: usize,
}

impl Default for SuffixAutomaton {
    fn default() -> Self {
        Self::new()
    }
}

impl SuffixAutomaton {
    pub fn new() -> Self {
        SuffixAutomaton {
            states: vec![State {
                len: 0,
                link: NONE,
                trans: Vec::new(),
            }],
            last: 0,
            word_len: 0,
        }
    }

    pub fn with_capacity(symbols: usize) -> Self {
        let mut sa = SuffixAutomaton::new();
        sa.states.reserve(2 * symbols);
        sa
    }

    pub fn word_len(&self) -> usize {
        self.word_len
    }

    fn alloc(&mut self, state: State) -> u32 {
        let id = self.states.len() as u32;
        self.states.push(state);
        id
    }

    /// Appends one symbol.  Returns the length of the longest suffix of the
    /// extended prefix that also occurs ending strictly before the new end
    /// position (0 when the last symbol is new).
    pub fn push(&mut self, c: u8) -> usize {
        self.word_len += 1;
        let cur = self.alloc(State {
            len: self.states[self.last as usize].len + 1,
            link: 0,
            trans: Vec::new(),
        });
        let mut p = self.last;
        self.last = cur;
        loop {
            if p == NONE {
                // fell off the root: every suffix transition was fresh
                break;
            }
            match self.states[p as usize].get(c) {
                None => {
                    self.states[p as usize].set(c, cur);
                    p = self.states[p as usize].link;
                }
                Some(q) => {
                    if self.states[p as usize].len + 1 == self.states[q as usize].len {
                        self.states[cur as usize].link = q;
                    } else {
                        let clone = self.alloc(State {
                            len: self.states[p as usize].len + 1,
                            link: self.states[q as usize].link,
                            trans: self.states[q as usize].trans.clone(),
                        });
                        self.states[q as usize].link = clone;
                        self.states[cur as usize].link = clone;
                        let mut pp = p;
                        while pp != NONE && self.states[pp as usize].get(c) == Some(q) {
                            self.states[pp as usize].set(c, clone);
                            pp = self.states[pp as usize].link;
                        }
                    }
                    break;
                }
            }
        }
        let link = self.states[cur as usize].link;
        self.states[link as usize].len as usize
    }

    /// Number of distinct factors of each length `1..=n_max`, computed from
    /// the state length intervals `[len(link)+1, len]` as a difference array.
    pub fn distinct_counts(&self, n_max: usize) -> Vec<u64> {
        let mut diff = vec![0i64; n_max + 2];
        for state in self.states.iter().skip(1) {
            let hi = (state.len as usize).min(n_max);
            let lo = self.states[state.link as usize].len as usize + 1;
            if lo > hi {
                continue;
            }
            diff[lo] += 1;
            diff[hi + 1] -= 1;
        }
        diff[1..=n_max]
            .iter()
            .scan(0i64, |acc, d| {
                *acc += d;
                Some(*acc as u64)
            })
            .collect()
    }
}
