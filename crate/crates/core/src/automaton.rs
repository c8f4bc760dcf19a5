//! Completeness of finite prohibition sets.
//!
//! Every explicit set is compiled into a [`FreeWordAutomaton`]: the prefix
//! trie of the prohibited words closed under failure links, so that each
//! state stands for the longest suffix of the input read so far that is
//! still a prefix of some prohibited word. A word is free exactly when its
//! run avoids terminal states, which turns completeness into acyclicity of
//! the non-terminal part of the automaton and the longest free word into a
//! longest path in that part.

use std::collections::VecDeque;

use crate::error::{Error, Result};
use crate::prohibition::ProhibitionSet;
use crate::words::{Alphabet, Letter, Word};

const NONE: u32 = u32::MAX;

pub type StateId = u32;

#[derive(Debug, Clone)]
pub struct FreeWordAutomaton {
    alphabet_size: usize,
    /// Dense transition table, `goto[state * alphabet_size + letter]`.
    goto: Vec<StateId>,
    fail: Vec<StateId>,
    depth: Vec<u32>,
    /// True when the state's string is itself a prohibited word.
    is_word: Vec<bool>,
    /// Nearest proper suffix state that is a prohibited word.
    dict_link: Vec<StateId>,
    terminal: Vec<bool>,
}

/// Greatest length of a free word.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum LengthAnswer {
    Finite(usize),
    Unbounded,
}

impl LengthAnswer {
    pub fn is_finite(self) -> bool {
        matches!(self, LengthAnswer::Finite(_))
    }
}

impl std::fmt::Display for LengthAnswer {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            LengthAnswer::Finite(n) => write!(f, "{n}"),
            LengthAnswer::Unbounded => f.write_str("unbounded"),
        }
    }
}

impl FreeWordAutomaton {
    /// Builds the automaton for an explicit list of prohibited words.
    pub fn build(words: &[Word], alphabet: &Alphabet) -> Result<Self> {
        let n = alphabet.len();
        let mut goto = vec![NONE; n];
        let mut depth = vec![0u32];
        let mut is_word = vec![false];

        for word in words {
            if word.is_empty() {
                return Err(Error::InvalidSet("the empty word cannot be prohibited".into()));
            }
            alphabet.check(word)?;
            let mut state = 0usize;
            for &l in word.letters() {
                let slot = state * n + l as usize;
                if goto[slot] == NONE {
                    let next = depth.len();
                    goto[slot] = next as StateId;
                    goto.extend(std::iter::repeat_n(NONE, n));
                    depth.push(depth[state] + 1);
                    is_word.push(false);
                }
                state = goto[slot] as usize;
            }
            is_word[state] = true;
        }

        let states = depth.len();
        let mut fail = vec![0 as StateId; states];
        let mut dict_link = vec![NONE; states];
        let mut terminal = is_word.clone();
        let mut queue = VecDeque::new();

        for slot in goto.iter_mut().take(n) {
            let t = *slot;
            if t == NONE {
                *slot = 0;
            } else {
                queue.push_back(t as usize);
            }
        }
        while let Some(s) = queue.pop_front() {
            for l in 0..n {
                let slot = s * n + l;
                let t = goto[slot];
                let via_fail = goto[fail[s] as usize * n + l];
                if t == NONE {
                    goto[slot] = via_fail;
                } else {
                    let t = t as usize;
                    fail[t] = via_fail;
                    let f = via_fail as usize;
                    terminal[t] |= terminal[f];
                    dict_link[t] = if is_word[f] { via_fail } else { dict_link[f] };
                    queue.push_back(t);
                }
            }
        }

        Ok(Self { alphabet_size: n, goto, fail, depth, is_word, dict_link, terminal })
    }

    pub fn alphabet_size(&self) -> usize {
        self.alphabet_size
    }

    pub fn state_count(&self) -> usize {
        self.depth.len()
    }

    pub fn root(&self) -> StateId {
        0
    }

    pub fn step(&self, state: StateId, letter: Letter) -> StateId {
        self.goto[state as usize * self.alphabet_size + letter as usize]
    }

    /// A state is terminal when its string ends with a prohibited word.
    pub fn is_terminal(&self, state: StateId) -> bool {
        self.terminal[state as usize]
    }

    /// Length of the string a state represents.
    pub fn depth(&self, state: StateId) -> usize {
        self.depth[state as usize] as usize
    }

    pub fn failure(&self, state: StateId) -> StateId {
        self.fail[state as usize]
    }

    pub fn terminal_count(&self) -> usize {
        self.terminal.iter().filter(|&&t| t).count()
    }

    /// Runs the word from the root; true when no terminal state is entered.
    pub fn accepts_free(&self, letters: &[Letter]) -> bool {
        let mut state = self.root();
        for &l in letters {
            state = self.step(state, l);
            if self.is_terminal(state) {
                return false;
            }
        }
        true
    }

    /// All occurrences of prohibited words as `(start, length)`, 0-based start.
    pub(crate) fn occurrences(&self, letters: &[Letter]) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        let mut state = self.root();
        for (end, &l) in letters.iter().enumerate() {
            state = self.step(state, l);
            if !self.is_terminal(state) {
                continue;
            }
            let mut m = if self.is_word[state as usize] { state } else { self.dict_link[state as usize] };
            while m != NONE {
                let len = self.depth(m);
                out.push((end + 1 - len, len));
                m = self.dict_link[m as usize];
            }
        }
        out
    }

    /// Non-terminal states reachable from the root in DFS post-order, or
    /// `None` when that subgraph has a cycle.
    fn free_postorder(&self) -> Option<Vec<StateId>> {
        const WHITE: u8 = 0;
        const GREY: u8 = 1;
        const BLACK: u8 = 2;
        let n = self.alphabet_size;
        let mut color = vec![WHITE; self.state_count()];
        let mut order = Vec::new();
        // (state, next letter to try)
        let mut stack: Vec<(StateId, usize)> = vec![(self.root(), 0)];
        color[0] = GREY;
        while let Some(top) = stack.last_mut() {
            let (s, next) = *top;
            if next == n {
                color[s as usize] = BLACK;
                order.push(s);
                stack.pop();
                continue;
            }
            top.1 += 1;
            let t = self.step(s, next as Letter);
            if self.is_terminal(t) {
                continue;
            }
            match color[t as usize] {
                WHITE => {
                    color[t as usize] = GREY;
                    stack.push((t, 0));
                }
                GREY => return None,
                _ => {}
            }
        }
        Some(order)
    }

    /// True when only finitely many words avoid the terminal states.
    pub fn is_complete(&self) -> bool {
        self.free_postorder().is_some()
    }

    /// Greatest length of a free word.
    pub fn longest_free_length(&self) -> LengthAnswer {
        match self.longest_table() {
            Some(best) => LengthAnswer::Finite(best[0] as usize),
            None => LengthAnswer::Unbounded,
        }
    }

    /// The lexicographically least free word of greatest length, when the
    /// set is complete.
    pub fn longest_free_word(&self) -> Option<Word> {
        let best = self.longest_table()?;
        let mut word = Word::empty();
        let mut state = self.root();
        while best[state as usize] > 0 {
            let (l, t) = (0..self.alphabet_size as Letter)
                .map(|l| (l, self.step(state, l)))
                .find(|&(_, t)| {
                    !self.is_terminal(t) && best[t as usize] + 1 == best[state as usize]
                })
                .expect("longest path table is consistent");
            word.push(l);
            state = t;
        }
        Some(word)
    }

    /// Longest free continuation from each reachable non-terminal state.
    fn longest_table(&self) -> Option<Vec<u32>> {
        let order = self.free_postorder()?;
        let mut best = vec![0u32; self.state_count()];
        for s in order {
            let mut m = 0;
            for l in 0..self.alphabet_size as Letter {
                let t = self.step(s, l);
                if !self.is_terminal(t) {
                    m = m.max(best[t as usize] + 1);
                }
            }
            best[s as usize] = m;
        }
        Some(best)
    }
}

fn explicit_automaton(set: &ProhibitionSet) -> Result<&FreeWordAutomaton> {
    set.automaton().ok_or_else(|| {
        Error::InvalidSet("completeness is only decided for explicit (finite) sets".into())
    })
}

/// Builds the automaton for an explicit set of words.
pub fn build_automaton(words: &[Word], alphabet: &Alphabet) -> Result<FreeWordAutomaton> {
    FreeWordAutomaton::build(words, alphabet)
}

pub fn is_complete(set: &ProhibitionSet) -> Result<bool> {
    Ok(explicit_automaton(set)?.is_complete())
}

pub fn longest_free_length(set: &ProhibitionSet) -> Result<LengthAnswer> {
    Ok(explicit_automaton(set)?.longest_free_length())
}

/// Is there a free word of length at least `len`?
pub fn exists_free_word(set: &ProhibitionSet, len: usize) -> Result<bool> {
    Ok(match longest_free_length(set)? {
        LengthAnswer::Unbounded => true,
        LengthAnswer::Finite(m) => m >= len,
    })
}

/// Largest `|A|^n` for which [`verify_length_bound`] enumerates all subsets.
pub const LENGTH_BOUND_MAX_WORDS: usize = 16;

/// Outcome of the exhaustive check of `L(n) = |A|^(n-1) + n - 2`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LengthBoundReport {
    pub alphabet_size: usize,
    pub n: usize,
    /// Maximum finite longest-free-length over all complete `S ⊆ A^n`.
    pub observed_max: usize,
    pub formula: usize,
    pub subsets: u64,
    pub complete_subsets: u64,
    /// First subset (in enumeration order) attaining the maximum.
    pub extremal_set: Vec<Word>,
}

impl LengthBoundReport {
    pub fn matches(&self) -> bool {
        self.observed_max == self.formula
    }
}

/// Enumerates every `S ⊆ A^n`, keeps those with a finite longest free
/// length and reports the maximum next to `|A|^(n-1) + n - 2`.
pub fn verify_length_bound(alphabet: &Alphabet, n: usize) -> Result<LengthBoundReport> {
    if n == 0 {
        return Err(Error::InvalidParameter("word length n must be at least 1".into()));
    }
    let a = alphabet.len();
    let word_count = a
        .checked_pow(n as u32)
        .filter(|&c| c <= LENGTH_BOUND_MAX_WORDS)
        .ok_or_else(|| {
            Error::ScaleGuard(format!(
                "|A|^n must be at most {LENGTH_BOUND_MAX_WORDS} for exhaustive subset enumeration"
            ))
        })?;

    let all_words: Vec<Word> = (0..word_count)
        .map(|mut code| {
            let mut letters = vec![0 as Letter; n];
            for slot in letters.iter_mut().rev() {
                *slot = (code % a) as Letter;
                code /= a;
            }
            Word::from(letters)
        })
        .collect();

    let subsets = 1u64 << word_count;
    let mut observed_max = 0;
    let mut complete_subsets = 0;
    let mut extremal_mask = None;
    for mask in 0..subsets {
        let set: Vec<Word> = all_words
            .iter()
            .enumerate()
            .filter(|(i, _)| mask >> i & 1 == 1)
            .map(|(_, w)| w.clone())
            .collect();
        let automaton = FreeWordAutomaton::build(&set, alphabet)?;
        if let LengthAnswer::Finite(len) = automaton.longest_free_length() {
            complete_subsets += 1;
            if extremal_mask.is_none() || len > observed_max {
                observed_max = len;
                extremal_mask = Some(mask);
            }
        }
    }

    let extremal_set = extremal_mask
        .map(|mask| {
            all_words
                .iter()
                .enumerate()
                .filter(|(i, _)| mask >> i & 1 == 1)
                .map(|(_, w)| w.clone())
                .collect()
        })
        .unwrap_or_default();

    Ok(LengthBoundReport {
        alphabet_size: a,
        n,
        observed_max,
        formula: a.pow(n as u32 - 1) + n - 2,
        subsets,
        complete_subsets,
        extremal_set,
    })
}
