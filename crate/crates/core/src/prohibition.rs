//! Prohibition sets and violation detection.
//!
//! Three parametric families are supported next to explicit word lists:
//!
//! * [`ProhibitionSet::squares`]: every `XX` with `X` non-empty;
//! * [`ProhibitionSet::abelian_squares`]: every `XY` where `X` and `Y` are
//!   non-empty and have the same content vector;
//! * [`ProhibitionSet::hamming_pairs`]: every `XY` with `|X| = |Y| >= k + 1`
//!   and Hamming distance `d(X, Y) <= k`.
//!
//! Each parametric member is a word of even length `2h` split in two halves,
//! so violations are located by fixing the half length `h` and sliding a
//! window over the word while maintaining the halves' mismatch count (or
//! content difference) in O(1) per shift.

use std::collections::HashSet;
use std::fmt;
use std::sync::Arc;

use crate::automaton::FreeWordAutomaton;
use crate::error::{Error, Result};
use crate::words::{Alphabet, Letter, Word};

/// Which family a set (or a violation) belongs to.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum SetKind {
    Explicit,
    Squares,
    AbelianSquares,
    HammingPairs { k: usize },
}

impl fmt::Display for SetKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SetKind::Explicit => f.write_str("explicit"),
            SetKind::Squares => f.write_str("square"),
            SetKind::AbelianSquares => f.write_str("abelian-square"),
            SetKind::HammingPairs { k } => write!(f, "hamming-pair(k={k})"),
        }
    }
}

#[derive(Debug)]
struct ExplicitSet {
    words: Vec<Word>,
    lookup: HashSet<Vec<Letter>>,
    max_len: usize,
    automaton: FreeWordAutomaton,
}

#[derive(Debug, Clone)]
enum Variant {
    Explicit(Arc<ExplicitSet>),
    Squares,
    AbelianSquares,
    HammingPairs(usize),
}

/// A set of prohibited words over a fixed alphabet.
#[derive(Debug, Clone)]
pub struct ProhibitionSet {
    alphabet: Alphabet,
    variant: Variant,
}

/// The leftmost (then shortest) prohibited subword of a word.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct ViolationSpan {
    /// 1-based start position.
    pub start: usize,
    pub length: usize,
    pub kind: SetKind,
}

impl ViolationSpan {
    /// The prohibited subword this span points at.
    pub fn subword(&self, word: &Word) -> Word {
        word.subword(self.start, self.length).expect("span lies inside the word")
    }
}

impl ProhibitionSet {
    /// An explicit finite set. Duplicates are merged; empty words are rejected.
    pub fn explicit(alphabet: Alphabet, words: Vec<Word>) -> Result<Self> {
        let mut words = words;
        words.sort();
        words.dedup();
        let automaton = FreeWordAutomaton::build(&words, &alphabet)?;
        let lookup = words.iter().map(|w| w.letters().to_vec()).collect();
        let max_len = words.iter().map(Word::len).max().unwrap_or(0);
        Ok(Self {
            alphabet,
            variant: Variant::Explicit(Arc::new(ExplicitSet { words, lookup, max_len, automaton })),
        })
    }

    pub fn squares(alphabet: Alphabet) -> Self {
        Self { alphabet, variant: Variant::Squares }
    }

    pub fn abelian_squares(alphabet: Alphabet) -> Self {
        Self { alphabet, variant: Variant::AbelianSquares }
    }

    pub fn hamming_pairs(alphabet: Alphabet, k: usize) -> Result<Self> {
        if k == 0 {
            return Err(Error::InvalidParameter("hamming pairs need k >= 1".into()));
        }
        Ok(Self { alphabet, variant: Variant::HammingPairs(k) })
    }

    /// Parses the set file format: the alphabet on the first line, then one
    /// prohibited word per non-empty line.
    pub fn parse_set_file(text: &str) -> Result<Self> {
        let mut lines = text.lines().map(str::trim);
        let header = lines
            .next()
            .filter(|l| !l.is_empty())
            .ok_or_else(|| Error::Parse("missing alphabet line".into()))?;
        let alphabet = Alphabet::new(header)?;
        let words = lines
            .filter(|l| !l.is_empty())
            .map(|l| alphabet.parse_word(l))
            .collect::<Result<Vec<_>>>()?;
        Self::explicit(alphabet, words)
    }

    /// Serializes an explicit set in the set file format.
    pub fn to_set_file(&self) -> Option<String> {
        let words = self.explicit_words()?;
        let mut out = self.alphabet.symbols()?;
        out.push('\n');
        for w in words {
            out.push_str(&self.alphabet.render(w));
            out.push('\n');
        }
        Some(out)
    }

    pub fn alphabet(&self) -> &Alphabet {
        &self.alphabet
    }

    pub fn kind(&self) -> SetKind {
        match self.variant {
            Variant::Explicit(_) => SetKind::Explicit,
            Variant::Squares => SetKind::Squares,
            Variant::AbelianSquares => SetKind::AbelianSquares,
            Variant::HammingPairs(k) => SetKind::HammingPairs { k },
        }
    }

    pub fn explicit_words(&self) -> Option<&[Word]> {
        match &self.variant {
            Variant::Explicit(e) => Some(&e.words),
            _ => None,
        }
    }

    pub fn automaton(&self) -> Option<&FreeWordAutomaton> {
        match &self.variant {
            Variant::Explicit(e) => Some(&e.automaton),
            _ => None,
        }
    }

    /// Parametric sets are closed under renaming letters.
    pub fn is_permutation_invariant(&self) -> bool {
        !matches!(self.variant, Variant::Explicit(_))
    }

    /// Does `word` itself belong to the set?
    pub fn contains(&self, word: &Word) -> bool {
        self.contains_letters(word.letters())
    }

    pub(crate) fn contains_letters(&self, w: &[Letter]) -> bool {
        let len = w.len();
        match &self.variant {
            Variant::Explicit(e) => e.lookup.contains(w),
            _ if len < 2 || len % 2 == 1 => false,
            Variant::Squares => w[..len / 2] == w[len / 2..],
            Variant::AbelianSquares => {
                if w.iter().any(|&l| !self.alphabet.contains(l)) {
                    return false;
                }
                let mut diff = vec![0i64; self.alphabet.len()];
                for &l in &w[..len / 2] {
                    diff[l as usize] += 1;
                }
                for &l in &w[len / 2..] {
                    diff[l as usize] -= 1;
                }
                diff.iter().all(|&d| d == 0)
            }
            Variant::HammingPairs(k) => {
                let h = len / 2;
                h > *k && crate::words::mismatches(&w[..h], &w[h..]) <= *k
            }
        }
    }

    /// Leftmost, then shortest, prohibited subword of `word`.
    pub fn find_violation(&self, word: &Word) -> Result<Option<ViolationSpan>> {
        self.alphabet.check(word)?;
        let w = word.letters();
        let found = match &self.variant {
            Variant::Explicit(e) => e.automaton.occurrences(w).into_iter().min(),
            Variant::Squares => scan_mismatch(w, 1, 0),
            Variant::HammingPairs(k) => scan_mismatch(w, k + 1, *k),
            Variant::AbelianSquares => scan_abelian(w, self.alphabet.len()),
        };
        Ok(found.map(|(start, length)| ViolationSpan { start: start + 1, length, kind: self.kind() }))
    }

    pub fn is_free(&self, word: &Word) -> Result<bool> {
        Ok(self.find_violation(word)?.is_none())
    }

    /// Length of the shortest suffix of `w` that belongs to the set.
    ///
    /// When `w` without its last letter is free, this is exactly the test
    /// for whether appending that letter created a violation.
    pub(crate) fn shortest_member_suffix(&self, w: &[Letter]) -> Option<usize> {
        let len = w.len();
        match &self.variant {
            Variant::Explicit(e) => {
                (1..=e.max_len.min(len)).find(|&l| e.lookup.contains(&w[len - l..]))
            }
            Variant::Squares => (1..=len / 2)
                .find(|&h| w[len - 2 * h..len - h] == w[len - h..])
                .map(|h| 2 * h),
            Variant::HammingPairs(k) => (k + 1..=len / 2)
                .find(|&h| within_distance(&w[len - 2 * h..len - h], &w[len - h..], *k))
                .map(|h| 2 * h),
            Variant::AbelianSquares => abelian_suffix(w, self.alphabet.len()),
        }
    }

    /// Minimum length a member of the set can have.
    pub fn min_member_len(&self) -> usize {
        match &self.variant {
            Variant::Explicit(e) => e.words.iter().map(Word::len).min().unwrap_or(0),
            Variant::Squares | Variant::AbelianSquares => 2,
            Variant::HammingPairs(k) => 2 * k + 2,
        }
    }
}

pub fn find_violation(word: &Word, set: &ProhibitionSet) -> Result<Option<ViolationSpan>> {
    set.find_violation(word)
}

pub fn is_free(word: &Word, set: &ProhibitionSet) -> Result<bool> {
    set.is_free(word)
}

pub fn membership(word: &Word, set: &ProhibitionSet) -> bool {
    set.contains(word)
}

fn within_distance(x: &[Letter], y: &[Letter], k: usize) -> bool {
    let mut d = 0;
    for (a, b) in x.iter().zip(y) {
        if a != b {
            d += 1;
            if d > k {
                return false;
            }
        }
    }
    true
}

/// Smallest `(start, 2h)` with `h >= min_half` whose halves differ in at
/// most `allowed` positions.
fn scan_mismatch(w: &[Letter], min_half: usize, allowed: usize) -> Option<(usize, usize)> {
    let len = w.len();
    let mut best: Option<(usize, usize)> = None;
    for h in min_half..=len / 2 {
        // Only starts strictly left of the current best can improve on it.
        let last_start = match best {
            Some((0, _)) => break,
            Some((s, _)) => (s - 1).min(len - 2 * h),
            None => len - 2 * h,
        };
        let mut d = crate::words::mismatches(&w[..h], &w[h..2 * h]);
        let mut s = 0;
        loop {
            if d <= allowed {
                best = Some((s, 2 * h));
                break;
            }
            if s == last_start {
                break;
            }
            d -= (w[s] != w[s + h]) as usize;
            d += (w[s + h] != w[s + 2 * h]) as usize;
            s += 1;
        }
    }
    best
}

/// Content difference `cnt(X) - cnt(Y)` with a count of non-zero entries.
struct ContentDiff {
    diff: Vec<i32>,
    nonzero: usize,
}

impl ContentDiff {
    fn new(n: usize) -> Self {
        Self { diff: vec![0; n], nonzero: 0 }
    }

    #[inline]
    fn add(&mut self, letter: Letter, delta: i32) {
        let slot = &mut self.diff[letter as usize];
        let before = *slot != 0;
        *slot += delta;
        let after = *slot != 0;
        match (before, after) {
            (false, true) => self.nonzero += 1,
            (true, false) => self.nonzero -= 1,
            _ => {}
        }
    }

    fn is_balanced(&self) -> bool {
        self.nonzero == 0
    }
}

fn scan_abelian(w: &[Letter], n: usize) -> Option<(usize, usize)> {
    let len = w.len();
    let mut best: Option<(usize, usize)> = None;
    for h in 1..=len / 2 {
        let last_start = match best {
            Some((0, _)) => break,
            Some((s, _)) => (s - 1).min(len - 2 * h),
            None => len - 2 * h,
        };
        let mut cd = ContentDiff::new(n);
        for i in 0..h {
            cd.add(w[i], 1);
            cd.add(w[h + i], -1);
        }
        let mut s = 0;
        loop {
            if cd.is_balanced() {
                best = Some((s, 2 * h));
                break;
            }
            if s == last_start {
                break;
            }
            cd.add(w[s], -1);
            cd.add(w[s + h], 2);
            cd.add(w[s + 2 * h], -1);
            s += 1;
        }
    }
    best
}

fn abelian_suffix(w: &[Letter], n: usize) -> Option<usize> {
    let len = w.len();
    if len < 2 {
        return None;
    }
    let mut cd = ContentDiff::new(n);
    cd.add(w[len - 2], 1);
    cd.add(w[len - 1], -1);
    let mut h = 1;
    loop {
        if cd.is_balanced() {
            return Some(2 * h);
        }
        if 2 * h + 2 > len {
            return None;
        }
        // X = w[len-2h..len-h] gives its last letter to Y and grows by two on the left.
        cd.add(w[len - h - 1], -2);
        cd.add(w[len - 2 * h - 1], 1);
        cd.add(w[len - 2 * h - 2], 1);
        h += 1;
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn explicit(alphabet: &str, words: &[&str]) -> ProhibitionSet {
        let a = Alphabet::new(alphabet).unwrap();
        let ws = words.iter().map(|w| a.parse_word(w).unwrap()).collect();
        ProhibitionSet::explicit(a, ws).unwrap()
    }

    fn word(set: &ProhibitionSet, text: &str) -> Word {
        set.alphabet().parse_word(text).unwrap()
    }

    fn span(set: &ProhibitionSet, text: &str) -> Option<(usize, usize)> {
        set.find_violation(&word(set, text)).unwrap().map(|v| (v.start, v.length))
    }

    #[test]
    fn explicit_examples() {
        let s = explicit("ab", &["aa", "ba"]);
        assert_eq!(span(&s, "abbb"), None);
        let s = explicit("1234", &["123", "13", "14", "11", "22", "33", "44"]);
        assert_eq!(span(&s, "124124124"), None);
        let s = explicit("abc", &["aa", "cab", "acac"]);
        assert!(s.is_free(&word(&s, "abaca")).unwrap());
        assert_eq!(span(&s, "abacab"), Some((4, 3)));
    }

    #[test]
    fn explicit_prefers_leftmost_then_shortest() {
        let s = explicit("ab", &["ab", "aab", "b"]);
        // "aab" starts at 1, "ab" at 2, "b" at 3.
        assert_eq!(span(&s, "aab"), Some((1, 3)));
        let s = explicit("ab", &["abab", "ab"]);
        assert_eq!(span(&s, "abab"), Some((1, 2)));
    }

    #[test]
    fn square_examples() {
        let s = ProhibitionSet::squares(Alphabet::new("abc").unwrap());
        assert_eq!(span(&s, "abab"), Some((1, 4)));
        assert_eq!(span(&s, "aa"), Some((1, 2)));
        assert_eq!(span(&s, "abcacb"), None);
        assert!(s.contains(&word(&s, "abab")));
        assert!(!s.contains(&word(&s, "aba")));
    }

    #[test]
    fn abelian_examples() {
        let s = ProhibitionSet::abelian_squares(Alphabet::new("ab").unwrap());
        // Scan of all (start, half) pairs: start 1 has no abelian square
        // ("ab" no, "abba" yes at half 2); start 2 has "bb". Leftmost wins.
        assert_eq!(span(&s, "abba"), Some((1, 4)));
        assert!(s.contains(&word(&s, "abba")));
        let s3 = ProhibitionSet::abelian_squares(Alphabet::new("abc").unwrap());
        assert_eq!(span(&s3, "cabba"), Some((2, 4)));
        assert_eq!(span(&s3, "cbba"), Some((2, 2)));
        assert_eq!(span(&s3, "abcacb"), Some((1, 6)));
        assert_eq!(span(&s3, "abcba"), None);
    }

    #[test]
    fn hamming_examples() {
        let a = Alphabet::new("12").unwrap();
        let s = ProhibitionSet::hamming_pairs(a, 1).unwrap();
        assert!(s.is_free(&word(&s, "112211")).unwrap());
        let v = s.find_violation(&word(&s, "1122112")).unwrap().unwrap();
        assert_eq!((v.start, v.length), (2, 6));
        assert!(s.contains(&v.subword(&word(&s, "1122112"))));
        assert!(!s.contains(&word(&s, "1122")));
        assert!(s.contains(&word(&s, "1112")));
        assert!(!s.contains(&word(&s, "11")));
        assert!(ProhibitionSet::hamming_pairs(Alphabet::new("12").unwrap(), 0).is_err());
    }

    #[test]
    fn foreign_letters_are_rejected() {
        let s = ProhibitionSet::squares(Alphabet::new("ab").unwrap());
        let w = Word::from_indices(&[1, 3]);
        assert!(matches!(s.find_violation(&w), Err(Error::InvalidWord(_))));
    }

    #[test]
    fn empty_word_is_free() {
        let s = ProhibitionSet::squares(Alphabet::new("ab").unwrap());
        assert!(s.is_free(&Word::empty()).unwrap());
        assert_eq!(s.shortest_member_suffix(&[]), None);
    }

    #[test]
    fn set_file_round_trip() {
        let text = "abc\naa\n\ncab\nacac\naa\n";
        let s = ProhibitionSet::parse_set_file(text).unwrap();
        assert_eq!(s.explicit_words().unwrap().len(), 3);
        let again = ProhibitionSet::parse_set_file(&s.to_set_file().unwrap()).unwrap();
        assert_eq!(again.explicit_words(), s.explicit_words());
        assert!(ProhibitionSet::parse_set_file("").is_err());
        assert!(ProhibitionSet::parse_set_file("ab\nac\n").is_err());
    }

    #[test]
    fn suffix_checks_agree_with_membership() {
        let a = Alphabet::new("abc").unwrap();
        let sets = [
            ProhibitionSet::squares(a.clone()),
            ProhibitionSet::abelian_squares(a.clone()),
            ProhibitionSet::hamming_pairs(a.clone(), 1).unwrap(),
        ];
        let w = [0u8, 1, 2, 0, 2, 1, 0, 1, 1, 2, 0, 1];
        for s in &sets {
            for end in 0..=w.len() {
                let prefix = &w[..end];
                let expect = (1..=end).find(|&l| s.contains_letters(&prefix[end - l..]));
                assert_eq!(s.shortest_member_suffix(prefix), expect, "{:?} {end}", s.kind());
            }
        }
    }
}
