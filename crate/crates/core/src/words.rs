//! Alphabets, words and the elementary measures on them.
//!
//! A [`Word`] stores letter *indices* (`0` is the first letter of its
//! alphabet), so the same word value can be rendered over any alphabet that
//! is large enough. Positions exposed through the public API are 1-based.

use std::fmt;
use std::ops::Add;

use crate::error::{Error, Result};

/// Index of a letter inside its alphabet (0-based).
pub type Letter = u8;

/// Largest supported alphabet; letters are stored as `u8`.
pub const MAX_ALPHABET: usize = 256;

/// Symbols used by [`Alphabet::standard`]: `a_i` is rendered as the i-th char.
pub const STANDARD_SYMBOLS: &str =
    "123456789abcdefghijklmnopqrstuvwxyzABCDEFGHIJKLMNOPQRSTUVWXYZ0";

/// A finite ordered set of letters.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Alphabet {
    size: usize,
    symbols: Option<Vec<char>>,
}

impl Alphabet {
    /// Builds an alphabet from a string of distinct characters, e.g. `"abc"`.
    pub fn new(symbols: &str) -> Result<Self> {
        let chars: Vec<char> = symbols.chars().collect();
        if chars.is_empty() {
            return Err(Error::InvalidAlphabet("alphabet must have at least one letter".into()));
        }
        if chars.len() > MAX_ALPHABET {
            return Err(Error::InvalidAlphabet(format!(
                "at most {MAX_ALPHABET} letters are supported"
            )));
        }
        for (i, c) in chars.iter().enumerate() {
            if c.is_whitespace() || *c == ',' {
                return Err(Error::InvalidAlphabet(format!("letter {c:?} is not allowed")));
            }
            if chars[..i].contains(c) {
                return Err(Error::InvalidAlphabet(format!("letter {c:?} repeated")));
            }
        }
        Ok(Self { size: chars.len(), symbols: Some(chars) })
    }

    /// The alphabet `a_1, ..., a_n` rendered with [`STANDARD_SYMBOLS`] when
    /// `n` fits, and as comma-separated `a<i>` tokens otherwise.
    pub fn standard(n: usize) -> Result<Self> {
        if n == 0 {
            return Err(Error::InvalidAlphabet("alphabet must have at least one letter".into()));
        }
        if n > MAX_ALPHABET {
            return Err(Error::InvalidAlphabet(format!(
                "at most {MAX_ALPHABET} letters are supported"
            )));
        }
        let table: Vec<char> = STANDARD_SYMBOLS.chars().collect();
        let symbols = (n <= table.len()).then(|| table[..n].to_vec());
        Ok(Self { size: n, symbols })
    }

    pub fn len(&self) -> usize {
        self.size
    }

    pub fn is_empty(&self) -> bool {
        self.size == 0
    }

    /// Letter indices in order.
    pub fn letters(&self) -> impl Iterator<Item = Letter> {
        (0..self.size).map(|i| i as Letter)
    }

    /// Character of the letter `a_i` (1-based `i`), if the alphabet has symbols.
    pub fn symbol(&self, i: usize) -> Option<char> {
        if i == 0 {
            return None;
        }
        self.symbols.as_ref().and_then(|s| s.get(i - 1).copied())
    }

    /// The declaration string of the alphabet (e.g. `"abc"`), if it has symbols.
    pub fn symbols(&self) -> Option<String> {
        self.symbols.as_ref().map(|s| s.iter().collect())
    }

    pub fn contains(&self, letter: Letter) -> bool {
        (letter as usize) < self.size
    }

    /// Parses a word written over this alphabet. Alphabets without symbols
    /// accept the indexed form `a1,a2,...`.
    pub fn parse_word(&self, text: &str) -> Result<Word> {
        let text = text.trim();
        match &self.symbols {
            Some(symbols) => text
                .chars()
                .map(|c| {
                    symbols
                        .iter()
                        .position(|s| *s == c)
                        .map(|i| i as Letter)
                        .ok_or_else(|| Error::InvalidWord(format!("letter {c:?} not in alphabet")))
                })
                .collect::<Result<Vec<_>>>()
                .map(Word::from),
            None => parse_indexed(text, self.size),
        }
    }

    /// Renders a word over this alphabet.
    pub fn render(&self, word: &Word) -> String {
        match &self.symbols {
            Some(symbols) if word.letters().iter().all(|&l| (l as usize) < symbols.len()) => {
                word.letters().iter().map(|&l| symbols[l as usize]).collect()
            }
            _ => word.to_indexed(),
        }
    }

    /// Checks that every letter of `word` belongs to this alphabet.
    pub fn check(&self, word: &Word) -> Result<()> {
        match word.letters().iter().find(|&&l| !self.contains(l)) {
            Some(&l) => Err(Error::InvalidWord(format!(
                "letter a{} outside an alphabet of {} letters",
                l as usize + 1,
                self.size
            ))),
            None => Ok(()),
        }
    }
}

fn parse_indexed(text: &str, size: usize) -> Result<Word> {
    if text.is_empty() {
        return Ok(Word::empty());
    }
    text.split(',')
        .map(|tok| {
            let tok = tok.trim();
            let idx: usize = tok
                .strip_prefix('a')
                .and_then(|d| d.parse().ok())
                .ok_or_else(|| Error::InvalidWord(format!("bad indexed letter {tok:?}")))?;
            if idx == 0 || idx > size {
                return Err(Error::InvalidWord(format!("letter {tok} not in alphabet")));
            }
            Ok((idx - 1) as Letter)
        })
        .collect::<Result<Vec<_>>>()
        .map(Word::from)
}

/// A finite sequence of letters.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Word(Vec<Letter>);

impl Word {
    pub fn empty() -> Self {
        Self(Vec::new())
    }

    /// Builds a word from 1-based letter numbers, `a_i` given as `i`.
    ///
    /// ```
    /// use crucial_words::Word;
    /// assert_eq!(Word::from_indices(&[1, 2, 1]).letters(), &[0, 1, 0]);
    /// ```
    pub fn from_indices(indices: &[usize]) -> Self {
        Self(
            indices
                .iter()
                .map(|&i| {
                    assert!((1..=MAX_ALPHABET).contains(&i), "letter index {i} out of range");
                    (i - 1) as Letter
                })
                .collect(),
        )
    }

    pub fn letters(&self) -> &[Letter] {
        &self.0
    }

    pub fn into_letters(self) -> Vec<Letter> {
        self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn push(&mut self, letter: Letter) {
        self.0.push(letter);
    }

    /// `self` followed by `letter`.
    pub fn appended(&self, letter: Letter) -> Word {
        let mut letters = Vec::with_capacity(self.0.len() + 1);
        letters.extend_from_slice(&self.0);
        letters.push(letter);
        Word(letters)
    }

    pub fn concat(&self, other: &Word) -> Word {
        let mut letters = self.0.clone();
        letters.extend_from_slice(&other.0);
        Word(letters)
    }

    /// The `len` consecutive letters starting at 1-based position `pos`.
    pub fn subword(&self, pos: usize, len: usize) -> Option<Word> {
        if pos == 0 || pos - 1 + len > self.0.len() {
            return None;
        }
        Some(Word(self.0[pos - 1..pos - 1 + len].to_vec()))
    }

    /// All subwords of length `len` with their 1-based start, left to right.
    /// Empty when `len` exceeds the word length.
    pub fn subwords(&self, len: usize) -> impl Iterator<Item = (usize, Word)> + '_ {
        let count = (self.0.len() + 1).saturating_sub(len);
        (0..count).map(move |i| (i + 1, Word(self.0[i..i + len].to_vec())))
    }

    pub fn is_suffix_of(&self, other: &Word) -> bool {
        other.0.ends_with(&self.0)
    }

    pub fn reversed(&self) -> Word {
        Word(self.0.iter().rev().copied().collect())
    }

    /// Applies a letter relabeling: letter `l` becomes `map[l]`.
    pub fn relabeled(&self, map: &[Letter]) -> Word {
        Word(self.0.iter().map(|&l| map[l as usize]).collect())
    }

    /// Indexed rendering `a1,a2,...` independent of any alphabet symbols.
    pub fn to_indexed(&self) -> String {
        self.0
            .iter()
            .map(|&l| format!("a{}", l as usize + 1))
            .collect::<Vec<_>>()
            .join(",")
    }
}

impl From<Vec<Letter>> for Word {
    fn from(letters: Vec<Letter>) -> Self {
        Word(letters)
    }
}

impl From<&[Letter]> for Word {
    fn from(letters: &[Letter]) -> Self {
        Word(letters.to_vec())
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_indexed())
    }
}

/// Occurrence counts of each letter in a word.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ContentVector(Vec<usize>);

impl ContentVector {
    pub fn zero(n: usize) -> Self {
        Self(vec![0; n])
    }

    pub fn counts(&self) -> &[usize] {
        &self.0
    }

    pub fn total(&self) -> usize {
        self.0.iter().sum()
    }

    /// Count of letter `a_i`, 1-based.
    pub fn count(&self, i: usize) -> usize {
        self.0[i - 1]
    }
}

impl Add for &ContentVector {
    type Output = ContentVector;

    fn add(self, rhs: &ContentVector) -> ContentVector {
        assert_eq!(self.0.len(), rhs.0.len(), "content vectors over different alphabets");
        ContentVector(self.0.iter().zip(&rhs.0).map(|(a, b)| a + b).collect())
    }
}

impl Add for ContentVector {
    type Output = ContentVector;

    fn add(self, rhs: ContentVector) -> ContentVector {
        &self + &rhs
    }
}

pub fn content_vector(word: &Word, alphabet: &Alphabet) -> Result<ContentVector> {
    alphabet.check(word)?;
    let mut counts = vec![0; alphabet.len()];
    for &l in word.letters() {
        counts[l as usize] += 1;
    }
    Ok(ContentVector(counts))
}

/// Number of positions at which two equal-length words differ.
pub fn hamming_distance(x: &Word, y: &Word) -> Result<usize> {
    if x.len() != y.len() {
        return Err(Error::LengthMismatch { left: x.len(), right: y.len() });
    }
    Ok(mismatches(x.letters(), y.letters()))
}

pub(crate) fn mismatches(x: &[Letter], y: &[Letter]) -> usize {
    x.iter().zip(y).filter(|(a, b)| a != b).count()
}
