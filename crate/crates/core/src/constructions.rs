//! Closed-form crucial words for the parametric families.
//!
//! Words are returned over the standard alphabet `a_1, ..., a_n` (letter
//! index `i - 1` for `a_i`).

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::prohibition::ProhibitionSet;
use crate::words::{Alphabet, Letter, Word};

fn letter(i: usize) -> Letter {
    (i - 1) as Letter
}

fn check_alphabet_size(n: usize) -> Result<()> {
    if n > crate::words::MAX_ALPHABET {
        return Err(Error::InvalidParameter(format!(
            "n = {n} exceeds the supported alphabet size"
        )));
    }
    Ok(())
}

/// `X_1 = a_1`, `X_i = X_(i-1) a_i X_(i-1)`; the minimal square-crucial word.
pub fn construct_s1_min(n: usize) -> Result<Word> {
    if n == 0 {
        return Err(Error::InvalidParameter("n must be at least 1".into()));
    }
    // 2^n - 1 letters; keep it addressable.
    if n > 30 {
        return Err(Error::InvalidParameter("n > 30 gives a word longer than 2^30".into()));
    }
    let mut x: Vec<Letter> = vec![letter(1)];
    for i in 2..=n {
        let mut next = Vec::with_capacity(2 * x.len() + 1);
        next.extend_from_slice(&x);
        next.push(letter(i));
        next.extend_from_slice(&x);
        x = next;
    }
    Ok(Word::from(x))
}

/// The linear-length abelian-square crucial word
/// `a_(n-2) a_(n-1) a_(n-3) a_(n-2) ... a_1 a_2 | a_n a_(n-2) ... a_1 a_2 ... a_(n-2) a_n`
/// of length `4n - 7`.
pub fn construct_s2_min(n: usize) -> Result<Word> {
    if n < 3 {
        return Err(Error::InvalidParameter("n must be at least 3".into()));
    }
    check_alphabet_size(n)?;
    let mut w = Vec::with_capacity(4 * n - 7);
    for i in (1..=n - 2).rev() {
        w.push(letter(i));
        w.push(letter(i + 1));
    }
    w.push(letter(n));
    w.extend((1..=n - 2).rev().map(letter));
    w.extend((2..=n - 2).map(letter));
    w.push(letter(n));
    Ok(Word::from(w))
}

/// [`construct_s2_min`] relabeled by `a_n -> a_1`, `a_i -> a_(i+1)`, so that
/// the minimal i-endings nest in letter order.
pub fn construct_s2_alt_u(n: usize) -> Result<Word> {
    let w = construct_s2_min(n)?;
    let shift: Vec<Letter> = (0..n).map(|i| ((i + 1) % n) as Letter).collect();
    Ok(w.relabeled(&shift))
}

/// The step-by-step construction `X_n = B_(n-1) a_n X_(n-1)` with
/// `B_m = B_(m-2) a_m B_(m-2)`, `B_1 = a_1`, `B_2 = a_2`,
/// `B_(-1) = B_0 = X_0 = ε`. Its length is
/// `(3 - (n mod 2)) 2^floor((n+1)/2) - 3`.
pub fn construct_s2_recursive(n: usize) -> Result<Word> {
    if n == 0 {
        return Err(Error::InvalidParameter("n must be at least 1".into()));
    }
    if n > 40 {
        return Err(Error::InvalidParameter("n > 40 gives a word longer than 2^21".into()));
    }
    // blocks[m] = B_m for m >= 0; B_0 is empty.
    let mut blocks: Vec<Vec<Letter>> = vec![Vec::new()];
    for m in 1..n {
        let b = match m {
            1 => vec![letter(1)],
            2 => vec![letter(2)],
            _ => {
                let inner = &blocks[m - 2];
                let mut b = Vec::with_capacity(2 * inner.len() + 1);
                b.extend_from_slice(inner);
                b.push(letter(m));
                b.extend_from_slice(inner);
                b
            }
        };
        blocks.push(b);
    }
    let mut x: Vec<Letter> = Vec::new();
    for i in 1..=n {
        let mut next = blocks[i - 1].clone();
        next.push(letter(i));
        next.extend_from_slice(&x);
        x = next;
    }
    Ok(Word::from(x))
}

/// Length of [`construct_s2_recursive`]`(n)` by the closed formula.
pub fn s2_recursive_length(n: usize) -> usize {
    (3 - n % 2) * (1usize << n.div_ceil(2)) - 3
}

/// `p_1 ... p_k x p_1 ... p_k` with `p_i = a_1`, `x = a_2`; for a one-letter
/// alphabet the word `a_1^(2k+1)`.
pub fn construct_s3_min(n: usize, k: usize) -> Result<Word> {
    if n == 0 || k == 0 {
        return Err(Error::InvalidParameter("n and k must be at least 1".into()));
    }
    check_alphabet_size(n)?;
    let mut w = vec![letter(1); 2 * k + 1];
    if n >= 2 {
        w[k] = letter(2);
    }
    Ok(Word::from(w))
}

/// `1^(k+1) 2^(k+1) 1^(k+1)`: the longest binary crucial word for
/// Hamming pairs.
pub fn construct_s3_max2(k: usize) -> Result<Word> {
    if k == 0 {
        return Err(Error::InvalidParameter("k must be at least 1".into()));
    }
    let block = k + 1;
    let mut w = vec![letter(1); 3 * block];
    w[block..2 * block].fill(letter(2));
    Ok(Word::from(w))
}

/// The construction families, as named on the command line.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Family {
    S1,
    S2,
    S2Rec,
    S2U,
    S3Min,
    S3Max2,
}

impl Family {
    pub const ALL: [Family; 6] =
        [Family::S1, Family::S2, Family::S2Rec, Family::S2U, Family::S3Min, Family::S3Max2];

    pub fn construct(self, n: usize, k: Option<usize>) -> Result<Word> {
        let need_k = || k.ok_or_else(|| Error::InvalidParameter(format!("family {self} needs k")));
        match self {
            Family::S1 => construct_s1_min(n),
            Family::S2 => construct_s2_min(n),
            Family::S2Rec => construct_s2_recursive(n),
            Family::S2U => construct_s2_alt_u(n),
            Family::S3Min => construct_s3_min(n, need_k()?),
            Family::S3Max2 => {
                if n != 2 {
                    return Err(Error::InvalidParameter("s3max2 is defined for n = 2".into()));
                }
                construct_s3_max2(need_k()?)
            }
        }
    }

    /// The prohibition set the family's words are crucial for.
    pub fn prohibition_set(self, n: usize, k: Option<usize>) -> Result<ProhibitionSet> {
        let alphabet = Alphabet::standard(n)?;
        match self {
            Family::S1 => Ok(ProhibitionSet::squares(alphabet)),
            Family::S2 | Family::S2Rec | Family::S2U => Ok(ProhibitionSet::abelian_squares(alphabet)),
            Family::S3Min | Family::S3Max2 => ProhibitionSet::hamming_pairs(
                alphabet,
                k.ok_or_else(|| Error::InvalidParameter(format!("family {self} needs k")))?,
            ),
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Family::S1 => "s1",
            Family::S2 => "s2",
            Family::S2Rec => "s2rec",
            Family::S2U => "s2u",
            Family::S3Min => "s3min",
            Family::S3Max2 => "s3max2",
        })
    }
}

impl FromStr for Family {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Family::ALL
            .into_iter()
            .find(|f| f.to_string() == s)
            .ok_or_else(|| Error::InvalidParameter(format!("unknown family {s:?}")))
    }
}
