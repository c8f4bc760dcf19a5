//! Iterated morphisms and the block blow-up used to build infinite words
//! free from Hamming pairs over three letters.

use crate::error::{Error, Result};
use crate::words::{Alphabet, Letter, Word};

/// A letter-to-word substitution.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Morphism {
    images: Vec<Word>,
}

impl Morphism {
    /// `images[i]` is the image of the letter with index `i`; every image
    /// must be non-empty.
    pub fn new(images: Vec<Word>) -> Result<Self> {
        if images.iter().any(Word::is_empty) {
            return Err(Error::InvalidInput("morphism images must be non-empty".into()));
        }
        Ok(Self { images })
    }

    /// `a -> abc, b -> ac, c -> b` over `{a, b, c}`, whose fixed point from
    /// `a` is square-free.
    pub fn thue() -> Self {
        Self {
            images: vec![
                Word::from(vec![0, 1, 2]),
                Word::from(vec![0, 2]),
                Word::from(vec![1]),
            ],
        }
    }

    pub fn identity(n: usize) -> Self {
        Self { images: (0..n).map(|l| Word::from(vec![l as Letter])).collect() }
    }

    pub fn source_size(&self) -> usize {
        self.images.len()
    }

    pub fn image(&self, letter: Letter) -> Option<&Word> {
        self.images.get(letter as usize)
    }

    /// Can the fixed point be grown from `seed`?
    pub fn is_prolongable(&self, seed: Letter) -> bool {
        self.image(seed).is_some_and(|img| img.len() >= 2 && img.letters()[0] == seed)
    }
}

/// The alphabet `{a, b, c}` the ternary sequence is written over.
pub fn thue_alphabet() -> Alphabet {
    Alphabet::new("abc").expect("static alphabet")
}

/// The alphabet `{1, 2, 3}` of the blown-up word.
pub fn block_alphabet() -> Alphabet {
    Alphabet::new("123").expect("static alphabet")
}

pub fn apply_morphism(m: &Morphism, word: &Word) -> Result<Word> {
    let mut out = Vec::new();
    for &l in word.letters() {
        let img = m
            .image(l)
            .ok_or_else(|| Error::InvalidInput(format!("letter a{} has no image", l as usize + 1)))?;
        out.extend_from_slice(img.letters());
    }
    Ok(Word::from(out))
}

/// Prefix of length `target_len` of the fixed point of `m` grown from `seed`.
pub fn fixed_point_prefix(m: &Morphism, seed: Letter, target_len: usize) -> Result<Word> {
    if !m.is_prolongable(seed) {
        return Err(Error::InvalidInput(format!(
            "morphism is not prolongable on a{}",
            seed as usize + 1
        )));
    }
    let mut w = Word::from(vec![seed]);
    while w.len() < target_len {
        w = apply_morphism(m, &w)?;
    }
    let mut letters = w.into_letters();
    letters.truncate(target_len);
    Ok(Word::from(letters))
}

/// Replaces each letter by a constant block of `k + 1` copies
/// (`a -> 1^(k+1)`, `b -> 2^(k+1)`, `c -> 3^(k+1)`).
pub fn blowup(word: &Word, k: usize) -> Result<Word> {
    if k == 0 {
        return Err(Error::InvalidParameter("k must be at least 1".into()));
    }
    if let Some(&l) = word.letters().iter().find(|&&l| l > 2) {
        return Err(Error::InvalidInput(format!("letter a{} outside {{a, b, c}}", l as usize + 1)));
    }
    Ok(Word::from(
        word.letters()
            .iter()
            .flat_map(|&l| std::iter::repeat_n(l, k + 1))
            .collect::<Vec<_>>(),
    ))
}

/// Inverse of [`blowup`] on block-aligned words made of constant blocks.
pub fn collapse(word: &Word, k: usize) -> Result<Word> {
    if k == 0 {
        return Err(Error::InvalidParameter("k must be at least 1".into()));
    }
    let block = k + 1;
    if !word.len().is_multiple_of(block) {
        return Err(Error::InvalidInput(format!("length {} is not a multiple of {block}", word.len())));
    }
    word.letters()
        .chunks(block)
        .map(|chunk| {
            if chunk.iter().all(|&l| l == chunk[0]) {
                Ok(chunk[0])
            } else {
                Err(Error::InvalidInput("block is not constant".into()))
            }
        })
        .collect::<Result<Vec<_>>>()
        .map(Word::from)
}

/// Length-`len` prefix of the blow-up of the ternary square-free sequence.
pub fn generate_s3_free(k: usize, len: usize) -> Result<Word> {
    if k == 0 {
        return Err(Error::InvalidParameter("k must be at least 1".into()));
    }
    let ternary = fixed_point_prefix(&Morphism::thue(), 0, len.div_ceil(k + 1))?;
    let mut letters = blowup(&ternary, k)?.into_letters();
    letters.truncate(len);
    Ok(Word::from(letters))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn abc(text: &str) -> Word {
        thue_alphabet().parse_word(text).unwrap()
    }

    fn render123(w: &Word) -> String {
        block_alphabet().render(w)
    }

    #[test]
    fn thue_steps() {
        let m = Morphism::thue();
        assert_eq!(apply_morphism(&m, &abc("a")).unwrap(), abc("abc"));
        assert_eq!(apply_morphism(&m, &abc("abc")).unwrap(), abc("abcacb"));
        assert_eq!(fixed_point_prefix(&m, 0, 6).unwrap(), abc("abcacb"));
        assert_eq!(fixed_point_prefix(&m, 0, 3).unwrap(), abc("abc"));
        assert_eq!(fixed_point_prefix(&m, 0, 0).unwrap(), Word::empty());
    }

    #[test]
    fn identity_is_neutral() {
        let w = abc("abccba");
        assert_eq!(apply_morphism(&Morphism::identity(3), &w).unwrap(), w);
    }

    #[test]
    fn bad_morphisms() {
        assert!(Morphism::new(vec![Word::empty()]).is_err());
        let m = Morphism::thue();
        assert!(fixed_point_prefix(&m, 1, 4).is_err());
        assert!(apply_morphism(&m, &Word::from_indices(&[4])).is_err());
        assert!(!Morphism::identity(2).is_prolongable(0));
    }

    #[test]
    fn blowup_examples() {
        assert_eq!(render123(&blowup(&abc("a"), 1).unwrap()), "11");
        assert_eq!(render123(&blowup(&abc("ab"), 2).unwrap()), "111222");
        assert_eq!(blowup(&Word::empty(), 3).unwrap(), Word::empty());
        assert!(blowup(&Word::from_indices(&[4]), 1).is_err());
        assert!(blowup(&abc("a"), 0).is_err());
    }

    #[test]
    fn collapse_inverts_blowup() {
        let w = abc("abcacb");
        assert_eq!(collapse(&blowup(&w, 2).unwrap(), 2).unwrap(), w);
        assert!(collapse(&Word::from_indices(&[1, 2]), 1).is_err());
        assert!(collapse(&Word::from_indices(&[1, 1, 1]), 1).is_err());
    }

    #[test]
    fn s3_free_prefixes() {
        assert_eq!(render123(&generate_s3_free(1, 12).unwrap()), "112233113322");
        assert_eq!(render123(&generate_s3_free(1, 2).unwrap()), "11");
        assert_eq!(generate_s3_free(2, 7).unwrap().len(), 7);
    }
}
