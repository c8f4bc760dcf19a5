//! Crucial words: free words that cannot be extended to the right.

use crate::error::{Error, Result};
use crate::prohibition::ProhibitionSet;
use crate::words::{Letter, Word};

/// A crucial word together with its minimal i-ending for every letter.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CrucialCertificate {
    pub word: Word,
    /// `endings[i]` is the shortest suffix `B` of `word` with `B·a_(i+1)`
    /// prohibited.
    pub endings: Vec<Word>,
}

/// True when `word` is free and every one-letter extension is not.
pub fn is_crucial(word: &Word, set: &ProhibitionSet) -> Result<bool> {
    if !set.is_free(word)? {
        return Ok(false);
    }
    Ok(blocked_by_every_letter(word.letters(), set))
}

/// Assumes `w` is free.
pub(crate) fn blocked_by_every_letter(w: &[Letter], set: &ProhibitionSet) -> bool {
    let mut buf = Vec::with_capacity(w.len() + 1);
    buf.extend_from_slice(w);
    buf.push(0);
    set.alphabet().letters().all(|a| {
        *buf.last_mut().unwrap() = a;
        set.shortest_member_suffix(&buf).is_some()
    })
}

/// Shortest suffix `B` of a free word with `B·letter` prohibited, or `None`
/// when appending `letter` keeps the word free.
pub fn minimal_i_ending(word: &Word, letter: Letter, set: &ProhibitionSet) -> Result<Option<Word>> {
    if !set.alphabet().contains(letter) {
        return Err(Error::InvalidWord(format!("letter a{} outside the alphabet", letter as usize + 1)));
    }
    if !set.is_free(word)? {
        return Err(Error::InvalidInput("i-endings are defined for free words only".into()));
    }
    let extended = word.appended(letter);
    Ok(set.shortest_member_suffix(extended.letters()).map(|len| {
        let w = word.letters();
        Word::from(&w[w.len() + 1 - len..])
    }))
}

/// Builds the certificate when `word` is crucial.
pub fn certify(word: &Word, set: &ProhibitionSet) -> Result<Option<CrucialCertificate>> {
    if !set.is_free(word)? {
        return Ok(None);
    }
    let mut endings = Vec::with_capacity(set.alphabet().len());
    for a in set.alphabet().letters() {
        match minimal_i_ending(word, a, set)? {
            Some(b) => endings.push(b),
            None => return Ok(None),
        }
    }
    Ok(Some(CrucialCertificate { word: word.clone(), endings }))
}
