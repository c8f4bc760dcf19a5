//! Checks words against each kind of prohibition set and reports the first
//! violation.
//!
//!     cargo run --example free_check

use crucial_words::{Alphabet, ProhibitionSet};

fn main() -> crucial_words::Result<()> {
    let abc = Alphabet::new("abc")?;
    let sets = [
        ProhibitionSet::squares(abc.clone()),
        ProhibitionSet::abelian_squares(abc.clone()),
        ProhibitionSet::hamming_pairs(abc.clone(), 1)?,
        ProhibitionSet::explicit(abc.clone(), vec![abc.parse_word("aa")?, abc.parse_word("cab")?])?,
    ];
    for text in ["abcacb", "abacaba", "abcbac", "cabca"] {
        let word = abc.parse_word(text)?;
        for set in &sets {
            match set.find_violation(&word)? {
                None => println!("{text:>8} {:<18} free", set.kind().to_string()),
                Some(v) => {
                    let factor = word.subword(v.start, v.length).expect("span lies inside the word");
                    println!("{text:>8} {:<18} {} at {}", set.kind().to_string(), abc.render(&factor), v.start);
                }
            }
        }
    }
    Ok(())
}
