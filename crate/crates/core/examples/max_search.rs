//! Longest crucial words over two letters. Hamming pairs stop at 3k+3; for
//! squares the search reports that no finite maximum was reached.
//!
//!     cargo run --release --example max_search

use crucial_words::{search_max_crucial, Alphabet, ProhibitionSet, SearchOutcome};

fn main() -> crucial_words::Result<()> {
    let binary = Alphabet::new("12")?;
    for k in 1..=3 {
        let set = ProhibitionSet::hamming_pairs(binary.clone(), k)?;
        describe(&set, 3 * k + 6)?;
    }
    // Squares over two letters: every free word is short, so this finishes.
    describe(&ProhibitionSet::squares(binary), 6)?;
    Ok(())
}

fn describe(set: &ProhibitionSet, bound: usize) -> crucial_words::Result<()> {
    let report = search_max_crucial(set, bound)?;
    let a = set.alphabet();
    match report.outcome {
        SearchOutcome::Found { word, length } => {
            println!("{:<16} longest crucial {} (length {length})", set.kind().to_string(), a.render(&word))
        }
        SearchOutcome::NoneWithinBound { bound } => {
            println!("{:<16} no crucial word up to {bound}", set.kind().to_string())
        }
        SearchOutcome::UnboundedEvidence { bound, word } => println!(
            "{:<16} crucial word {} at the bound {bound}; maximum not reached",
            set.kind().to_string(),
            a.render(&word)
        ),
    }
    Ok(())
}
