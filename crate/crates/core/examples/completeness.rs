//! Decides completeness of explicit sets and prints the longest free word.
//!
//!     cargo run --example completeness

use crucial_words::{FreeWordAutomaton, LengthAnswer, ProhibitionSet};

fn main() -> crucial_words::Result<()> {
    let sets = [
        "1234\n123\n13\n14\n11\n22\n33\n44\n",
        "123\n12\n23\n31\n32\n11\n22\n33\n",
        "ab\naa\nbb\n",
        "ab\naa\nbb\naba\n",
    ];
    for text in sets {
        let set = ProhibitionSet::parse_set_file(text)?;
        let alphabet = set.alphabet();
        let words: Vec<String> = set.explicit_words().unwrap().iter().map(|w| alphabet.render(w)).collect();
        let automaton: &FreeWordAutomaton = set.automaton().unwrap();
        print!("{{{}}}: {} states, ", words.join(","), automaton.state_count());
        match automaton.longest_free_length() {
            LengthAnswer::Unbounded => println!("incomplete"),
            LengthAnswer::Finite(n) => {
                let witness = automaton.longest_free_word().unwrap();
                println!("complete, longest free word {} (length {n})", alphabet.render(&witness));
            }
        }
    }
    Ok(())
}
