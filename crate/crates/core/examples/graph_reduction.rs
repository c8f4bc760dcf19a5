//! Encodes digraphs as prohibition sets and compares the longest free word
//! with the longest simple path.
//!
//!     cargo run --release --example graph_reduction

use crucial_words::reduction::cross_validate;
use crucial_words::{encode, Digraph};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn main() -> crucial_words::Result<()> {
    let cycle = Digraph::parse("4\n1 2\n2 3\n3 4\n4 1\n")?;
    let inst = encode(&cycle)?;
    println!(
        "4-cycle: {} non-edge words, {} xXx words, longest free word {}",
        inst.s1.len(),
        inst.s2_size(),
        inst.max_free_word_length()
    );

    let mut rng = ChaCha8Rng::seed_from_u64(1);
    for n in 3..=7 {
        let g = Digraph::random(n, 0.35, &mut rng)?;
        let check = cross_validate(&g)?;
        println!(
            "n={n} edges={:<2} path {} free word {} automaton {:?} agree {}",
            g.edges().count(),
            check.longest_path,
            check.longest_free_word,
            check.automaton_longest,
            check.agrees()
        );
    }
    Ok(())
}
