//! Exhaustive search for the shortest crucial words of the three
//! parametric families.
//!
//!     cargo run --release --example min_search

use std::time::Instant;

use crucial_words::{search_min_crucial, Alphabet, ProhibitionSet};

fn main() -> crucial_words::Result<()> {
    let mut runs = Vec::new();
    for n in 1..=4 {
        runs.push((ProhibitionSet::squares(Alphabet::standard(n)?), 1 << n));
    }
    for n in 3..=5 {
        runs.push((ProhibitionSet::abelian_squares(Alphabet::standard(n)?), 4 * n - 6));
    }
    for k in 1..=3 {
        runs.push((ProhibitionSet::hamming_pairs(Alphabet::standard(3)?, k)?, 2 * k + 2));
    }
    for (set, bound) in runs {
        let started = Instant::now();
        let report = search_min_crucial(&set, bound)?;
        let alphabet = set.alphabet();
        let shown = report.found().map_or("none".to_string(), |w| alphabet.render(w));
        println!(
            "{:<18} |A|={} shortest {:<14} ({} words, {:.1?})",
            set.kind().to_string(),
            alphabet.len(),
            shown,
            report.explored,
            started.elapsed()
        );
    }
    Ok(())
}
