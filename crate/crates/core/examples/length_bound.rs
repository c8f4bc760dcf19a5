//! Enumerates every complete set of words of one length and compares the
//! longest free word with |A|^(n-1) + n - 2.
//!
//!     cargo run --example length_bound

use crucial_words::{verify_length_bound, Alphabet};

fn main() -> crucial_words::Result<()> {
    for (size, n) in [(2, 2), (2, 3), (3, 2), (4, 2)] {
        let alphabet = Alphabet::standard(size)?;
        let r = verify_length_bound(&alphabet, n)?;
        let extremal: Vec<String> = r.extremal_set.iter().map(|w| alphabet.render(w)).collect();
        println!(
            "|A|={size} n={n}: {} of {} subsets complete, max {} (formula {}), e.g. {{{}}}",
            r.complete_subsets,
            r.subsets,
            r.observed_max,
            r.formula,
            extremal.join(",")
        );
    }
    Ok(())
}
