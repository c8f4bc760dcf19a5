//! Square-free ternary words from the fixed point of a -> abc, b -> ac,
//! c -> b, and their blow-ups that avoid Hamming pairs.
//!
//!     cargo run --example morphic_words

use crucial_words::morphism::{block_alphabet, collapse, thue_alphabet};
use crucial_words::{fixed_point_prefix, generate_s3_free, Morphism, ProhibitionSet};

fn main() -> crucial_words::Result<()> {
    let thue = fixed_point_prefix(&Morphism::thue(), 0, 5000)?;
    let squares = ProhibitionSet::squares(thue_alphabet());
    println!("prefix: {}...", thue_alphabet().render(&thue.subword(1, 40).unwrap()));
    println!("5000 letters square-free: {}", squares.is_free(&thue)?);

    for k in 1..=3 {
        let w = generate_s3_free(k, 600)?;
        let set = ProhibitionSet::hamming_pairs(block_alphabet(), k)?;
        let head = block_alphabet().render(&w.subword(1, 24).unwrap());
        let back = collapse(&w, k)?;
        println!(
            "k={k}: {head}... free: {}, collapses to the prefix: {}",
            set.is_free(&w)?,
            back.letters() == &thue.letters()[..back.len()]
        );
    }
    Ok(())
}
