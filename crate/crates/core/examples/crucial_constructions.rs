//! Builds the closed-form crucial words and certifies each one by listing
//! its shortest i-endings.
//!
//!     cargo run --example crucial_constructions

use crucial_words::{certify, Family};

fn main() -> crucial_words::Result<()> {
    let cases = [
        (Family::S1, 4, None),
        (Family::S2, 5, None),
        (Family::S2U, 5, None),
        (Family::S2Rec, 5, None),
        (Family::S3Min, 3, Some(2)),
        (Family::S3Max2, 2, Some(2)),
    ];
    for (family, n, k) in cases {
        let word = family.construct(n, k)?;
        let set = family.prohibition_set(n, k)?;
        let alphabet = set.alphabet();
        print!("{family:<7} n={n} {:<16} ", alphabet.render(&word));
        match certify(&word, &set)? {
            Some(cert) => {
                let endings: Vec<String> = cert.endings.iter().map(|e| alphabet.render(e)).collect();
                println!("crucial, endings [{}]", endings.join(", "));
            }
            None => println!("not crucial"),
        }
    }
    Ok(())
}
