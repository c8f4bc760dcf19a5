//! Prohibition sets over finite alphabets.
//!
//! A *prohibition set* `S` is a set of words; a word is *free* from `S` when
//! none of its subwords belongs to `S`, and *crucial* when it is free but
//! every one-letter extension to the right is not. This crate covers:
//!
//! * explicit sets and the parametric families of squares, abelian squares
//!   and Hamming pairs ([`prohibition`]);
//! * cruciality, i-endings and exhaustive minimal/maximal crucial-word
//!   search ([`crucial`], [`search`]) with the closed-form constructions
//!   ([`constructions`]);
//! * completeness of finite sets and the longest free word
//!   ([`automaton`]);
//! * square-free morphic words and their block blow-up ([`morphism`]);
//! * the encoding of longest simple paths as free words ([`reduction`]);
//! * the `cwords` command line ([`cli`]).
//!
//! ```
//! use crucial_words::{Alphabet, ProhibitionSet, is_crucial};
//!
//! let alphabet = Alphabet::new("abc").unwrap();
//! let words = ["aa", "cab", "acac"].iter().map(|w| alphabet.parse_word(w).unwrap()).collect();
//! let set = ProhibitionSet::explicit(alphabet.clone(), words).unwrap();
//! assert!(is_crucial(&alphabet.parse_word("abaca").unwrap(), &set).unwrap());
//! ```

pub mod automaton;
pub mod cli;
pub mod constructions;
pub mod crucial;
pub mod error;
pub mod morphism;
pub mod prohibition;
pub mod reduction;
pub mod search;
pub mod words;

pub use automaton::{
    build_automaton, exists_free_word, is_complete, longest_free_length, verify_length_bound,
    FreeWordAutomaton, LengthAnswer, LengthBoundReport,
};
pub use constructions::{
    construct_s1_min, construct_s2_alt_u, construct_s2_min, construct_s2_recursive,
    construct_s3_max2, construct_s3_min, Family,
};
pub use crucial::{certify, is_crucial, minimal_i_ending, CrucialCertificate};
pub use error::{Error, Result};
pub use morphism::{apply_morphism, blowup, fixed_point_prefix, generate_s3_free, Morphism};
pub use prohibition::{find_violation, is_free, membership, ProhibitionSet, SetKind, ViolationSpan};
pub use reduction::{decide_via_words, encode, longest_simple_path, Digraph, EncodedInstance};
pub use search::{
    enumerate_crucial, search_max_crucial, search_min_crucial, SearchOptions, SearchOutcome,
    SearchReport,
};
pub use words::{content_vector, hamming_distance, Alphabet, ContentVector, Letter, Word};
