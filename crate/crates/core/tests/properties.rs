mod common;

use proptest::prelude::*;

use crucial_words::morphism::collapse;
use crucial_words::search::{search_min_crucial_with, SearchOptions};
use crucial_words::{
    blowup, encode, generate_s3_free, is_complete, is_crucial, longest_free_length,
    minimal_i_ending, Alphabet, Digraph, Letter, ProhibitionSet, Word,
};

fn word(n: u8, max: usize) -> impl Strategy<Value = Word> {
    proptest::collection::vec(0..n, 0..=max).prop_map(Word::from)
}

fn explicit_words(n: u8) -> impl Strategy<Value = Vec<Word>> {
    proptest::collection::vec(proptest::collection::vec(0..n, 1..=4).prop_map(Word::from), 1..=6)
}

fn abc() -> Alphabet {
    Alphabet::standard(3).unwrap()
}

fn parametric(choice: usize) -> ProhibitionSet {
    let a = abc();
    match choice {
        0 => ProhibitionSet::squares(a),
        1 => ProhibitionSet::abelian_squares(a),
        k => ProhibitionSet::hamming_pairs(a, k - 1).unwrap(),
    }
}

proptest! {
    #[test]
    fn squares_are_abelian_squares(w in word(3, 16)) {
        let sq = ProhibitionSet::squares(abc());
        let ab = ProhibitionSet::abelian_squares(abc());
        if sq.contains(&w) {
            prop_assert!(ab.contains(&w));
        }
        // Freeness runs the other way.
        if ab.is_free(&w).unwrap() {
            prop_assert!(sq.is_free(&w).unwrap());
        }
    }

    #[test]
    fn violations_have_even_length(choice in 0usize..4, w in word(3, 24)) {
        let set = parametric(choice);
        if let Some(v) = set.find_violation(&w).unwrap() {
            prop_assert_eq!(v.length % 2, 0);
            if choice >= 2 {
                prop_assert!(v.length >= 2 * (choice - 1) + 2);
            }
            let sub = w.subword(v.start, v.length).unwrap();
            prop_assert!(set.contains(&sub));
        }
    }

    #[test]
    fn i_endings_are_minimal(choice in 0usize..4, w in word(3, 14), letter in 0u8..3) {
        let set = parametric(choice);
        prop_assume!(set.is_free(&w).unwrap());
        match minimal_i_ending(&w, letter, &set).unwrap() {
            None => prop_assert!(set.is_free(&w.appended(letter)).unwrap()),
            Some(b) => {
                prop_assert!(b.is_suffix_of(&w));
                prop_assert!(set.contains(&b.appended(letter)));
                // No shorter suffix works.
                let letters = w.letters();
                for len in 0..b.len() {
                    let shorter = Word::from(&letters[letters.len() - len..]);
                    prop_assert!(!set.contains(&shorter.appended(letter)));
                }
            }
        }
    }

    #[test]
    fn crucial_agrees_with_oracle(choice in 0usize..4, w in word(3, 12)) {
        let set = parametric(choice);
        prop_assert_eq!(is_crucial(&w, &set).unwrap(), common::brute_crucial(w.letters(), &set));
    }

    #[test]
    fn automaton_matches_scanner(words in explicit_words(3), w in word(3, 14)) {
        let set = ProhibitionSet::explicit(abc(), words).unwrap();
        let automaton = set.automaton().unwrap();
        prop_assert_eq!(automaton.accepts_free(w.letters()), set.is_free(&w).unwrap());
        prop_assert_eq!(set.is_free(&w).unwrap(), common::brute_free(w.letters(), &set));
    }

    #[test]
    fn complete_iff_finite(words in explicit_words(2)) {
        let set = ProhibitionSet::explicit(Alphabet::standard(2).unwrap(), words).unwrap();
        let length = longest_free_length(&set).unwrap();
        prop_assert_eq!(is_complete(&set).unwrap(), length.is_finite());
        if let Some(w) = set.automaton().unwrap().longest_free_word() {
            prop_assert!(set.is_free(&w).unwrap());
            prop_assert_eq!(length, crucial_words::LengthAnswer::Finite(w.len()));
        }
    }

    #[test]
    fn adding_words_keeps_completeness(words in explicit_words(3), extra in explicit_words(3)) {
        let small = ProhibitionSet::explicit(abc(), words.clone()).unwrap();
        let mut all = words;
        all.extend(extra);
        let large = ProhibitionSet::explicit(abc(), all).unwrap();
        if is_complete(&small).unwrap() {
            prop_assert!(is_complete(&large).unwrap());
        }
    }

    #[test]
    fn encoded_free_words_use_distinct_letters(n in 2usize..6, mask in any::<u32>(), w in word(5, 6)) {
        let pairs = n * (n - 1);
        let g = Digraph::from_index(n, u64::from(mask) & ((1 << pairs) - 1)).unwrap();
        let inst = encode(&g).unwrap();
        prop_assume!(w.letters().iter().all(|&l| (l as usize) < n));
        if inst.is_free(&w) {
            let mut seen = w.letters().to_vec();
            seen.sort_unstable();
            seen.dedup();
            prop_assert_eq!(seen.len(), w.len());
            for pair in w.letters().windows(2) {
                prop_assert!(g.has_edge(pair[0] as usize + 1, pair[1] as usize + 1));
            }
        }
    }

    #[test]
    fn blowup_length_and_inverse(w in word(3, 30), k in 1usize..5) {
        let b = blowup(&w, k).unwrap();
        prop_assert_eq!(b.len(), (k + 1) * w.len());
        prop_assert_eq!(collapse(&b, k).unwrap(), w);
    }

    #[test]
    fn blowups_have_no_equal_adjacent_blocks(k in 1usize..4, blocks in 1usize..120) {
        let w = generate_s3_free(k, blocks * (k + 1)).unwrap();
        let chunks: Vec<&[Letter]> = w.letters().chunks(k + 1).collect();
        for pair in chunks.windows(2) {
            prop_assert_ne!(pair[0], pair[1]);
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(40))]

    #[test]
    fn min_search_matches_oracle(words in explicit_words(2), threads in 1usize..4) {
        let set = ProhibitionSet::explicit(Alphabet::standard(2).unwrap(), words).unwrap();
        let opts = SearchOptions { threads: Some(threads), symmetry: false };
        let report = search_min_crucial_with(&set, 8, &opts).unwrap();
        let oracle = common::enumerate_min_crucial(&set, 8);
        prop_assert_eq!(report.found().cloned(), oracle);
    }

    #[test]
    fn symmetry_does_not_change_the_answer(choice in 0usize..4) {
        let set = parametric(choice);
        let plain = SearchOptions { threads: Some(1), symmetry: false };
        let reduced = SearchOptions { threads: Some(2), symmetry: true };
        let a = search_min_crucial_with(&set, 16, &plain).unwrap();
        let b = search_min_crucial_with(&set, 16, &reduced).unwrap();
        prop_assert_eq!(a.outcome, b.outcome);
    }
}
