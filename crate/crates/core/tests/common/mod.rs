//! Brute-force oracles shared by the integration tests. None of them goes
//! through the library's scanning, suffix or automaton code paths.

#![allow(dead_code)]

use std::collections::BTreeSet;

use crucial_words::{Letter, ProhibitionSet, Word};

/// Every word of length `len` over `n` letters, in lexicographic order.
pub fn all_words(n: usize, len: usize) -> Vec<Vec<Letter>> {
    let mut out = vec![Vec::new()];
    for _ in 0..len {
        out = out
            .into_iter()
            .flat_map(|w| {
                (0..n as Letter).map(move |a| {
                    let mut next = w.clone();
                    next.push(a);
                    next
                })
            })
            .collect();
    }
    out
}

/// Leftmost-then-shortest member of `set` among all subwords, using only
/// the membership predicate.
pub fn brute_violation(w: &[Letter], set: &ProhibitionSet) -> Option<(usize, usize)> {
    for start in 0..w.len() {
        for len in 1..=w.len() - start {
            if set.contains(&Word::from(&w[start..start + len])) {
                return Some((start + 1, len));
            }
        }
    }
    None
}

pub fn brute_free(w: &[Letter], set: &ProhibitionSet) -> bool {
    brute_violation(w, set).is_none()
}

pub fn brute_crucial(w: &[Letter], set: &ProhibitionSet) -> bool {
    brute_free(w, set)
        && (0..set.alphabet().len() as Letter).all(|a| {
            let mut ext = w.to_vec();
            ext.push(a);
            !brute_free(&ext, set)
        })
}

/// Shortest crucial word of length at most `bound` by listing every word of
/// each length (no pruning), lexicographically least among the shortest.
pub fn enumerate_min_crucial(set: &ProhibitionSet, bound: usize) -> Option<Word> {
    let n = set.alphabet().len();
    (0..=bound).find_map(|len| {
        all_words(n, len).into_iter().find(|w| brute_crucial(w, set)).map(Word::from)
    })
}

/// Depth-first listing of every free word (membership checks on all
/// subwords), returning the shortest crucial length found.
pub fn dfs_min_crucial_len(set: &ProhibitionSet, bound: usize) -> Option<usize> {
    let n = set.alphabet().len() as Letter;
    let mut best: Option<usize> = None;
    let mut stack = vec![Vec::<Letter>::new()];
    while let Some(w) = stack.pop() {
        if best.is_some_and(|b| w.len() >= b) {
            continue;
        }
        if brute_crucial(&w, set) {
            best = Some(w.len());
            continue;
        }
        if w.len() < bound {
            for a in 0..n {
                let mut next = w.clone();
                next.push(a);
                if brute_free(&next, set) {
                    stack.push(next);
                }
            }
        }
    }
    best
}

fn contains_any(w: &[Letter], words: &[Vec<Letter>]) -> bool {
    words.iter().any(|s| !s.is_empty() && w.windows(s.len()).any(|win| win == s.as_slice()))
}

/// Longest free word for an explicit list of words by breadth-first search
/// over the distinct tails (last `maxlen - 1` letters) of free words, up to
/// depth `depth`. `None` means free words of length `depth` exist.
pub fn bfs_longest_free(words: &[Vec<Letter>], n: usize, depth: usize) -> Option<usize> {
    let keep = words.iter().map(Vec::len).max().unwrap_or(1).saturating_sub(1);
    let mut frontier: BTreeSet<Vec<Letter>> = BTreeSet::new();
    frontier.insert(Vec::new());
    let mut longest = 0;
    for len in 1..=depth {
        let mut next = BTreeSet::new();
        for tail in &frontier {
            for a in 0..n as Letter {
                let mut w = tail.clone();
                w.push(a);
                if contains_any(&w, words) {
                    continue;
                }
                let cut = w.len().saturating_sub(keep);
                next.insert(w[cut..].to_vec());
            }
        }
        if next.is_empty() {
            return Some(longest);
        }
        longest = len;
        frontier = next;
    }
    None
}

/// Longest simple path (vertex count) by trying every ordering prefix.
pub fn permutation_longest_path(n: usize, edges: &[(usize, usize)]) -> usize {
    fn extend(path: &mut Vec<usize>, n: usize, edges: &[(usize, usize)], best: &mut usize) {
        *best = (*best).max(path.len());
        for v in 1..=n {
            if path.contains(&v) {
                continue;
            }
            if let Some(&last) = path.last() {
                if !edges.contains(&(last, v)) {
                    continue;
                }
            }
            path.push(v);
            extend(path, n, edges, best);
            path.pop();
        }
    }
    let mut best = 0;
    extend(&mut Vec::new(), n, edges, &mut best);
    best
}
