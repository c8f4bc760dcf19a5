//! Exhaustive search for minimal and maximal crucial words.
//!
//! Both searches walk the tree of free words, pruning at the first
//! non-free extension (freeness is closed under taking prefixes). For sets
//! that are closed under renaming letters (all parametric families) only
//! words in *first-occurrence form* are expanded: the first letter is `a_1`
//! and every new letter is the smallest one not yet used. The
//! lexicographically least member of each renaming class has that form, so
//! the reported words are the same as in an unrestricted search.

use rayon::prelude::*;

use crate::crucial::blocked_by_every_letter;
use crate::error::{Error, Result};
use crate::prohibition::ProhibitionSet;
use crate::words::{Letter, Word};

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SearchOutcome {
    Found { word: Word, length: usize },
    /// No crucial word of length at most `bound` exists.
    NoneWithinBound { bound: usize },
    /// A crucial word of length exactly `bound` exists, so the maximum (if
    /// any) lies beyond the bound.
    UnboundedEvidence { bound: usize, word: Word },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SearchReport {
    pub outcome: SearchOutcome,
    /// Number of free words visited.
    pub explored: u64,
}

impl SearchReport {
    pub fn found(&self) -> Option<&Word> {
        match &self.outcome {
            SearchOutcome::Found { word, .. } => Some(word),
            _ => None,
        }
    }

    pub fn found_length(&self) -> Option<usize> {
        self.found().map(Word::len)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SearchOptions {
    /// Worker threads; `None` or `Some(1)` runs on the calling thread.
    pub threads: Option<usize>,
    /// Expand only first-occurrence forms when the set allows it.
    pub symmetry: bool,
}

impl Default for SearchOptions {
    fn default() -> Self {
        Self { threads: None, symmetry: true }
    }
}

struct Expander<'a> {
    set: &'a ProhibitionSet,
    symmetric: bool,
}

struct Expansion {
    crucial: bool,
    children: Vec<Vec<Letter>>,
}

impl<'a> Expander<'a> {
    fn new(set: &'a ProhibitionSet, options: &SearchOptions) -> Self {
        Self { set, symmetric: options.symmetry && set.is_permutation_invariant() }
    }

    /// Letters that may follow `w` in the explored tree.
    fn candidate_limit(&self, w: &[Letter]) -> usize {
        let n = self.set.alphabet().len();
        if self.symmetric {
            let next_new = w.iter().max().map_or(0, |&m| m as usize + 1);
            n.min(next_new + 1)
        } else {
            n
        }
    }

    /// Free one-letter extensions of the free word `w`, and whether there
    /// are none at all (i.e. `w` is crucial).
    fn expand(&self, w: &[Letter]) -> Expansion {
        // For first-occurrence forms every unused letter behaves like the
        // smallest unused one, so checking up to that letter decides cruciality.
        let limit = self.candidate_limit(w);
        let mut buf = Vec::with_capacity(w.len() + 1);
        buf.extend_from_slice(w);
        buf.push(0);
        let mut children = Vec::new();
        for a in 0..limit as Letter {
            *buf.last_mut().unwrap() = a;
            if self.set.shortest_member_suffix(&buf).is_none() {
                children.push(buf.clone());
            }
        }
        let crucial = if self.symmetric {
            children.is_empty()
        } else {
            children.is_empty() && blocked_by_every_letter(w, self.set)
        };
        Expansion { crucial, children }
    }
}

fn with_pool<T: Send>(threads: Option<usize>, job: impl FnOnce() -> T + Send) -> Result<T> {
    match threads {
        Some(t) if t > 1 => {
            let pool = rayon::ThreadPoolBuilder::new()
                .num_threads(t)
                .build()
                .map_err(|e| Error::InvalidParameter(format!("thread pool: {e}")))?;
            Ok(pool.install(job))
        }
        _ => Ok(job()),
    }
}

/// Breadth-first search by length (lexicographic within a length); returns
/// the first crucial word met, hence of minimal length and lexicographically
/// least among those.
pub fn search_min_crucial(set: &ProhibitionSet, bound: usize) -> Result<SearchReport> {
    search_min_crucial_with(set, bound, &SearchOptions::default())
}

pub fn search_min_crucial_with(
    set: &ProhibitionSet,
    bound: usize,
    options: &SearchOptions,
) -> Result<SearchReport> {
    if bound == 0 {
        return Err(Error::InvalidParameter("search bound must be at least 1".into()));
    }
    let expander = Expander::new(set, options);
    let parallel = matches!(options.threads, Some(t) if t > 1);
    with_pool(options.threads, || {
        let mut frontier: Vec<Vec<Letter>> = vec![Vec::new()];
        let mut explored = 0u64;
        for len in 0..=bound {
            explored += frontier.len() as u64;
            let expansions: Vec<Expansion> = if parallel {
                frontier.par_iter().map(|w| expander.expand(w)).collect()
            } else {
                frontier.iter().map(|w| expander.expand(w)).collect()
            };
            if let Some(i) = expansions.iter().position(|e| e.crucial) {
                let word = Word::from(std::mem::take(&mut frontier[i]));
                return SearchReport { outcome: SearchOutcome::Found { word, length: len }, explored };
            }
            if len == bound {
                break;
            }
            frontier = expansions.into_iter().flat_map(|e| e.children).collect();
            if frontier.is_empty() {
                break;
            }
        }
        SearchReport { outcome: SearchOutcome::NoneWithinBound { bound }, explored }
    })
}

#[derive(Default)]
struct MaxState {
    best: Option<Vec<Letter>>,
    at_bound: Option<Vec<Letter>>,
    explored: u64,
}

impl MaxState {
    fn merge(mut self, other: MaxState) -> MaxState {
        // `self` precedes `other` in lexicographic order.
        if let Some(b) = other.best {
            if self.best.as_ref().is_none_or(|mine| b.len() > mine.len()) {
                self.best = Some(b);
            }
        }
        if self.at_bound.is_none() {
            self.at_bound = other.at_bound;
        }
        self.explored += other.explored;
        self
    }
}

fn dfs_max(expander: &Expander<'_>, root: Vec<Letter>, bound: usize, state: &mut MaxState) {
    let mut stack = vec![root];
    while let Some(w) = stack.pop() {
        state.explored += 1;
        let exp = expander.expand(&w);
        if exp.crucial {
            if state.best.as_ref().is_none_or(|b| w.len() > b.len()) {
                state.best = Some(w.clone());
            }
            if w.len() == bound && state.at_bound.is_none() {
                state.at_bound = Some(w.clone());
            }
        }
        if w.len() < bound {
            stack.extend(exp.children.into_iter().rev());
        }
    }
}

/// Enumerates every free word of length at most `bound` and reports the
/// longest crucial one (lexicographically least among the longest).
pub fn search_max_crucial(set: &ProhibitionSet, bound: usize) -> Result<SearchReport> {
    search_max_crucial_with(set, bound, &SearchOptions::default())
}

pub fn search_max_crucial_with(
    set: &ProhibitionSet,
    bound: usize,
    options: &SearchOptions,
) -> Result<SearchReport> {
    if bound == 0 {
        return Err(Error::InvalidParameter("search bound must be at least 1".into()));
    }
    let expander = Expander::new(set, options);
    let parallel = matches!(options.threads, Some(t) if t > 1);
    let state = with_pool(options.threads, || {
        if !parallel {
            let mut state = MaxState::default();
            dfs_max(&expander, Vec::new(), bound, &mut state);
            return state;
        }
        // Visit the top of the tree here and hand whole subtrees to workers.
        let split_depth = 3.min(bound);
        let mut head = MaxState::default();
        let mut roots = Vec::new();
        let mut stack = vec![Vec::new()];
        while let Some(w) = stack.pop() {
            if w.len() == split_depth {
                roots.push(w);
                continue;
            }
            head.explored += 1;
            let exp = expander.expand(&w);
            if exp.crucial && head.best.as_ref().is_none_or(|b| w.len() > b.len()) {
                head.best = Some(w.clone());
            }
            stack.extend(exp.children.into_iter().rev());
        }
        let tails: Vec<MaxState> = roots
            .into_par_iter()
            .map(|root| {
                let mut s = MaxState::default();
                dfs_max(&expander, root, bound, &mut s);
                s
            })
            .collect();
        tails.into_iter().fold(head, MaxState::merge)
    })?;

    let outcome = match (state.at_bound, state.best) {
        (Some(w), _) => SearchOutcome::UnboundedEvidence { bound, word: Word::from(w) },
        (None, Some(w)) => SearchOutcome::Found { length: w.len(), word: Word::from(w) },
        (None, None) => SearchOutcome::NoneWithinBound { bound },
    };
    Ok(SearchReport { outcome, explored: state.explored })
}

/// Every crucial word with length in `min_len..=max_len`, ordered by length
/// and then lexicographically. No symmetry reduction is applied.
pub fn enumerate_crucial(set: &ProhibitionSet, min_len: usize, max_len: usize) -> Vec<Word> {
    let expander = Expander { set, symmetric: false };
    let mut found = Vec::new();
    let mut stack = vec![Vec::new()];
    while let Some(w) = stack.pop() {
        let exp = expander.expand(&w);
        if exp.crucial && w.len() >= min_len {
            found.push(Word::from(w.clone()));
        }
        if w.len() < max_len {
            stack.extend(exp.children.into_iter().rev());
        }
    }
    found.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.cmp(b)));
    found
}

/// Renames letters in order of first occurrence (`a_1` first, then `a_2`, ...).
pub fn first_occurrence_form(word: &Word) -> Word {
    let mut map: Vec<Option<Letter>> = Vec::new();
    let mut next = 0;
    let letters = word
        .letters()
        .iter()
        .map(|&l| {
            let i = l as usize;
            if map.len() <= i {
                map.resize(i + 1, None);
            }
            *map[i].get_or_insert_with(|| {
                next += 1;
                next - 1
            })
        })
        .collect::<Vec<_>>();
    Word::from(letters)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::words::Alphabet;

    fn ex4() -> ProhibitionSet {
        let a = Alphabet::new("abc").unwrap();
        let ws = ["aa", "cab", "acac"].iter().map(|w| a.parse_word(w).unwrap()).collect();
        ProhibitionSet::explicit(a, ws).unwrap()
    }

    #[test]
    fn minimal_for_example_set() {
        let s = ex4();
        let r = search_min_crucial(&s, 10).unwrap();
        assert_eq!(r.found().map(|w| s.alphabet().render(w)).as_deref(), Some("aca"));
    }

    #[test]
    fn example_set_has_no_maximum() {
        let s = ex4();
        let r = search_max_crucial(&s, 10).unwrap();
        match r.outcome {
            SearchOutcome::UnboundedEvidence { bound, word } => {
                assert_eq!(bound, 10);
                assert_eq!(word.len(), 10);
            }
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn none_within_small_bound() {
        let s = ProhibitionSet::squares(Alphabet::standard(3).unwrap());
        let r = search_min_crucial(&s, 6).unwrap();
        assert_eq!(r.outcome, SearchOutcome::NoneWithinBound { bound: 6 });
        assert!(search_min_crucial(&s, 0).is_err());
    }

    #[test]
    fn only_single_letters_prohibited() {
        let a = Alphabet::new("ab").unwrap();
        let s = ProhibitionSet::explicit(a, vec![Word::from_indices(&[1]), Word::from_indices(&[2])])
            .unwrap();
        let r = search_min_crucial(&s, 3).unwrap();
        assert_eq!(r.found_length(), Some(0));
    }

    #[test]
    fn symmetry_and_threads_do_not_change_results() {
        let s = ProhibitionSet::abelian_squares(Alphabet::standard(4).unwrap());
        let plain = SearchOptions { threads: None, symmetry: false };
        let threaded = SearchOptions { threads: Some(4), symmetry: true };
        let a = search_min_crucial_with(&s, 10, &plain).unwrap();
        let b = search_min_crucial_with(&s, 10, &threaded).unwrap();
        let c = search_min_crucial(&s, 10).unwrap();
        assert_eq!(a.outcome, b.outcome);
        assert_eq!(b, c);

        let h = ProhibitionSet::hamming_pairs(Alphabet::standard(2).unwrap(), 1).unwrap();
        let a = search_max_crucial_with(&h, 10, &plain).unwrap();
        let b = search_max_crucial_with(&h, 10, &threaded).unwrap();
        let c = search_max_crucial(&h, 10).unwrap();
        assert_eq!(a.outcome, b.outcome);
        assert_eq!(b, c);
    }

    #[test]
    fn first_occurrence_renaming() {
        let w = Word::from_indices(&[3, 1, 3, 2]);
        assert_eq!(first_occurrence_form(&w), Word::from_indices(&[1, 2, 1, 3]));
        assert_eq!(first_occurrence_form(&Word::empty()), Word::empty());
    }
}
