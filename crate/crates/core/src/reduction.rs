//! Encoding a digraph as a prohibition set whose free words are exactly
//! the simple directed paths of the graph.
//!
//! Vertex `v_i` becomes letter `a_i`. `s1` prohibits `a_i a_j` for every
//! ordered pair `i != j` that is *not* an edge; `s2` prohibits every word of
//! length at most `n + 1` whose first and last letters coincide, which
//! rules out repeated letters. Path lengths are counted in vertices.

use std::collections::BTreeSet;

use rand::Rng;

use crate::automaton::{FreeWordAutomaton, LengthAnswer};
use crate::error::{Error, Result};
use crate::prohibition::ProhibitionSet;
use crate::words::{Alphabet, Letter, Word};

/// Largest vertex count for which `s2` is listed word by word.
pub const MATERIALIZE_MAX_VERTICES: usize = 6;
/// Largest vertex count accepted by the brute-force path oracle.
pub const PATH_ORACLE_MAX_VERTICES: usize = 10;

/// A directed graph on vertices `1..=n` without loops or parallel edges.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Digraph {
    n: usize,
    edges: BTreeSet<(usize, usize)>,
}

impl Digraph {
    pub fn new(n: usize, edges: impl IntoIterator<Item = (usize, usize)>) -> Result<Self> {
        if n == 0 {
            return Err(Error::InvalidInput("a digraph needs at least one vertex".into()));
        }
        if n > crate::words::MAX_ALPHABET {
            return Err(Error::InvalidInput(format!("at most {} vertices", crate::words::MAX_ALPHABET)));
        }
        let mut set = BTreeSet::new();
        for (i, j) in edges {
            if i == 0 || j == 0 || i > n || j > n {
                return Err(Error::InvalidInput(format!("edge ({i}, {j}) outside 1..={n}")));
            }
            if i == j {
                return Err(Error::InvalidInput(format!("self-loop at vertex {i}")));
            }
            if !set.insert((i, j)) {
                return Err(Error::InvalidInput(format!("duplicate edge ({i}, {j})")));
            }
        }
        Ok(Self { n, edges: set })
    }

    /// The `index`-th digraph on `n` vertices: bit `b` of `index` selects the
    /// `b`-th ordered pair `(i, j)`, `i != j`, in lexicographic order.
    pub fn from_index(n: usize, index: u64) -> Result<Self> {
        let pairs = ordered_pairs(n);
        Self::new(n, pairs.into_iter().enumerate().filter(|(b, _)| index >> b & 1 == 1).map(|(_, p)| p))
    }

    /// Each ordered pair becomes an edge with probability `p`.
    pub fn random<R: Rng + ?Sized>(n: usize, p: f64, rng: &mut R) -> Result<Self> {
        let pairs = ordered_pairs(n);
        let chosen: Vec<_> = pairs.into_iter().filter(|_| rng.random_bool(p)).collect();
        Self::new(n, chosen)
    }

    /// Vertex count on the first line, then one `i j` edge per line.
    pub fn parse(text: &str) -> Result<Self> {
        let mut lines = text.lines().map(str::trim).filter(|l| !l.is_empty());
        let n: usize = lines
            .next()
            .ok_or_else(|| Error::Parse("missing vertex count".into()))?
            .parse()
            .map_err(|_| Error::Parse("vertex count is not a number".into()))?;
        let edges = lines
            .map(|line| {
                let mut parts = line.split_whitespace().map(str::parse::<usize>);
                match (parts.next(), parts.next(), parts.next()) {
                    (Some(Ok(i)), Some(Ok(j)), None) => Ok((i, j)),
                    _ => Err(Error::Parse(format!("bad edge line {line:?}"))),
                }
            })
            .collect::<Result<Vec<_>>>()?;
        Self::new(n, edges)
    }

    pub fn to_text(&self) -> String {
        let mut out = format!("{}\n", self.n);
        for (i, j) in &self.edges {
            out.push_str(&format!("{i} {j}\n"));
        }
        out
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.edges.iter().copied()
    }

    pub fn has_edge(&self, i: usize, j: usize) -> bool {
        self.edges.contains(&(i, j))
    }

    fn adjacency(&self) -> Vec<u32> {
        let mut adj = vec![0u32; self.n];
        for &(i, j) in &self.edges {
            adj[i - 1] |= 1 << (j - 1);
        }
        adj
    }
}

fn ordered_pairs(n: usize) -> Vec<(usize, usize)> {
    (1..=n).flat_map(|i| (1..=n).filter(move |&j| j != i).map(move |j| (i, j))).collect()
}

/// The prohibition set built from a digraph.
#[derive(Debug, Clone)]
pub struct EncodedInstance {
    alphabet: Alphabet,
    n: usize,
    /// Two-letter words `a_i a_j` for the non-edges.
    pub s1: Vec<Word>,
    /// Listed only for small `n`; otherwise membership is decided by
    /// "first letter = last letter and length <= n + 1".
    pub s2: Option<Vec<Word>>,
}

pub fn encode(graph: &Digraph) -> Result<EncodedInstance> {
    let n = graph.vertex_count();
    let alphabet = Alphabet::standard(n)?;
    let s1 = ordered_pairs(n)
        .into_iter()
        .filter(|&(i, j)| !graph.has_edge(i, j))
        .map(|(i, j)| Word::from_indices(&[i, j]))
        .collect();
    let s2 = (n <= MATERIALIZE_MAX_VERTICES).then(|| materialize_s2(n));
    Ok(EncodedInstance { alphabet, n, s1, s2 })
}

/// All `x X x` with `|X| <= n - 1`, shortest first.
fn materialize_s2(n: usize) -> Vec<Word> {
    let mut out = Vec::new();
    let mut middles: Vec<Vec<Letter>> = vec![Vec::new()];
    for _ in 0..n {
        for x in 0..n as Letter {
            for m in &middles {
                let mut w = Vec::with_capacity(m.len() + 2);
                w.push(x);
                w.extend_from_slice(m);
                w.push(x);
                out.push(Word::from(w));
            }
        }
        middles = middles
            .iter()
            .flat_map(|m| {
                (0..n as Letter).map(move |l| {
                    let mut next = m.clone();
                    next.push(l);
                    next
                })
            })
            .collect();
    }
    out
}

impl EncodedInstance {
    pub fn alphabet(&self) -> &Alphabet {
        &self.alphabet
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    /// Number of words in `s2`, whether or not they are listed.
    pub fn s2_size(&self) -> usize {
        let n = self.n;
        n * (0..n).map(|m| n.pow(m as u32)).sum::<usize>()
    }

    fn in_s1(&self, w: &[Letter]) -> bool {
        w.len() == 2 && self.s1.binary_search(&Word::from(w)).is_ok()
    }

    fn in_s2(&self, w: &[Letter]) -> bool {
        w.len() >= 2 && w.len() <= self.n + 1 && w[0] == w[w.len() - 1]
    }

    /// Free check in polynomial time: no letter repeats and every adjacent
    /// pair is allowed by `s1`.
    pub fn is_free(&self, word: &Word) -> bool {
        let w = word.letters();
        let mut seen = vec![false; self.n];
        for &l in w {
            if l as usize >= self.n || std::mem::replace(&mut seen[l as usize], true) {
                return false;
            }
        }
        w.windows(2).all(|pair| !self.in_s1(pair))
    }

    /// Does appending the last letter of `w` create a member of `s1 ∪ s2`
    /// as a suffix?
    fn suffix_prohibited(&self, w: &[Letter]) -> bool {
        let len = w.len();
        (2..=len.min(self.n + 1)).any(|l| {
            let suffix = &w[len - l..];
            self.in_s1(suffix) || self.in_s2(suffix)
        })
    }

    /// Greatest length of a free word, found by extending words letter by
    /// letter and rejecting any extension that ends in a prohibited word.
    pub fn max_free_word_length(&self) -> usize {
        self.longest_free_at_least(usize::MAX)
    }

    /// Like [`max_free_word_length`](Self::max_free_word_length) but stops
    /// as soon as a free word of length `target` is seen.
    fn longest_free_at_least(&self, target: usize) -> usize {
        let mut best = 0;
        let mut stack: Vec<Vec<Letter>> = vec![Vec::new()];
        while let Some(w) = stack.pop() {
            best = best.max(w.len());
            if best >= target {
                break;
            }
            for a in 0..self.n as Letter {
                let mut next = w.clone();
                next.push(a);
                if !self.suffix_prohibited(&next) {
                    stack.push(next);
                }
            }
        }
        best
    }

    /// The instance as an explicit set; needs the listed `s2`.
    pub fn to_prohibition_set(&self) -> Result<ProhibitionSet> {
        let s2 = self.s2.as_ref().ok_or_else(|| {
            Error::ScaleGuard(format!(
                "s2 is only listed for at most {MATERIALIZE_MAX_VERTICES} vertices"
            ))
        })?;
        let words = self.s1.iter().chain(s2).cloned().collect();
        ProhibitionSet::explicit(self.alphabet.clone(), words)
    }

    /// Longest free length through the completeness automaton.
    pub fn automaton_longest(&self) -> Result<usize> {
        let set = self.to_prohibition_set()?;
        let automaton: &FreeWordAutomaton = set.automaton().expect("explicit set");
        match automaton.longest_free_length() {
            LengthAnswer::Finite(m) => Ok(m),
            LengthAnswer::Unbounded => Err(Error::InvalidSet("encoded set is not complete".into())),
        }
    }
}

/// Number of vertices on a longest simple directed path.
pub fn longest_simple_path(graph: &Digraph) -> Result<usize> {
    let n = graph.vertex_count();
    if n > PATH_ORACLE_MAX_VERTICES {
        return Err(Error::ScaleGuard(format!(
            "path enumeration is limited to {PATH_ORACLE_MAX_VERTICES} vertices"
        )));
    }
    let adj = graph.adjacency();
    let mut best = 0;
    // (current vertex, visited mask, vertices on path)
    let mut stack: Vec<(usize, u32, usize)> = (0..n).map(|v| (v, 1 << v, 1)).collect();
    while let Some((v, visited, count)) = stack.pop() {
        best = best.max(count);
        let mut next = adj[v] & !visited;
        while next != 0 {
            let u = next.trailing_zeros() as usize;
            next &= next - 1;
            stack.push((u, visited | 1 << u, count + 1));
        }
    }
    Ok(best)
}

/// Is there a word of length at least `len` free from `encode(graph)`?
pub fn decide_via_words(graph: &Digraph, len: usize) -> Result<bool> {
    if len > graph.vertex_count() {
        return Ok(false);
    }
    Ok(encode(graph)?.longest_free_at_least(len) >= len)
}

/// Is there a simple path on at least `len` vertices?
pub fn decide_via_paths(graph: &Digraph, len: usize) -> Result<bool> {
    Ok(longest_simple_path(graph)? >= len)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CrossValidation {
    pub longest_path: usize,
    pub longest_free_word: usize,
    /// Same quantity through the completeness automaton, when `s2` is listed.
    pub automaton_longest: Option<usize>,
}

impl CrossValidation {
    pub fn agrees(&self) -> bool {
        self.longest_path == self.longest_free_word
            && self.automaton_longest.is_none_or(|a| a == self.longest_path)
    }
}

pub fn cross_validate(graph: &Digraph) -> Result<CrossValidation> {
    let instance = encode(graph)?;
    let automaton_longest = match instance.s2 {
        Some(_) => Some(instance.automaton_longest()?),
        None => None,
    };
    Ok(CrossValidation {
        longest_path: longest_simple_path(graph)?,
        longest_free_word: instance.max_free_word_length(),
        automaton_longest,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn render(inst: &EncodedInstance, ws: &[Word]) -> Vec<String> {
        ws.iter().map(|w| inst.alphabet().render(w)).collect()
    }

    #[test]
    fn single_edge() {
        let g = Digraph::new(2, [(1, 2)]).unwrap();
        let inst = encode(&g).unwrap();
        assert_eq!(render(&inst, &inst.s1), vec!["21"]);
        assert_eq!(inst.max_free_word_length(), 2);
        assert_eq!(longest_simple_path(&g).unwrap(), 2);
        assert!(decide_via_words(&g, 2).unwrap());
        assert!(!decide_via_words(&g, 3).unwrap());
        let free: Vec<_> = ["", "1", "2", "12", "21", "11"]
            .iter()
            .filter(|t| inst.is_free(&inst.alphabet().parse_word(t).unwrap()))
            .collect();
        assert_eq!(free, vec![&"", &"1", &"2", &"12"]);
    }

    #[test]
    fn no_edges() {
        let g = Digraph::new(2, []).unwrap();
        let inst = encode(&g).unwrap();
        assert_eq!(render(&inst, &inst.s1), vec!["12", "21"]);
        assert_eq!(inst.max_free_word_length(), 1);
        assert_eq!(longest_simple_path(&g).unwrap(), 1);
    }

    #[test]
    fn three_cycle() {
        let g = Digraph::new(3, [(1, 2), (2, 3), (3, 1)]).unwrap();
        let inst = encode(&g).unwrap();
        assert_eq!(inst.max_free_word_length(), 3);
        assert!(inst.is_free(&inst.alphabet().parse_word("123").unwrap()));
        assert_eq!(longest_simple_path(&g).unwrap(), 3);
        assert!(decide_via_words(&g, 3).unwrap());
        assert_eq!(inst.automaton_longest().unwrap(), 3);
    }

    #[test]
    fn s2_listing() {
        let g = Digraph::new(2, []).unwrap();
        let inst = encode(&g).unwrap();
        // x x and x y x for x, y in {1, 2}.
        assert_eq!(render(&inst, inst.s2.as_ref().unwrap()), vec!["11", "22", "111", "121", "212", "222"]);
        assert_eq!(inst.s2_size(), 6);
        let g7 = Digraph::new(7, []).unwrap();
        let big = encode(&g7).unwrap();
        assert!(big.s2.is_none());
        assert!(matches!(big.to_prohibition_set(), Err(Error::ScaleGuard(_))));
    }

    #[test]
    fn graph_validation_and_parsing() {
        assert!(Digraph::new(0, []).is_err());
        assert!(Digraph::new(2, [(1, 1)]).is_err());
        assert!(Digraph::new(2, [(1, 3)]).is_err());
        assert!(Digraph::new(2, [(1, 2), (1, 2)]).is_err());
        let g = Digraph::parse("3\n1 2\n\n2 3\n").unwrap();
        assert_eq!(Digraph::parse(&g.to_text()).unwrap(), g);
        assert!(Digraph::parse("x\n").is_err());
        assert!(Digraph::parse("3\n1 2 3\n").is_err());
        assert_eq!(Digraph::from_index(2, 0b01).unwrap(), Digraph::new(2, [(1, 2)]).unwrap());
    }

    #[test]
    fn path_oracle_guard() {
        let g = Digraph::new(11, []).unwrap();
        assert!(matches!(longest_simple_path(&g), Err(Error::ScaleGuard(_))));
    }
}
