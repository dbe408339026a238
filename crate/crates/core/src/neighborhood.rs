//! Full, condensed and super-condensed Levenshtein neighborhoods.
//!
//! The enumerators walk the trie of all words over the alphabet depth first,
//! carrying one row of the edit-distance table of the current prefix against
//! the query. Cells are saturated at `d + 1`, which leaves every `≤ d`
//! decision unchanged. Children are visited in alphabet order and a node is
//! reported before its subtree, so output comes out in canonical order.

use std::collections::HashSet;

use num_bigint::BigUint;

use crate::distance::levenshtein;
use crate::error::{Error, Result};
use crate::model::{Alphabet, NeighborhoodKind, NeighborhoodResult, Word};

/// Default cap on `s^(|w|+d+1)` candidate words for the brute-force oracle.
pub const DEFAULT_ORACLE_BUDGET: u128 = 10_000_000;

/// Distance row of a trie node: `row[j] = min(d(prefix, query[..j]), d + 1)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TraversalNode {
    pub prefix: Vec<u8>,
    pub row: Vec<usize>,
}

impl TraversalNode {
    pub fn root(query: &[u8], d: usize) -> Self {
        TraversalNode {
            prefix: Vec::new(),
            row: (0..=query.len()).map(|j| j.min(d + 1)).collect(),
        }
    }

    pub fn depth(&self) -> usize {
        self.prefix.len()
    }

    pub fn distance(&self) -> usize {
        *self.row.last().expect("row has |query| + 1 cells")
    }

    pub fn min(&self) -> usize {
        *self.row.iter().min().expect("row is never empty")
    }
}

fn extend_row(row: &[usize], query: &[u8], symbol: u8, d: usize, out: &mut Vec<usize>) {
    let cap = d + 1;
    out.clear();
    out.push((row[0] + 1).min(cap));
    for j in 1..row.len() {
        let v = (row[j - 1] + usize::from(query[j - 1] != symbol))
            .min(row[j] + 1)
            .min(out[j - 1] + 1)
            .min(cap);
        out.push(v);
    }
}

/// True when some nonempty prefix of `text` lies within distance `d` of `query`.
fn some_prefix_within(query: &[u8], text: &[u8], d: usize) -> bool {
    let mut row: Vec<usize> = (0..=query.len()).map(|j| j.min(d + 1)).collect();
    let mut next = Vec::with_capacity(row.len());
    for &c in text {
        extend_row(&row, query, c, d, &mut next);
        std::mem::swap(&mut row, &mut next);
        if row[query.len()] <= d {
            return true;
        }
        if row.iter().all(|&v| v > d) {
            return false;
        }
    }
    false
}

/// For a member of the condensed neighborhood, checks that no proper subword
/// is in the full neighborhood. Prefixes are already excluded, so only
/// subwords starting past position 0 are tested, each start by a fresh
/// thresholded scan.
fn has_no_inner_member(query: &[u8], word: &[u8], d: usize) -> bool {
    (1..word.len()).all(|start| !some_prefix_within(query, &word[start..], d))
}

struct Walk<'a> {
    query: &'a [u8],
    s: usize,
    d: usize,
    max_len: usize,
}

impl Walk<'_> {
    fn new<'q>(query: &'q [u8], alphabet: &Alphabet, d: usize) -> Walk<'q> {
        Walk {
            query,
            s: alphabet.size(),
            d,
            max_len: query.len() + d,
        }
    }

    /// Pre-order traversal of every node that may still reach the
    /// neighborhood. `visit` returns whether to descend below the node.
    fn run(&self, visit: &mut dyn FnMut(&TraversalNode) -> bool) {
        let mut node = TraversalNode::root(self.query, self.d);
        self.descend(&mut node, visit);
    }

    fn descend(&self, node: &mut TraversalNode, visit: &mut dyn FnMut(&TraversalNode) -> bool) {
        if !visit(node) || node.depth() >= self.max_len || node.min() > self.d {
            return;
        }
        let parent = node.row.clone();
        for symbol in (0..self.s).map(|c| c as u8) {
            extend_row(&parent, self.query, symbol, self.d, &mut node.row);
            node.prefix.push(symbol);
            self.descend(node, visit);
            node.prefix.pop();
        }
        node.row = parent;
    }
}

/// Calls `emit` on every member of the `kind` neighborhood of `w`, in
/// canonical order.
pub fn for_each_member(
    w: &Word,
    d: usize,
    alphabet: &Alphabet,
    kind: NeighborhoodKind,
    emit: &mut dyn FnMut(&[u8]),
) -> Result<()> {
    if w.alphabet() != alphabet {
        return Err(Error::MixedAlphabets(w.alphabet().to_string(), alphabet.to_string()));
    }
    let query = w.symbols();
    let walk = Walk::new(query, alphabet, d);
    match kind {
        NeighborhoodKind::Full => walk.run(&mut |node| {
            if node.distance() <= d {
                emit(&node.prefix);
            }
            true
        }),
        NeighborhoodKind::Condensed => walk.run(&mut |node| {
            if node.distance() <= d {
                emit(&node.prefix);
                return false;
            }
            true
        }),
        NeighborhoodKind::SuperCondensed => walk.run(&mut |node| {
            if node.distance() <= d {
                if has_no_inner_member(query, &node.prefix, d) {
                    emit(&node.prefix);
                }
                return false;
            }
            true
        }),
    }
    Ok(())
}

fn enumerate(w: &Word, d: usize, alphabet: &Alphabet, kind: NeighborhoodKind) -> Result<NeighborhoodResult> {
    let mut words = Vec::new();
    for_each_member(w, d, alphabet, kind, &mut |s| {
        words.push(alphabet.word_from_indices(s.to_vec()).expect("trie symbols are in range"))
    })?;
    Ok(NeighborhoodResult::from_words(w.clone(), d, kind, words))
}

pub fn in_neighborhood(u: &Word, w: &Word, d: usize) -> Result<bool> {
    Ok(levenshtein(u, w)? <= d)
}

/// `N(w, d)`: all words within distance `d` of `w`.
pub fn enumerate_full(w: &Word, d: usize, alphabet: &Alphabet) -> Result<NeighborhoodResult> {
    enumerate(w, d, alphabet, NeighborhoodKind::Full)
}

/// `CN(w, d)`: members of `N(w, d)` with no proper prefix in `N(w, d)`.
pub fn enumerate_condensed(w: &Word, d: usize, alphabet: &Alphabet) -> Result<NeighborhoodResult> {
    enumerate(w, d, alphabet, NeighborhoodKind::Condensed)
}

/// `SCN(w, d)`: members of `N(w, d)` with no proper subword in `N(w, d)`.
pub fn enumerate_super_condensed(w: &Word, d: usize, alphabet: &Alphabet) -> Result<NeighborhoodResult> {
    enumerate(w, d, alphabet, NeighborhoodKind::SuperCondensed)
}

pub fn enumerate_kind(
    w: &Word,
    d: usize,
    alphabet: &Alphabet,
    kind: NeighborhoodKind,
) -> Result<NeighborhoodResult> {
    enumerate(w, d, alphabet, kind)
}

/// Size of the `kind` neighborhood without materializing it.
pub fn count(w: &Word, d: usize, alphabet: &Alphabet, kind: NeighborhoodKind) -> Result<BigUint> {
    let mut n: u128 = 0;
    for_each_member(w, d, alphabet, kind, &mut |_| n += 1)?;
    Ok(BigUint::from(n))
}

/// Candidate words the oracle must examine: `s^(|w|+d+1)`, saturating.
pub fn oracle_cost(w: &Word, d: usize, alphabet: &Alphabet) -> u128 {
    (alphabet.size() as u128)
        .checked_pow((w.len() + d + 1) as u32)
        .unwrap_or(u128::MAX)
}

/// Ground truth by exhaustion: every word of length `0..=|w|+d` is tested by
/// a full distance computation and the set differences are applied as
/// written.
pub fn brute_force_enumerate(
    w: &Word,
    d: usize,
    alphabet: &Alphabet,
    kind: NeighborhoodKind,
    budget: u128,
) -> Result<NeighborhoodResult> {
    if w.alphabet() != alphabet {
        return Err(Error::MixedAlphabets(w.alphabet().to_string(), alphabet.to_string()));
    }
    let needed = oracle_cost(w, d, alphabet);
    if needed > budget {
        return Err(Error::BudgetExceeded { needed, budget });
    }
    let mut full = Vec::new();
    for len in 0..=w.len() + d {
        for u in alphabet.words_of_length(len) {
            if levenshtein(&u, w)? <= d {
                full.push(u);
            }
        }
    }
    let members: HashSet<&[u8]> = full.iter().map(Word::symbols).collect();
    let mut words: Vec<Word> = match kind {
        NeighborhoodKind::Full => full.clone(),
        NeighborhoodKind::Condensed => full
            .iter()
            .filter(|u| (0..u.len()).all(|end| !members.contains(&u.symbols()[..end])))
            .cloned()
            .collect(),
        NeighborhoodKind::SuperCondensed => full
            .iter()
            .filter(|u| {
                let x = u.symbols();
                (0..=x.len()).all(|start| {
                    (start..=x.len())
                        .filter(|&end| end - start < x.len())
                        .all(|end| !members.contains(&x[start..end]))
                })
            })
            .cloned()
            .collect(),
    };
    words.sort();
    Ok(NeighborhoodResult::from_words(w.clone(), d, kind, words))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn listed(r: &NeighborhoodResult) -> Vec<String> {
        r.words().iter().map(Word::to_string).collect()
    }

    fn setup(alpha: &str, w: &str) -> (Alphabet, Word) {
        let a = Alphabet::new(alpha).unwrap();
        let w = a.word(w).unwrap();
        (a, w)
    }

    #[test]
    fn membership() {
        let (a, w) = setup("a", "aaa");
        assert!(!in_neighborhood(&a.word("a").unwrap(), &w, 1).unwrap());
        assert!(in_neighborhood(&a.word("aa").unwrap(), &w, 1).unwrap());
        let (a, w) = setup("alignsb", "assign");
        assert!(in_neighborhood(&a.word("align").unwrap(), &w, 2).unwrap());
    }

    #[test]
    fn full_examples() {
        let (a, w) = setup("ab", "a");
        assert_eq!(listed(&enumerate_full(&w, 0, &a).unwrap()), ["a"]);

        let (a, w) = setup("ab", "aa");
        let r = enumerate_full(&w, 1, &a).unwrap();
        assert_eq!(listed(&r), ["a", "aa", "aaa", "aab", "ab", "aba", "ba", "baa"]);
        assert_eq!(r.count, BigUint::from(8u32));

        let (a, w) = setup("a", "aaa");
        let r = enumerate_full(&w, 3, &a).unwrap();
        assert_eq!(listed(&r), ["", "a", "aa", "aaa", "aaaa", "aaaaa", "aaaaaa"]);
    }

    #[test]
    fn condensed_examples() {
        let (a, w) = setup("ab", "aaaa");
        assert_eq!(enumerate_condensed(&w, 2, &a).unwrap().count, BigUint::from(6u32));

        let (a, w) = setup("abc", "abcab");
        assert_eq!(listed(&enumerate_condensed(&w, 0, &a).unwrap()), ["abcab"]);

        let (a, w) = setup("abc", "aaa");
        assert_eq!(
            listed(&enumerate_condensed(&w, 1, &a).unwrap()),
            ["aa", "aba", "aca", "baa", "caa"]
        );

        let (a, w) = setup("ab", "a");
        assert_eq!(listed(&enumerate_condensed(&w, 2, &a).unwrap()), [""]);
    }

    #[test]
    fn super_condensed_examples() {
        let (a, w) = setup("ab", "aaaa");
        assert_eq!(
            listed(&enumerate_super_condensed(&w, 1, &a).unwrap()),
            ["aaa", "aaba", "abaa"]
        );
        let (a, w) = setup("ab", "abba");
        assert_eq!(listed(&enumerate_super_condensed(&w, 0, &a).unwrap()), ["abba"]);
        let (a, w) = setup("ab", "aa");
        assert_eq!(listed(&enumerate_super_condensed(&w, 1, &a).unwrap()), ["a"]);
    }

    #[test]
    fn count_matches_enumeration() {
        let (a, w) = setup("ab", "aaaa");
        assert_eq!(count(&w, 2, &a, NeighborhoodKind::Condensed).unwrap(), BigUint::from(6u32));
        assert_eq!(
            count(&w, 1, &a, NeighborhoodKind::SuperCondensed).unwrap(),
            BigUint::from(3u32)
        );
        let (a, w) = setup("ab", "abab");
        assert_eq!(
            count(&w, 1, &a, NeighborhoodKind::Condensed).unwrap(),
            enumerate_condensed(&w, 1, &a).unwrap().count
        );
    }

    #[test]
    fn oracle_examples() {
        let (a, w) = setup("ab", "aa");
        let oracle = brute_force_enumerate(&w, 1, &a, NeighborhoodKind::Full, DEFAULT_ORACLE_BUDGET).unwrap();
        assert_eq!(oracle, enumerate_full(&w, 1, &a).unwrap());

        let (a, w) = setup("ab", "a");
        let oracle =
            brute_force_enumerate(&w, 2, &a, NeighborhoodKind::Condensed, DEFAULT_ORACLE_BUDGET).unwrap();
        assert_eq!(listed(&oracle), [""]);
    }

    #[test]
    fn oracle_refuses_over_budget() {
        let (a, w) = setup("abcd", "abcdabcd");
        let err = brute_force_enumerate(&w, 4, &a, NeighborhoodKind::Full, DEFAULT_ORACLE_BUDGET).unwrap_err();
        assert_eq!(
            err,
            Error::BudgetExceeded {
                needed: 4u128.pow(13),
                budget: DEFAULT_ORACLE_BUDGET
            }
        );
    }

    #[test]
    fn condensed_matches_oracle_on_all_binary_words_of_length_six() {
        let a = Alphabet::new("ab").unwrap();
        for w in a.words_of_length(6) {
            for d in 0..=2 {
                let fast = enumerate_condensed(&w, d, &a).unwrap();
                let slow =
                    brute_force_enumerate(&w, d, &a, NeighborhoodKind::Condensed, DEFAULT_ORACLE_BUDGET)
                        .unwrap();
                assert_eq!(fast, slow, "w={w} d={d}");
            }
        }
    }

    #[test]
    fn node_rows_track_prefix_distances() {
        let (a, w) = setup("ab", "abba");
        let d = 2;
        let walk = Walk::new(w.symbols(), &a, d);
        walk.run(&mut |node| {
            let prefix = a.word_from_indices(node.prefix.clone()).unwrap();
            for (j, &cell) in node.row.iter().enumerate() {
                let exact = levenshtein(&prefix, &w.slice(0, j)).unwrap();
                assert_eq!(cell, exact.min(d + 1));
            }
            true
        });
    }
}
