//! Words, alphabets and alignments.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;
use std::sync::Arc;

use num_bigint::BigUint;

use crate::error::{Error, Result};

/// Gap character used when rendering alignments.
pub const GAP: char = '-';

/// Symbols indices are stored as `u8`.
pub const MAX_ALPHABET: usize = 256;

const UNIVERSE: &str = "abcdefghijklmnopqrstuvwxyz";

/// An ordered, finite set of characters. The order of `symbols` fixes the
/// canonical (dictionary) order on words.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Alphabet {
    symbols: Arc<[char]>,
}

impl Alphabet {
    pub fn new(spec: &str) -> Result<Self> {
        let mut symbols: Vec<char> = Vec::new();
        for ch in spec.chars() {
            if ch == GAP || ch == '\u{2212}' {
                return Err(Error::ReservedSymbol(ch));
            }
            if symbols.contains(&ch) {
                return Err(Error::DuplicateSymbol(ch));
            }
            symbols.push(ch);
        }
        if symbols.is_empty() {
            return Err(Error::EmptyAlphabet);
        }
        if symbols.len() > MAX_ALPHABET {
            return Err(Error::AlphabetTooLarge(symbols.len()));
        }
        Ok(Alphabet {
            symbols: symbols.into(),
        })
    }

    /// The first `s` letters of `a..z`.
    pub fn first_letters(s: usize) -> Result<Self> {
        if s == 0 || s > UNIVERSE.len() {
            return Err(Error::SigmaOutOfRange(s));
        }
        Alphabet::new(&UNIVERSE[..s])
    }

    pub fn size(&self) -> usize {
        self.symbols.len()
    }

    pub fn symbols(&self) -> &[char] {
        &self.symbols
    }

    pub fn symbol(&self, index: u8) -> char {
        self.symbols[index as usize]
    }

    pub fn index_of(&self, ch: char) -> Option<u8> {
        self.symbols.iter().position(|&c| c == ch).map(|i| i as u8)
    }

    /// Validates `chars` as a word over this alphabet.
    pub fn word(&self, chars: &str) -> Result<Word> {
        let symbols = chars
            .chars()
            .map(|ch| {
                self.index_of(ch).ok_or_else(|| Error::ForeignSymbol {
                    ch,
                    alphabet: self.to_string(),
                })
            })
            .collect::<Result<Vec<u8>>>()?;
        Ok(Word {
            alphabet: self.clone(),
            symbols,
        })
    }

    pub fn word_from_indices(&self, symbols: Vec<u8>) -> Result<Word> {
        if let Some(&bad) = symbols.iter().find(|&&i| i as usize >= self.size()) {
            return Err(Error::Range(format!(
                "symbol index {bad} outside alphabet of size {}",
                self.size()
            )));
        }
        Ok(Word {
            alphabet: self.clone(),
            symbols,
        })
    }

    pub fn empty_word(&self) -> Word {
        Word {
            alphabet: self.clone(),
            symbols: Vec::new(),
        }
    }

    /// `σ^len` for the symbol at `index`.
    pub fn unary_word(&self, index: u8, len: usize) -> Word {
        assert!((index as usize) < self.size());
        Word {
            alphabet: self.clone(),
            symbols: vec![index; len],
        }
    }

    /// All words of exactly `len` symbols in canonical order.
    pub fn words_of_length(&self, len: usize) -> impl Iterator<Item = Word> + '_ {
        let s = self.size();
        let mut current: Option<Vec<u8>> = Some(vec![0; len]);
        std::iter::from_fn(move || {
            let word = current.take()?;
            let mut next = word.clone();
            // odometer increment; exhausted once every position wraps
            if let Some(pos) = (0..len).rev().find(|&p| (next[p] as usize) + 1 < s) {
                next[pos] += 1;
                next[pos + 1..].fill(0);
                current = Some(next);
            }
            Some(Word {
                alphabet: self.clone(),
                symbols: word,
            })
        })
    }
}

impl FromStr for Alphabet {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Alphabet::new(s)
    }
}

impl fmt::Display for Alphabet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.symbols.iter().try_for_each(|c| write!(f, "{c}"))
    }
}

impl fmt::Debug for Alphabet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Alphabet({self})")
    }
}

/// A finite word over an [`Alphabet`], stored as symbol indices.
///
/// Words order lexicographically by symbol index, a proper prefix coming
/// before its extensions.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Word {
    alphabet: Alphabet,
    symbols: Vec<u8>,
}

impl Word {
    pub fn alphabet(&self) -> &Alphabet {
        &self.alphabet
    }

    pub fn symbols(&self) -> &[u8] {
        &self.symbols
    }

    pub fn len(&self) -> usize {
        self.symbols.len()
    }

    pub fn is_empty(&self) -> bool {
        self.symbols.is_empty()
    }

    pub fn chars(&self) -> impl Iterator<Item = char> + '_ {
        self.symbols.iter().map(|&i| self.alphabet.symbol(i))
    }

    pub fn char_at(&self, pos: usize) -> char {
        self.alphabet.symbol(self.symbols[pos])
    }

    pub fn is_unary(&self) -> bool {
        self.symbols.windows(2).all(|p| p[0] == p[1])
    }

    /// Contiguous subword `[start, end)`.
    pub fn slice(&self, start: usize, end: usize) -> Word {
        Word {
            alphabet: self.alphabet.clone(),
            symbols: self.symbols[start..end].to_vec(),
        }
    }

    pub fn is_proper_prefix_of(&self, other: &Word) -> bool {
        self.len() < other.len() && other.symbols.starts_with(&self.symbols)
    }

    /// True if `self` occurs in `other` at some position and differs from it.
    pub fn is_proper_subword_of(&self, other: &Word) -> bool {
        if self.len() >= other.len() {
            return false;
        }
        self.is_empty()
            || other
                .symbols
                .windows(self.len())
                .any(|w| w == self.symbols.as_slice())
    }

    pub fn same_alphabet(&self, other: &Word) -> Result<()> {
        if self.alphabet == other.alphabet {
            Ok(())
        } else {
            Err(Error::MixedAlphabets(
                self.alphabet.to_string(),
                other.alphabet.to_string(),
            ))
        }
    }
}

impl Ord for Word {
    fn cmp(&self, other: &Self) -> Ordering {
        self.symbols
            .cmp(&other.symbols)
            .then_with(|| self.alphabet.symbols.cmp(&other.alphabet.symbols))
    }
}

impl PartialOrd for Word {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.chars().try_for_each(|c| write!(f, "{c}"))
    }
}

impl fmt::Debug for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.to_string())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ColumnClass {
    Match,
    Mismatch,
    /// Gap on the top row.
    Insertion,
    /// Gap on the bottom row.
    Deletion,
}

/// One column of an alignment. `None` is a gap.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Column {
    top: Option<char>,
    bottom: Option<char>,
}

impl Column {
    /// Returns `None` for the forbidden double-gap column.
    pub fn new(top: Option<char>, bottom: Option<char>) -> Option<Self> {
        if top.is_none() && bottom.is_none() {
            None
        } else {
            Some(Column { top, bottom })
        }
    }

    pub fn top(&self) -> Option<char> {
        self.top
    }

    pub fn bottom(&self) -> Option<char> {
        self.bottom
    }

    pub fn class(&self) -> ColumnClass {
        match (self.top, self.bottom) {
            (Some(a), Some(b)) if a == b => ColumnClass::Match,
            (Some(_), Some(_)) => ColumnClass::Mismatch,
            (None, Some(_)) => ColumnClass::Insertion,
            (Some(_), None) => ColumnClass::Deletion,
            (None, None) => unreachable!("double gap column"),
        }
    }

    /// Match or mismatch.
    pub fn is_aligned_pair(&self) -> bool {
        self.top.is_some() && self.bottom.is_some()
    }

    pub fn cost(&self) -> usize {
        usize::from(self.class() != ColumnClass::Match)
    }
}

/// A two-row gapped alignment.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Alignment {
    alphabet: Alphabet,
    columns: Vec<Column>,
    cost: usize,
}

impl Alignment {
    /// Every non-gap character must belong to `alphabet`.
    pub fn new(alphabet: Alphabet, columns: Vec<Column>) -> Result<Self> {
        for col in &columns {
            for ch in [col.top, col.bottom].into_iter().flatten() {
                if alphabet.index_of(ch).is_none() {
                    return Err(Error::ForeignSymbol {
                        ch,
                        alphabet: alphabet.to_string(),
                    });
                }
            }
        }
        let cost = columns.iter().map(Column::cost).sum();
        Ok(Alignment {
            alphabet,
            columns,
            cost,
        })
    }

    pub fn columns(&self) -> &[Column] {
        &self.columns
    }

    pub fn cost(&self) -> usize {
        self.cost
    }

    pub fn alphabet(&self) -> &Alphabet {
        &self.alphabet
    }

    /// Top row with gaps removed.
    pub fn top(&self) -> Word {
        self.project(|c| c.top)
    }

    /// Bottom row with gaps removed.
    pub fn bottom(&self) -> Word {
        self.project(|c| c.bottom)
    }

    fn project(&self, row: impl Fn(&Column) -> Option<char>) -> Word {
        let symbols = self
            .columns
            .iter()
            .filter_map(row)
            .map(|ch| self.alphabet.index_of(ch).expect("validated on construction"))
            .collect();
        Word {
            alphabet: self.alphabet.clone(),
            symbols,
        }
    }

    pub fn count(&self, class: ColumnClass) -> usize {
        self.columns.iter().filter(|c| c.class() == class).count()
    }

    /// Two text lines, columns separated by single spaces, gaps as `-`.
    pub fn render(&self) -> String {
        let row = |pick: fn(&Column) -> Option<char>| {
            self.columns
                .iter()
                .map(|c| pick(c).unwrap_or(GAP).to_string())
                .collect::<Vec<_>>()
                .join(" ")
        };
        format!("{}\n{}", row(|c| c.top), row(|c| c.bottom))
    }
}

impl fmt::Display for Alignment {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum NeighborhoodKind {
    Full,
    Condensed,
    SuperCondensed,
}

impl NeighborhoodKind {
    pub const ALL: [NeighborhoodKind; 3] = [
        NeighborhoodKind::Full,
        NeighborhoodKind::Condensed,
        NeighborhoodKind::SuperCondensed,
    ];

    pub fn as_str(&self) -> &'static str {
        match self {
            NeighborhoodKind::Full => "full",
            NeighborhoodKind::Condensed => "condensed",
            NeighborhoodKind::SuperCondensed => "super-condensed",
        }
    }
}

impl fmt::Display for NeighborhoodKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for NeighborhoodKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "full" => Ok(NeighborhoodKind::Full),
            "condensed" => Ok(NeighborhoodKind::Condensed),
            "super-condensed" | "supercondensed" => Ok(NeighborhoodKind::SuperCondensed),
            other => Err(Error::Range(format!("unknown neighborhood kind {other:?}"))),
        }
    }
}

/// A neighborhood of `query` at distance `d`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NeighborhoodResult {
    pub query: Word,
    pub d: usize,
    pub kind: NeighborhoodKind,
    /// Canonically sorted, when materialized.
    pub words: Option<Vec<Word>>,
    pub count: BigUint,
}

impl NeighborhoodResult {
    pub fn from_words(query: Word, d: usize, kind: NeighborhoodKind, words: Vec<Word>) -> Self {
        let count = BigUint::from(words.len());
        NeighborhoodResult {
            query,
            d,
            kind,
            words: Some(words),
            count,
        }
    }

    pub fn words(&self) -> &[Word] {
        self.words.as_deref().unwrap_or(&[])
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn make_alphabet() {
        let ab = Alphabet::new("ab").unwrap();
        assert_eq!(ab.size(), 2);
        assert_eq!(ab.symbols(), &['a', 'b']);
        assert_eq!(Alphabet::new("abc").unwrap().size(), 3);
        assert_eq!(Alphabet::new("aa"), Err(Error::DuplicateSymbol('a')));
        assert_eq!(Alphabet::new(""), Err(Error::EmptyAlphabet));
        assert!(matches!(Alphabet::new("a-"), Err(Error::ReservedSymbol('-'))));
    }

    #[test]
    fn sigma_maps_to_first_letters() {
        assert_eq!(Alphabet::first_letters(3).unwrap().to_string(), "abc");
        assert_eq!(Alphabet::first_letters(26).unwrap().size(), 26);
        assert_eq!(Alphabet::first_letters(27), Err(Error::SigmaOutOfRange(27)));
        assert_eq!(Alphabet::first_letters(0), Err(Error::SigmaOutOfRange(0)));
    }

    #[test]
    fn validate_word() {
        let ab = Alphabet::new("ab").unwrap();
        assert_eq!(ab.word("aab").unwrap().len(), 3);
        let eps = ab.word("").unwrap();
        assert!(eps.is_empty());
        assert_eq!(eps.to_string(), "");
        assert!(matches!(
            ab.word("ac"),
            Err(Error::ForeignSymbol { ch: 'c', .. })
        ));
    }

    #[test]
    fn alphabet_order_drives_word_order() {
        let ba = Alphabet::new("ba").unwrap();
        let mut words = vec![ba.word("a").unwrap(), ba.word("b").unwrap(), ba.word("").unwrap()];
        words.sort();
        let shown: Vec<String> = words.iter().map(Word::to_string).collect();
        assert_eq!(shown, ["", "b", "a"]);
    }

    #[test]
    fn prefix_precedes_extensions() {
        let ab = Alphabet::new("ab").unwrap();
        let mut words: Vec<Word> = ["b", "ab", "a", "aab", "", "aa"]
            .iter()
            .map(|w| ab.word(w).unwrap())
            .collect();
        words.sort();
        let shown: Vec<String> = words.iter().map(Word::to_string).collect();
        assert_eq!(shown, ["", "a", "aa", "aab", "ab", "b"]);
    }

    #[test]
    fn words_of_length_enumerates_in_order() {
        let ab = Alphabet::new("ab").unwrap();
        let shown: Vec<String> = ab.words_of_length(2).map(|w| w.to_string()).collect();
        assert_eq!(shown, ["aa", "ab", "ba", "bb"]);
        assert_eq!(ab.words_of_length(0).count(), 1);
        assert_eq!(Alphabet::new("abc").unwrap().words_of_length(4).count(), 81);
    }

    #[test]
    fn column_classes() {
        let c = |t, b| Column::new(t, b).unwrap().class();
        assert_eq!(c(Some('a'), Some('a')), ColumnClass::Match);
        assert_eq!(c(Some('a'), Some('b')), ColumnClass::Mismatch);
        assert_eq!(c(None, Some('b')), ColumnClass::Insertion);
        assert_eq!(c(Some('a'), None), ColumnClass::Deletion);
        assert!(Column::new(None, None).is_none());
    }

    #[test]
    fn alignment_projection_and_cost() {
        let alpha = Alphabet::new("alignsb").unwrap();
        let cols = [
            (Some('a'), Some('a')),
            (Some('l'), Some('s')),
            (None, Some('s')),
            (Some('i'), Some('i')),
            (Some('g'), Some('g')),
            (Some('n'), Some('n')),
        ]
        .into_iter()
        .map(|(t, b)| Column::new(t, b).unwrap())
        .collect();
        let a = Alignment::new(alpha, cols).unwrap();
        assert_eq!(a.cost(), 2);
        assert_eq!(a.top().to_string(), "align");
        assert_eq!(a.bottom().to_string(), "assign");
        assert_eq!(a.render(), "a l - i g n\na s s i g n");
    }

    #[test]
    fn subword_relations() {
        let ab = Alphabet::new("ab").unwrap();
        let w = |s| ab.word(s).unwrap();
        assert!(w("").is_proper_prefix_of(&w("a")));
        assert!(!w("a").is_proper_prefix_of(&w("a")));
        assert!(w("ba").is_proper_subword_of(&w("abab")));
        assert!(!w("bb").is_proper_subword_of(&w("abab")));
        assert!(!w("ab").is_proper_subword_of(&w("ab")));
    }
}
