//! Cross-checks of the enumerators, formulas and bounds against each other
//! and against exhaustive oracles, plus the bound table and the extremal
//! scan.

use std::collections::BTreeSet;
use std::fmt;
use std::time::{Duration, Instant};

use num_bigint::BigUint;
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

use crate::combinatorics::{binom_ext, bound_f, conjecture_bound, unary_cn_size, unary_scn_size, verify_proof_lemmas};
use crate::distance::{
    enumerate_optimal_alignments, leftmost_optimal_alignment, mm_index_sequence, LeftmostKey,
    DEFAULT_ALIGNMENT_BUDGET,
};
use crate::error::{Error, Result};
use crate::model::{Alignment, Alphabet, ColumnClass, NeighborhoodKind, NeighborhoodResult, Word};
use crate::neighborhood::{
    brute_force_enumerate, count, enumerate_kind, in_neighborhood, DEFAULT_ORACLE_BUDGET,
};

/// Published values of the two bounds for `s = 2`, rows `w = 4, 6, 8, 10`,
/// columns `d = 1..w`.
pub const PUBLISHED_F: [(u64, &[u64]); 4] = [
    (4, &[11, 48, 111]),
    (6, &[17, 125, 528, 1463, 2988]),
    (8, &[23, 238, 1473, 6151, 18738, 44681, 89617]),
    (10, &[29, 387, 3162, 17800, 73968, 238937, 628931, 1413016, 2827055]),
];

pub const PUBLISHED_CONJECTURE: [(u64, &[u64]); 4] = [
    (4, &[12, 72, 288]),
    (6, &[18, 162, 972, 4374, 15746]),
    (8, &[24, 288, 2304, 13824, 66355, 265420, 910014]),
    (10, &[30, 450, 4500, 33750, 202500, 1012500, 4339285, 16272321, 54241071]),
];

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Panel {
    /// The summation bound `F`.
    A,
    /// Floor of the closed-form bound.
    B,
}

impl fmt::Display for Panel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Panel::A => "a",
            Panel::B => "b",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TableCell {
    pub panel: Panel,
    pub w: u64,
    pub d: u64,
    pub value: BigUint,
}

/// Both panels for `s = 2`, `w ∈ {4, 6, 8, 10}`, `1 <= d < w`, computed.
pub fn table1() -> Vec<TableCell> {
    let mut cells = Vec::new();
    for panel in [Panel::A, Panel::B] {
        for w in [4u64, 6, 8, 10] {
            for d in 1..w {
                let value = match panel {
                    Panel::A => bound_f(w, d, 2).expect("d < w"),
                    Panel::B => conjecture_bound(w, d, 2).expect("d < w").floor(),
                };
                cells.push(TableCell { panel, w, d, value });
            }
        }
    }
    cells
}

pub fn published_value(panel: Panel, w: u64, d: u64) -> Option<u64> {
    let rows = match panel {
        Panel::A => &PUBLISHED_F,
        Panel::B => &PUBLISHED_CONJECTURE,
    };
    rows.iter()
        .find(|(rw, _)| *rw == w)
        .and_then(|(_, vals)| vals.get((d as usize).checked_sub(1)?).copied())
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Failure {
    pub check: &'static str,
    pub case: String,
    pub expected: String,
    pub actual: String,
}

impl fmt::Display for Failure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "[{}] {}: expected {}, got {}",
            self.check, self.case, self.expected, self.actual
        )
    }
}

/// Result of one named check.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CheckOutcome {
    pub name: &'static str,
    pub cases: usize,
    pub failures: Vec<Failure>,
    /// Advisory checks surface observations without failing a run.
    pub advisory: bool,
}

impl CheckOutcome {
    pub fn new(name: &'static str) -> Self {
        CheckOutcome {
            name,
            cases: 0,
            failures: Vec::new(),
            advisory: false,
        }
    }

    pub fn advisory(name: &'static str) -> Self {
        CheckOutcome {
            advisory: true,
            ..CheckOutcome::new(name)
        }
    }

    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }

    fn case(&mut self) {
        self.cases += 1;
    }

    fn fail(&mut self, case: impl Into<String>, expected: impl ToString, actual: impl ToString) {
        self.failures.push(Failure {
            check: self.name,
            case: case.into(),
            expected: expected.to_string(),
            actual: actual.to_string(),
        });
    }

    fn expect_eq<T: PartialEq + fmt::Display>(&mut self, case: impl FnOnce() -> String, expected: T, actual: T) {
        self.case();
        if expected != actual {
            self.fail(case(), expected, actual);
        }
    }

    fn expect(&mut self, ok: bool, case: impl FnOnce() -> String, expected: &str, actual: impl FnOnce() -> String) {
        self.case();
        if !ok {
            self.fail(case(), expected, actual());
        }
    }

    fn error(&mut self, case: impl Into<String>, err: &Error) {
        self.case();
        self.fail(case, "completed", err);
    }
}

fn case_label(w: &Word, d: usize) -> String {
    format!("W={:?} d={d} s={}", w.to_string(), w.alphabet().size())
}

/// Every word of length `0..=max_len`, canonical order.
pub fn all_words(alphabet: &Alphabet, max_len: usize) -> Vec<Word> {
    (0..=max_len).flat_map(|l| alphabet.words_of_length(l)).collect()
}

/// `n` seeded random words with lengths in `min_len..=max_len`.
pub fn random_words(alphabet: &Alphabet, min_len: usize, max_len: usize, n: usize, seed: u64) -> Vec<Word> {
    let mut rng = StdRng::seed_from_u64(seed);
    (0..n)
        .map(|_| {
            let len = rng.random_range(min_len..=max_len);
            let symbols = (0..len)
                .map(|_| rng.random_range(0..alphabet.size()) as u8)
                .collect();
            alphabet.word_from_indices(symbols).expect("in range")
        })
        .collect()
}

/// Fast enumerators agree with the brute-force oracle as sets, in every kind.
pub fn check_oracle_equivalence(cases: &[(Word, usize)], budget: u128) -> CheckOutcome {
    let mut out = CheckOutcome::new("oracle-equivalence");
    for (w, d) in cases {
        let alphabet = w.alphabet();
        for kind in NeighborhoodKind::ALL {
            let label = || format!("{} kind={kind}", case_label(w, *d));
            let fast = match enumerate_kind(w, *d, alphabet, kind) {
                Ok(r) => r,
                Err(e) => {
                    out.error(label(), &e);
                    continue;
                }
            };
            match brute_force_enumerate(w, *d, alphabet, kind, budget) {
                Ok(slow) => {
                    let fast_set: BTreeSet<&Word> = fast.words().iter().collect();
                    let slow_set: BTreeSet<&Word> = slow.words().iter().collect();
                    out.expect(
                        fast_set == slow_set && fast.words() == slow.words(),
                        label,
                        &format!("{} words", slow.count),
                        || format!("{} words", fast.count),
                    );
                    let counted = count(w, *d, alphabet, kind).unwrap_or_default();
                    out.expect_eq(|| format!("{} (count)", label()), slow.count.clone(), counted);
                }
                Err(e) => out.error(label(), &e),
            }
        }
    }
    out
}

fn neighborhoods(w: &Word, d: usize) -> Result<[NeighborhoodResult; 3]> {
    let a = w.alphabet();
    Ok([
        enumerate_kind(w, d, a, NeighborhoodKind::Full)?,
        enumerate_kind(w, d, a, NeighborhoodKind::Condensed)?,
        enumerate_kind(w, d, a, NeighborhoodKind::SuperCondensed)?,
    ])
}

/// Containments, sortedness, length limit, prefix-freeness of the condensed
/// set and subword-freeness of the super-condensed set.
pub fn check_structure(cases: &[(Word, usize)]) -> CheckOutcome {
    let mut out = CheckOutcome::new("set-structure");
    for (w, d) in cases {
        let [full, cn, scn] = match neighborhoods(w, *d) {
            Ok(n) => n,
            Err(e) => {
                out.error(case_label(w, *d), &e);
                continue;
            }
        };
        let label = || case_label(w, *d);
        let full_set: BTreeSet<&Word> = full.words().iter().collect();
        let cn_set: BTreeSet<&Word> = cn.words().iter().collect();
        for r in [&full, &cn, &scn] {
            out.expect(
                r.words().windows(2).all(|p| p[0] < p[1]),
                || format!("{} kind={} sorted", label(), r.kind),
                "strictly increasing",
                || "unsorted".into(),
            );
            out.expect(
                r.words().iter().all(|u| u.len() <= w.len() + d),
                || format!("{} kind={} lengths", label(), r.kind),
                "all lengths <= |W|+d",
                || "longer word".into(),
            );
        }
        out.expect(
            full_set.contains(w),
            || format!("{} W in N", label()),
            "present",
            || "missing".into(),
        );
        let has_eps = full.words().first().is_some_and(Word::is_empty);
        out.expect_eq(|| format!("{} eps in N", label()), w.len() <= *d, has_eps);
        out.expect(
            cn.words().iter().all(|u| full_set.contains(u)),
            || format!("{} CN ⊆ N", label()),
            "subset",
            || "not a subset".into(),
        );
        out.expect(
            scn.words().iter().all(|u| cn_set.contains(u)),
            || format!("{} SCN ⊆ CN", label()),
            "subset",
            || "not a subset".into(),
        );
        let words = cn.words();
        let clash = words
            .iter()
            .flat_map(|a| words.iter().map(move |b| (a, b)))
            .find(|(a, b)| a.is_proper_prefix_of(b));
        out.expect(
            clash.is_none(),
            || format!("{} CN prefix-free", label()),
            "prefix-free",
            || format!("{:?}", clash.unwrap()),
        );
        for u in scn.words() {
            let inner = (0..u.len())
                .flat_map(|a| (a..=u.len()).map(move |b| (a, b)))
                .filter(|&(a, b)| b - a < u.len())
                .find(|&(a, b)| in_neighborhood(&u.slice(a, b), w, *d).unwrap_or(true));
            out.expect(
                inner.is_none(),
                || format!("{} SCN member {u:?}", label()),
                "no proper subword in N",
                || {
                    let (a, b) = inner.unwrap();
                    format!("subword {:?} in N", u.slice(a, b).to_string())
                },
            );
        }
    }
    out
}

/// Nonempty members of the condensed neighborhood sit at distance exactly
/// `d` when `d >= 1`. The empty word only belongs to the condensed set when
/// `d >= |W|` and is excluded.
pub fn check_exact_distance(cases: &[(Word, usize)]) -> CheckOutcome {
    let mut out = CheckOutcome::new("condensed-exact-distance");
    for (w, d) in cases.iter().filter(|(_, d)| *d >= 1) {
        let cn = match enumerate_kind(w, *d, w.alphabet(), NeighborhoodKind::Condensed) {
            Ok(r) => r,
            Err(e) => {
                out.error(case_label(w, *d), &e);
                continue;
            }
        };
        for x in cn.words().iter().filter(|x| !x.is_empty()) {
            let dist = crate::distance::levenshtein(x, w).expect("same alphabet");
            out.expect_eq(|| format!("{} x={x:?}", case_label(w, *d)), *d, dist);
        }
    }
    out
}

/// For unary `σ^w` with `w >= d >= 1`, each nonempty condensed member is no
/// longer than `w`, ends in `σ` and holds exactly `w - d` copies of `σ`.
pub fn check_unary_structure(alphabet: &Alphabet, max_len: usize) -> CheckOutcome {
    let mut out = CheckOutcome::new("unary-condensed-structure");
    for w in 1..=max_len {
        let query = alphabet.unary_word(0, w);
        for d in 1..=w {
            let cn = match enumerate_kind(&query, d, alphabet, NeighborhoodKind::Condensed) {
                Ok(r) => r,
                Err(e) => {
                    out.error(case_label(&query, d), &e);
                    continue;
                }
            };
            for x in cn.words().iter().filter(|x| !x.is_empty()) {
                let sigmas = x.symbols().iter().filter(|&&c| c == 0).count();
                out.expect(
                    x.len() <= w && x.symbols().last() == Some(&0) && sigmas == w - d,
                    || format!("{} x={x:?}", case_label(&query, d)),
                    &format!("|x| <= {w}, ends with σ, {} σ's", w - d),
                    || format!("|x| = {}, {sigmas} σ's", x.len()),
                );
            }
        }
    }
    out
}

/// Alignment-level facts for every nonempty `x ∈ CN(W, d)`, `d >= 1`:
///
/// - the leftmost alignment computed directly equals the minimum of the
///   exhaustive enumeration under the leftmost order;
/// - in it, the last query character not deleted forms a match with the last
///   character of `x`, and the second-to-last character of `x` is not in an
///   insertion column;
/// - every optimal alignment puts the last character of `x` in a match
///   column and has no insertion column next to a deletion column.
///
/// Ties in the leftmost order before the deletion-first tie break are
/// reported under `leftmost-uniqueness`; the structural facts are checked on
/// every tied alignment. `leftmost-readings-agree` reports instances where
/// the smallest index sequence over all optimal alignments does not belong
/// to one with the fewest pair columns.
pub fn check_alignment_structure(cases: &[(Word, usize)], budget: usize) -> Vec<CheckOutcome> {
    let mut oracle = CheckOutcome::new("leftmost-vs-oracle");
    let mut unique = CheckOutcome::new("leftmost-uniqueness");
    let mut last_match = CheckOutcome::new("leftmost-last-match");
    let mut every_match = CheckOutcome::new("optimal-last-match");
    let mut adjacency = CheckOutcome::new("no-adjacent-indels");
    let mut readings = CheckOutcome::advisory("leftmost-readings-agree");
    for (w, d) in cases.iter().filter(|(_, d)| *d >= 1) {
        let cn = match enumerate_kind(w, *d, w.alphabet(), NeighborhoodKind::Condensed) {
            Ok(r) => r,
            Err(e) => {
                oracle.error(case_label(w, *d), &e);
                continue;
            }
        };
        for x in cn.words().iter().filter(|x| !x.is_empty()) {
            let label = || format!("{} x={x:?}", case_label(w, *d));
            let leftmost = leftmost_optimal_alignment(w, x).expect("same alphabet");
            let all = match enumerate_optimal_alignments(w, x, budget) {
                Ok(all) => all,
                Err(e) => {
                    oracle.error(label(), &e);
                    continue;
                }
            };
            let keys: Vec<LeftmostKey> = all.iter().map(LeftmostKey::of).collect();
            let best = keys.iter().min().expect("at least one optimal alignment");
            oracle.expect(
                all.contains(&leftmost) && &LeftmostKey::of(&leftmost) == best,
                label,
                &flat(&all[keys.iter().position(|k| k == best).unwrap()]),
                || flat(&leftmost),
            );
            let tied: Vec<&Alignment> = all
                .iter()
                .zip(&keys)
                .filter(|(_, k)| k.cmp_primary(best).is_eq())
                .map(|(a, _)| a)
                .collect();
            unique.expect_eq(label, 1, tied.len());

            // every alignment that is minimal before the tie break
            for a in tied {
                last_match.expect(lemma_structure_holds(a), label, "match at the end", || flat(a));
            }
            // lexicographically smallest index sequence without fewest pairs first
            let plain = all.iter().map(mm_index_sequence).min().expect("nonempty");
            readings.expect(
                plain == best.indices,
                label,
                &format!("{:?}", best.indices.indices()),
                || format!("{:?}", plain.indices()),
            );
            for a in &all {
                every_match.expect(
                    last_bottom_is_match(a),
                    label,
                    "last character of x matched",
                    || flat(a),
                );
                adjacency.expect(!has_adjacent_indels(a), label, "no ins/del neighbours", || flat(a));
            }
        }
    }
    vec![oracle, unique, readings, last_match, every_match, adjacency]
}

fn flat(a: &Alignment) -> String {
    a.render().replace('\n', " / ")
}

fn last_bottom_is_match(a: &Alignment) -> bool {
    a.columns()
        .iter()
        .rev()
        .find(|c| c.bottom().is_some())
        .is_some_and(|c| c.class() == ColumnClass::Match)
}

/// The last column pairing two characters is a match carrying the last
/// bottom character, and the second-to-last bottom character is not
/// inserted.
pub fn lemma_structure_holds(a: &Alignment) -> bool {
    let cols = a.columns();
    let Some(p) = cols.iter().rposition(|c| c.is_aligned_pair()) else {
        return false;
    };
    if cols[p].class() != ColumnClass::Match || cols[p + 1..].iter().any(|c| c.bottom().is_some()) {
        return false;
    }
    let bottoms: Vec<usize> = cols
        .iter()
        .enumerate()
        .filter(|(_, c)| c.bottom().is_some())
        .map(|(i, _)| i)
        .collect();
    bottoms.len() < 2 || cols[bottoms[bottoms.len() - 2]].class() != ColumnClass::Insertion
}

pub fn has_adjacent_indels(a: &Alignment) -> bool {
    a.columns().windows(2).any(|p| {
        matches!(
            (p[0].class(), p[1].class()),
            (ColumnClass::Insertion, ColumnClass::Deletion) | (ColumnClass::Deletion, ColumnClass::Insertion)
        )
    })
}

type UnaryFormula = fn(u64, u64, u64) -> Result<BigUint>;

/// Unary formulas against brute-force counts for `1 <= d <= w <= max_len`.
pub fn check_unary_formulas(alphabet: &Alphabet, max_len: usize, budget: u128) -> CheckOutcome {
    unary_formulas_against_oracle(alphabet, max_len, budget, unary_cn_size, unary_scn_size)
}

fn unary_formulas_against_oracle(
    alphabet: &Alphabet,
    max_len: usize,
    budget: u128,
    cn: UnaryFormula,
    scn: UnaryFormula,
) -> CheckOutcome {
    let mut out = CheckOutcome::new("unary-formulas");
    let s = alphabet.size() as u64;
    for w in 1..=max_len {
        let query = alphabet.unary_word(0, w);
        for d in 1..=w {
            for (kind, formula) in [(NeighborhoodKind::Condensed, cn), (NeighborhoodKind::SuperCondensed, scn)] {
                let label = || format!("{} kind={kind}", case_label(&query, d));
                let expected = formula(w as u64, d as u64, s).expect("d <= w");
                match brute_force_enumerate(&query, d, alphabet, kind, budget) {
                    Ok(r) => out.expect_eq(label, expected, r.count),
                    Err(e) => out.error(label(), &e),
                }
            }
        }
    }
    out
}

/// Binary specializations of the unary formulas for `1 <= d <= w <= max_w`.
pub fn check_binary_specializations(max_w: u64) -> CheckOutcome {
    let mut out = CheckOutcome::new("binary-specializations");
    for w in 1..=max_w {
        for d in 1..=w {
            let label = || format!("w={w} d={d}");
            out.expect_eq(
                || format!("{} condensed", label()),
                binom_ext(w as i64, d as i64),
                unary_cn_size(w, d, 2).expect("d <= w"),
            );
            out.expect_eq(
                || format!("{} super-condensed", label()),
                binom_ext(w as i64 - 1, d as i64),
                unary_scn_size(w, d, 2).expect("d <= w"),
            );
        }
    }
    out
}

/// `|CN(W, d)| <= F(w, d, s) <= floor((2s-1)^d w^d / d!)` for every word of
/// length `1..=max_len` and `1 <= d < w`.
pub fn check_bound_sandwich(alphabet: &Alphabet, max_len: usize) -> CheckOutcome {
    let mut out = CheckOutcome::new("bound-sandwich");
    let s = alphabet.size() as u64;
    for len in 1..=max_len {
        for d in 1..len {
            let f = bound_f(len as u64, d as u64, s).expect("d < w");
            let floor = conjecture_bound(len as u64, d as u64, s).expect("d < w").floor();
            out.expect(
                f <= floor,
                || format!("w={len} d={d} s={s}"),
                &format!("F <= {floor}"),
                || format!("F = {f}"),
            );
            for w in alphabet.words_of_length(len) {
                let size = count(&w, d, alphabet, NeighborhoodKind::Condensed).expect("same alphabet");
                out.expect(
                    size <= f,
                    || case_label(&w, d),
                    &format!("|CN| <= {f}"),
                    || format!("|CN| = {size}"),
                );
            }
        }
    }
    out
}

/// Computed table against the published cells.
pub fn check_table1() -> CheckOutcome {
    let mut out = CheckOutcome::new("table1");
    for cell in table1() {
        let label = || format!("panel={} w={} d={}", cell.panel, cell.w, cell.d);
        match published_value(cell.panel, cell.w, cell.d) {
            Some(p) => out.expect_eq(label, BigUint::from(p), cell.value.clone()),
            None => {
                out.case();
                out.fail(label(), "a published value", "none");
            }
        }
    }
    out
}

/// Every proof step for `1 <= d <= w <= max_w` and each `s` in `sigmas`.
pub fn check_proof_lemmas(max_w: u64, sigmas: &[u64]) -> CheckOutcome {
    let mut out = CheckOutcome::new("proof-lemmas");
    for &s in sigmas {
        for w in 1..=max_w {
            for d in 1..=w {
                match verify_proof_lemmas(w, d, s) {
                    Ok(report) => {
                        for o in &report.outcomes {
                            out.cases += o.tested;
                            for f in &o.failures {
                                out.fail(format!("{} {f}", o.step), "holds", "violated");
                            }
                        }
                    }
                    Err(e) => out.error(format!("w={w} d={d} s={s}"), &e),
                }
            }
        }
    }
    out
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VerifyConfig {
    /// Alphabet sizes paired with the longest query length swept for them.
    pub scopes: Vec<(usize, usize)>,
    pub max_dist: usize,
    /// Extra seeded random queries, drawn over the last scope.
    pub random_cases: usize,
    pub seed: u64,
    pub oracle_budget: u128,
    pub alignment_budget: usize,
    /// Longest unary word checked against the formulas, per scope alphabet.
    pub unary_extra: usize,
    pub lemma_max_w: u64,
    pub lemma_sigmas: Vec<u64>,
    pub specialization_max_w: u64,
    /// Groups to run; empty runs everything.
    pub only: Vec<CheckGroup>,
}

impl Default for VerifyConfig {
    fn default() -> Self {
        VerifyConfig {
            scopes: vec![(2, 6), (3, 4)],
            max_dist: 2,
            random_cases: 50,
            seed: 0,
            oracle_budget: DEFAULT_ORACLE_BUDGET,
            alignment_budget: DEFAULT_ALIGNMENT_BUDGET,
            unary_extra: 1,
            lemma_max_w: 20,
            lemma_sigmas: vec![2, 3, 4],
            specialization_max_w: 30,
            only: Vec::new(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VerificationSummary {
    pub checks: Vec<CheckOutcome>,
    pub elapsed: Duration,
}

impl VerificationSummary {
    pub fn cases_run(&self) -> usize {
        self.checks.iter().map(|c| c.cases).sum()
    }

    /// Failures of non-advisory checks.
    pub fn failures(&self) -> impl Iterator<Item = &Failure> {
        self.checks
            .iter()
            .filter(|c| !c.advisory)
            .flat_map(|c| c.failures.iter())
    }

    /// Observations from advisory checks.
    pub fn findings(&self) -> impl Iterator<Item = &Failure> {
        self.checks
            .iter()
            .filter(|c| c.advisory)
            .flat_map(|c| c.failures.iter())
    }

    pub fn passed(&self) -> bool {
        self.failures().next().is_none()
    }

    pub fn check(&self, name: &str) -> Option<&CheckOutcome> {
        self.checks.iter().find(|c| c.name == name)
    }
}

/// The query/distance pairs swept exhaustively for each scope, followed by
/// the seeded random extras.
pub fn sweep_cases(config: &VerifyConfig) -> Result<Vec<(Word, usize)>> {
    let mut cases = Vec::new();
    for &(s, max_len) in &config.scopes {
        let alphabet = Alphabet::first_letters(s)?;
        for w in all_words(&alphabet, max_len) {
            for d in 0..=config.max_dist {
                cases.push((w.clone(), d));
            }
        }
    }
    if let Some(&(s, max_len)) = config.scopes.last() {
        let alphabet = Alphabet::first_letters(s)?;
        let mut rng = StdRng::seed_from_u64(config.seed);
        for w in random_words(&alphabet, 0, max_len, config.random_cases, config.seed) {
            cases.push((w, rng.random_range(0..=config.max_dist)));
        }
    }
    Ok(cases)
}

/// Named groups of checks, in the order a run executes them.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum CheckGroup {
    Oracle,
    Structure,
    Distance,
    UnaryStructure,
    Alignment,
    Formulas,
    Specializations,
    Sandwich,
    Table,
    Lemmas,
}

impl CheckGroup {
    pub const ALL: [CheckGroup; 10] = [
        CheckGroup::Oracle,
        CheckGroup::Structure,
        CheckGroup::Distance,
        CheckGroup::UnaryStructure,
        CheckGroup::Alignment,
        CheckGroup::Formulas,
        CheckGroup::Specializations,
        CheckGroup::Sandwich,
        CheckGroup::Table,
        CheckGroup::Lemmas,
    ];

    pub fn name(&self) -> &'static str {
        match self {
            CheckGroup::Oracle => "oracle",
            CheckGroup::Structure => "structure",
            CheckGroup::Distance => "distance",
            CheckGroup::UnaryStructure => "unary-structure",
            CheckGroup::Alignment => "alignment",
            CheckGroup::Formulas => "formulas",
            CheckGroup::Specializations => "specializations",
            CheckGroup::Sandwich => "sandwich",
            CheckGroup::Table => "table1",
            CheckGroup::Lemmas => "lemmas",
        }
    }
}

impl std::str::FromStr for CheckGroup {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        CheckGroup::ALL
            .into_iter()
            .find(|g| g.name() == s)
            .ok_or_else(|| Error::Range(format!("unknown check group {s:?}")))
    }
}

/// Runs the selected check groups (all when `only` is empty) in a fixed
/// order.
pub fn run_verification(config: &VerifyConfig) -> Result<VerificationSummary> {
    let start = Instant::now();
    let wanted = |g: CheckGroup| config.only.is_empty() || config.only.contains(&g);
    let cases = sweep_cases(config)?;
    let mut checks = Vec::new();
    if wanted(CheckGroup::Oracle) {
        checks.push(check_oracle_equivalence(&cases, config.oracle_budget));
    }
    if wanted(CheckGroup::Structure) {
        checks.push(check_structure(&cases));
    }
    if wanted(CheckGroup::Distance) {
        checks.push(check_exact_distance(&cases));
    }
    let alphabets = config
        .scopes
        .iter()
        .map(|&(s, max_len)| Ok((Alphabet::first_letters(s)?, max_len)))
        .collect::<Result<Vec<_>>>()?;
    if wanted(CheckGroup::UnaryStructure) {
        let mut unary = CheckOutcome::new("unary-condensed-structure");
        for (alphabet, max_len) in &alphabets {
            merge(&mut unary, check_unary_structure(alphabet, max_len + config.unary_extra));
        }
        checks.push(unary);
    }
    if wanted(CheckGroup::Alignment) {
        checks.extend(check_alignment_structure(&cases, config.alignment_budget));
    }
    if wanted(CheckGroup::Formulas) {
        let mut formulas = CheckOutcome::new("unary-formulas");
        for (alphabet, max_len) in &alphabets {
            merge(
                &mut formulas,
                check_unary_formulas(alphabet, max_len + config.unary_extra, config.oracle_budget),
            );
        }
        checks.push(formulas);
    }
    if wanted(CheckGroup::Specializations) {
        checks.push(check_binary_specializations(config.specialization_max_w));
    }
    if wanted(CheckGroup::Sandwich) {
        let mut sandwich = CheckOutcome::new("bound-sandwich");
        for (alphabet, max_len) in &alphabets {
            merge(&mut sandwich, check_bound_sandwich(alphabet, *max_len));
        }
        checks.push(sandwich);
    }
    if wanted(CheckGroup::Table) {
        checks.push(check_table1());
    }
    if wanted(CheckGroup::Lemmas) {
        checks.push(check_proof_lemmas(config.lemma_max_w, &config.lemma_sigmas));
    }
    Ok(VerificationSummary {
        checks,
        elapsed: start.elapsed(),
    })
}

fn merge(into: &mut CheckOutcome, other: CheckOutcome) {
    into.cases += other.cases;
    into.failures.extend(other.failures);
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ScanMode {
    Exhaustive,
    Sampled { seed: u64, samples: usize },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExtremalReport {
    pub w: usize,
    pub d: usize,
    pub s: usize,
    pub kind: NeighborhoodKind,
    pub mode: ScanMode,
    pub scanned: usize,
    pub min_count: BigUint,
    pub minimizers: Vec<Word>,
    pub max_count: BigUint,
    pub maximizers: Vec<Word>,
}

/// Words of length `w` with the smallest and largest `kind` neighborhood.
///
/// Exhaustive mode refuses when `s^w` exceeds `budget`. Sampled mode draws
/// `samples` words reproducibly from `seed`; duplicates are scanned once.
pub fn extremal_scan(
    w: usize,
    d: usize,
    alphabet: &Alphabet,
    kind: NeighborhoodKind,
    mode: ScanMode,
    budget: u128,
) -> Result<ExtremalReport> {
    let words: Vec<Word> = match mode {
        ScanMode::Exhaustive => {
            let needed = (alphabet.size() as u128).checked_pow(w as u32).unwrap_or(u128::MAX);
            if needed > budget {
                return Err(Error::BudgetExceeded { needed, budget });
            }
            alphabet.words_of_length(w).collect()
        }
        ScanMode::Sampled { seed, samples } => {
            let set: BTreeSet<Word> = random_words(alphabet, w, w, samples, seed).into_iter().collect();
            set.into_iter().collect()
        }
    };
    let mut min: Option<(BigUint, Vec<Word>)> = None;
    let mut max: Option<(BigUint, Vec<Word>)> = None;
    for word in &words {
        let c = count(word, d, alphabet, kind)?;
        for (slot, better) in [(&mut min, std::cmp::Ordering::Less), (&mut max, std::cmp::Ordering::Greater)] {
            match slot {
                Some((best, list)) if c == *best => list.push(word.clone()),
                Some((best, _)) if c.cmp(best) != better => {}
                _ => *slot = Some((c.clone(), vec![word.clone()])),
            }
        }
    }
    let (min_count, minimizers) = min.unwrap_or_default();
    let (max_count, maximizers) = max.unwrap_or_default();
    Ok(ExtremalReport {
        w,
        d,
        s: alphabet.size(),
        kind,
        mode,
        scanned: words.len(),
        min_count,
        minimizers,
        max_count,
        maximizers,
    })
}
