//! Levenshtein distance and optimal alignments.
//!
//! Alignments put the first word on the top row. A deletion column carries a
//! top character over a gap, an insertion column a bottom character under a
//! gap.
//!
//! The leftmost optimal alignment is the optimal alignment with the fewest
//! match/mismatch columns whose sequence of match/mismatch column indices is
//! lexicographically smallest. That order is not always total (`ab` against
//! `ba` has two optimal alignments with a single match at column 2), so
//! [`leftmost_optimal_alignment`] breaks remaining ties by preferring a
//! deletion column over an insertion column at the first column where the
//! candidates differ. [`LeftmostKey`] encodes the complete order.

use std::cmp::Ordering;

use crate::error::{Error, Result};
use crate::model::{Alignment, Column, ColumnClass, Word};

/// Default cap on `|u|·|v|` for [`enumerate_optimal_alignments`].
pub const DEFAULT_ALIGNMENT_BUDGET: usize = 12 * 12;

/// One alignment column seen as a move in the edit graph.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Step {
    /// Match or mismatch.
    Pair,
    Delete,
    Insert,
}

impl Step {
    fn of(class: ColumnClass) -> Step {
        match class {
            ColumnClass::Match | ColumnClass::Mismatch => Step::Pair,
            ColumnClass::Deletion => Step::Delete,
            ColumnClass::Insertion => Step::Insert,
        }
    }
}

/// 1-based, strictly increasing positions of the match/mismatch columns.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct MatchMismatchIndexSequence(pub Vec<usize>);

impl MatchMismatchIndexSequence {
    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn indices(&self) -> &[usize] {
        &self.0
    }
}

pub fn mm_index_sequence(a: &Alignment) -> MatchMismatchIndexSequence {
    MatchMismatchIndexSequence(
        a.columns()
            .iter()
            .enumerate()
            .filter(|(_, c)| c.is_aligned_pair())
            .map(|(i, _)| i + 1)
            .collect(),
    )
}

/// Sort key realizing the leftmost order: fewer match/mismatch columns
/// first, then smaller index sequence, then the deletion-first tie break.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct LeftmostKey {
    pub pairs: usize,
    pub indices: MatchMismatchIndexSequence,
    pub steps: Vec<Step>,
}

impl LeftmostKey {
    pub fn of(a: &Alignment) -> Self {
        let indices = mm_index_sequence(a);
        LeftmostKey {
            pairs: indices.len(),
            indices,
            steps: a.columns().iter().map(|c| Step::of(c.class())).collect(),
        }
    }

    /// Compares by pair count and index sequence only, ignoring the tie break.
    pub fn cmp_primary(&self, other: &Self) -> Ordering {
        (self.pairs, &self.indices).cmp(&(other.pairs, &other.indices))
    }
}

pub fn levenshtein(u: &Word, v: &Word) -> Result<usize> {
    u.same_alphabet(v)?;
    let (a, b) = (u.symbols(), v.symbols());
    let mut row: Vec<usize> = (0..=b.len()).collect();
    for (i, &x) in a.iter().enumerate() {
        let mut diag = row[0];
        row[0] = i + 1;
        for (j, &y) in b.iter().enumerate() {
            let next = (diag + usize::from(x != y))
                .min(row[j] + 1)
                .min(row[j + 1] + 1);
            diag = row[j + 1];
            row[j + 1] = next;
        }
    }
    Ok(row[b.len()])
}

/// Full prefix-distance matrix, `dp[i][j] = d(u[..i], v[..j])`.
fn prefix_matrix(u: &[u8], v: &[u8]) -> Vec<Vec<usize>> {
    let mut dp = vec![vec![0usize; v.len() + 1]; u.len() + 1];
    for (j, cell) in dp[0].iter_mut().enumerate() {
        *cell = j;
    }
    for i in 1..=u.len() {
        dp[i][0] = i;
        for j in 1..=v.len() {
            dp[i][j] = (dp[i - 1][j - 1] + usize::from(u[i - 1] != v[j - 1]))
                .min(dp[i - 1][j] + 1)
                .min(dp[i][j - 1] + 1);
        }
    }
    dp
}

fn build(u: &Word, v: &Word, steps: &[Step]) -> Alignment {
    let (mut i, mut j) = (0, 0);
    let columns = steps
        .iter()
        .map(|step| {
            let (top, bottom) = match step {
                Step::Pair => (Some(u.char_at(i)), Some(v.char_at(j))),
                Step::Delete => (Some(u.char_at(i)), None),
                Step::Insert => (None, Some(v.char_at(j))),
            };
            if top.is_some() {
                i += 1;
            }
            if bottom.is_some() {
                j += 1;
            }
            Column::new(top, bottom).expect("steps never produce double gaps")
        })
        .collect();
    Alignment::new(u.alphabet().clone(), columns).expect("characters come from the words")
}

/// An optimal alignment of `u` (top) and `v` (bottom) by plain traceback.
pub fn optimal_alignment(u: &Word, v: &Word) -> Result<Alignment> {
    u.same_alphabet(v)?;
    let (a, b) = (u.symbols(), v.symbols());
    let dp = prefix_matrix(a, b);
    let (mut i, mut j) = (a.len(), b.len());
    let mut steps = Vec::with_capacity(a.len() + b.len());
    while i > 0 || j > 0 {
        if i > 0 && j > 0 && dp[i][j] == dp[i - 1][j - 1] + usize::from(a[i - 1] != b[j - 1]) {
            steps.push(Step::Pair);
            i -= 1;
            j -= 1;
        } else if i > 0 && dp[i][j] == dp[i - 1][j] + 1 {
            steps.push(Step::Delete);
            i -= 1;
        } else {
            steps.push(Step::Insert);
            j -= 1;
        }
    }
    steps.reverse();
    Ok(build(u, v, &steps))
}

/// Every distinct minimum-cost alignment of `u` (top) and `v` (bottom).
///
/// Refuses when `|u|·|v|` exceeds `budget`.
pub fn enumerate_optimal_alignments(u: &Word, v: &Word, budget: usize) -> Result<Vec<Alignment>> {
    u.same_alphabet(v)?;
    let needed = u.len() * v.len();
    if needed > budget {
        return Err(Error::BudgetExceeded {
            needed: needed as u128,
            budget: budget as u128,
        });
    }
    let (a, b) = (u.symbols(), v.symbols());
    let dp = prefix_matrix(a, b);
    let mut out = Vec::new();
    let mut stack = Vec::new();
    collect_paths(&dp, a, b, a.len(), b.len(), &mut stack, &mut |rev| {
        let steps: Vec<Step> = rev.iter().rev().copied().collect();
        out.push(build(u, v, &steps));
    });
    Ok(out)
}

fn collect_paths(
    dp: &[Vec<usize>],
    a: &[u8],
    b: &[u8],
    i: usize,
    j: usize,
    stack: &mut Vec<Step>,
    emit: &mut dyn FnMut(&[Step]),
) {
    if i == 0 && j == 0 {
        emit(stack);
        return;
    }
    let here = dp[i][j];
    if i > 0 && j > 0 && here == dp[i - 1][j - 1] + usize::from(a[i - 1] != b[j - 1]) {
        stack.push(Step::Pair);
        collect_paths(dp, a, b, i - 1, j - 1, stack, emit);
        stack.pop();
    }
    if i > 0 && here == dp[i - 1][j] + 1 {
        stack.push(Step::Delete);
        collect_paths(dp, a, b, i - 1, j, stack, emit);
        stack.pop();
    }
    if j > 0 && here == dp[i][j - 1] + 1 {
        stack.push(Step::Insert);
        collect_paths(dp, a, b, i, j - 1, stack, emit);
        stack.pop();
    }
}

/// Suffix optimum from each cell: lexicographically smallest
/// `(cost, match/mismatch columns)` over paths to the end.
fn suffix_optimum(a: &[u8], b: &[u8]) -> Vec<Vec<(usize, usize)>> {
    let (n, m) = (a.len(), b.len());
    let mut best = vec![vec![(usize::MAX, usize::MAX); m + 1]; n + 1];
    best[n][m] = (0, 0);
    for i in (0..=n).rev() {
        for j in (0..=m).rev() {
            if i == n && j == m {
                continue;
            }
            let mut cell = (usize::MAX, usize::MAX);
            if i < n && j < m {
                let (c, k) = best[i + 1][j + 1];
                cell = cell.min((c + usize::from(a[i] != b[j]), k + 1));
            }
            if i < n {
                let (c, k) = best[i + 1][j];
                cell = cell.min((c + 1, k));
            }
            if j < m {
                let (c, k) = best[i][j + 1];
                cell = cell.min((c + 1, k));
            }
            best[i][j] = cell;
        }
    }
    best
}

/// The leftmost optimal alignment of `top` against `bottom`.
///
/// Runs in `O(|top|·|bottom|)`: a move is kept only if it is tight for the
/// suffix optimum, so every surviving path is optimal with the fewest
/// match/mismatch columns. The index sequence is then fixed greedily one
/// pair column at a time, and a final forward walk picks the deletion-first
/// representative among the paths that realize it.
pub fn leftmost_optimal_alignment(top: &Word, bottom: &Word) -> Result<Alignment> {
    top.same_alphabet(bottom)?;
    let (a, b) = (top.symbols(), bottom.symbols());
    let (n, m) = (a.len(), b.len());
    let best = suffix_optimum(a, b);
    let total_pairs = best[0][0].1;

    let tight = |(i, j): (usize, usize), step: Step| -> Option<(usize, usize)> {
        let (c, k) = best[i][j];
        let (next, cost, pair) = match step {
            Step::Pair if i < n && j < m => ((i + 1, j + 1), usize::from(a[i] != b[j]), 1),
            Step::Delete if i < n => ((i + 1, j), 1, 0),
            Step::Insert if j < m => ((i, j + 1), 1, 0),
            _ => return None,
        };
        let (nc, nk) = best[next.0][next.1];
        (c == nc + cost && k == nk + pair).then_some(next)
    };
    // Pairs already used on any optimal path reaching (i, j).
    let used = |(i, j): (usize, usize)| total_pairs - best[i][j].1;
    let column = |cell: (usize, usize)| cell.0 + cell.1 - used(cell);

    // layer[r]: cells reachable after the r-th pair column by gap moves only.
    // sources[r]: cells of layer r that take the (r+1)-th pair column.
    let mut layers: Vec<Vec<(usize, usize)>> = Vec::new();
    let mut sources: Vec<Vec<(usize, usize)>> = Vec::new();
    let mut frontier = vec![(0usize, 0usize)];
    let mut seen = vec![vec![false; m + 1]; n + 1];
    seen[0][0] = true;
    loop {
        let mut layer = Vec::new();
        let mut queue = std::collections::VecDeque::from(frontier);
        while let Some(cell) = queue.pop_front() {
            layer.push(cell);
            for step in [Step::Delete, Step::Insert] {
                if let Some(next) = tight(cell, step) {
                    if !seen[next.0][next.1] {
                        seen[next.0][next.1] = true;
                        queue.push_back(next);
                    }
                }
            }
        }
        if layers.len() == total_pairs {
            layers.push(layer);
            break;
        }
        let first = layer
            .iter()
            .filter(|&&c| tight(c, Step::Pair).is_some())
            .map(|&c| column(c))
            .min()
            .expect("an optimal path continues from every layer");
        let src: Vec<_> = layer
            .iter()
            .copied()
            .filter(|&c| column(c) == first && tight(c, Step::Pair).is_some())
            .collect();
        frontier = Vec::new();
        for &c in &src {
            let next = tight(c, Step::Pair).unwrap();
            if !seen[next.0][next.1] {
                seen[next.0][next.1] = true;
                frontier.push(next);
            }
        }
        layers.push(layer);
        sources.push(src);
    }

    // Cells that can still finish with the chosen index sequence.
    let mut good = vec![vec![false; m + 1]; n + 1];
    let mut is_source = vec![vec![false; m + 1]; n + 1];
    for &(i, j) in sources.iter().flatten() {
        is_source[i][j] = true;
    }
    for (r, layer) in layers.iter().enumerate().rev() {
        let mut cells = layer.clone();
        cells.sort_by_key(|&(i, j)| std::cmp::Reverse(i + j));
        for (i, j) in cells {
            good[i][j] = if r == total_pairs {
                (i, j) == (n, m)
            } else {
                is_source[i][j] && {
                    let (x, y) = tight((i, j), Step::Pair).unwrap();
                    good[x][y]
                }
            } || [Step::Delete, Step::Insert]
                .into_iter()
                .filter_map(|s| tight((i, j), s))
                .any(|(x, y)| good[x][y]);
        }
    }
    debug_assert!(good[0][0]);

    let mut steps = Vec::with_capacity(n + m);
    let mut cell = (0, 0);
    while cell != (n, m) {
        let (step, next) = if is_source[cell.0][cell.1] {
            (Step::Pair, tight(cell, Step::Pair).unwrap())
        } else {
            [Step::Delete, Step::Insert]
                .into_iter()
                .find_map(|s| tight(cell, s).filter(|&(x, y)| good[x][y]).map(|c| (s, c)))
                .expect("a good cell always has a good successor")
        };
        steps.push(step);
        cell = next;
    }
    Ok(build(top, bottom, &steps))
}
