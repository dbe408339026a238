//! Levenshtein `d`-neighborhoods of words.
//!
//! Enumerates and counts the full, condensed (no proper prefix in the
//! neighborhood) and super-condensed (no proper subword in the neighborhood)
//! neighborhoods, evaluates exact counts for unary words and two upper
//! bounds on condensed neighborhoods, and cross-checks all of it against
//! brute-force oracles.

pub mod combinatorics;
pub mod distance;
pub mod error;
pub mod exact;
pub mod model;
pub mod neighborhood;
pub mod verify;

pub use combinatorics::{
    binom_ext, bound_f, bound_report, conjecture_bound, unary_cn_size, unary_scn_size,
    verify_proof_lemmas, BoundReport, LemmaCheckReport, ProofStep,
};
pub use distance::{
    enumerate_optimal_alignments, leftmost_optimal_alignment, levenshtein, mm_index_sequence,
    optimal_alignment, LeftmostKey, MatchMismatchIndexSequence,
};
pub use error::{Error, Result};
pub use exact::ExactScalar;
pub use model::{Alignment, Alphabet, Column, ColumnClass, NeighborhoodKind, NeighborhoodResult, Word};
pub use neighborhood::{
    brute_force_enumerate, count, enumerate_condensed, enumerate_full, enumerate_super_condensed,
    in_neighborhood,
};
