//! One PASS/FAIL line per acceptance criterion.
//!
//! Criteria 1 and 3 are known to fail: one published table cell disagrees
//! with the formula it tabulates, and the binary specialization of the
//! super-condensed formula does not hold at d = w. The run exits nonzero
//! only if the set of failing criteria changes.

use std::process::ExitCode;
use std::time::{Duration, Instant};

use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

use nbhood_core::neighborhood::DEFAULT_ORACLE_BUDGET;
use nbhood_core::verify::{
    all_words, check_alignment_structure, check_binary_specializations, check_bound_sandwich,
    check_exact_distance, check_oracle_equivalence, check_proof_lemmas, check_table1, check_unary_formulas,
    random_words, CheckOutcome,
};
use nbhood_core::{Alphabet, Word};

const KNOWN_RED: [usize; 2] = [1, 3];
const SEED: u64 = 2024;

fn criterion_cases() -> Vec<(Word, usize)> {
    let ab = Alphabet::new("ab").unwrap();
    let abc = Alphabet::new("abc").unwrap();
    let mut cases = Vec::new();
    for w in all_words(&ab, 5).into_iter().filter(|w| !w.is_empty()) {
        for d in 0..=2 {
            cases.push((w.clone(), d));
        }
    }
    let mut rng = StdRng::seed_from_u64(SEED);
    for w in random_words(&abc, 1, 4, 50, SEED) {
        cases.push((w, rng.random_range(0..=2)));
    }
    cases
}

fn merged(name: &'static str, parts: impl IntoIterator<Item = CheckOutcome>) -> CheckOutcome {
    let mut out = CheckOutcome::new(name);
    for p in parts {
        out.cases += p.cases;
        out.failures.extend(p.failures);
    }
    out
}

struct Line {
    id: usize,
    title: &'static str,
    limit: Duration,
    outcome: CheckOutcome,
    elapsed: Duration,
}

fn run(id: usize, title: &'static str, limit_secs: u64, f: impl FnOnce() -> CheckOutcome) -> Line {
    let start = Instant::now();
    let outcome = f();
    Line {
        id,
        title,
        limit: Duration::from_secs(limit_secs),
        outcome,
        elapsed: start.elapsed(),
    }
}

fn main() -> ExitCode {
    let ab = Alphabet::new("ab").unwrap();
    let abc = Alphabet::new("abc").unwrap();
    let cases = criterion_cases();
    assert_eq!(cases.iter().filter(|(w, _)| w.alphabet().size() == 2).count(), 62 * 3);

    let lines = vec![
        run(1, "table reproduction, 48 cells", 1, check_table1),
        run(2, "unary formulas vs brute force", 30, || {
            merged(
                "unary-formulas",
                [
                    check_unary_formulas(&ab, 7, DEFAULT_ORACLE_BUDGET),
                    check_unary_formulas(&abc, 5, DEFAULT_ORACLE_BUDGET),
                ],
            )
        }),
        run(3, "binary specializations, w <= 30", 1, || check_binary_specializations(30)),
        run(4, "enumerators equal oracle as sets", 60, || {
            check_oracle_equivalence(&cases, DEFAULT_ORACLE_BUDGET)
        }),
        run(5, "condensed members at exact distance d", 60, || check_exact_distance(&cases)),
        run(6, "leftmost alignment structure and selection", 60, || {
            let checks = check_alignment_structure(&cases, nbhood_core::distance::DEFAULT_ALIGNMENT_BUDGET);
            merged(
                "leftmost",
                checks
                    .into_iter()
                    .filter(|c| matches!(c.name, "leftmost-vs-oracle" | "leftmost-last-match")),
            )
        }),
        run(7, "bound sandwich, binary w <= 6", 60, || check_bound_sandwich(&ab, 6)),
        run(8, "proof-chain lemmas, w <= 20, s in 2..4", 30, || check_proof_lemmas(20, &[2, 3, 4])),
    ];

    let mut red = Vec::new();
    for l in &lines {
        let ok = l.outcome.passed();
        if !ok {
            red.push(l.id);
        }
        let slow = if l.elapsed > l.limit { " (over time limit)" } else { "" };
        println!(
            "{} criterion {}: {} cases={} failures={} time={:.2}s{}",
            if ok { "PASS" } else { "FAIL" },
            l.id,
            l.title,
            l.outcome.cases,
            l.outcome.failures.len(),
            l.elapsed.as_secs_f64(),
            slow
        );
        for f in l.outcome.failures.iter().take(3) {
            println!("    {f}");
        }
        if l.outcome.failures.len() > 3 {
            println!("    ... {} more", l.outcome.failures.len() - 3);
        }
    }
    println!("failing criteria: {red:?}, expected {KNOWN_RED:?}");
    if red == KNOWN_RED {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
