use num_bigint::BigUint;

use nbhood_core::neighborhood::{enumerate_kind, DEFAULT_ORACLE_BUDGET};
use nbhood_core::verify::{run_verification, CheckGroup, VerifyConfig};
use nbhood_core::{brute_force_enumerate, unary_cn_size, unary_scn_size, Alphabet, NeighborhoodKind};

#[test]
fn enumerators_match_brute_force_on_binary_words() {
    let ab = Alphabet::new("ab").unwrap();
    for len in 0..=5 {
        for w in ab.words_of_length(len) {
            for d in 0..=2 {
                for kind in NeighborhoodKind::ALL {
                    let fast = enumerate_kind(&w, d, &ab, kind).unwrap();
                    let slow = brute_force_enumerate(&w, d, &ab, kind, DEFAULT_ORACLE_BUDGET).unwrap();
                    assert_eq!(fast.words(), slow.words(), "W={w} d={d} {kind}");
                }
            }
        }
    }
}

#[test]
fn unary_formulas_match_brute_force() {
    for (symbols, max_w) in [("ab", 6), ("abc", 4), ("abcd", 3)] {
        let alphabet = Alphabet::new(symbols).unwrap();
        let s = alphabet.size() as u64;
        for w in 0..=max_w {
            let query = alphabet.unary_word(0, w);
            for d in 0..=w {
                let count = |kind| brute_force_enumerate(&query, d, &alphabet, kind, DEFAULT_ORACLE_BUDGET).unwrap().count;
                let (wu, du) = (w as u64, d as u64);
                assert_eq!(unary_cn_size(wu, du, s).unwrap(), count(NeighborhoodKind::Condensed), "cn w={w} d={d} s={s}");
                assert_eq!(unary_scn_size(wu, du, s).unwrap(), count(NeighborhoodKind::SuperCondensed), "scn w={w} d={d} s={s}");
            }
        }
    }
}

#[test]
fn brute_force_refuses_over_budget() {
    let ab = Alphabet::new("ab").unwrap();
    let w = ab.word("abab").unwrap();
    assert!(brute_force_enumerate(&w, 2, &ab, NeighborhoodKind::Full, 100).is_err());
}

#[test]
fn unary_condensed_sizes() {
    let ab = Alphabet::new("ab").unwrap();
    let aaaa = ab.word("aaaa").unwrap();
    let cn = enumerate_kind(&aaaa, 2, &ab, NeighborhoodKind::Condensed).unwrap();
    assert_eq!(cn.count, BigUint::from(6u32));
}

#[test]
fn selected_groups_pass_and_are_deterministic() {
    let config = VerifyConfig {
        scopes: vec![(2, 4), (3, 3)],
        random_cases: 10,
        seed: 9,
        lemma_max_w: 8,
        only: vec![CheckGroup::Oracle, CheckGroup::Structure, CheckGroup::Sandwich, CheckGroup::Lemmas],
        ..VerifyConfig::default()
    };
    let a = run_verification(&config).unwrap();
    let b = run_verification(&config).unwrap();
    assert!(a.passed(), "{:?}", a.failures().collect::<Vec<_>>());
    assert_eq!(a.checks, b.checks);
    assert_eq!(a.checks.len(), 4);
}
