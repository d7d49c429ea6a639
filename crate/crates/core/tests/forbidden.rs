use std::collections::BTreeSet;

use christoffel_words::arith::totient;
use christoffel_words::balance::is_balanced;
use christoffel_words::christoffel::is_primitive_christoffel;
use christoffel_words::forbidden::*;
use christoffel_words::BinaryWord;

/// Minimal forbidden by definition: unbalanced, every proper factor balanced.
fn minimal_forbidden_by_definition(w: &BinaryWord) -> bool {
    let n = w.len();
    !is_balanced(w) && (1..n).all(|k| w.factors_of_length(k).unwrap().iter().all(is_balanced))
}

fn mf_set(n: usize) -> BTreeSet<BinaryWord> {
    enumerate_mf(n).unwrap().into_iter().map(|m| m.word).collect()
}

#[test]
fn characterization_matches_brute_force() {
    for n in 2..=14 {
        let brute: BTreeSet<_> = BinaryWord::all_of_length(n).filter(is_minimal_forbidden).collect();
        assert_eq!(brute, mf_set(n), "n = {n}");
    }
}

#[test]
fn fast_predicate_matches_definition() {
    for n in 1..=12 {
        for w in BinaryWord::all_of_length(n) {
            assert_eq!(is_minimal_forbidden(&w), minimal_forbidden_by_definition(&w), "{w}");
        }
    }
}

#[test]
fn mf_records_are_swaps_of_non_primitive_sources() {
    for n in 2..=16 {
        for m in enumerate_mf(n).unwrap() {
            let (x, y) = m.swap;
            assert_ne!(x, y);
            assert_eq!(m.source.first(), Some(x));
            assert_eq!(m.source.last(), Some(y));
            assert_eq!(m.word.first(), Some(y));
            assert_eq!(m.word.last(), Some(x));
            assert_eq!(m.word.subword(1, n - 1), m.source.subword(1, n - 1));
            assert!(!m.source.is_primitive().unwrap());
        }
    }
}

#[test]
fn words_starting_with_zero_are_counted_by_totient_and_lyndon() {
    for n in 2..=24usize {
        let starting_with_zero: Vec<_> = mf_set(n).into_iter().filter(|w| w.first() == Some(0)).collect();
        assert_eq!(
            starting_with_zero.len() as u64,
            n as u64 - totient(n as u64) - 1,
            "n = {n}"
        );
        for w in starting_with_zero {
            assert!(w.is_lyndon().unwrap(), "{w}");
        }
    }
}

#[test]
fn both_mab_generators_agree_and_lie_in_mf() {
    let by_factorization = enumerate_mab(16);
    let by_squares = enumerate_mab_from_squares(16);
    assert_eq!(by_factorization, by_squares);
    assert!(mab_subset_check(16).unwrap());
    for w in &by_factorization {
        assert!(is_minimal_forbidden(w), "{w}");
        // Squares of primitive Christoffel words, outer letters exchanged.
        let n = w.len();
        let mut source = BinaryWord::repeat_letter(w.letter(n - 1), 1);
        source.extend(w.subword(1, n - 1).letters());
        source.push(w.letter(0));
        let root = source.prefix(n / 2);
        assert_eq!(root.power(2), source);
        assert!(is_primitive_christoffel(&root), "{w}");
    }
}

#[test]
fn mf_is_closed_under_reversal_and_complement() {
    for n in 2..=14 {
        let set = mf_set(n);
        for w in &set {
            assert!(set.contains(&w.reversal()), "{w}");
            assert!(set.contains(&w.complement()), "{w}");
        }
    }
}
