use std::collections::BTreeMap;

use christoffel_words::arith::gcd;
use christoffel_words::balance::enumerate_balanced;
use christoffel_words::christoffel::lower_christoffel;
use christoffel_words::counting::*;

fn coprime_classes(max_period: u64) -> impl Iterator<Item = (u64, u64)> {
    (2..=max_period)
        .flat_map(|s| (1..s).map(move |b| (s - b, b)))
        .filter(|&(a, b)| gcd(a, b) == 1)
}

#[test]
fn period_factor_formula_matches_oracle() {
    for (alpha, beta) in coprime_classes(12) {
        for n in 0..=36 {
            let n_formula = count_period_factors(alpha, beta, n).unwrap();
            let n_brute = brute_period_factors(alpha, beta, n).unwrap().len() as u64;
            assert_eq!(n_formula, n_brute, "N_{{{alpha},{beta}}}({n})");
        }
    }
}

#[test]
fn heavy_factor_formula_matches_oracle() {
    for (alpha, beta) in coprime_classes(12) {
        for n in 0..=36 {
            let h = count_heavy_factors(alpha, beta, n).unwrap();
            assert_eq!(
                h,
                brute_heavy_factors(alpha, beta, n).unwrap().len() as u64,
                "H_{{{alpha},{beta}}}({n})"
            );
            assert!(h <= count_period_factors(alpha, beta, n).unwrap());
        }
    }
}

#[test]
fn non_coprime_classes_contribute_nothing() {
    for alpha in 1..=8 {
        for beta in 1..=8 {
            if gcd(alpha, beta) > 1 {
                for n in 0..=20 {
                    assert_eq!(count_period_factors(alpha, beta, n).unwrap(), 0);
                    assert_eq!(count_heavy_factors(alpha, beta, n).unwrap(), 0);
                    assert!(brute_period_factors(alpha, beta, n).unwrap().is_empty());
                }
            }
        }
    }
}

#[test]
fn heavy_occurrences_match_sliding_window() {
    for (alpha, beta) in coprime_classes(12) {
        let period = (alpha + beta) as usize;
        let base = lower_christoffel(alpha, beta).unwrap();
        for n in 0..=36usize {
            let heavy = prefix_height_upper(alpha, beta, n as u64);
            let light = prefix_height_lower(alpha, beta, n as u64);
            let expected = count_heavy_occurrences(alpha, beta, n as u64).unwrap();
            let long = base.periodic_prefix(2 * period + n);
            for offset in 0..period {
                let window = long.subword(offset, offset + period + n - 1);
                let hits = (0..period)
                    .filter(|&s| {
                        let ones = window.subword(s, s + n).count_ones();
                        heavy > light && ones == heavy
                    })
                    .count() as u64;
                assert_eq!(hits, expected, "({alpha}, {beta}, n={n}, offset={offset})");
            }
        }
    }
}

#[test]
fn prefix_heights_match_periodic_words() {
    for (alpha, beta) in coprime_classes(10) {
        let lower = lower_christoffel(alpha, beta).unwrap();
        let upper = lower.reversal();
        for k in 0..=30usize {
            assert_eq!(
                lower.periodic_prefix(k).count_ones(),
                prefix_height_lower(alpha, beta, k as u64)
            );
            assert_eq!(
                upper.periodic_prefix(k).count_ones(),
                prefix_height_upper(alpha, beta, k as u64)
            );
        }
    }
}

#[test]
fn closed_formula_matches_enumeration() {
    for a in 0..=14u64 {
        for b in 0..=14 - a {
            assert_eq!(
                count_balanced(a, b).unwrap(),
                brute_count_balanced(a, b).unwrap(),
                "Bal({a}, {b})"
            );
        }
    }
}

#[test]
fn every_balanced_word_falls_in_exactly_one_term() {
    for a in 1..=9u64 {
        for b in 1..=9u64 {
            if a + b > 14 {
                continue;
            }
            let report = count_balanced_report(a, b).unwrap();
            let mut expected: BTreeMap<(u64, u64, TermKind), u64> = BTreeMap::new();
            for t in &report.terms {
                if t.contribution > 0 {
                    *expected.entry((t.alpha, t.beta, t.kind)).or_default() += t.contribution;
                }
            }
            let mut bucketed: BTreeMap<(u64, u64, TermKind), u64> = BTreeMap::new();
            for u in enumerate_balanced(a, b).unwrap() {
                *bucketed.entry(period_class_of(&u).unwrap()).or_default() += 1;
            }
            assert_eq!(bucketed, expected, "({a}, {b})");
            assert_eq!(report.total, report.terms.iter().map(|t| t.contribution).sum::<u64>());
        }
    }
}
