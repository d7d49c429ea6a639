//! Minimal forbidden words of the balanced language and minimal almost
//! balanced (MAB) words.
//!
//! Minimal forbidden words are generated from non-primitive Christoffel
//! words `xvy` by exchanging the outer letters; MAB words from the standard
//! factorizations `uv` of primitive lower Christoffel words as `u²v²` and its
//! reversal. A second MAB generator swaps the outer letters of squares of
//! primitive Christoffel words.

use std::collections::btree_map::Entry;
use std::collections::{BTreeMap, BTreeSet};

use serde::Serialize;

use crate::arith::gcd;
use crate::balance::is_balanced;
use crate::christoffel::{
    lower_christoffel, primitive_lower_christoffel_words, standard_factorization, upper_christoffel,
};
use crate::error::{Result, WordError};
use crate::word::BinaryWord;

/// A minimal forbidden word `y·v·x` together with the Christoffel word
/// `x·v·y` it was obtained from.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct MfWord {
    pub word: BinaryWord,
    pub source: BinaryWord,
    #[serde(skip)]
    pub swap: (u8, u8),
}

/// `w` with its first and last letters exchanged.
fn swap_ends(w: &BinaryWord) -> BinaryWord {
    let n = w.len();
    let mut out = BinaryWord::with_capacity(n);
    out.push(w.letter(n - 1));
    out.extend(w.subword(1, n - 1).letters());
    out.push(w.letter(0));
    out
}

/// All minimal forbidden words of length `n`, sorted.
pub fn enumerate_mf(n: usize) -> Result<Vec<MfWord>> {
    if n < 2 {
        return Err(WordError::Precondition(format!(
            "minimal forbidden words need length >= 2, got {n}"
        )));
    }
    let n64 = n as u64;
    let mut found: BTreeMap<BinaryWord, MfWord> = BTreeMap::new();
    for b in 1..n64 {
        let a = n64 - b;
        if gcd(a, b) == 1 {
            continue;
        }
        for source in [lower_christoffel(a, b)?, upper_christoffel(a, b)?] {
            let (x, y) = (source.letter(0), source.letter(n - 1));
            let word = swap_ends(&source);
            found.entry(word.clone()).or_insert(MfWord {
                word,
                source,
                swap: (x, y),
            });
        }
    }
    Ok(found.into_values().collect())
}

/// Not balanced, while its longest proper prefix and suffix are.
pub fn is_minimal_forbidden(w: &BinaryWord) -> bool {
    let n = w.len();
    n >= 1 && !is_balanced(w) && is_balanced(&w.prefix(n - 1)) && is_balanced(&w.suffix(n - 1))
}

/// MAB words of length at most `max_len`, from `u²v²` and `(u²v²)^R` over the
/// standard factorizations `uv` of primitive lower Christoffel words.
pub fn enumerate_mab(max_len: usize) -> Vec<BinaryWord> {
    let mut out = BTreeSet::new();
    for len in 2..=max_len / 2 {
        for c in primitive_lower_christoffel_words(len as u64) {
            let p = c.parikh();
            let Ok(f) = standard_factorization(p.zeros, p.ones) else {
                continue;
            };
            let word = f.left.power(2).concat(&f.right.power(2));
            out.insert(word.reversal());
            out.insert(word);
        }
    }
    out.into_iter().collect()
}

/// MAB words of length at most `max_len`, as `ywx` where `xwy` is the square
/// of a primitive (lower or upper) Christoffel word and `x ≠ y`.
pub fn enumerate_mab_from_squares(max_len: usize) -> Vec<BinaryWord> {
    let mut out = BTreeSet::new();
    for len in 1..=max_len / 2 {
        for lower in primitive_lower_christoffel_words(len as u64) {
            for root in [lower.clone(), lower.reversal()] {
                let square = root.power(2);
                if square.first() != square.last() {
                    out.insert(swap_ends(&square));
                }
            }
        }
    }
    out.into_iter().collect()
}

/// Every MAB word of length at most `max_len` is a minimal forbidden word.
pub fn mab_subset_check(max_len: usize) -> Result<bool> {
    let mut mf_by_len: BTreeMap<usize, BTreeSet<BinaryWord>> = BTreeMap::new();
    for w in enumerate_mab(max_len) {
        let len = w.len();
        if let Entry::Vacant(e) = mf_by_len.entry(len) {
            let words = enumerate_mf(len)?.into_iter().map(|m| m.word).collect();
            e.insert(words);
        }
        if !mf_by_len[&len].contains(&w) {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Distinct pairs `(u, v)` of equal-length factors with `|v|_1 - |u|_1 ≥ 2`.
///
/// Exploratory only: one possible reading of an "imbalance pair". MAB
/// membership is decided by the generators above, not by this function.
pub fn imbalance_pairs(w: &BinaryWord) -> Vec<(BinaryWord, BinaryWord)> {
    let mut pairs = Vec::new();
    for k in 1..=w.len() {
        let factors = w.factors_of_length(k).unwrap_or_default();
        for u in &factors {
            for v in &factors {
                if v.count_ones() >= u.count_ones() + 2 {
                    pairs.push((u.clone(), v.clone()));
                }
            }
        }
    }
    pairs
}
