//! Prefixes of lower Christoffel words (PLC) and the Farey sequence.
//!
//! A word is a prefix of some lower Christoffel word exactly when it is
//! balanced and prefix normal. Each such word `v` is a prefix of `r^ω` for a
//! unique primitive lower Christoffel word `r`, its root; sending `v` to the
//! slope `|r|_1 / |r|` maps the length-`n` PLC words, in lexicographic order,
//! onto the Farey sequence of order `n`, in increasing order.

use std::cmp::Ordering;
use std::fmt;

use serde::{Serialize, Serializer};

use crate::arith::gcd;
use crate::balance::{is_balanced, is_left_special, is_prefix_normal, BalanceTracker};
use crate::christoffel::primitive_lower_christoffel_words;
use crate::error::{Result, WordError};
use crate::word::BinaryWord;

/// A reduced fraction `numerator / denominator`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Fraction {
    numerator: u64,
    denominator: u64,
}

impl Fraction {
    /// Reduces `numerator / denominator`; the denominator must be positive.
    pub fn new(numerator: u64, denominator: u64) -> Result<Self> {
        if denominator == 0 {
            return Err(WordError::Precondition("fraction denominator must be positive".into()));
        }
        let g = gcd(numerator, denominator);
        Ok(Self {
            numerator: numerator / g,
            denominator: denominator / g,
        })
    }

    pub fn numerator(&self) -> u64 {
        self.numerator
    }

    pub fn denominator(&self) -> u64 {
        self.denominator
    }
}

impl Ord for Fraction {
    fn cmp(&self, other: &Self) -> Ordering {
        (u128::from(self.numerator) * u128::from(other.denominator))
            .cmp(&(u128::from(other.numerator) * u128::from(self.denominator)))
    }
}

impl PartialOrd for Fraction {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Fraction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.pad(&format!("{}/{}", self.numerator, self.denominator))
    }
}

impl Serialize for Fraction {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

/// A PLC word with its primitive root and the root's slope `|r|_1 / |r|`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PlcEntry {
    pub word: BinaryWord,
    pub root: BinaryWord,
    pub fraction: Fraction,
}

/// Balanced and prefix normal.
pub fn is_plc(w: &BinaryWord) -> Result<bool> {
    if w.is_empty() {
        return Err(WordError::EmptyWord);
    }
    Ok(is_balanced(w) && is_prefix_normal(w))
}

/// A power of `1`, or `0u` with `u` balanced and left special.
pub fn is_plc_by_left_special(w: &BinaryWord) -> Result<bool> {
    if w.is_empty() {
        return Err(WordError::EmptyWord);
    }
    if w.count_zeros() == 0 {
        return Ok(true);
    }
    let rest = w.subword(1, w.len());
    Ok(w.letter(0) == 0 && is_balanced(&rest) && is_left_special(&rest)?)
}

/// The primitive lower Christoffel word `r` with `v` a prefix of `r^ω`.
///
/// Candidates are tried by increasing length up to `|v|`; more than one match
/// is reported as an internal error.
pub fn plc_root(v: &BinaryWord) -> Result<BinaryWord> {
    if !is_plc(v)? {
        return Err(WordError::NotPlc(v.clone()));
    }
    let mut matches = (1..=v.len() as u64)
        .flat_map(primitive_lower_christoffel_words)
        .filter(|r| r.periodic_prefix(v.len()) == *v);
    let root = matches
        .next()
        .ok_or_else(|| WordError::Internal(format!("no primitive root found for {v}")))?;
    if let Some(other) = matches.next() {
        return Err(WordError::Internal(format!(
            "{v} has two primitive roots, {root} and {other}"
        )));
    }
    Ok(root)
}

fn entry_for(word: BinaryWord) -> Result<PlcEntry> {
    let root = plc_root(&word)?;
    let fraction = Fraction::new(root.count_ones(), root.len() as u64)?;
    Ok(PlcEntry { word, root, fraction })
}

/// The length-`n` PLC words in lexicographic order, each with its root.
pub fn enumerate_plc(n: usize) -> Result<Vec<PlcEntry>> {
    if n < 1 {
        return Err(WordError::Precondition("PLC enumeration needs n >= 1".into()));
    }
    fn walk(t: &BalanceTracker, n: usize, out: &mut Vec<BinaryWord>) {
        if t.word().len() == n {
            out.push(t.word().clone());
            return;
        }
        for letter in 0..=1 {
            if let Some(next) = t.pushed(letter) {
                if is_prefix_normal(next.word()) {
                    walk(&next, n, out);
                }
            }
        }
    }
    let mut words = Vec::new();
    walk(&BalanceTracker::new(), n, &mut words);
    words.into_iter().map(entry_for).collect()
}

/// Reduced fractions `p/q` with `0 ≤ p ≤ q ≤ n`, increasing; includes `1/1`.
pub fn farey_sequence(n: u64) -> Result<Vec<Fraction>> {
    if n < 1 {
        return Err(WordError::Precondition("Farey sequence order must be >= 1".into()));
    }
    let mut out = Vec::new();
    for q in 1..=n {
        for p in 0..=q {
            if gcd(p, q) == 1 {
                out.push(Fraction {
                    numerator: p,
                    denominator: q,
                });
            }
        }
    }
    out.sort();
    Ok(out)
}

/// Pairs the `i`-th PLC word of length `n` with the `i`-th Farey fraction of
/// order `n`, checking that the fraction is the slope of the word's root.
pub fn plc_farey_bijection(n: usize) -> Result<Vec<(PlcEntry, Fraction)>> {
    let plc = enumerate_plc(n)?;
    let farey = farey_sequence(n as u64)?;
    if plc.len() != farey.len() {
        return Err(WordError::Internal(format!(
            "PLC({n}) has {} words but F({n}) has {} fractions",
            plc.len(),
            farey.len()
        )));
    }
    plc.into_iter()
        .zip(farey)
        .map(|(entry, fraction)| {
            if entry.fraction != fraction {
                return Err(WordError::Internal(format!(
                    "{} has root slope {} but sits opposite {fraction}",
                    entry.word, entry.fraction
                )));
            }
            Ok((entry, fraction))
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(s: &str) -> BinaryWord {
        s.parse().unwrap()
    }

    #[test]
    fn plc_examples() {
        assert!(is_plc(&w("00101")).unwrap());
        assert!(is_plc(&w("11111")).unwrap());
        assert!(!is_plc(&w("00101001001")).unwrap());
        assert!(is_plc(&w("")).is_err());
        assert!(is_plc_by_left_special(&w("00101")).unwrap());
        assert!(!is_plc_by_left_special(&w("00101001001")).unwrap());
    }

    #[test]
    fn root_examples() {
        assert_eq!(plc_root(&w("00010")).unwrap(), w("0001"));
        assert_eq!(plc_root(&w("00101")).unwrap(), w("00101"));
        assert_eq!(plc_root(&w("00000")).unwrap(), w("0"));
        assert_eq!(plc_root(&w("11")).unwrap(), w("1"));
        assert!(matches!(plc_root(&w("10")), Err(WordError::NotPlc(_))));
    }

    #[test]
    fn enumeration_examples() {
        let words = |n| {
            enumerate_plc(n)
                .unwrap()
                .into_iter()
                .map(|e| e.word.to_string())
                .collect::<Vec<_>>()
        };
        assert_eq!(
            words(5),
            ["00000", "00001", "00010", "00100", "00101", "01010", "01011", "01101", "01110", "01111", "11111"]
        );
        assert_eq!(words(1), ["0", "1"]);
        assert_eq!(words(2), ["00", "01", "11"]);
        assert!(enumerate_plc(0).is_err());
    }

    #[test]
    fn farey_examples() {
        let text = |n| {
            farey_sequence(n)
                .unwrap()
                .iter()
                .map(ToString::to_string)
                .collect::<Vec<_>>()
        };
        assert_eq!(
            text(5),
            ["0/1", "1/5", "1/4", "1/3", "2/5", "1/2", "3/5", "2/3", "3/4", "4/5", "1/1"]
        );
        assert_eq!(text(1), ["0/1", "1/1"]);
        assert_eq!(text(2), ["0/1", "1/2", "1/1"]);
        assert!(farey_sequence(0).is_err());
    }

    #[test]
    fn bijection_examples() {
        let pairs = plc_farey_bijection(5).unwrap();
        let find = |s: &str| pairs.iter().find(|(e, _)| e.word == w(s)).unwrap().1.to_string();
        assert_eq!(find("00101"), "2/5");
        assert_eq!(find("00000"), "0/1");
        assert_eq!(find("11111"), "1/1");
        assert_eq!(pairs[4].0.word, w("00101"));
    }
}
