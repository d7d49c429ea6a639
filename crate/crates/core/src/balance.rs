//! Balance and the predicates built on it.
//!
//! A binary word is balanced when any two factors of equal length differ by
//! at most one in their number of ones. Balance is factorial, so searches can
//! prune on prefixes; [`BalanceTracker`] keeps the per-length height range of
//! a growing word to make that pruning incremental.

use std::collections::HashMap;

use serde::Serialize;

use crate::christoffel::{lower_christoffel, upper_christoffel};
use crate::error::{Result, WordError};
use crate::word::{BinaryWord, ParikhVector};

/// Light and (optional) heavy Parikh vectors of the length-`k` factors.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct FactorClass {
    pub k: usize,
    pub light: ParikhVector,
    pub heavy: Option<ParikhVector>,
}

/// A palindrome `v` with `0v0` at `pos0` and `1v1` at `pos1` (1-based starts).
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ImbalanceWitness {
    pub v: BinaryWord,
    pub pos0: usize,
    pub pos1: usize,
}

/// Height spread over the windows of each length, by direct definition.
fn max_spread(w: &BinaryWord) -> u32 {
    let h = w.prefix_heights();
    let n = w.len();
    let mut worst = 0;
    for k in 1..n {
        let (mut lo, mut hi) = (u32::MAX, 0);
        for s in 0..=n - k {
            let ones = h[s + k] - h[s];
            lo = lo.min(ones);
            hi = hi.max(ones);
        }
        worst = worst.max(hi - lo);
        if worst > 1 {
            break;
        }
    }
    worst
}

/// Balanced: equal-length factors differ by at most one `1`.
pub fn is_balanced(w: &BinaryWord) -> bool {
    max_spread(w) <= 1
}

/// Shortest palindrome `v` with both `0v0` and `1v1` occurring in `w`, ties
/// broken by leftmost `0v0` then leftmost `1v1`. `None` iff `w` is balanced.
pub fn unbalance_witness(w: &BinaryWord) -> Option<ImbalanceWitness> {
    let n = w.len();
    for inner in 0..n.saturating_sub(1) {
        let mut first: HashMap<BinaryWord, [Option<usize>; 2]> = HashMap::new();
        for s in 0..n - inner - 1 {
            let e = s + inner + 1;
            let x = w.letter(s);
            if x != w.letter(e) {
                continue;
            }
            let v = w.subword(s + 1, e);
            if !v.is_palindrome() {
                continue;
            }
            first.entry(v).or_default()[usize::from(x)].get_or_insert(s + 1);
        }
        let best = first
            .into_iter()
            .filter_map(|(v, pos)| Some((pos[0]?, pos[1]?, v)))
            .min_by_key(|&(p0, p1, _)| (p0, p1));
        if let Some((pos0, pos1, v)) = best {
            return Some(ImbalanceWitness { v, pos0, pos1 });
        }
    }
    None
}

/// Every rotation of `w` is balanced.
pub fn is_circularly_balanced(w: &BinaryWord) -> Result<bool> {
    Ok(w.conjugates()?.iter().all(is_balanced))
}

/// Light/heavy classes for each factor length `0..=|w|`.
pub fn factor_classes(w: &BinaryWord) -> Result<Vec<FactorClass>> {
    if !is_balanced(w) {
        return Err(WordError::NotBalanced(w.clone()));
    }
    let h = w.prefix_heights();
    let n = w.len();
    Ok((0..=n)
        .map(|k| {
            let heights = (0..=n - k).map(|s| h[s + k] - h[s]);
            let lo = heights.clone().min().unwrap_or(0);
            let hi = heights.max().unwrap_or(0);
            let vector = |ones: u32| ParikhVector::new(k as u64 - u64::from(ones), u64::from(ones));
            FactorClass {
                k,
                light: vector(lo),
                heavy: (hi > lo).then(|| vector(hi)),
            }
        })
        .collect())
}

fn require_balanced(v: &BinaryWord) -> Result<()> {
    if is_balanced(v) {
        Ok(())
    } else {
        Err(WordError::NotBalanced(v.clone()))
    }
}

fn wrapped(x: Option<u8>, v: &BinaryWord, y: Option<u8>) -> BinaryWord {
    let mut out = BinaryWord::with_capacity(v.len() + 2);
    out.extend(x);
    out.extend(v.letters());
    out.extend(y);
    out
}

/// Both `0v` and `1v` are balanced.
pub fn is_left_special(v: &BinaryWord) -> Result<bool> {
    require_balanced(v)?;
    Ok((0..=1).all(|x| is_balanced(&wrapped(Some(x), v, None))))
}

/// Both `v0` and `v1` are balanced.
pub fn is_right_special(v: &BinaryWord) -> Result<bool> {
    require_balanced(v)?;
    Ok((0..=1).all(|y| is_balanced(&wrapped(None, v, Some(y)))))
}

pub fn is_bispecial(v: &BinaryWord) -> Result<bool> {
    Ok(is_left_special(v)? && is_right_special(v)?)
}

/// All of `0v1`, `1v0`, `0v0` and `1v1` are balanced.
pub fn is_strictly_bispecial(v: &BinaryWord) -> Result<bool> {
    require_balanced(v)?;
    Ok((0..=1).all(|x| (0..=1).all(|y| is_balanced(&wrapped(Some(x), v, Some(y))))))
}

/// No factor has more zeros than the prefix of the same length.
pub fn is_prefix_normal(w: &BinaryWord) -> bool {
    let h = w.prefix_heights();
    let n = w.len();
    // In terms of ones: no factor has fewer ones than the equal-length prefix.
    (1..=n).all(|k| (1..=n - k).all(|s| h[s + k] - h[s] >= h[k]))
}

/// Every proper prefix of `w` has the Parikh vector of the prefix of the same
/// length of either `w_{a,b}` or `W_{a,b}`, where `(a, b)` is `w`'s own
/// Parikh vector.
pub fn in_digital_bar(w: &BinaryWord) -> Result<bool> {
    let p = w.parikh();
    if p.zeros == 0 || p.ones == 0 {
        return Err(WordError::DegenerateBar { a: p.zeros, b: p.ones });
    }
    let lower = lower_christoffel(p.zeros, p.ones)?.prefix_heights();
    let upper = upper_christoffel(p.zeros, p.ones)?.prefix_heights();
    let h = w.prefix_heights();
    Ok((1..w.len()).all(|k| h[k] == lower[k] || h[k] == upper[k]))
}

/// A word under construction together with, for every factor length, the
/// least and greatest number of ones seen among its windows.
#[derive(Debug, Clone, Default)]
pub struct BalanceTracker {
    word: BinaryWord,
    min_ones: Vec<u32>,
    max_ones: Vec<u32>,
}

impl BalanceTracker {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn word(&self) -> &BinaryWord {
        &self.word
    }

    /// The tracker for `word · letter`, or `None` if that word is unbalanced.
    /// Only the new suffix windows need checking.
    pub fn pushed(&self, letter: u8) -> Option<Self> {
        let mut next = self.clone();
        next.word.push(letter);
        let n = next.word.len();
        let mut ones = 0u32;
        for k in 1..=n {
            ones += u32::from(next.word.letter(n - k));
            if k == n {
                next.min_ones.push(ones);
                next.max_ones.push(ones);
            } else {
                let lo = next.min_ones[k - 1].min(ones);
                let hi = next.max_ones[k - 1].max(ones);
                if hi - lo > 1 {
                    return None;
                }
                next.min_ones[k - 1] = lo;
                next.max_ones[k - 1] = hi;
            }
        }
        Some(next)
    }
}

/// All balanced words with Parikh vector `(a, b)`, in lexicographic order.
///
/// Depth-first over prefixes, `0` before `1`, dropping any unbalanced prefix.
pub fn enumerate_balanced(a: u64, b: u64) -> Result<Vec<BinaryWord>> {
    if a == 0 && b == 0 {
        return Err(WordError::ZeroVector);
    }
    fn walk(t: &BalanceTracker, zeros: u64, ones: u64, out: &mut Vec<BinaryWord>) {
        if zeros == 0 && ones == 0 {
            out.push(t.word().clone());
            return;
        }
        if zeros > 0 {
            if let Some(next) = t.pushed(0) {
                walk(&next, zeros - 1, ones, out);
            }
        }
        if ones > 0 {
            if let Some(next) = t.pushed(1) {
                walk(&next, zeros, ones - 1, out);
            }
        }
    }
    let mut out = Vec::new();
    walk(&BalanceTracker::new(), a, b, &mut out);
    Ok(out)
}

/// Every word with Parikh vector `(a, b)`, in lexicographic order.
pub fn words_with_parikh(a: u64, b: u64) -> Vec<BinaryWord> {
    fn walk(prefix: &mut BinaryWord, zeros: u64, ones: u64, out: &mut Vec<BinaryWord>) {
        if zeros == 0 && ones == 0 {
            out.push(prefix.clone());
            return;
        }
        for (letter, left) in [(0u8, zeros), (1u8, ones)] {
            if left > 0 {
                prefix.push(letter);
                if letter == 0 {
                    walk(prefix, zeros - 1, ones, out);
                } else {
                    walk(prefix, zeros, ones - 1, out);
                }
                prefix.pop();
            }
        }
    }
    let mut out = Vec::new();
    walk(&mut BinaryWord::new(), a, b, &mut out);
    out
}

/// Lexicographically greatest Lyndon word with Parikh vector `(a, b)`, by
/// exhaustive search over all such words.
pub fn max_balanced_lyndon(a: u64, b: u64) -> Result<BinaryWord> {
    crate::arith::require_coprime(a, b)?;
    words_with_parikh(a, b)
        .into_iter()
        .rev()
        .find(|w| w.is_lyndon().unwrap_or(false))
        .ok_or_else(|| WordError::Internal(format!("no Lyndon word with Parikh vector ({a}, {b})")))
}
