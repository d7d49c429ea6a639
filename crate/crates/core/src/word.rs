//! Finite binary words and the basic combinatorics on them: Parikh vectors,
//! factors, borders and periods, conjugacy, palindromes and Lyndon words.
//!
//! Letters are `0` and `1`, ordered `0 < 1`. Words are value objects:
//! equality, hashing and ordering look at content only. Ordering is the
//! lexicographic one, where a proper prefix sorts before its extensions.
//!
//! Contracts that mirror the usual `w[i..j]` notation (see
//! [`BinaryWord::factor`]) are 1-based; everything else follows Rust's
//! 0-based, half-open conventions.

use std::cmp::Ordering;
use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use serde::{Serialize, Serializer};

use crate::error::{Result, WordError};

const BLOCK_BITS: usize = 64;

/// Number of zeros and ones in a word.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Default, Serialize)]
pub struct ParikhVector {
    pub zeros: u64,
    pub ones: u64,
}

impl ParikhVector {
    pub const fn new(zeros: u64, ones: u64) -> Self {
        Self { zeros, ones }
    }

    /// Length of any word with this Parikh vector.
    pub const fn len(&self) -> u64 {
        self.zeros + self.ones
    }

    pub const fn is_empty(&self) -> bool {
        self.zeros == 0 && self.ones == 0
    }
}

impl fmt::Display for ParikhVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.zeros, self.ones)
    }
}

/// A finite word over `{0, 1}`, stored packed, most significant bit first.
///
/// Bits past `len` in the last block are kept zero so that the derived
/// `PartialEq` and `Hash` agree with content equality.
#[derive(Clone, Default, PartialEq, Eq, Hash)]
pub struct BinaryWord {
    blocks: Vec<u64>,
    len: usize,
}

#[inline]
fn mask_for(bit: usize) -> u64 {
    1u64 << (BLOCK_BITS - 1 - bit % BLOCK_BITS)
}

impl BinaryWord {
    /// The empty word.
    pub fn new() -> Self {
        Self::default()
    }

    pub fn with_capacity(letters: usize) -> Self {
        Self {
            blocks: Vec::with_capacity(letters.div_ceil(BLOCK_BITS)),
            len: 0,
        }
    }

    /// `letter` repeated `count` times.
    pub fn repeat_letter(letter: u8, count: usize) -> Self {
        let mut w = Self::with_capacity(count);
        for _ in 0..count {
            w.push(letter);
        }
        w
    }

    /// The word of length `len` whose letters are the low `len` bits of
    /// `value`, most significant first. Numeric order of `value` therefore
    /// matches lexicographic order among words of the same length.
    pub fn from_bits(value: u64, len: usize) -> Self {
        assert!(len <= 64, "from_bits supports at most 64 letters");
        let mut w = Self::with_capacity(len);
        for i in (0..len).rev() {
            w.push(((value >> i) & 1) as u8);
        }
        w
    }

    /// Every word of length `len`, in lexicographic order.
    pub fn all_of_length(len: usize) -> impl Iterator<Item = BinaryWord> {
        assert!(len < 64, "exhaustive enumeration is limited to lengths below 64");
        (0..1u64 << len).map(move |v| Self::from_bits(v, len))
    }

    pub fn len(&self) -> usize {
        self.len
    }

    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    /// Letter at 0-based position `idx`. Panics when out of range.
    #[inline]
    pub fn letter(&self, idx: usize) -> u8 {
        assert!(idx < self.len, "index {idx} out of range for length {}", self.len);
        u8::from(self.blocks[idx / BLOCK_BITS] & mask_for(idx) != 0)
    }

    pub fn first(&self) -> Option<u8> {
        (!self.is_empty()).then(|| self.letter(0))
    }

    pub fn last(&self) -> Option<u8> {
        (!self.is_empty()).then(|| self.letter(self.len - 1))
    }

    /// Appends a letter. Panics if `letter` is not 0 or 1.
    pub fn push(&mut self, letter: u8) {
        assert!(letter <= 1, "binary letters are 0 and 1, got {letter}");
        if self.len.is_multiple_of(BLOCK_BITS) {
            self.blocks.push(0);
        }
        if letter == 1 {
            let last = self.blocks.len() - 1;
            self.blocks[last] |= mask_for(self.len);
        }
        self.len += 1;
    }

    pub fn pop(&mut self) -> Option<u8> {
        let letter = self.last()?;
        self.len -= 1;
        let block = self.len / BLOCK_BITS;
        self.blocks[block] &= !mask_for(self.len);
        if self.len.is_multiple_of(BLOCK_BITS) {
            self.blocks.pop();
        }
        Some(letter)
    }

    pub fn letters(&self) -> impl DoubleEndedIterator<Item = u8> + ExactSizeIterator + '_ {
        (0..self.len).map(move |i| self.letter(i))
    }

    /// The letters in the 0-based half-open range `start..end`.
    pub fn subword(&self, start: usize, end: usize) -> BinaryWord {
        assert!(start <= end && end <= self.len, "range {start}..{end} out of bounds");
        (start..end).map(|i| self.letter(i)).collect()
    }

    pub fn prefix(&self, k: usize) -> BinaryWord {
        self.subword(0, k)
    }

    pub fn suffix(&self, k: usize) -> BinaryWord {
        self.subword(self.len - k, self.len)
    }

    pub fn starts_with(&self, other: &BinaryWord) -> bool {
        other.len <= self.len && (0..other.len).all(|i| self.letter(i) == other.letter(i))
    }

    pub fn concat(&self, other: &BinaryWord) -> BinaryWord {
        let mut w = Self::with_capacity(self.len + other.len);
        w.extend(self.letters());
        w.extend(other.letters());
        w
    }

    /// `self` repeated `k` times.
    pub fn power(&self, k: usize) -> BinaryWord {
        let mut w = Self::with_capacity(self.len * k);
        for _ in 0..k {
            w.extend(self.letters());
        }
        w
    }

    /// The conjugate `w[k..] w[..k]`; `k` is taken modulo the length.
    pub fn rotation(&self, k: usize) -> BinaryWord {
        if self.is_empty() {
            return Self::new();
        }
        let k = k % self.len;
        (0..self.len).map(|i| self.letter((i + k) % self.len)).collect()
    }

    /// Exchanges 0 and 1.
    pub fn complement(&self) -> BinaryWord {
        self.letters().map(|c| 1 - c).collect()
    }

    /// The length-`len` prefix of the infinite periodic word `self^ω`.
    pub fn periodic_prefix(&self, len: usize) -> BinaryWord {
        assert!(!self.is_empty() || len == 0, "empty word has no periodic extension");
        (0..len).map(|i| self.letter(i % self.len)).collect()
    }

    pub fn count_ones(&self) -> u64 {
        self.blocks.iter().map(|b| u64::from(b.count_ones())).sum()
    }

    pub fn count_zeros(&self) -> u64 {
        self.len as u64 - self.count_ones()
    }

    /// `(|w|_0, |w|_1)`.
    pub fn parikh(&self) -> ParikhVector {
        ParikhVector::new(self.count_zeros(), self.count_ones())
    }

    /// Running count of ones: entry `k` is `|w[1..k]|_1`, for `k = 0..=len`.
    pub fn prefix_heights(&self) -> Vec<u32> {
        let mut out = Vec::with_capacity(self.len + 1);
        let mut acc = 0u32;
        out.push(0);
        for c in self.letters() {
            acc += u32::from(c);
            out.push(acc);
        }
        out
    }

    /// The factor `w[i..j]`, with `1 ≤ i ≤ j ≤ |w|`.
    pub fn factor(&self, i: usize, j: usize) -> Result<BinaryWord> {
        if i == 0 || i > j || j > self.len {
            return Err(WordError::Bounds { i, j, len: self.len });
        }
        Ok(self.subword(i - 1, j))
    }

    /// Distinct factors of length `k`; `{ε}` when `k = 0`.
    pub fn factors_of_length(&self, k: usize) -> Result<BTreeSet<BinaryWord>> {
        if k > self.len {
            return Err(WordError::FactorLength { k, len: self.len });
        }
        Ok((0..=self.len - k).map(|s| self.subword(s, s + k)).collect())
    }

    /// Border array: `border[m]` is the length of the longest proper border
    /// of the length-`m` prefix.
    fn border_table(&self) -> Vec<usize> {
        let n = self.len;
        let mut border = vec![0usize; n + 1];
        let mut k = 0usize;
        for i in 1..n {
            while k > 0 && self.letter(i) != self.letter(k) {
                k = border[k];
            }
            if self.letter(i) == self.letter(k) {
                k += 1;
            }
            border[i + 1] = k;
        }
        border
    }

    /// Least `p ≥ 1` with `w[i] = w[i + p]` wherever both are defined.
    pub fn smallest_period(&self) -> Result<usize> {
        if self.is_empty() {
            return Err(WordError::EmptyWord);
        }
        Ok(self.len - self.border_table()[self.len])
    }

    pub fn has_period(&self, p: usize) -> bool {
        p >= 1 && (p..self.len).all(|i| self.letter(i) == self.letter(i - p))
    }

    pub fn is_unbordered(&self) -> Result<bool> {
        Ok(self.smallest_period()? == self.len)
    }

    /// All `|w|` rotations, starting from `w` itself.
    pub fn conjugates(&self) -> Result<Vec<BinaryWord>> {
        if self.is_empty() {
            return Err(WordError::EmptyWord);
        }
        Ok((0..self.len).map(|k| self.rotation(k)).collect())
    }

    pub fn is_conjugate_of(&self, other: &BinaryWord) -> bool {
        self.len == other.len && (self.is_empty() || (0..self.len).any(|k| &self.rotation(k) == other))
    }

    /// True iff `w` is not a proper power `v^k`, `k ≥ 2`.
    pub fn is_primitive(&self) -> Result<bool> {
        let p = self.smallest_period()?;
        Ok(p == self.len || !self.len.is_multiple_of(p))
    }

    pub fn reversal(&self) -> BinaryWord {
        self.letters().rev().collect()
    }

    pub fn is_palindrome(&self) -> bool {
        let n = self.len;
        (0..n / 2).all(|i| self.letter(i) == self.letter(n - 1 - i))
    }

    /// Split points `p` (`0 ≤ p ≤ |w|`) such that `w[..p]` and `w[p..]` are
    /// both palindromes, the empty word included.
    pub fn two_palindrome_splits(&self) -> Result<Vec<usize>> {
        if self.is_empty() {
            return Err(WordError::EmptyWord);
        }
        Ok((0..=self.len)
            .filter(|&p| self.subword(0, p).is_palindrome() && self.subword(p, self.len).is_palindrome())
            .collect())
    }

    /// Primitive and strictly smaller than each of its other rotations.
    pub fn is_lyndon(&self) -> Result<bool> {
        if !self.is_primitive()? {
            return Ok(false);
        }
        Ok((1..self.len).all(|k| *self < self.rotation(k)))
    }
}

/// Lexicographic comparison with `0 < 1`; a proper prefix sorts first.
pub fn lex_compare(u: &BinaryWord, v: &BinaryWord) -> Ordering {
    u.cmp(v)
}

impl Ord for BinaryWord {
    fn cmp(&self, other: &Self) -> Ordering {
        let common = self.len.min(other.len);
        let full = common / BLOCK_BITS;
        for b in 0..full {
            match self.blocks[b].cmp(&other.blocks[b]) {
                Ordering::Equal => {}
                ord => return ord,
            }
        }
        let rest = common % BLOCK_BITS;
        if rest > 0 {
            let mask = !0u64 << (BLOCK_BITS - rest);
            match (self.blocks[full] & mask).cmp(&(other.blocks[full] & mask)) {
                Ordering::Equal => {}
                ord => return ord,
            }
        }
        self.len.cmp(&other.len)
    }
}

impl PartialOrd for BinaryWord {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Extend<u8> for BinaryWord {
    fn extend<I: IntoIterator<Item = u8>>(&mut self, iter: I) {
        for c in iter {
            self.push(c);
        }
    }
}

impl FromIterator<u8> for BinaryWord {
    fn from_iter<I: IntoIterator<Item = u8>>(iter: I) -> Self {
        let mut w = Self::new();
        w.extend(iter);
        w
    }
}

impl FromStr for BinaryWord {
    type Err = WordError;

    fn from_str(s: &str) -> Result<Self> {
        let mut w = Self::with_capacity(s.len());
        for (position, found) in s.chars().enumerate() {
            match found {
                '0' => w.push(0),
                '1' => w.push(1),
                _ => return Err(WordError::Parse { position, found }),
            }
        }
        Ok(w)
    }
}

impl fmt::Display for BinaryWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s: String = self.letters().map(|c| if c == 1 { '1' } else { '0' }).collect();
        f.pad(&s)
    }
}

impl fmt::Debug for BinaryWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "BinaryWord(\"{self}\")")
    }
}

impl Serialize for BinaryWord {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(s: &str) -> BinaryWord {
        s.parse().unwrap()
    }

    #[test]
    fn parikh_examples() {
        assert_eq!(w("00100100101").parikh(), ParikhVector::new(7, 4));
        assert_eq!(w("").parikh(), ParikhVector::new(0, 0));
        assert_eq!(w("01011").parikh(), ParikhVector::new(2, 3));
    }

    #[test]
    fn factor_examples() {
        let fig = w("00100100101");
        assert_eq!(fig.factor(1, 3).unwrap(), w("001"));
        assert_eq!(fig.factor(2, 10).unwrap(), w("010010010"));
        assert_eq!(w("0").factor(1, 1).unwrap(), w("0"));
        assert!(matches!(fig.factor(0, 2), Err(WordError::Bounds { .. })));
        assert!(matches!(fig.factor(4, 3), Err(WordError::Bounds { .. })));
        assert!(matches!(fig.factor(1, 12), Err(WordError::Bounds { .. })));
    }

    #[test]
    fn factors_of_length_examples() {
        let set = |v: &[&str]| v.iter().map(|s| w(s)).collect::<BTreeSet<_>>();
        assert_eq!(w("0101").factors_of_length(2).unwrap(), set(&["01", "10"]));
        assert_eq!(w("00100100101").factors_of_length(11).unwrap(), set(&["00100100101"]));
        assert_eq!(
            w("000101").factors_of_length(3).unwrap(),
            set(&["000", "001", "010", "101"])
        );
        assert_eq!(w("01").factors_of_length(0).unwrap(), set(&[""]));
        assert!(w("01").factors_of_length(3).is_err());
    }

    #[test]
    fn period_examples() {
        assert_eq!(w("010010").smallest_period().unwrap(), 3);
        assert_eq!(w("00100100101").smallest_period().unwrap(), 11);
        assert_eq!(w("0000").smallest_period().unwrap(), 1);
        assert_eq!(w("").smallest_period(), Err(WordError::EmptyWord));
        assert!(w("00100100101").is_unbordered().unwrap());
        assert!(!w("010010").is_unbordered().unwrap());
        assert!(w("0").is_unbordered().unwrap());
    }

    #[test]
    fn conjugate_examples() {
        assert_eq!(w("01").conjugates().unwrap(), vec![w("01"), w("10")]);
        assert_eq!(
            w("0101").conjugates().unwrap(),
            vec![w("0101"), w("1010"), w("0101"), w("1010")]
        );
        let distinct: BTreeSet<_> = w("00100101").conjugates().unwrap().into_iter().collect();
        assert_eq!(distinct.len(), 8);
        assert!(w("").conjugates().is_err());
    }

    #[test]
    fn primitive_examples() {
        assert!(!w("001001").is_primitive().unwrap());
        assert!(w("00101").is_primitive().unwrap());
        assert!(w("0").is_primitive().unwrap());
        assert!(!w("0000").is_primitive().unwrap());
        assert!(w("00100").is_primitive().unwrap());
    }

    #[test]
    fn reversal_and_palindromes() {
        assert_eq!(w("00100100101").reversal(), w("10100100100"));
        assert_eq!(w("010010010").reversal(), w("010010010"));
        assert_eq!(w("").reversal(), w(""));
        assert!(w("010010010").is_palindrome());
        assert!(!w("001").is_palindrome());
        assert!(w("").is_palindrome());
    }

    #[test]
    fn palindrome_splits() {
        assert!(w("00100100101").two_palindrome_splits().unwrap().contains(&8));
        assert_eq!(w("01").two_palindrome_splits().unwrap(), vec![1]);
        assert_eq!(w("0011").two_palindrome_splits().unwrap(), vec![2]);
        assert!(w("").two_palindrome_splits().is_err());
    }

    #[test]
    fn lyndon_examples() {
        assert!(w("00100100101").is_lyndon().unwrap());
        assert!(!w("10").is_lyndon().unwrap());
        assert!(!w("0101").is_lyndon().unwrap());
        assert!(w("0").is_lyndon().unwrap());
    }

    #[test]
    fn lex_examples() {
        assert_eq!(lex_compare(&w("00"), &w("01")), Ordering::Less);
        assert_eq!(lex_compare(&w("0"), &w("00")), Ordering::Less);
        assert_eq!(lex_compare(&w("00101"), &w("01010")), Ordering::Less);
        assert_eq!(lex_compare(&w("1"), &w("10")), Ordering::Less);
        assert_eq!(lex_compare(&w("01"), &w("0")), Ordering::Greater);
    }

    #[test]
    fn long_words_cross_block_boundaries() {
        let long = w("01").power(70);
        assert_eq!(long.len(), 140);
        assert_eq!(long.count_ones(), 70);
        assert_eq!(long.smallest_period().unwrap(), 2);
        let mut shorter = long.clone();
        assert_eq!(shorter.pop(), Some(1));
        assert!(shorter < long);
        assert!(long.starts_with(&shorter));
        assert_eq!(long.rotation(1).cmp(&long), Ordering::Greater);
        assert_eq!(long.reversal().reversal(), long);
        let mut edited = long.prefix(64);
        edited.push(1);
        assert!(edited > long.prefix(65));
    }

    #[test]
    fn parse_errors() {
        assert_eq!(
            "0120".parse::<BinaryWord>(),
            Err(WordError::Parse {
                position: 2,
                found: '2'
            })
        );
        assert_eq!("".parse::<BinaryWord>().unwrap(), BinaryWord::new());
    }
}
