//! Christoffel words and central words.
//!
//! The lower Christoffel word `w_{a,b}` encodes the lattice path from `(0,0)`
//! to `(a,b)` that stays closest to the segment from below without crossing
//! it (`0` is a horizontal step, `1` a vertical one). The upper word `W_{a,b}`
//! is its reversal. For coprime `a, b` with `a + b ≥ 2` the lower word reads
//! `0 C 1` for a central palindrome `C`.

use std::fmt;

use num_rational::Ratio;
use serde::Serialize;

use crate::arith::{checked_sum, gcd, mod_inverse, require_coprime};
use crate::error::{Result, WordError};
use crate::word::{BinaryWord, ParikhVector};

/// Slope `b/a` of a Parikh vector; `None` stands for the vertical slope.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Slope {
    pub parikh: ParikhVector,
}

impl Slope {
    pub fn new(a: u64, b: u64) -> Result<Self> {
        if a == 0 && b == 0 {
            return Err(WordError::ZeroVector);
        }
        Ok(Self {
            parikh: ParikhVector::new(a, b),
        })
    }

    pub fn value(&self) -> Option<Ratio<u64>> {
        (self.parikh.zeros != 0).then(|| Ratio::new(self.parikh.ones, self.parikh.zeros))
    }
}

impl fmt::Display for Slope {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.value() {
            Some(r) => write!(f, "{}/{}", r.numer(), r.denom()),
            None => f.write_str("inf"),
        }
    }
}

fn to_len(n: u64, a: u64, b: u64) -> Result<usize> {
    usize::try_from(n).map_err(|_| WordError::Overflow { a, b })
}

/// The lower Christoffel word `w_{a,b}`.
///
/// Letter `k` of the primitive word is `1` exactly when the height
/// `⌊k·b/(a+b)⌋` increases at step `k`; for `g = gcd(a, b) > 1` the result is
/// the `g`-th power of the primitive word of the reduced pair. `(a, 0)` and
/// `(0, b)` give `0^a` and `1^b`.
pub fn lower_christoffel(a: u64, b: u64) -> Result<BinaryWord> {
    if a == 0 && b == 0 {
        return Err(WordError::ZeroVector);
    }
    checked_sum(a, b)?;
    let g = gcd(a, b);
    let (a0, b0) = (a / g, b / g);
    let n0 = a0 + b0;
    let mut primitive = BinaryWord::with_capacity(to_len(n0, a, b)?);
    let mut prev = 0u128;
    for k in 1..=u128::from(n0) {
        let height = k * u128::from(b0) / u128::from(n0);
        primitive.push(u8::from(height > prev));
        prev = height;
    }
    Ok(primitive.power(to_len(g, a, b)?))
}

/// Builds `w_{a,b}` from the sorted positive multiples of `a` and `b` below
/// `ab`: a `1` for each multiple of `a`, a `0` for each multiple of `b`,
/// framed by a leading `0` and a trailing `1`.
pub fn lower_christoffel_arithmetic(a: u64, b: u64) -> Result<BinaryWord> {
    if a == 0 || b == 0 {
        return Err(WordError::Precondition(format!(
            "arithmetic construction needs a, b >= 1, got ({a}, {b})"
        )));
    }
    require_coprime(a, b)?;
    let product = a.checked_mul(b).ok_or(WordError::Overflow { a, b })?;
    let mut word = BinaryWord::with_capacity(to_len(checked_sum(a, b)?, a, b)?);
    word.push(0);
    // Coprime, so no common multiple lies below ab.
    let (mut next_a, mut next_b) = (a, b);
    while next_a < product || next_b < product {
        if next_b < next_a {
            word.push(0);
            next_b += b;
        } else {
            word.push(1);
            next_a += a;
        }
    }
    word.push(1);
    Ok(word)
}

/// The upper Christoffel word `W_{a,b}`, the reversal of `w_{a,b}`.
pub fn upper_christoffel(a: u64, b: u64) -> Result<BinaryWord> {
    Ok(lower_christoffel(a, b)?.reversal())
}

fn require_primitive_pair(a: u64, b: u64) -> Result<()> {
    require_coprime(a, b)?;
    if a == 0 || b == 0 {
        return Err(WordError::Precondition(format!(
            "({a}, {b}) gives a word of length 1, which has no central factor"
        )));
    }
    Ok(())
}

/// The central word `C` with `w_{a,b} = 0 C 1`.
pub fn central_word(a: u64, b: u64) -> Result<BinaryWord> {
    require_primitive_pair(a, b)?;
    let w = lower_christoffel(a, b)?;
    Ok(w.subword(1, w.len() - 1))
}

/// True iff `w` has coprime periods `p`, `q` with `p + q = |w| + 2`.
pub fn is_central(w: &BinaryWord) -> bool {
    let n = w.len();
    (1..=n + 1).any(|p| {
        let q = n + 2 - p;
        p <= q && gcd(p as u64, q as u64) == 1 && w.has_period(p) && w.has_period(q)
    })
}

/// Structure of a central word.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CentralStructure {
    /// `letter^exponent`. The empty word is reported as `0^0`.
    PowerOfLetter { letter: u8, exponent: usize },
    /// The palindromes with `C = P·01·Q = Q·10·P`.
    Pair { p: BinaryWord, q: BinaryWord },
}

/// Splits a central word as `P·01·Q = Q·10·P`, or reports it as a letter power.
///
/// Every occurrence of `01` is tried; exactly one must yield palindromes `P`,
/// `Q` satisfying both equations.
pub fn central_decompose(c: &BinaryWord) -> Result<CentralStructure> {
    if !is_central(c) {
        return Err(WordError::NotCentral(c.clone()));
    }
    let ones = c.count_ones() as usize;
    if ones == 0 || ones == c.len() {
        return Ok(CentralStructure::PowerOfLetter {
            letter: c.first().unwrap_or(0),
            exponent: c.len(),
        });
    }
    let ten = BinaryWord::from_bits(0b10, 2);
    let mut found = None;
    for i in 0..c.len() - 1 {
        if c.letter(i) != 0 || c.letter(i + 1) != 1 {
            continue;
        }
        let p = c.subword(0, i);
        let q = c.subword(i + 2, c.len());
        if p.is_palindrome() && q.is_palindrome() && q.concat(&ten).concat(&p) == *c {
            if found.is_some() {
                return Err(WordError::Internal(format!(
                    "central word {c} admits more than one P01Q = Q10P split"
                )));
            }
            found = Some(CentralStructure::Pair { p, q });
        }
    }
    found.ok_or_else(|| WordError::Internal(format!("no P01Q = Q10P split found for central word {c}")))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum FactorizationKind {
    Palindromic,
    Standard,
}

/// A word split into two parts.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Factorization {
    pub left: BinaryWord,
    pub right: BinaryWord,
    pub kind: FactorizationKind,
}

impl Factorization {
    pub fn joined(&self) -> BinaryWord {
        self.left.concat(&self.right)
    }
}

impl fmt::Display for Factorization {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} . {}", self.left, self.right)
    }
}

fn wrap(x: u8, inner: &BinaryWord, y: u8) -> BinaryWord {
    let mut w = BinaryWord::with_capacity(inner.len() + 2);
    w.push(x);
    w.extend(inner.letters());
    w.push(y);
    w
}

/// `w_{a,b} = 0P0 · 1Q1`, or `0^{n+1} · 1` / `0 · 1^{n+1}` when the central
/// word is a power of a letter.
pub fn palindromic_factorization(a: u64, b: u64) -> Result<Factorization> {
    let c = central_word(a, b)?;
    let (left, right) = match central_decompose(&c)? {
        CentralStructure::PowerOfLetter { letter: 0, exponent } => (
            BinaryWord::repeat_letter(0, exponent + 1),
            BinaryWord::repeat_letter(1, 1),
        ),
        CentralStructure::PowerOfLetter { exponent, .. } => (
            BinaryWord::repeat_letter(0, 1),
            BinaryWord::repeat_letter(1, exponent + 1),
        ),
        CentralStructure::Pair { p, q } => (wrap(0, &p, 0), wrap(1, &q, 1)),
    };
    Ok(Factorization {
        left,
        right,
        kind: FactorizationKind::Palindromic,
    })
}

/// `w_{a,b} = 0Q1 · 0P1`, or `0 · 0^n 1` / `0 1^n · 1` for letter powers.
pub fn standard_factorization(a: u64, b: u64) -> Result<Factorization> {
    let c = central_word(a, b)?;
    let (left, right) = match central_decompose(&c)? {
        CentralStructure::PowerOfLetter { letter: 0, exponent } => {
            let mut right = BinaryWord::repeat_letter(0, exponent);
            right.push(1);
            (BinaryWord::repeat_letter(0, 1), right)
        }
        CentralStructure::PowerOfLetter { exponent, .. } => {
            let mut left = BinaryWord::repeat_letter(0, 1);
            left.extend(std::iter::repeat_n(1, exponent));
            (left, BinaryWord::repeat_letter(1, 1))
        }
        CentralStructure::Pair { p, q } => (wrap(0, &q, 1), wrap(0, &p, 1)),
    };
    Ok(Factorization {
        left,
        right,
        kind: FactorizationKind::Standard,
    })
}

/// The inverses `(a', b')` of `a` and `b` modulo `a + b`, both in `[1, a+b-1]`.
pub fn period_inverses(a: u64, b: u64) -> Result<(u64, u64)> {
    require_primitive_pair(a, b)?;
    let n = checked_sum(a, b)?;
    let inv = |x| mod_inverse(x, n).ok_or(WordError::NotCoprime { a, b });
    Ok((inv(a)?, inv(b)?))
}

/// The `(a+b) × (a+b)` Christoffel matrix.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ChristoffelMatrix {
    pub a: u64,
    pub b: u64,
    pub rows: Vec<BinaryWord>,
}

impl ChristoffelMatrix {
    pub fn order(&self) -> usize {
        self.rows.len()
    }

    /// One row per line.
    pub fn to_text(&self) -> String {
        let mut out = String::with_capacity(self.order() * (self.order() + 1));
        for row in &self.rows {
            out.push_str(&row.to_string());
            out.push('\n');
        }
        out
    }
}

/// Builds the matrix column by column (first column `0^a 1^b`, each next
/// column shifting the block of ones up by `b` rows, cyclically) and checks
/// the result against the sorted conjugates of `w_{a,b}`.
pub fn christoffel_matrix(a: u64, b: u64) -> Result<ChristoffelMatrix> {
    if a == 0 || b == 0 {
        return Err(WordError::Precondition(format!(
            "the Christoffel matrix needs a, b >= 1, got ({a}, {b})"
        )));
    }
    let n = checked_sum(a, b)?;
    // Entry (r, j) equals entry (r + j·b mod n) of the first column.
    let rows: Vec<BinaryWord> = (0..n)
        .map(|r| {
            (0..n)
                .map(|j| u8::from((u128::from(r) + u128::from(j) * u128::from(b)) % u128::from(n) >= u128::from(a)))
                .collect()
        })
        .collect();

    let mut sorted = lower_christoffel(a, b)?.conjugates()?;
    sorted.sort();
    if rows != sorted {
        return Err(WordError::Internal(format!(
            "column-shift matrix for ({a}, {b}) disagrees with the sorted conjugates"
        )));
    }
    Ok(ChristoffelMatrix { a, b, rows })
}

/// True iff `w` equals `w_{parikh(w)}`.
pub fn is_lower_christoffel(w: &BinaryWord) -> bool {
    let p = w.parikh();
    !w.is_empty() && lower_christoffel(p.zeros, p.ones).is_ok_and(|c| c == *w)
}

/// True iff `w` equals `W_{parikh(w)}`.
pub fn is_upper_christoffel(w: &BinaryWord) -> bool {
    let p = w.parikh();
    !w.is_empty() && upper_christoffel(p.zeros, p.ones).is_ok_and(|c| c == *w)
}

/// Lower or upper Christoffel word with coprime Parikh vector.
pub fn is_primitive_christoffel(w: &BinaryWord) -> bool {
    let p = w.parikh();
    gcd(p.zeros, p.ones) == 1 && (is_lower_christoffel(w) || is_upper_christoffel(w))
}

/// The primitive lower Christoffel words of length `n`, sorted.
pub fn primitive_lower_christoffel_words(n: u64) -> Vec<BinaryWord> {
    let mut out: Vec<BinaryWord> = (0..=n)
        .filter(|&b| gcd(n - b, b) == 1)
        .filter_map(|b| lower_christoffel(n - b, b).ok())
        .collect();
    out.sort();
    out
}
