//! Small integer helpers shared by the construction and counting code.

use crate::error::{Result, WordError};

pub fn gcd(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        let r = a % b;
        a = b;
        b = r;
    }
    a
}

/// Euler's totient, by trial factorisation.
pub fn totient(n: u64) -> u64 {
    if n == 0 {
        return 0;
    }
    let mut result = n;
    let mut m = n;
    let mut p = 2;
    while p * p <= m {
        if m.is_multiple_of(p) {
            while m.is_multiple_of(p) {
                m /= p;
            }
            result -= result / p;
        }
        p += 1;
    }
    if m > 1 {
        result -= result / m;
    }
    result
}

/// Inverse of `x` modulo `m`, as a representative in `[0, m)`.
///
/// Returns `None` when `gcd(x, m) != 1`. For `m == 1` the only residue is 0.
pub fn mod_inverse(x: u64, m: u64) -> Option<u64> {
    if m == 0 {
        return None;
    }
    let (mut old_r, mut r) = (i128::from(x % m), i128::from(m));
    let (mut old_s, mut s) = (1i128, 0i128);
    while r != 0 {
        let q = old_r / r;
        (old_r, r) = (r, old_r - q * r);
        (old_s, s) = (s, old_s - q * s);
    }
    if old_r != 1 && m != 1 {
        return None;
    }
    let m = i128::from(m);
    Some((((old_s % m) + m) % m) as u64)
}

/// `a + b` with overflow reported against the pair.
pub(crate) fn checked_sum(a: u64, b: u64) -> Result<u64> {
    a.checked_add(b).ok_or(WordError::Overflow { a, b })
}

pub(crate) fn require_coprime(a: u64, b: u64) -> Result<()> {
    if gcd(a, b) == 1 {
        Ok(())
    } else {
        Err(WordError::NotCoprime { a, b })
    }
}
