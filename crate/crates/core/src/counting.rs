//! Closed-form count of the balanced words with a given Parikh vector.
//!
//! Balanced words are grouped by their minimal period `α + β`, where
//! `(α, β)` is coprime and the word is a factor of `w_{α,β}^ω`:
//!
//! * `N_{α,β}(n)` counts the length-`n` factors of `w_{α,β}^ω` with minimal
//!   period `α + β`;
//! * `H_{α,β}(n)` counts those among them that are heavy.
//!
//! `Bal(a, b)` then sums heavy counts over the `(α, β)` whose heavy height at
//! length `a + b` is `b`, and light counts over those whose light height is
//! `b`. Everything here is integer arithmetic; `σ = β/(α+β)` is an exact
//! rational and its floors and ceilings are integer divisions.
//!
//! The `brute_*` functions are independent enumerative oracles for each
//! closed form.

use std::collections::BTreeSet;

use num_rational::Ratio;
use serde::Serialize;

use crate::arith::{gcd, mod_inverse, require_coprime};
use crate::balance::enumerate_balanced;
use crate::christoffel::lower_christoffel;
use crate::error::{Result, WordError};
use crate::word::BinaryWord;

/// Largest `a + b` accepted by [`brute_count_balanced`].
pub const DEFAULT_BRUTE_CAP: u64 = 20;

/// Parameters of one coprime period class.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct PeriodClassParams {
    pub alpha: u64,
    pub beta: u64,
    /// Inverse of `alpha` modulo `alpha + beta`.
    pub alpha_inv: u64,
    /// Inverse of `beta` modulo `alpha + beta`.
    pub beta_inv: u64,
    /// `beta / (alpha + beta)`.
    pub sigma: Ratio<u64>,
}

impl PeriodClassParams {
    pub fn new(alpha: u64, beta: u64) -> Result<Self> {
        require_positive(alpha, beta)?;
        require_coprime(alpha, beta)?;
        let period = alpha + beta;
        let inv = |x| mod_inverse(x, period).ok_or(WordError::NotCoprime { a: alpha, b: beta });
        Ok(Self {
            alpha,
            beta,
            alpha_inv: inv(alpha)?,
            beta_inv: inv(beta)?,
            sigma: Ratio::new(beta, period),
        })
    }

    pub fn period(&self) -> u64 {
        self.alpha + self.beta
    }

    /// `⌊σ·x⌋`
    pub fn floor_sigma(&self, x: u64) -> u64 {
        *self.sigma.numer() * x / *self.sigma.denom()
    }

    /// `⌈σ·x⌉`
    pub fn ceil_sigma(&self, x: u64) -> u64 {
        (*self.sigma.numer() * x).div_ceil(*self.sigma.denom())
    }
}

fn require_positive(alpha: u64, beta: u64) -> Result<()> {
    if alpha == 0 || beta == 0 {
        return Err(WordError::Precondition(format!(
            "period class needs alpha, beta >= 1, got ({alpha}, {beta})"
        )));
    }
    Ok(())
}

/// `N_{α,β}(n)`.
pub fn count_period_factors(alpha: u64, beta: u64, n: u64) -> Result<u64> {
    require_positive(alpha, beta)?;
    if gcd(alpha, beta) > 1 || n < alpha + beta {
        return Ok(0);
    }
    let p = PeriodClassParams::new(alpha, beta)?;
    let period = p.period();
    let lo = p.alpha_inv.min(p.beta_inv);
    let hi = p.alpha_inv.max(p.beta_inv);
    Ok(if n < period + lo {
        2 * (n - period + 1)
    } else if n < period + hi {
        n - hi + 1
    } else {
        period
    })
}

/// All distinct length-`n` factors of `w_{α,β}^ω` whose smallest period is
/// `α + β`, read off a window of `w_{α,β}^ω` of length `n + 2(α+β)`.
pub fn brute_period_factors(alpha: u64, beta: u64, n: u64) -> Result<BTreeSet<BinaryWord>> {
    require_positive(alpha, beta)?;
    let period = (alpha + beta) as usize;
    let n = n as usize;
    let window = lower_christoffel(alpha, beta)?.periodic_prefix(n + 2 * period);
    Ok(window
        .factors_of_length(n)?
        .into_iter()
        .filter(|f| f.smallest_period().is_ok_and(|p| p == period))
        .collect())
}

/// Number of ones in the length-`k` prefix of `w_{α,β}^ω`: `⌊βk/(α+β)⌋`.
pub fn prefix_height_lower(alpha: u64, beta: u64, k: u64) -> u64 {
    beta * k / (alpha + beta)
}

/// Number of ones in the length-`k` prefix of `W_{α,β}^ω`: `⌈βk/(α+β)⌉`.
pub fn prefix_height_upper(alpha: u64, beta: u64, k: u64) -> u64 {
    (beta * k).div_ceil(alpha + beta)
}

/// Heavy occurrences among the `α + β` length-`n` windows of any factor of
/// `w_{α,β}^ω` of length `α + β + n - 1`: `nβ mod (α+β)`.
pub fn count_heavy_occurrences(alpha: u64, beta: u64, n: u64) -> Result<u64> {
    require_positive(alpha, beta)?;
    require_coprime(alpha, beta)?;
    Ok(n * beta % (alpha + beta))
}

/// `H_{α,β}(n)`.
///
/// For short lengths the sum of heights of all factors with minimal period
/// `α + β` is accumulated explicitly and the light height `⌊σn⌋` times
/// `N_{α,β}(n)` is subtracted; past the last threshold the count is the
/// heavy occurrence count `nβ mod (α+β)`.
pub fn count_heavy_factors(alpha: u64, beta: u64, n: u64) -> Result<u64> {
    let total = count_period_factors(alpha, beta, n)?;
    if total == 0 {
        return Ok(0);
    }
    let p = PeriodClassParams::new(alpha, beta)?;
    let period = p.period();
    let (a_inv, b_inv) = (p.alpha_inv, p.beta_inv);
    if a_inv == b_inv && period > 2 {
        return Err(WordError::Internal(format!(
            "equal period inverses for ({alpha}, {beta}) with alpha + beta > 2"
        )));
    }
    let light_height = p.floor_sigma(n);
    let height_sum: u64 = if n < period + a_inv.min(b_inv) {
        2 * (0..=n - period)
            .map(|i| p.ceil_sigma(n - i) + p.floor_sigma(i))
            .sum::<u64>()
    } else if period + b_inv <= n && n < period + a_inv {
        (0..=n - a_inv).map(|i| p.floor_sigma(n - i) + p.ceil_sigma(i)).sum()
    } else if period + a_inv <= n && n < period + b_inv {
        (0..=n - b_inv).map(|i| p.ceil_sigma(n - i) + p.floor_sigma(i)).sum()
    } else {
        return Ok(n * beta % period);
    };
    let heavy = i128::from(height_sum) - i128::from(light_height) * i128::from(total);
    if heavy < 0 || heavy > i128::from(total) {
        return Err(WordError::Internal(format!(
            "heavy count {heavy} for ({alpha}, {beta}, {n}) outside [0, {total}]"
        )));
    }
    Ok(heavy as u64)
}

/// Members of [`brute_period_factors`] with the heavy height `⌈σn⌉`, when
/// that differs from the light height `⌊σn⌋`.
pub fn brute_heavy_factors(alpha: u64, beta: u64, n: u64) -> Result<BTreeSet<BinaryWord>> {
    let p = PeriodClassParams::new(alpha, beta)?;
    let (light, heavy) = (p.floor_sigma(n), p.ceil_sigma(n));
    if light == heavy {
        return Ok(BTreeSet::new());
    }
    Ok(brute_period_factors(alpha, beta, n)?
        .into_iter()
        .filter(|f| f.count_ones() == heavy)
        .collect())
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum TermKind {
    Heavy,
    Light,
}

/// One `(α, β)` term of the count.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CountTerm {
    pub alpha: u64,
    pub beta: u64,
    pub kind: TermKind,
    #[serde(rename = "N")]
    pub period_factors: u64,
    #[serde(rename = "H")]
    pub heavy_factors: u64,
    /// `H` for heavy terms, `N - H` for light ones.
    pub contribution: u64,
}

/// The count of balanced words with Parikh vector `(a, b)`, term by term.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CountReport {
    pub a: u64,
    pub b: u64,
    pub terms: Vec<CountTerm>,
    pub total: u64,
}

fn term(alpha: u64, beta: u64, kind: TermKind, n: u64) -> Result<CountTerm> {
    let period_factors = count_period_factors(alpha, beta, n)?;
    let heavy_factors = count_heavy_factors(alpha, beta, n)?;
    let contribution = match kind {
        TermKind::Heavy => heavy_factors,
        TermKind::Light => period_factors - heavy_factors,
    };
    Ok(CountTerm {
        alpha,
        beta,
        kind,
        period_factors,
        heavy_factors,
        contribution,
    })
}

/// Every term of the double sum, heavy terms first (by `α`, then `β`), then
/// light terms (by `β`, then `α`). Non-coprime pairs inside the ranges are
/// listed with zero counts.
pub fn count_balanced_report(a: u64, b: u64) -> Result<CountReport> {
    if a == 0 || b == 0 {
        return Ok(CountReport {
            a,
            b,
            terms: Vec::new(),
            total: 1,
        });
    }
    let n = a.checked_add(b).ok_or(WordError::Overflow { a, b })?;
    let mut terms = Vec::new();
    // Heavy: (b-1)α/(a+1) < β ≤ bα/a, cross-multiplied.
    for alpha in 1..=a {
        for beta in 1..=b {
            if (b - 1) * alpha < beta * (a + 1) && beta * a <= b * alpha {
                terms.push(term(alpha, beta, TermKind::Heavy, n)?);
            }
        }
    }
    // Light: (a-1)β/(b+1) < α ≤ aβ/b.
    for beta in 1..=b {
        for alpha in 1..=a {
            if (a - 1) * beta < alpha * (b + 1) && alpha * b <= a * beta {
                terms.push(term(alpha, beta, TermKind::Light, n)?);
            }
        }
    }
    let total = terms.iter().map(|t| t.contribution).sum();
    Ok(CountReport { a, b, terms, total })
}

/// `Bal(a, b)`.
pub fn count_balanced(a: u64, b: u64) -> Result<u64> {
    Ok(count_balanced_report(a, b)?.total)
}

/// `Bal(a, b)` by enumeration, refused when `a + b` exceeds `cap`.
pub fn brute_count_balanced_capped(a: u64, b: u64, cap: u64) -> Result<u64> {
    let size = a.saturating_add(b);
    if size > cap {
        return Err(WordError::CapExceeded { size, cap });
    }
    if size == 0 {
        return Ok(1);
    }
    Ok(enumerate_balanced(a, b)?.len() as u64)
}

/// `Bal(a, b)` by enumeration with [`DEFAULT_BRUTE_CAP`].
pub fn brute_count_balanced(a: u64, b: u64) -> Result<u64> {
    brute_count_balanced_capped(a, b, DEFAULT_BRUTE_CAP)
}

/// The term of the count that a balanced word falls into: its minimal period
/// fixes the coprime class `(α, β)` (the Parikh vector of any window of that
/// length), and its height decides between heavy and light.
pub fn period_class_of(u: &BinaryWord) -> Result<(u64, u64, TermKind)> {
    let period = u.smallest_period()?;
    let class = u.prefix(period).parikh();
    let (alpha, beta) = (class.zeros, class.ones);
    let p = PeriodClassParams::new(alpha, beta)?;
    let len = u.len() as u64;
    let kind = if p.floor_sigma(len) != p.ceil_sigma(len) && u.count_ones() == p.ceil_sigma(len) {
        TermKind::Heavy
    } else {
        TermKind::Light
    };
    Ok((alpha, beta, kind))
}
