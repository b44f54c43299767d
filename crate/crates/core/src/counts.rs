//! Counting words of B₀(n) by their maximal runs.
//!
//! `N(n, r, k)` is the number of words of length `n` starting with 0 that
//! contain exactly `k` maximal runs of length `r`. Its generating function
//! in `n` is `x^(kr) · W_r(x)^(k+1)`, with `W_r` from [`crate::series`].
//! [`w_count`] computes the `k = 0` column independently, from the
//! three-term recursion.

use std::fmt;

use num_bigint::{BigInt, BigUint};
use num_traits::{One, ToPrimitive, Zero};

use crate::error::Error;
use crate::series::{series_mul, series_pow, w_series, Polynomial, TruncatedSeries};

/// An exact, nonnegative count.
#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct BigCount(BigUint);

impl BigCount {
    pub fn zero() -> Self {
        BigCount(BigUint::zero())
    }

    /// `2^e`.
    pub fn pow2(e: u64) -> Self {
        BigCount(BigUint::one() << e)
    }

    pub fn value(&self) -> &BigUint {
        &self.0
    }

    pub fn into_inner(self) -> BigUint {
        self.0
    }

    fn from_coeff(c: &BigInt) -> Self {
        BigCount(c.to_biguint().expect("word counts are never negative"))
    }
}

impl From<u64> for BigCount {
    fn from(v: u64) -> Self {
        BigCount(BigUint::from(v))
    }
}

impl From<BigUint> for BigCount {
    fn from(v: BigUint) -> Self {
        BigCount(v)
    }
}

impl fmt::Display for BigCount {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(&self.0, f)
    }
}

impl std::ops::Add for BigCount {
    type Output = BigCount;

    fn add(self, rhs: BigCount) -> BigCount {
        BigCount(self.0 + rhs.0)
    }
}

impl std::iter::Sum for BigCount {
    fn sum<I: Iterator<Item = BigCount>>(iter: I) -> BigCount {
        BigCount(iter.map(|c| c.0).sum())
    }
}

impl<'a> std::iter::Sum<&'a BigCount> for BigCount {
    fn sum<I: Iterator<Item = &'a BigCount>>(iter: I) -> BigCount {
        BigCount(iter.map(|c| &c.0).sum())
    }
}

/// Query parameters: word length `n`, run length `r >= 1`, run count `k`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct CountTriple {
    pub n: usize,
    pub r: usize,
    pub k: usize,
}

impl CountTriple {
    pub fn new(n: usize, r: usize, k: usize) -> Result<Self, Error> {
        if r == 0 {
            return Err(Error::ZeroRunLength);
        }
        Ok(CountTriple { n, r, k })
    }

    /// `n - k·r`, or `None` when `k` runs of length `r` cannot fit.
    fn slack(&self) -> Option<usize> {
        self.k
            .checked_mul(self.r)
            .and_then(|used| self.n.checked_sub(used))
    }
}

/// Bottom-up table of `W(n, r)` for one fixed `r`, extended on demand.
#[derive(Clone, Debug)]
pub struct WTable {
    r: usize,
    values: Vec<BigInt>,
}

impl WTable {
    pub fn new(r: usize) -> Result<Self, Error> {
        if r == 0 {
            return Err(Error::ZeroRunLength);
        }
        Ok(WTable {
            r,
            values: Vec::new(),
        })
    }

    fn at(&self, n: isize) -> BigInt {
        if n < 0 {
            BigInt::zero()
        } else {
            self.values[n as usize].clone()
        }
    }

    pub fn get(&mut self, n: i64) -> BigCount {
        if n < 0 {
            return BigCount::zero();
        }
        let n = n as usize;
        let r = self.r as isize;
        while self.values.len() <= n {
            let m = self.values.len();
            let next = match m {
                0 => BigInt::one(),
                1 => BigInt::from(u8::from(self.r != 1)),
                _ => {
                    let m = m as isize;
                    (self.at(m - 1) << 1u8) - self.at(m - r) + self.at(m - r - 1)
                }
            };
            self.values.push(next);
        }
        BigCount::from_coeff(&self.values[n])
    }
}

/// `W(n, r)` from the recursion `W(n) = 2W(n-1) - W(n-r) + W(n-r-1)`; zero
/// for negative `n`.
pub fn w_count(n: i64, r: usize) -> Result<BigCount, Error> {
    Ok(WTable::new(r)?.get(n))
}

/// `N(n, r, k)`: the coefficient of `x^(n-kr)` in `W_r(x)^(k+1)`.
pub fn count_exact_runs(q: CountTriple) -> BigCount {
    let Some(m) = q.slack() else {
        return BigCount::zero();
    };
    let w = w_series(q.r, m).expect("r validated by CountTriple");
    let p = series_pow(&w, q.k as u64 + 1);
    BigCount::from_coeff(p.coeff(m))
}

/// `M(n, r, k)`: words of B₀(n) with exactly `k` runs of 1s of length `r`.
/// Equal to `N(n, r + 1, k)`.
pub fn count_success_runs(q: CountTriple) -> BigCount {
    count_exact_runs(CountTriple { r: q.r + 1, ..q })
}

/// `N(n, r, k)` over all binary words, not only those starting with 0.
pub fn count_all_words(q: CountTriple) -> BigCount {
    double_unless_empty(q.n, count_exact_runs(q))
}

/// `M(n, r, k)` over all binary words.
pub fn count_all_words_success(q: CountTriple) -> BigCount {
    double_unless_empty(q.n, count_success_runs(q))
}

// Complementation swaps the words starting with 0 and those starting with
// 1 and preserves every run length. The empty word is its own complement.
fn double_unless_empty(n: usize, c: BigCount) -> BigCount {
    if n == 0 {
        c
    } else {
        BigCount(c.0 << 1u8)
    }
}

/// An exact probability `numerator / 2^denominator_exponent`, unreduced.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DyadicProb {
    pub numerator: BigCount,
    pub denominator_exponent: u64,
}

impl DyadicProb {
    /// Nearest `f64` (up to one extra rounding for numerators above 64 bits).
    pub fn to_f64(&self) -> f64 {
        let num = self.numerator.value();
        let bits = num.bits();
        let shift = bits.saturating_sub(64);
        let mantissa = (num >> shift)
            .to_u64()
            .expect("at most 64 bits after shift");
        let exp = shift as i64 - self.denominator_exponent as i64;
        scale_pow2(mantissa as f64, exp)
    }
}

/// `x · 2^exp`, stepping through the exponent so that intermediate powers
/// stay finite.
fn scale_pow2(mut x: f64, mut exp: i64) -> f64 {
    const STEP: i64 = 1000;
    while exp > STEP {
        x *= 2f64.powi(STEP as i32);
        exp -= STEP;
    }
    while exp < -STEP {
        x *= 2f64.powi(-STEP as i32);
        exp += STEP;
    }
    x * 2f64.powi(exp as i32)
}

/// Exact distribution of `K_n^r`, the number of runs of length `r` in a
/// uniformly random word of B₀(n). Entry `k` is `N(n, r, k) / 2^(n-1)`
/// for `k = 0 ..= n / r`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Pmf {
    pub n: usize,
    pub r: usize,
    pub entries: Vec<DyadicProb>,
}

impl Pmf {
    pub fn max_k(&self) -> usize {
        self.entries.len() - 1
    }

    pub fn numerator_sum(&self) -> BigCount {
        self.entries.iter().map(|e| &e.numerator).sum()
    }

    /// Whether the entries sum to exactly 1.
    pub fn is_normalized(&self) -> bool {
        self.entries
            .iter()
            .all(|e| e.denominator_exponent == self.n as u64 - 1)
            && self.numerator_sum() == BigCount::pow2(self.n as u64 - 1)
    }
}

fn check_pmf_args(n: usize, r: usize) -> Result<Polynomial, Error> {
    let denom = Polynomial::w_denominator(r)?;
    if n == 0 {
        return Err(Error::EmptyDistribution);
    }
    Ok(denom)
}

/// The distribution of `K_n^r`.
///
/// Expands `W_r` once at order `n`, then walks `P_k = W_r^(k+1)` upward,
/// reading `N(n, r, k)` off coefficient `n - kr` of `P_k`. Each step
/// multiplies by `W_r` in its rational form (times `1 - x`, then divided
/// by the four-term denominator), so a step costs O(n) big-integer
/// additions rather than a full Cauchy product. `P_k` is truncated to
/// order `n - kr` as it goes since higher terms are never read again.
pub fn pmf(n: usize, r: usize) -> Result<Pmf, Error> {
    let denom = check_pmf_args(n, r)?;
    let numer = Polynomial::w_numerator();
    pmf_with(n, r, |p| {
        p.mul_poly(&numer)
            .div_poly(&denom)
            .expect("unit constant term")
    })
}

/// Same distribution as [`pmf`], stepping with full truncated Cauchy
/// products by the expanded `W_r`. Quadratic per step; used to cross-check.
pub fn pmf_cauchy(n: usize, r: usize) -> Result<Pmf, Error> {
    check_pmf_args(n, r)?;
    let w = w_series(r, n)?;
    pmf_with(n, r, |p| {
        let mut w = w.clone();
        w.truncate(p.order());
        series_mul(p, &w).expect("orders match")
    })
}

fn pmf_with(
    n: usize,
    r: usize,
    mut times_w: impl FnMut(&TruncatedSeries) -> TruncatedSeries,
) -> Result<Pmf, Error> {
    let max_k = n / r;
    let exp = n as u64 - 1;
    let mut power = w_series(r, n)?;
    let mut entries = Vec::with_capacity(max_k + 1);
    for k in 0..=max_k {
        let m = n - k * r;
        power.truncate(m);
        entries.push(DyadicProb {
            numerator: BigCount::from_coeff(power.coeff(m)),
            denominator_exponent: exp,
        });
        if k < max_k {
            power.truncate(m - r);
            power = times_w(&power);
        }
    }
    Ok(Pmf { n, r, entries })
}
