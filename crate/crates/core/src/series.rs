//! Exact truncated power series over arbitrary-precision integers.
//!
//! A [`TruncatedSeries`] of order `m` holds the coefficients of `x^0 ..= x^m`.
//! Binary operations require both operands to have the same order and never
//! resize; shrinking is only done through [`TruncatedSeries::truncate`].

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::error::Error;

/// A dense polynomial with integer coefficients, lowest degree first.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Polynomial {
    coeffs: Vec<BigInt>,
}

impl Polynomial {
    pub fn new(coeffs: Vec<BigInt>) -> Self {
        Polynomial { coeffs }
    }

    pub fn from_i64(coeffs: &[i64]) -> Self {
        Polynomial {
            coeffs: coeffs.iter().map(|&c| BigInt::from(c)).collect(),
        }
    }

    /// Degree ignoring trailing zeros; `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.iter().rposition(|c| !c.is_zero())
    }

    pub fn coeff(&self, i: usize) -> BigInt {
        self.coeffs.get(i).cloned().unwrap_or_default()
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    /// Nonzero terms as `(power, coefficient)`.
    fn terms(&self) -> impl Iterator<Item = (usize, &BigInt)> {
        self.coeffs.iter().enumerate().filter(|(_, c)| !c.is_zero())
    }

    /// `1 - x`, the numerator of `W_r(x)`.
    pub fn w_numerator() -> Self {
        Polynomial::from_i64(&[1, -1])
    }

    /// `1 - 2x + x^r - x^(r+1)`, the denominator of `W_r(x)`.
    pub fn w_denominator(r: usize) -> Result<Self, Error> {
        if r == 0 {
            return Err(Error::ZeroRunLength);
        }
        let mut coeffs = vec![BigInt::zero(); r + 2];
        coeffs[0] += 1;
        coeffs[1] -= 2;
        coeffs[r] += 1;
        coeffs[r + 1] -= 1;
        Ok(Polynomial { coeffs })
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TruncatedSeries {
    coeffs: Vec<BigInt>,
}

impl TruncatedSeries {
    pub fn zero(order: usize) -> Self {
        TruncatedSeries {
            coeffs: vec![BigInt::zero(); order + 1],
        }
    }

    pub fn one(order: usize) -> Self {
        let mut s = Self::zero(order);
        s.coeffs[0] = BigInt::one();
        s
    }

    /// Series whose order is `coeffs.len() - 1`.
    ///
    /// Panics on an empty vector: there is no series of order -1.
    pub fn from_coeffs(coeffs: Vec<BigInt>) -> Self {
        assert!(
            !coeffs.is_empty(),
            "a truncated series needs at least one coefficient"
        );
        TruncatedSeries { coeffs }
    }

    /// The polynomial `p`, truncated (or zero-padded) to `order`.
    pub fn from_polynomial(p: &Polynomial, order: usize) -> Self {
        let mut s = Self::zero(order);
        for (i, c) in p.terms().take_while(|(i, _)| *i <= order) {
            s.coeffs[i] = c.clone();
        }
        s
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<BigInt> {
        self.coeffs
    }

    /// Coefficient of `x^i`. Panics if `i` is beyond the order.
    pub fn coeff(&self, i: usize) -> &BigInt {
        &self.coeffs[i]
    }

    /// Drops every term above `order`. Panics if `order` exceeds the
    /// current order.
    pub fn truncate(&mut self, order: usize) {
        assert!(
            order <= self.order(),
            "cannot extend a series from order {} to {order}",
            self.order()
        );
        self.coeffs.truncate(order + 1);
    }

    /// Product with a polynomial at the same order.
    pub fn mul_poly(&self, p: &Polynomial) -> TruncatedSeries {
        let order = self.order();
        let mut out = Self::zero(order);
        for (j, c) in p.terms().take_while(|(j, _)| *j <= order) {
            for (i, a) in self.coeffs[..=order - j].iter().enumerate() {
                add_scaled(&mut out.coeffs[i + j], c, a);
            }
        }
        out
    }

    /// The unique series `s` with `self = p · s`, at the same order.
    /// `p` must have constant term `±1` so that `s` stays integral.
    pub fn div_poly(&self, p: &Polynomial) -> Result<TruncatedSeries, Error> {
        let lead = p.coeff(0);
        let negate = if lead.is_one() {
            false
        } else if (-&lead).is_one() {
            true
        } else {
            return Err(Error::NonUnitConstant(lead));
        };
        let tail: Vec<(usize, &BigInt)> = p.terms().filter(|(j, _)| *j > 0).collect();
        let mut out: Vec<BigInt> = Vec::with_capacity(self.coeffs.len());
        for (i, a) in self.coeffs.iter().enumerate() {
            let mut acc = a.clone();
            for &(j, c) in tail.iter().take_while(|(j, _)| *j <= i) {
                add_scaled(&mut acc, &-c, &out[i - j]);
            }
            if negate {
                acc = -acc;
            }
            out.push(acc);
        }
        Ok(TruncatedSeries { coeffs: out })
    }
}

/// `acc += c * a`, skipping the allocation for the common `c = ±1, ±2`.
fn add_scaled(acc: &mut BigInt, c: &BigInt, a: &BigInt) {
    if c.is_one() {
        *acc += a;
    } else if c.is_negative() && c.magnitude().is_one() {
        *acc -= a;
    } else if c == &BigInt::from(2) {
        *acc += a;
        *acc += a;
    } else if c == &BigInt::from(-2) {
        *acc -= a;
        *acc -= a;
    } else {
        *acc += c * a;
    }
}

/// Expands `numer / denom` to `order` via the linear recurrence induced by
/// the denominator.
pub fn series_from_rational(
    numer: &Polynomial,
    denom: &Polynomial,
    order: usize,
) -> Result<TruncatedSeries, Error> {
    TruncatedSeries::from_polynomial(numer, order).div_poly(denom)
}

/// `W_r(x) = (1 - x) / (1 - 2x + x^r - x^(r+1))`, whose coefficient of
/// `x^n` counts the words of B₀(n) free of runs of length `r`.
pub fn w_series(r: usize, order: usize) -> Result<TruncatedSeries, Error> {
    series_from_rational(
        &Polynomial::w_numerator(),
        &Polynomial::w_denominator(r)?,
        order,
    )
}

/// Truncated Cauchy product.
pub fn series_mul(a: &TruncatedSeries, b: &TruncatedSeries) -> Result<TruncatedSeries, Error> {
    if a.order() != b.order() {
        return Err(Error::OrderMismatch {
            left: a.order(),
            right: b.order(),
        });
    }
    let order = a.order();
    let mut out = TruncatedSeries::zero(order);
    for (i, ai) in a.coeffs.iter().enumerate() {
        if ai.is_zero() {
            continue;
        }
        for (j, bj) in b.coeffs[..=order - i].iter().enumerate() {
            if !bj.is_zero() {
                out.coeffs[i + j] += ai * bj;
            }
        }
    }
    Ok(out)
}

/// `a^e` by binary powering; `a^0` is the series 1.
pub fn series_pow(a: &TruncatedSeries, mut e: u64) -> TruncatedSeries {
    let mut result = TruncatedSeries::one(a.order());
    let mut base = a.clone();
    while e > 0 {
        if e & 1 == 1 {
            result = series_mul(&result, &base).expect("orders match");
        }
        e >>= 1;
        if e > 0 {
            base = series_mul(&base, &base).expect("orders match");
        }
    }
    result
}
