//! Exact scalars, polynomials, rational functions and truncated Laurent series.

mod poly;
mod ratfun;
mod rational;
mod series;
mod valuation;

use std::fmt::{Debug, Display};
use std::ops::{Add, Mul, Neg, Sub};

pub use poly::Polynomial;
pub use ratfun::RationalFunction;
pub use rational::{ParseRationalError, Rational};
pub use series::{
    series_compose, series_exp, series_geometric, series_log_one_plus, LaurentSeries, SeriesError,
    EXACT,
};
pub use valuation::{padic_valuation, PadicValuation, ValuationError};

/// A field element usable as a polynomial or series coefficient.
///
/// Implemented by [`Rational`] and [`RationalFunction`], so the same series
/// code serves numeric and symbolic λ.
pub trait Scalar:
    Clone
    + PartialEq
    + Debug
    + Display
    + Send
    + Sync
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Neg<Output = Self>
    + for<'a> Add<&'a Self, Output = Self>
    + for<'a> Sub<&'a Self, Output = Self>
    + for<'a> Mul<&'a Self, Output = Self>
{
    fn zero() -> Self;
    fn one() -> Self;
    fn is_zero(&self) -> bool;
    /// Multiplicative inverse, `None` for zero.
    fn inv(&self) -> Option<Self>;
    fn from_rational(q: &Rational) -> Self;

    fn from_int(k: i64) -> Self {
        Self::from_rational(&Rational::from(k))
    }

    fn is_one(&self) -> bool {
        *self == Self::one()
    }

    /// Splits off a leading minus sign for display inside a sum.
    ///
    /// Returns `(negative, text)` where `text` is safe to follow a `*`.
    fn signed_parts(&self) -> (bool, String);
}

/// `x^k` for any integer `k`. Panics on a negative power of zero.
pub fn powi<F: Scalar>(x: &F, k: i64) -> F {
    let (mut base, mut e) = if k < 0 {
        (x.inv().expect("zero to a negative power"), k.unsigned_abs())
    } else {
        (x.clone(), k as u64)
    };
    let mut acc = F::one();
    while e > 0 {
        if e & 1 == 1 {
            acc = acc * &base;
        }
        e >>= 1;
        if e > 0 {
            base = base.clone() * &base;
        }
    }
    acc
}

/// `n!` as a rational.
pub fn factorial(n: u64) -> Rational {
    let mut acc = num_bigint::BigInt::from(1);
    for k in 2..=n {
        acc *= k;
    }
    Rational::from(acc)
}

/// `C(n, k)`, zero outside `0 <= k <= n`.
pub fn binomial(n: i64, k: i64) -> Rational {
    if k < 0 || n < 0 || k > n {
        return Rational::from(0);
    }
    let k = k.min(n - k);
    let mut acc = num_bigint::BigInt::from(1);
    for i in 0..k {
        acc *= n - i;
        acc /= i + 1;
    }
    Rational::from(acc)
}

/// `C(n, k)` for any integer `n`, as a falling factorial over `k!`.
pub fn binomial_general(n: i64, k: i64) -> Rational {
    if k < 0 {
        return Rational::from(0);
    }
    let mut acc = Rational::from(1);
    for i in 0..k {
        acc = acc * Rational::new(n - i, i + 1);
    }
    acc
}

/// `(-1)^k`.
pub fn sign(k: i64) -> i64 {
    if k.rem_euclid(2) == 0 {
        1
    } else {
        -1
    }
}
