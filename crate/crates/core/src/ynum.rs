//! The numbers `y(n, λ)` by four independent routes.
//!
//! Every evaluator is generic over [`Scalar`], so passing
//! [`RationalFunction::var()`] yields `y(n, λ)` as a rational function of λ.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed};
use serde::Serialize;

use crate::exact::{
    binomial, powi, sign, Polynomial, Rational, RationalFunction, Scalar,
};
use crate::special::{bernoulli_numbers, harmonic, stirling1, StirlingMethod};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum YError {
    #[error("λ = {0} is a pole of y(n, λ); λ must avoid 0 and 1")]
    Pole(String),
    #[error("OEIS A025529 mismatch at n = {n}: formula gives {formula}, leading coefficient is {leading}")]
    OeisMismatch { n: usize, formula: BigInt, leading: BigInt },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum YMethod {
    Direct,
    Algorithm1,
    Recurrence,
    Genfun,
}

/// A computed `y(n, λ)` tagged with the route that produced it.
#[derive(Debug, Clone, PartialEq)]
pub struct YValue<F: Scalar = Rational> {
    pub n: usize,
    pub lambda: F,
    pub value: F,
    pub method: YMethod,
}

pub(crate) fn check_lambda<F: Scalar>(lambda: &F) -> Result<(), YError> {
    if lambda.is_zero() || lambda.is_one() {
        Err(YError::Pole(lambda.to_string()))
    } else {
        Ok(())
    }
}

/// The defining finite sum
/// `Σ_{j=0}^{n} (-1)^n / ((j+1) λ^{j+1} (λ-1)^{n+1-j})`.
///
/// ```
/// use finsum::exact::Rational;
/// use finsum::ynum::y_direct;
/// assert_eq!(y_direct(0, &Rational::from(2)).unwrap(), Rational::new(1, 2));
/// assert_eq!(y_direct(1, &Rational::new(1, 2)).unwrap(), Rational::from(-4));
/// assert!(y_direct(3, &Rational::from(1)).is_err());
/// ```
pub fn y_direct<F: Scalar>(n: usize, lambda: &F) -> Result<F, YError> {
    check_lambda(lambda)?;
    let lm1 = lambda.clone() - F::one();
    let ni = n as i64;
    let mut s = F::zero();
    for j in 0..=ni {
        let den = F::from_int(j + 1) * powi(lambda, j + 1) * powi(&lm1, ni + 1 - j);
        s = s + den.inv().unwrap();
    }
    Ok(if ni % 2 == 0 { s } else { -s })
}

/// `y(n, λ)` as a canonical rational function.
///
/// Pulls the common denominator `λ^{n+1} (λ-1)^{n+1}` out of the sum first,
/// so only one reduction happens.
///
/// ```
/// use finsum::ynum::{y_symbolic, y_factored};
/// assert_eq!(y_factored(1), "(-3*L + 1)/(2*L^2*(L - 1)^2)");
/// assert_eq!(y_symbolic(0).to_string(), "(1)/(L^2 - L)");
/// ```
pub fn y_symbolic(n: usize) -> RationalFunction {
    let l = Polynomial::<Rational>::var();
    let lm1 = Polynomial::from_ints(&[-1, 1]);
    let ni = n as i64;
    let mut num = Polynomial::zero();
    for j in 0..=ni {
        let term = &l.pow((ni - j) as u32) * &lm1.pow(j as u32);
        num = &num + &term.scale(&Rational::new(sign(ni), j + 1));
    }
    let den = &l.pow(n as u32 + 1) * &lm1.pow(n as u32 + 1);
    RationalFunction::new(num, den)
}

/// Formats `y(n, λ)` with its denominator kept factored, as
/// `(num)/(c*L^{n+1}*(L - 1)^{n+1})`.
pub fn y_factored(n: usize) -> String {
    let y = y_symbolic(n);
    let l = Polynomial::<Rational>::var();
    let lm1 = Polynomial::from_ints(&[-1, 1]);
    let base = &l.pow(n as u32 + 1) * &lm1.pow(n as u32 + 1);
    let (c, rem) = y.den().div_rem(&base);
    debug_assert!(rem.is_zero() && c.degree() == Some(0));
    let c = c.coeff(0);
    let mut den = String::new();
    if c != 1 {
        den.push_str(&format!("{c}*"));
    }
    let e = n + 1;
    if e == 1 {
        den.push_str("L*(L - 1)");
    } else {
        den.push_str(&format!("L^{e}*(L - 1)^{e}"));
    }
    format!("({})/({den})", y.num().display_desc("L"))
}

/// Inner sums `Σ_{n=0}^{v} B_n S₁(v, n)` for `v = 0..=m`.
fn bernoulli_stirling_sums(m: usize, method: StirlingMethod) -> Vec<Rational> {
    let b = bernoulli_numbers(m);
    let dot = |row: &[Rational]| row.iter().zip(&b).map(|(s, b)| s * b).sum();
    match method {
        StirlingMethod::Recurrence => {
            // grow the row S₁(v, ·) one v at a time
            let mut row = vec![Rational::from(1)];
            let mut out = Vec::with_capacity(m + 1);
            for v in 0..=m {
                out.push(dot(&row));
                let mut next = vec![Rational::from(0); v + 2];
                for (k, c) in row.iter().enumerate() {
                    next[k + 1] += c;
                    next[k] -= &(c * &Rational::from(v as u64));
                }
                row = next;
            }
            out
        }
        StirlingMethod::Formula => (0..=m)
            .map(|v| dot(&(0..=v).map(|k| stirling1(v, k, method)).collect::<Vec<_>>()))
            .collect(),
    }
}

/// The Bernoulli-Stirling double sum
///
/// ```text
/// y(m, λ) = Σ_{v=0}^{m} Σ_{n=0}^{v} (-1)^{v-m} (λ-1)^{v-m-1} B_n S₁(v, n) / (λ^{v+1} v!)
/// ```
///
/// iterated as the reference algorithm does, with Stirling numbers from the
/// chosen route.
pub fn y_algorithm1_with<F: Scalar>(
    m: usize,
    lambda: &F,
    method: StirlingMethod,
) -> Result<F, YError> {
    check_lambda(lambda)?;
    let inner = bernoulli_stirling_sums(m, method);
    let lm1 = lambda.clone() - F::one();
    let mi = m as i64;
    // (λ-1)^{v-m-1} / λ^{v+1}, stepped by (λ-1)/λ
    let step = lm1.clone() * lambda.inv().expect("λ ≠ 0");
    let mut pw = powi(&lm1, -mi - 1) * lambda.inv().expect("λ ≠ 0");
    let mut fact = Rational::from(1);
    let mut y = F::zero();
    for (v, s) in inner.iter().enumerate() {
        if v > 0 {
            fact *= &Rational::from(v);
            pw = pw * &step;
        }
        let c = F::from_rational(&(Rational::from(sign(v as i64 - mi)) * s / &fact));
        y = y + c * &pw;
    }
    Ok(y)
}

/// [`y_algorithm1_with`] using the Stirling recurrence.
///
/// ```
/// use finsum::exact::{Rational, RationalFunction};
/// use finsum::ynum::{y_algorithm1, y_symbolic};
/// assert_eq!(y_algorithm1(2, &Rational::from(2)).unwrap(), Rational::new(2, 3));
/// assert_eq!(y_algorithm1(1, &RationalFunction::var()).unwrap(), y_symbolic(1));
/// ```
pub fn y_algorithm1<F: Scalar>(m: usize, lambda: &F) -> Result<F, YError> {
    y_algorithm1_with(m, lambda, StirlingMethod::Recurrence)
}

/// `y(0..=n_max, λ)` from `y(0) = 1/(λ(λ-1))` and
/// `y(n) = ((-1)^n / ((n+1) λ^{n+1}) - y(n-1)) / (λ-1)`.
///
/// ```
/// use finsum::exact::Rational;
/// use finsum::ynum::y_recurrence_sequence;
/// let ys = y_recurrence_sequence(2, &Rational::from(2)).unwrap();
/// assert_eq!(ys, vec![Rational::new(1, 2), Rational::new(-5, 8), Rational::new(2, 3)]);
/// ```
pub fn y_recurrence_sequence<F: Scalar>(n_max: usize, lambda: &F) -> Result<Vec<F>, YError> {
    check_lambda(lambda)?;
    let lm1 = lambda.clone() - F::one();
    let inv_lm1 = lm1.inv().unwrap();
    let mut out = vec![(lambda.clone() * &lm1).inv().unwrap()];
    let mut lam_pow = lambda.clone();
    for n in 1..=n_max as i64 {
        lam_pow = lam_pow * lambda;
        let t = (F::from_int(n + 1) * &lam_pow).inv().unwrap() * F::from_int(sign(n));
        let next = (t - out.last().unwrap()) * &inv_lm1;
        out.push(next);
    }
    Ok(out)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum SpecialLambda {
    /// λ = -1: `y(n, -1) = (1 / (2(n+1))) Σ_j 1 / C(n, j)`.
    NegOne,
    /// λ = 1/2: `y(n, 1/2) = 2^{n+2} Σ_j (-1)^{j+1} / (j+1)`.
    Half,
}

impl SpecialLambda {
    pub fn lambda(self) -> Rational {
        match self {
            SpecialLambda::NegOne => Rational::from(-1),
            SpecialLambda::Half => Rational::new(1, 2),
        }
    }
}

/// Closed forms at λ = -1 and λ = 1/2.
///
/// ```
/// use finsum::exact::Rational;
/// use finsum::ynum::{y_closed_special, SpecialLambda};
/// assert_eq!(y_closed_special(2, SpecialLambda::NegOne), Rational::new(5, 12));
/// assert_eq!(y_closed_special(2, SpecialLambda::Half), Rational::new(-40, 3));
/// ```
pub fn y_closed_special(n: usize, which: SpecialLambda) -> Rational {
    let ni = n as i64;
    match which {
        SpecialLambda::NegOne => {
            let s: Rational = (0..=ni).map(|j| binomial(ni, j).recip()).sum();
            s / Rational::from(2 * (ni + 1))
        }
        SpecialLambda::Half => {
            let s: Rational = (0..=ni).map(|j| Rational::new(sign(j + 1), j + 1)).sum();
            s * Rational::from(2).pow(ni + 2)
        }
    }
}

/// One term of A025529 with both of its derivations.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct OeisTerm {
    pub n: usize,
    /// `lcm(1..n) H_n`
    #[serde(serialize_with = "ser_big")]
    pub formula: BigInt,
    /// `|leading numerator coefficient of y(n-1, λ)|`
    #[serde(serialize_with = "ser_big")]
    pub leading: BigInt,
}

fn ser_big<S: serde::Serializer>(v: &BigInt, s: S) -> Result<S::Ok, S::Error> {
    s.collect_str(v)
}

impl fmt::Display for OeisTerm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.formula)
    }
}

/// `lcm(1, …, n)`.
pub fn lcm_upto(n: usize) -> BigInt {
    (1..=n as u64).fold(BigInt::one(), |a, k| a.lcm(&BigInt::from(k)))
}

/// Terms `a(1..=n_max)` of A025529, each checked against the leading
/// coefficient of the numerator of `y(n-1, λ)`.
///
/// ```
/// use finsum::ynum::oeis_a025529;
/// let a: Vec<String> = oeis_a025529(6).unwrap().iter().map(|t| t.to_string()).collect();
/// assert_eq!(a.join(" "), "1 3 11 25 137 147");
/// ```
pub fn oeis_a025529(n_max: usize) -> Result<Vec<OeisTerm>, YError> {
    let mut out = Vec::with_capacity(n_max);
    for n in 1..=n_max {
        let f = Rational::from(lcm_upto(n)) * harmonic(n);
        debug_assert!(f.is_integer());
        let formula = f.numer().clone();
        let y = y_symbolic(n - 1);
        let leading = y.num().leading().expect("y is never zero").numer().abs();
        if formula != leading {
            return Err(YError::OeisMismatch { n, formula, leading });
        }
        out.push(OeisTerm { n, formula, leading });
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn table_rows() {
        let want = [
            "(1)/(L*(L - 1))",
            "(-3*L + 1)/(2*L^2*(L - 1)^2)",
            "(11*L^2 - 7*L + 2)/(6*L^3*(L - 1)^3)",
            "(-25*L^3 + 23*L^2 - 13*L + 3)/(12*L^4*(L - 1)^4)",
            "(137*L^4 - 163*L^3 + 137*L^2 - 63*L + 12)/(60*L^5*(L - 1)^5)",
        ];
        for (n, w) in want.iter().enumerate() {
            assert_eq!(y_factored(n), *w);
        }
    }

    #[test]
    fn routes_agree_symbolically() {
        let l = RationalFunction::var();
        let rec = y_recurrence_sequence(6, &l).unwrap();
        for n in 0..=6 {
            let s = y_symbolic(n);
            assert_eq!(y_direct(n, &l).unwrap(), s);
            assert_eq!(y_algorithm1(n, &l).unwrap(), s);
            assert_eq!(rec[n], s);
        }
    }

    #[test]
    fn half_sequence() {
        let h = Rational::new(1, 2);
        let ys = y_recurrence_sequence(3, &h).unwrap();
        let want = [Rational::from(-4), Rational::from(-4), Rational::new(-40, 3), Rational::new(-56, 3)];
        assert_eq!(ys, want);
        for n in 0..=3 {
            assert_eq!(y_direct(n, &h).unwrap(), want[n]);
        }
    }
}
