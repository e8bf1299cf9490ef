//! Generating functions as truncated formal series.
//!
//! Radius-of-convergence conditions play no role here: every identity is a
//! statement about coefficients, so only the poles λ ∈ {0, 1} are rejected.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::exact::{
    binomial, series_log_one_plus, LaurentSeries, Rational, RationalFunction, Scalar, SeriesError,
};
use crate::ynum::{check_lambda, YError};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum GenFunError {
    #[error(transparent)]
    Pole(#[from] YError),
    #[error(transparent)]
    Series(#[from] SeriesError),
    #[error("invalid parameter: {0}")]
    Parameter(String),
}

/// `w = (λ-1)/λ`, the scale that appears inside every logarithm below.
fn ratio<F: Scalar>(lambda: &F) -> F {
    (lambda.clone() - F::one()) * lambda.inv().unwrap()
}

/// `z^2 - z` as an exact series.
fn z_z_minus_one<F: Scalar>() -> LaurentSeries<F> {
    LaurentSeries::exact(1, vec![-F::one(), F::one()])
}

/// `G(z, λ) = ln(1 - ((λ-1)/λ) z) / (z (z - 1))` through `z^t`.
///
/// Its `z^n` coefficient is `(1-λ)^{n+2} y(n, λ)`.
///
/// ```
/// use finsum::exact::Rational;
/// use finsum::genfun::series_g;
/// let g = series_g(&Rational::from(2), 3).unwrap();
/// assert_eq!(g.coeff(0).unwrap(), Rational::new(1, 2));
/// assert_eq!(g.coeff(1).unwrap(), Rational::new(5, 8));
/// ```
pub fn series_g<F: Scalar>(lambda: &F, t: i64) -> Result<LaurentSeries<F>, GenFunError> {
    check_lambda(lambda)?;
    let u = LaurentSeries::monomial(-ratio(lambda), 1);
    let log = series_log_one_plus(&u, t + 1)?;
    Ok(log.div_through(&z_z_minus_one(), t)?)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum SpecialG {
    /// `G(z, -1)`, coefficients `2^{n+2} y(n, -1)`.
    G1,
    /// `G(z, 2)`, coefficients `(-1)^n y(n, 2)`.
    G2,
    /// `G(z, 1/2)`, coefficients `y(n, 1/2) / 2^{n+2}`.
    G3,
}

impl SpecialG {
    pub fn lambda(self) -> Rational {
        match self {
            SpecialG::G1 => Rational::from(-1),
            SpecialG::G2 => Rational::from(2),
            SpecialG::G3 => Rational::new(1, 2),
        }
    }
}

pub fn series_g_special(which: SpecialG, t: i64) -> LaurentSeries {
    series_g(&which.lambda(), t).expect("special λ values avoid the poles")
}

/// Rising factorial `(a)^{m̄} = a (a+1) ⋯ (a+m-1)`.
pub fn rising(a: &Rational, m: usize) -> Rational {
    (0..m).map(|j| a + &Rational::from(j)).product()
}

/// `₂F₁(a, b; c; s z)` through `z^t`.
///
/// ```
/// use finsum::exact::Rational;
/// use finsum::genfun::hyper2f1_series;
/// let one = Rational::from(1);
/// let f = hyper2f1_series(&one, &one, &Rational::from(2), &one, 4).unwrap();
/// assert_eq!(f.coeff(3).unwrap(), Rational::new(1, 4));
/// ```
pub fn hyper2f1_series<F: Scalar>(
    a: &Rational,
    b: &Rational,
    c: &Rational,
    arg_scale: &F,
    t: i64,
) -> Result<LaurentSeries<F>, GenFunError> {
    if c.is_integer() && *c <= 0 {
        return Err(GenFunError::Parameter(format!("c = {c} is a nonpositive integer")));
    }
    let mut coeffs = Vec::new();
    let mut ratio = Rational::from(1);
    let mut pow = F::one();
    for m in 0..=t.max(-1) {
        if m > 0 {
            let k = Rational::from(m - 1);
            ratio = ratio * (a + &k) * (b + &k) / ((c + &k) * Rational::from(m));
            pow = pow * arg_scale;
        }
        coeffs.push(F::from_rational(&ratio) * &pow);
    }
    Ok(LaurentSeries::new(0, coeffs, t))
}

/// The hypergeometric form of `G`:
/// `((1-λ) / (λ (z-1))) · ₂F₁(1, 1; 2; ((λ-1)/λ) z)`.
pub fn series_g_hypergeometric<F: Scalar>(
    lambda: &F,
    t: i64,
) -> Result<LaurentSeries<F>, GenFunError> {
    check_lambda(lambda)?;
    let one = Rational::from(1);
    let f = hyper2f1_series(&one, &one, &Rational::from(2), &ratio(lambda), t)?;
    let pre = (F::one() - lambda.clone()) * lambda.inv().unwrap();
    let zm1 = LaurentSeries::exact(0, vec![-F::one(), F::one()]);
    Ok(f.scale(&pre).div_through(&zm1, t)?)
}

/// The hypergeometric form with the prefactor `(1-λ) z / (λ (z-1))` and
/// argument `((1-λ)/λ) z`, as it is sometimes stated. It differs from `G`
/// already in the constant term.
pub fn series_g_hypergeometric_printed<F: Scalar>(
    lambda: &F,
    t: i64,
) -> Result<LaurentSeries<F>, GenFunError> {
    check_lambda(lambda)?;
    let one = Rational::from(1);
    let f = hyper2f1_series(&one, &one, &Rational::from(2), &-ratio(lambda), t)?;
    let pre = (F::one() - lambda.clone()) * lambda.inv().unwrap();
    let zm1 = LaurentSeries::exact(0, vec![-F::one(), F::one()]);
    Ok(f.scale(&pre).shift(1).div_through(&zm1, t)?)
}

/// The Leibnitz generating function
/// `(ln(1-u) + ln(1-xu)) / ((1-u)(1-xu) - 1)` through `u^t`.
///
/// Its `u^m` coefficient is `L_m(x) = Σ_l 𝐥(m, l) x^l`.
///
/// ```
/// use finsum::exact::Rational;
/// use finsum::genfun::leibnitz_series;
/// let s = leibnitz_series(&Rational::from(0), 3).unwrap();
/// assert_eq!(s.coeff(3).unwrap(), Rational::new(1, 4));
/// ```
pub fn leibnitz_series<F: Scalar>(x: &F, t: i64) -> Result<LaurentSeries<F>, GenFunError> {
    let lead = F::one() + x.clone();
    let shift = if lead.is_zero() { 2 } else { 1 };
    let l1 = series_log_one_plus(&LaurentSeries::monomial(-F::one(), 1), t + shift)?;
    let l2 = series_log_one_plus(&LaurentSeries::monomial(-x.clone(), 1), t + shift)?;
    let den = LaurentSeries::exact(1, vec![-lead, x.clone()]);
    Ok((&l1 + &l2).div_through(&den, t)?)
}

/// Both sides of the Leibnitz functional equation
///
/// ```text
/// -w (x + 1 - x w z) 𝒢(x, w z) = (z - 1) G(z, λ) + x (x z - 1) G(x z, λ),   w = (λ-1)/λ
/// ```
///
/// through `z^t`.
pub fn leibnitz_functional_sides<F: Scalar>(
    x: &F,
    lambda: &F,
    t: i64,
) -> Result<(LaurentSeries<F>, LaurentSeries<F>), GenFunError> {
    leibnitz_sides_with(x, lambda, x, t)
}

/// The same equation with `x + 1 - w z` in place of `x + 1 - x w z` on the
/// left. The two agree only at `x = 1`.
pub fn leibnitz_functional_sides_printed<F: Scalar>(
    x: &F,
    lambda: &F,
    t: i64,
) -> Result<(LaurentSeries<F>, LaurentSeries<F>), GenFunError> {
    leibnitz_sides_with(x, lambda, &F::one(), t)
}

fn leibnitz_sides_with<F: Scalar>(
    x: &F,
    lambda: &F,
    slope: &F,
    t: i64,
) -> Result<(LaurentSeries<F>, LaurentSeries<F>), GenFunError> {
    check_lambda(lambda)?;
    let w = ratio(lambda);
    let gl = leibnitz_series(x, t)?.scale_var(&w);
    let lin = LaurentSeries::exact(0, vec![x.clone() + F::one(), -(w.clone() * slope)]);
    let lhs = (&lin * &gl).scale(&-w).truncate(t);
    let g = series_g(lambda, t)?;
    let zm1 = LaurentSeries::exact(0, vec![-F::one(), F::one()]);
    let xz1 = LaurentSeries::exact(0, vec![-F::one(), x.clone()]).scale(x);
    let rhs = (&(&zm1 * &g) + &(&xz1 * &g.scale_var(x))).truncate(t);
    Ok((lhs, rhs))
}

/// `ln(1 - w z) ln(1 + w z) / (z (z - 1))` with `w = (λ-1)/λ`, through `z^t`.
///
/// ```
/// use finsum::exact::Rational;
/// use finsum::genfun::log_product_series;
/// let s = log_product_series(&Rational::from(2), 2).unwrap();
/// assert_eq!(s.valuation(), Some(1));
/// assert_eq!(s.coeff(1).unwrap(), Rational::new(1, 4));
/// ```
pub fn log_product_series<F: Scalar>(
    lambda: &F,
    t: i64,
) -> Result<LaurentSeries<F>, GenFunError> {
    check_lambda(lambda)?;
    let w = ratio(lambda);
    let a = series_log_one_plus(&LaurentSeries::monomial(-w.clone(), 1), t + 1)?;
    let b = series_log_one_plus(&LaurentSeries::monomial(w, 1), t + 1)?;
    Ok((&a * &b).div_through(&z_z_minus_one(), t)?)
}

/// A polynomial in two variables `x`, `y` with integer coefficients.
#[derive(Clone, PartialEq, Eq, Default)]
pub struct BiPoly {
    /// `(deg_x, deg_y) -> coefficient`, zero coefficients never stored.
    terms: BTreeMap<(u32, u32), BigInt>,
}

impl BiPoly {
    pub fn zero() -> Self {
        BiPoly::default()
    }

    pub fn one() -> Self {
        BiPoly::monomial(BigInt::one(), 0, 0)
    }

    pub fn monomial(c: BigInt, dx: u32, dy: u32) -> Self {
        let mut p = BiPoly::zero();
        p.add_term(c, dx, dy);
        p
    }

    fn add_term(&mut self, c: BigInt, dx: u32, dy: u32) {
        if c.is_zero() {
            return;
        }
        let e = self.terms.entry((dx, dy)).or_default();
        *e += c;
        if e.is_zero() {
            self.terms.remove(&(dx, dy));
        }
    }

    pub fn coeff(&self, dx: u32, dy: u32) -> BigInt {
        self.terms.get(&(dx, dy)).cloned().unwrap_or_default()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&(u32, u32), &BigInt)> {
        self.terms.iter()
    }

    pub fn add(&self, o: &BiPoly) -> BiPoly {
        let mut r = self.clone();
        for (&(dx, dy), c) in &o.terms {
            r.add_term(c.clone(), dx, dy);
        }
        r
    }

    /// Multiplies by the monomial `x^dx y^dy`.
    pub fn shift(&self, dx: u32, dy: u32) -> BiPoly {
        BiPoly {
            terms: self.terms.iter().map(|(&(a, b), c)| ((a + dx, b + dy), c.clone())).collect(),
        }
    }

    pub fn eval(&self, x: &Rational, y: &Rational) -> Rational {
        self.terms
            .iter()
            .map(|(&(dx, dy), c)| Rational::from(c.clone()) * x.pow(dx as i64) * y.pow(dy as i64))
            .sum()
    }

    pub fn eval_f64(&self, x: f64, y: f64) -> f64 {
        self.terms
            .iter()
            .map(|(&(dx, dy), c)| {
                c.to_string().parse::<f64>().unwrap() * x.powi(dx as i32) * y.powi(dy as i32)
            })
            .sum()
    }
}

impl fmt::Display for BiPoly {
    /// Terms by descending total degree, then descending power of `x`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let mut keys: Vec<_> = self.terms.keys().copied().collect();
        keys.sort_by_key(|k| std::cmp::Reverse((k.0 + k.1, k.0)));
        for (i, k) in keys.iter().enumerate() {
            let c = &self.terms[k];
            if i == 0 {
                if c.is_negative() {
                    write!(f, "-")?;
                }
            } else if c.is_negative() {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            let a = c.abs();
            let mut parts = Vec::new();
            if !a.is_one() || *k == (0, 0) {
                parts.push(a.to_string());
            }
            for (name, d) in [("x", k.0), ("y", k.1)] {
                match d {
                    0 => {}
                    1 => parts.push(name.to_string()),
                    _ => parts.push(format!("{name}^{d}")),
                }
            }
            write!(f, "{}", parts.join("*"))?;
        }
        Ok(())
    }
}

impl fmt::Debug for BiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

fn check_fib(m: u32, l: u32) -> Result<(), GenFunError> {
    if m + l == 0 {
        return Err(GenFunError::Parameter(
            "m = l = 0 leaves no formal inverse in t".into(),
        ));
    }
    Ok(())
}

/// The Fibonacci-type polynomial `𝒢_n(x, y; k, m, l)` from its explicit sum
///
/// ```text
/// Σ_{c=0}^{⌊n/(m+l)⌋} C(n - c(m+l-1), c) y^{mc} x^{k(n - c(m+l))}
/// ```
///
/// ```
/// use finsum::genfun::fibtype_poly;
/// assert_eq!(fibtype_poly(3, 1, 1, 1).unwrap().to_string(), "x^3 + 2*x*y");
/// ```
pub fn fibtype_poly(n: u32, k: u32, m: u32, l: u32) -> Result<BiPoly, GenFunError> {
    check_fib(m, l)?;
    let s = m + l;
    let mut p = BiPoly::zero();
    for c in 0..=n / s {
        let top = n as i64 - c as i64 * (s as i64 - 1);
        let b = binomial(top, c as i64);
        let coeff = b.numer().clone();
        p.add_term(coeff, k * (n - c * s), m * c);
    }
    Ok(p)
}

/// `𝒢_0 ..= 𝒢_n` as the `t`-coefficients of `1 / (1 - x^k t - y^m t^{m+l})`,
/// read off the linear recurrence the denominator imposes.
pub fn fibtype_series(n: u32, k: u32, m: u32, l: u32) -> Result<Vec<BiPoly>, GenFunError> {
    check_fib(m, l)?;
    let s = (m + l) as usize;
    let mut out: Vec<BiPoly> = Vec::with_capacity(n as usize + 1);
    for i in 0..=n as usize {
        let mut a = if i == 0 { BiPoly::one() } else { out[i - 1].shift(k, 0) };
        if i >= s {
            a = a.add(&out[i - s].shift(0, m));
        }
        out.push(a);
    }
    Ok(out)
}

/// What a generating-function expansion should compute.
#[derive(Debug, Clone, PartialEq)]
pub enum GenFunSpec {
    G { lambda: Rational },
    Special(SpecialG),
    Leibnitz { x: Rational },
    Hyper2F1 { a: Rational, b: Rational, c: Rational, scale: Rational },
    LogProduct { lambda: Rational },
}

impl GenFunSpec {
    pub fn expand(&self, t: i64) -> Result<LaurentSeries, GenFunError> {
        match self {
            GenFunSpec::G { lambda } => series_g(lambda, t),
            GenFunSpec::Special(w) => Ok(series_g_special(*w, t)),
            GenFunSpec::Leibnitz { x } => leibnitz_series(x, t),
            GenFunSpec::Hyper2F1 { a, b, c, scale } => hyper2f1_series(a, b, c, scale, t),
            GenFunSpec::LogProduct { lambda } => log_product_series(lambda, t),
        }
    }
}

/// `G(z, λ)` with symbolic λ.
pub fn series_g_symbolic(t: i64) -> LaurentSeries<RationalFunction> {
    series_g(&RationalFunction::var(), t).expect("the indeterminate is not a pole")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::powi;
    use crate::special::{leibnitz, LeibnitzMethod};
    use crate::ynum::{y_direct, y_symbolic};

    fn q(a: i64, b: i64) -> Rational {
        Rational::new(a, b)
    }

    #[test]
    fn definition_contract() {
        for lam in [q(2, 1), q(-1, 1), q(1, 2), q(5, 3), q(-7, 4)] {
            let g = series_g(&lam, 12).unwrap();
            let one_minus = Rational::from(1) - &lam;
            for n in 0..=12 {
                let want = one_minus.pow(n + 2) * y_direct(n as usize, &lam).unwrap();
                assert_eq!(g.coeff(n).unwrap(), want, "λ={lam} n={n}");
            }
        }
    }

    #[test]
    fn special_coefficients() {
        assert_eq!(series_g_special(SpecialG::G1, 2).coeff(0).unwrap(), q(2, 1));
        assert_eq!(series_g_special(SpecialG::G2, 2).coeff(1).unwrap(), q(5, 8));
        let g3 = series_g_special(SpecialG::G3, 2);
        assert_eq!(g3.coeffs_range(0, 2).unwrap(), vec![q(-1, 1), q(-1, 2), q(-5, 6)]);
    }

    #[test]
    fn symbolic_first_coefficient() {
        let g = series_g_symbolic(2);
        let l = RationalFunction::var();
        let one = RationalFunction::one();
        let want = (l.clone() - one.clone()) * (RationalFunction::from_int(3) * &l - one)
            * (RationalFunction::from_int(2) * l.pow(2)).inv().unwrap();
        assert_eq!(g.coeff(1).unwrap(), want);
        let via_y = powi(&(RationalFunction::one() - l), 3) * y_symbolic(1);
        assert_eq!(g.coeff(1).unwrap(), via_y);
    }

    #[test]
    fn hypergeometric_form() {
        let one = Rational::from(1);
        let w = q(3, 7);
        let f = hyper2f1_series(&one, &one, &q(2, 1), &w, 6).unwrap();
        for m in 0..=6 {
            assert_eq!(f.coeff(m).unwrap(), w.pow(m) / Rational::from(m + 1));
        }
        let f0 = hyper2f1_series(&q(1, 3), &q(5, 2), &q(7, 4), &Rational::from(0), 5).unwrap();
        assert_eq!(f0.coeffs_range(0, 5).unwrap()[0], one);
        assert!(f0.coeffs_range(1, 5).unwrap().iter().all(|c| c.is_zero()));
        assert!(hyper2f1_series(&one, &one, &q(-2, 1), &one, 3).is_err());
        assert!(hyper2f1_series(&one, &one, &q(0, 1), &one, 3).is_err());
        let lam = q(2, 1);
        assert_eq!(series_g_hypergeometric(&lam, 16).unwrap(), series_g(&lam, 16).unwrap());
        let printed = series_g_hypergeometric_printed(&lam, 4).unwrap();
        assert_ne!(printed.coeff(0).unwrap(), series_g(&lam, 4).unwrap().coeff(0).unwrap());
    }

    #[test]
    fn leibnitz_coefficients() {
        let x = q(3, 1);
        let s = leibnitz_series(&x, 8).unwrap();
        for m in 0..=8usize {
            let want: Rational = (0..=m)
                .map(|l| leibnitz(m, l, LeibnitzMethod::Closed).unwrap() * x.pow(l as i64))
                .sum();
            assert_eq!(s.coeff(m as i64).unwrap(), want);
        }
        let s = leibnitz_series(&q(-1, 1), 6).unwrap();
        assert_eq!(s.coeff(1).unwrap(), q(0, 1));
        assert_eq!(s.coeff(2).unwrap(), q(1, 3) - q(1, 6) + q(1, 3));
    }

    #[test]
    fn leibnitz_functional_equation() {
        for x in [q(0, 1), q(1, 1), q(2, 1), q(-3, 1)] {
            for lam in [q(2, 1), q(1, 2), q(-7, 4)] {
                let (a, b) = leibnitz_functional_sides(&x, &lam, 12).unwrap();
                assert_eq!(a, b, "x={x} λ={lam}");
                let (a, b) = leibnitz_functional_sides_printed(&x, &lam, 12).unwrap();
                assert_eq!(a == b, x == 1, "x={x} λ={lam}");
            }
        }
    }

    #[test]
    fn log_product_low_terms() {
        let s = log_product_series(&q(2, 1), 4).unwrap();
        assert!(s.coeff(0).unwrap().is_zero());
        assert_eq!(s.coeff(1).unwrap(), q(1, 4));
    }

    #[test]
    fn fibtype_examples() {
        assert_eq!(fibtype_poly(0, 1, 1, 1).unwrap(), BiPoly::one());
        assert_eq!(fibtype_poly(2, 1, 1, 1).unwrap().to_string(), "x^2 + y");
        assert!(fibtype_poly(2, 1, 0, 0).is_err());
        for (k, m, l) in [(1, 1, 1), (2, 1, 1), (1, 2, 1), (1, 1, 2), (1, 0, 1)] {
            let ser = fibtype_series(12, k, m, l).unwrap();
            for n in 0..=12 {
                assert_eq!(fibtype_poly(n, k, m, l).unwrap(), ser[n as usize], "{n} {k} {m} {l}");
            }
        }
    }
}
