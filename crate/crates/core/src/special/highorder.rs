use crate::exact::{
    binomial, factorial, powi, series_exp, LaurentSeries, Polynomial, Rational, RationalFunction,
    Scalar,
};

use super::stirling2_row;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum HighOrderFamily {
    /// `(u / (e^u - 1))^d e^{yu}`
    BernoulliHigh,
    /// `(2 / (e^u + 1))^d e^{yu}`
    EulerHigh,
    /// `u e^{bu} / (λ e^u - 1)`, coefficients rational in λ.
    ApostolBernoulliPoly,
}

/// A polynomial family member `P_m^{(d)}(y)`.
#[derive(Debug, Clone, PartialEq)]
pub struct HighOrderPolynomial<F: Scalar = Rational> {
    pub family: HighOrderFamily,
    pub order: usize,
    pub degree: usize,
    pub value: Polynomial<F>,
}

impl<F: Scalar> HighOrderPolynomial<F> {
    pub fn eval(&self, y: &F) -> F {
        self.value.eval(y)
    }
}

/// Coefficients `c_0 ..= c_m` of `base^d` where `base` has the given
/// coefficients through degree `m`.
fn power_coeffs(base: LaurentSeries, d: usize, m: usize) -> Vec<Rational> {
    let p = base.truncate(m as i64).pow(d as i64).unwrap();
    p.coeffs_range(0, m as i64).unwrap()
}

fn base_series(family: HighOrderFamily, m: usize) -> LaurentSeries {
    let t = m as i64;
    let e = series_exp(&Rational::from(1), t + 1);
    match family {
        HighOrderFamily::BernoulliHigh => {
            let em1 = (&e - &LaurentSeries::constant(Rational::from(1))).shift(-1);
            em1.inv_through(t).unwrap()
        }
        HighOrderFamily::EulerHigh => {
            let half = (&e + &LaurentSeries::constant(Rational::from(1)))
                .scale(&Rational::new(1, 2));
            half.inv_through(t).unwrap()
        }
        HighOrderFamily::ApostolBernoulliPoly => {
            panic!("the Apostol family has coefficients in λ; use apostol_bernoulli_poly")
        }
    }
}

/// `m! [u^m] base(u)^d e^{yu}` as a polynomial in `y`.
///
/// ```
/// use finsum::exact::Rational;
/// use finsum::special::{high_order_polynomial, HighOrderFamily};
/// let e = high_order_polynomial(HighOrderFamily::EulerHigh, 2, 1);
/// assert_eq!(e.eval(&Rational::from(3)), Rational::from(2));
/// ```
pub fn high_order_polynomial(family: HighOrderFamily, d: usize, m: usize) -> HighOrderPolynomial {
    assert!(d >= 1, "order must be positive");
    let c = power_coeffs(base_series(family, m), d, m);
    let mf = factorial(m as u64);
    let value = Polynomial::new(
        (0..=m)
            .map(|k| &mf * &c[m - k] / factorial(k as u64))
            .collect(),
    );
    HighOrderPolynomial { family, order: d, degree: m, value }
}

/// `B_m^{(d)}(y)`.
pub fn bernoulli_high(d: usize, m: usize) -> HighOrderPolynomial {
    high_order_polynomial(HighOrderFamily::BernoulliHigh, d, m)
}

/// `E_m^{(d)}(y)`.
pub fn euler_high(d: usize, m: usize) -> HighOrderPolynomial {
    high_order_polynomial(HighOrderFamily::EulerHigh, d, m)
}

/// `E_j(0)`, the first-order Euler polynomial at zero.
pub fn euler_at_zero(j: usize) -> Rational {
    euler_high(1, j).value.coeff(0)
}

/// `𝓑_n(θ)` from its Stirling-number computation formula:
///
/// ```text
/// 𝓑_n(θ) = n θ / (θ-1)^n · Σ_{c=0}^{n-1} (-1)^c c! θ^{c-1} (θ-1)^{n-1-c} S₂(n-1, c)
/// ```
///
/// Panics at θ = 1.
pub fn apostol_bernoulli_formula<F: Scalar>(n: usize, theta: &F) -> F {
    if n == 0 {
        return F::zero();
    }
    let tm1 = theta.clone() - F::one();
    let s2 = stirling2_row(n - 1);
    let mut sum = F::zero();
    for (c, s) in s2.iter().enumerate() {
        if s.is_zero() {
            continue;
        }
        let c_i = c as i64;
        // n θ · θ^{c-1} folded into θ^c
        let coeff = F::from_rational(&(Rational::from(crate::exact::sign(c_i)) * factorial(c as u64) * s));
        sum = sum + coeff * powi(theta, c_i) * powi(&tm1, n as i64 - 1 - c_i);
    }
    sum * F::from_int(n as i64) * powi(&tm1, -(n as i64))
}

/// `𝓑_n(λ)` as a rational function of λ.
///
/// ```
/// use finsum::special::apostol_bernoulli;
/// assert_eq!(apostol_bernoulli(1).to_string(), "(1)/(L - 1)");
/// assert_eq!(apostol_bernoulli(2).to_string(), "(-2*L)/(L^2 - 2*L + 1)");
/// ```
pub fn apostol_bernoulli(n: usize) -> RationalFunction {
    apostol_bernoulli_formula(n, &RationalFunction::var())
}

/// `𝓑_n(λ)` at a rational `λ ≠ 1`.
pub fn apostol_bernoulli_at(n: usize, lambda: &Rational) -> Option<Rational> {
    if *lambda == 1 {
        return None;
    }
    Some(apostol_bernoulli_formula(n, lambda))
}

/// `𝓑_0 ..= 𝓑_n` from `k! [u^k] u / (λ e^u - 1)`.
pub fn apostol_bernoulli_series<F: Scalar>(n: usize, lambda: &F) -> Vec<F> {
    let t = n as i64;
    let den = &series_exp(&F::one(), t).scale(lambda) - &LaurentSeries::constant(F::one());
    let q = LaurentSeries::var()
        .div_through(&den, t)
        .expect("λ = 1 makes the constant term vanish");
    (0..=t)
        .map(|k| q.coeff(k).unwrap() * F::from_rational(&factorial(k as u64)))
        .collect()
}

/// `𝓑_n(b; λ) = Σ_k C(n, k) 𝓑_{n-k}(λ) b^k` as a polynomial in `b` over `F`.
pub fn apostol_bernoulli_poly<F: Scalar>(n: usize, lambda: &F) -> HighOrderPolynomial<F> {
    let a = apostol_bernoulli_series(n, lambda);
    let value = Polynomial::new(
        (0..=n)
            .map(|k| F::from_rational(&binomial(n as i64, k as i64)) * &a[n - k])
            .collect(),
    );
    HighOrderPolynomial {
        family: HighOrderFamily::ApostolBernoulliPoly,
        order: 1,
        degree: n,
        value,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::special::bernoulli_numbers;

    #[test]
    fn first_order_matches_bernoulli_numbers() {
        let b = bernoulli_numbers(10);
        for m in 0..=10 {
            assert_eq!(bernoulli_high(1, m).eval(&Rational::from(0)), b[m]);
        }
        assert_eq!(bernoulli_high(1, 2).eval(&Rational::from(0)), Rational::new(1, 6));
        for d in 1..4 {
            assert_eq!(euler_high(d, 0).value, Polynomial::one());
        }
    }

    #[test]
    fn euler_values() {
        // E_1(y) = y - 1/2, E_2(y) = y^2 - y
        assert_eq!(euler_at_zero(1), Rational::new(-1, 2));
        assert_eq!(euler_at_zero(2), Rational::from(0));
        assert_eq!(euler_at_zero(3), Rational::new(1, 4));
    }

    #[test]
    fn apostol_routes() {
        let l = RationalFunction::var();
        let s = apostol_bernoulli_series(10, &l);
        for (n, v) in s.iter().enumerate() {
            assert_eq!(*v, apostol_bernoulli(n), "n={n}");
        }
        let q = Rational::new(1, 3);
        let s = apostol_bernoulli_series(8, &q);
        for (n, v) in s.iter().enumerate() {
            assert_eq!(Some(v.clone()), apostol_bernoulli_at(n, &q));
        }
        assert!(apostol_bernoulli(0).is_zero());
    }
}
