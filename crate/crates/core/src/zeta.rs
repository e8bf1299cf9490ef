//! Zeta-type values at negative integers, exponential substitutions in
//! `y(n, λ)`, and the series instances built on Apostol-Bernoulli numbers.

use serde::Serialize;

use crate::exact::{
    binomial, factorial, powi, series_exp, sign, LaurentSeries, Rational, Scalar,
};
use crate::genfun::fibtype_poly;
use crate::special::{
    apostol_bernoulli_formula, apostol_bernoulli_poly, bernoulli_high, euler_at_zero, euler_high,
    stirling2, stirling2_row,
};
use crate::ynum::{check_lambda, y_direct, YError};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum ZetaFamily {
    MultiHurwitz,
    MultiEta,
    Lerch,
}

/// One interpolated value at a negative integer.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ZetaNegValue {
    pub family: ZetaFamily,
    pub order: usize,
    pub degree: usize,
    pub argument: Rational,
    pub lambda: Option<Rational>,
    pub value: Rational,
}

/// `ζ_d(-m, x) = (-1)^d m! B^{(d)}_{m+d}(x) / (m+d)!`.
///
/// ```
/// use finsum::exact::Rational;
/// use finsum::zeta::multi_hurwitz_neg;
/// assert_eq!(multi_hurwitz_neg(1, 1, &Rational::from(1)), Rational::new(-1, 12));
/// ```
pub fn multi_hurwitz_neg(d: usize, m: usize, x: &Rational) -> Rational {
    assert!(d >= 1, "order must be positive");
    let b = bernoulli_high(d, m + d).eval(x);
    Rational::from(sign(d as i64)) * factorial(m as u64) * b / factorial((m + d) as u64)
}

/// `ζ_E^{(d)}(-m, x) = E^{(d)}_m(x)`.
pub fn multi_eta_neg(d: usize, m: usize, x: &Rational) -> Rational {
    assert!(d >= 1, "order must be positive");
    euler_high(d, m).eval(x)
}

/// `Φ(λ, 1-n, b) = -𝓑_n(b; λ) / n`.
///
/// ```
/// use finsum::exact::Rational;
/// use finsum::zeta::lerch_neg;
/// let two = Rational::from(2);
/// assert_eq!(lerch_neg(&two, 1, &Rational::from(1)).unwrap(), Rational::from(-1));
/// assert_eq!(lerch_neg(&Rational::new(1, 2), 2, &Rational::from(1)).unwrap(), Rational::from(4));
/// ```
pub fn lerch_neg(lambda: &Rational, n: usize, b: &Rational) -> Result<Rational, YError> {
    assert!(n >= 1, "n must be positive");
    if *lambda == 1 {
        return Err(YError::Pole(lambda.to_string()));
    }
    let p = apostol_bernoulli_poly(n, lambda);
    Ok(-p.eval(b) / Rational::from(n))
}

pub fn zeta_neg_value(family: ZetaFamily, order: usize, degree: usize, argument: Rational, lambda: Option<Rational>) -> Result<ZetaNegValue, YError> {
    let value = match family {
        ZetaFamily::MultiHurwitz => multi_hurwitz_neg(order, degree, &argument),
        ZetaFamily::MultiEta => multi_eta_neg(order, degree, &argument),
        ZetaFamily::Lerch => {
            let l = lambda.clone().ok_or_else(|| YError::Pole("missing λ".into()))?;
            lerch_neg(&l, degree, &argument)?
        }
    };
    Ok(ZetaNegValue { family, order, degree, argument, lambda, value })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ExpSign {
    Plus,
    Minus,
}

/// `y(n, σ e^{-c t})` as a Laurent series in `t` through `t^t_max`.
///
/// For σ = -1 the result is a power series; for σ = +1 it has a pole of
/// order `n + 1` at `t = 0`.
///
/// ```
/// use finsum::exact::Rational;
/// use finsum::zeta::{y_exp_laurent, ExpSign};
/// let s = y_exp_laurent(0, ExpSign::Minus, 1, 2);
/// assert_eq!(s.coeff(0).unwrap(), Rational::new(1, 2));
/// assert_eq!(y_exp_laurent(0, ExpSign::Plus, 1, 2).valuation(), Some(-1));
/// ```
pub fn y_exp_laurent(n: usize, sigma: ExpSign, scale: u32, t_max: i64) -> LaurentSeries {
    let ni = n as i64;
    let work = t_max + 3 * ni + 6;
    let c = Rational::from(scale);
    let s = match sigma {
        ExpSign::Plus => Rational::from(1),
        ExpSign::Minus => Rational::from(-1),
    };
    let lam = series_exp(&-c.clone(), work).scale(&s);
    let inv_lam = series_exp(&c, work).scale(&s);
    let lm1 = &lam - &LaurentSeries::constant(Rational::from(1));
    let inv_lm1 = lm1.inv_through(work).unwrap();
    let mut acc = LaurentSeries::zero(work);
    let mut lam_pow = inv_lam.clone();
    for j in 0..=ni {
        let d = ni + 1 - j;
        let term = (&lam_pow * &inv_lm1.pow(d).unwrap()).scale(&Rational::new(sign(ni), j + 1));
        acc = &acc + &term;
        lam_pow = (&lam_pow * &inv_lam).truncate(work);
    }
    assert!(acc.order() >= t_max, "working precision too low");
    acc.truncate(t_max)
}

/// `m! [t^m]` of a series.
fn egf_coeff(s: &LaurentSeries, m: usize) -> Rational {
    s.coeff(m as i64).unwrap() * factorial(m as u64)
}

/// Both sides of one exact comparison.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Sides {
    pub lhs: Rational,
    pub rhs: Rational,
}

impl Sides {
    pub fn new(lhs: Rational, rhs: Rational) -> Self {
        Sides { lhs, rhs }
    }

    pub fn holds(&self) -> bool {
        self.lhs == self.rhs
    }
}

/// `m! [t^m] y(n, -e^{-t})`.
pub fn eta_coefficient(n: usize, m: usize) -> Rational {
    egf_coeff(&y_exp_laurent(n, ExpSign::Minus, 1, m as i64), m)
}

/// `Σ_j E_m^{(n+1-j)}(n+2) / ((j+1) 2^{n+1-j})`.
pub fn eta_sum(n: usize, m: usize) -> Rational {
    let x = Rational::from(n + 2);
    (0..=n)
        .map(|j| {
            let d = n + 1 - j;
            multi_eta_neg(d, m, &x) / (Rational::from(j + 1) * Rational::from(2).pow(d as i64))
        })
        .sum()
}

/// All weak compositions of `l` into `parts` nonnegative parts.
fn compositions(l: usize, parts: usize, f: &mut impl FnMut(&[usize])) {
    fn go(rest: usize, parts: usize, cur: &mut Vec<usize>, f: &mut impl FnMut(&[usize])) {
        if parts == 1 {
            cur.push(rest);
            f(cur);
            cur.pop();
            return;
        }
        for a in 0..=rest {
            cur.push(a);
            go(rest - a, parts - 1, cur, f);
            cur.pop();
        }
    }
    go(l, parts, &mut Vec::new(), f);
}

/// `E_m^{(d)}(x)` expanded over products of `E_l = E_l(0)`:
/// `Σ_l C(m,l) x^{m-l} l! Σ_{l_1+…+l_d=l} Π E_{l_i} / l_i!`.
pub fn euler_high_multinomial(d: usize, m: usize, x: &Rational) -> Rational {
    let e: Vec<Rational> = (0..=m).map(|l| euler_at_zero(l) / factorial(l as u64)).collect();
    let mut total = Rational::from(0);
    for l in 0..=m {
        let mut inner = Rational::from(0);
        compositions(l, d, &mut |parts| {
            inner += parts.iter().map(|&p| e[p].clone()).product::<Rational>();
        });
        total += binomial(m as i64, l as i64) * x.pow((m - l) as i64) * factorial(l as u64) * inner;
    }
    total
}

/// The right side of the eta sum [`eta_sum`] with each `E^{(d)}_m(n+2)` expanded
/// multinomially.
pub fn eta_multinomial_sum(n: usize, m: usize) -> Rational {
    let x = Rational::from(n + 2);
    (0..=n)
        .map(|j| {
            let d = n + 1 - j;
            euler_high_multinomial(d, m, &x)
                / (Rational::from(j + 1) * Rational::from(2).pow(d as i64))
        })
        .sum()
}

/// Checks `m! [t^m] y(n, -e^{-t}) = Σ_j E_m^{(n+1-j)}(n+2) / ((j+1) 2^{n+1-j})`.
pub fn check_eta_series(n: usize, m: usize) -> Sides {
    Sides::new(eta_coefficient(n, m), eta_sum(n, m))
}

/// Checks the multinomial Euler-number form of the same coefficient.
pub fn check_eta_multinomial(n: usize, m: usize) -> Sides {
    Sides::new(eta_coefficient(n, m), eta_multinomial_sum(n, m))
}

/// The `n = 0` case stated with the degree of the Euler polynomial raised by
/// one: `E_{m+1}(2)` against `2 m! [t^m] y(0, -e^{-t}) = ζ_E(-m, 2)`.
pub fn check_eta_n0_printed(m: usize) -> Sides {
    let x = Rational::from(2);
    Sides::new(euler_high(1, m + 1).eval(&x), eta_coefficient(0, m) * Rational::from(2))
}

pub fn check_eta_n0(m: usize) -> Sides {
    let x = Rational::from(2);
    Sides::new(multi_eta_neg(1, m, &x), eta_coefficient(0, m) * Rational::from(2))
}

/// Small instances of the eta sum, as linear combinations
/// `Σ_d c_d E^{(d)}_m(x_d)`. Each printed instance should be a constant
/// multiple of the coefficient `m! [t^m] y(n, -e^{-t})`.
pub fn eta_instance(n: usize, printed: bool) -> Vec<(i64, usize, i64)> {
    // (weight, order d, argument)
    match (n, printed) {
        (1, true) => vec![(1, 2, 3), (-1, 1, 3)],
        (2, true) => vec![(3, 3, 4), (3, 2, 4), (8, 1, 4)],
        (3, true) => vec![(15, 5, 5), (15, 4, 5), (10, 3, 5), (10, 2, 5), (24, 1, 5)],
        (_, _) => {
            // clear denominators of 1/((j+1) 2^{n+1-j})
            let den: Vec<Rational> = (0..=n)
                .map(|j| Rational::from(j + 1) * Rational::from(2).pow((n + 1 - j) as i64))
                .collect();
            let l = den.iter().fold(num_bigint::BigInt::from(1), |a, d| {
                num_integer::Integer::lcm(&a, d.numer())
            });
            (0..=n)
                .map(|j| {
                    let w = Rational::from(l.clone()) / &den[j];
                    (w.to_f64() as i64, n + 1 - j, (n + 2) as i64)
                })
                .collect()
        }
    }
}

/// Value of an instance at degree `m`, and the ratio to the coefficient.
pub fn eta_instance_ratio(n: usize, m: usize, printed: bool) -> Option<Rational> {
    let v: Rational = eta_instance(n, printed)
        .into_iter()
        .map(|(w, d, x)| Rational::from(w) * multi_eta_neg(d, m, &Rational::from(x)))
        .sum();
    let c = eta_coefficient(n, m);
    if c.is_zero() {
        None
    } else {
        Some(v / c)
    }
}

/// `m! [t^m] y(n, e^{-t})` for `m >= 0` (the regular part).
pub fn zeta_coefficient(n: usize, m: usize) -> Rational {
    egf_coeff(&y_exp_laurent(n, ExpSign::Plus, 1, m as i64), m)
}

/// `Σ_j (-1)^n ζ_{n+1-j}(-m, n+2) / (j+1)`.
pub fn zeta_sum(n: usize, m: usize) -> Rational {
    let x = Rational::from(n + 2);
    (0..=n)
        .map(|j| {
            Rational::from(sign(n as i64)) * multi_hurwitz_neg(n + 1 - j, m, &x)
                / Rational::from(j + 1)
        })
        .sum()
}

pub fn check_zeta_series(n: usize, m: usize) -> Sides {
    Sides::new(zeta_coefficient(n, m), zeta_sum(n, m))
}

/// `Σ_j ((-1)^n ζ_d(-m, n+2) + (-1)^j B^{(d)}_{m+d}(n+2) / (C(m+d, d) d!)) / (j+1)`,
/// `d = n+1-j`, against zero.
pub fn check_zeta_vanishing(n: usize, m: usize) -> Sides {
    let x = Rational::from(n + 2);
    let total: Rational = (0..=n)
        .map(|j| {
            let d = n + 1 - j;
            let b = bernoulli_high(d, m + d).eval(&x)
                / (binomial((m + d) as i64, d as i64) * factorial(d as u64));
            (Rational::from(sign(n as i64)) * multi_hurwitz_neg(d, m, &x)
                + Rational::from(sign(j as i64)) * b)
                / Rational::from(j + 1)
        })
        .sum();
    Sides::new(total, Rational::from(0))
}

/// `m! [t^m] y(n, σ e^{-2t})`.
pub fn double_coefficient(n: usize, m: usize, sigma: ExpSign) -> Rational {
    egf_coeff(&y_exp_laurent(n, sigma, 2, m as i64), m)
}

/// Which variant of the expansions of `y(n, ±e^{-2t})` to evaluate;
/// `d = n+1-j` throughout.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum MixedForm {
    /// `Σ_j (-1)^{j-1} (-1)^j B^{(d)}_{m+d}(n+2) / ((j+1) 2^d C(m+d,d) d!)`
    BernoulliPrinted,
    /// `Σ_j (-1)^{j-1} B^{(d)}_{m+d}(n+2) / ((j+1) 2^d C(m+d,d) d!)`
    BernoulliUnsigned,
    /// `Σ_j (-1)^{j-1} 2^m B^{(d)}_{m+d}(n+2) / ((j+1) C(m+d,d) d!)`
    Bernoulli,
    /// `Σ_j Σ_{c=0}^{m} (-1)^{j-1} C(m,c) B^{(d)}_{c+d}(2n+4) E^{(d)}_{m-c}(n+2) / (C(c+d,d) d! (j+1) 2^d)`
    MixedPrinted,
    /// as [`MixedForm::MixedPrinted`] with `E^{(d)}_{m-c}(0)`
    MixedAtZero,
    /// `Σ_j Σ_{c=-d}^{m} (-1)^{j-1} m! B^{(d)}_{c+d}(2n+4) E^{(d)}_{m-c}(0) / ((c+d)! (m-c)! (j+1) 2^d)`
    Mixed,
}

pub fn mixed_value(form: MixedForm, n: usize, m: usize) -> Rational {
    let x = Rational::from(n + 2);
    let x2 = Rational::from(2 * n + 4);
    let zero = Rational::from(0);
    let mi = m as i64;
    (0..=n)
        .map(|j| {
            let d = n + 1 - j;
            let di = d as i64;
            let s = Rational::from(sign(j as i64 - 1));
            let jd = Rational::from(j + 1) * factorial(d as u64);
            let two_d = Rational::from(2).pow(di);
            let bern = || bernoulli_high(d, m + d).eval(&x) / binomial(mi + di, di);
            match form {
                MixedForm::BernoulliPrinted => {
                    s * Rational::from(sign(j as i64)) * bern() / (jd * two_d)
                }
                MixedForm::BernoulliUnsigned => s * bern() / (jd * two_d),
                MixedForm::Bernoulli => s * Rational::from(2).pow(mi) * bern() / jd,
                MixedForm::MixedPrinted | MixedForm::MixedAtZero => {
                    let ex = if form == MixedForm::MixedAtZero { &zero } else { &x };
                    let inner: Rational = (0..=mi)
                        .map(|c| {
                            binomial(mi, c)
                                * bernoulli_high(d, (c + di) as usize).eval(&x2)
                                * euler_high(d, (mi - c) as usize).eval(ex)
                                / binomial(c + di, di)
                        })
                        .sum();
                    s * inner / (jd * two_d)
                }
                MixedForm::Mixed => {
                    let inner: Rational = (-di..=mi)
                        .map(|c| {
                            let a = (c + di) as usize;
                            let b = (mi - c) as usize;
                            bernoulli_high(d, a).eval(&x2) * euler_high(d, b).eval(&zero)
                                / (factorial(a as u64) * factorial(b as u64))
                        })
                        .sum();
                    s * inner * factorial(m as u64) / (Rational::from(j + 1) * two_d)
                }
            }
        })
        .sum()
}

/// `Σ_{v>=0} v^m λ^v` in closed form, `Σ_k S₂(m,k) k! λ^k / (1-λ)^{k+1}`.
pub fn power_series_sum<F: Scalar>(m: usize, lambda: &F) -> F {
    let om = F::one() - lambda.clone();
    let row = stirling2_row(m);
    let mut s = F::zero();
    for (k, c) in row.iter().enumerate() {
        if c.is_zero() {
            continue;
        }
        let ki = k as i64;
        s = s + F::from_rational(&(c * &factorial(k as u64))) * powi(lambda, ki) * powi(&om, -(ki + 1));
    }
    s
}

/// `Σ_{n=0}^{M} (n+1)! λ^{n+1} y(n, λ) S₂(M, n+1)`.
pub fn apostol_via_y<F: Scalar>(big_m: usize, lambda: &F) -> Result<F, YError> {
    check_lambda(lambda)?;
    let mut s = F::zero();
    for n in 0..big_m {
        let c = stirling2(big_m, n + 1);
        if c.is_zero() {
            continue;
        }
        let y = y_direct(n, lambda)?;
        s = s + F::from_rational(&(c * factorial(n as u64 + 1))) * powi(lambda, n as i64 + 1) * y;
    }
    Ok(s)
}

/// The entire-function series formula at `h(v) = v^m`: only the `k = m+1`
/// term of the outer sum survives, so
/// `Σ_v v^m λ^v = -(1/(m+1)) Σ_n (n+1)! λ^{n+1} y(n,λ) S₂(m+1, n+1)`.
pub fn boyadzhiev_poly_check<F: Scalar>(m: usize, lambda: &F) -> Result<(F, F), YError> {
    check_lambda(lambda)?;
    let lhs = power_series_sum(m, lambda);
    let rhs = -apostol_via_y(m + 1, lambda)? * F::from_rational(&Rational::new(1, m as i64 + 1));
    Ok((lhs, rhs))
}

/// `𝓑_M(λ)` three ways: by the Stirling closed form, by the series
/// definition, and by the `y`-sum.
pub fn apostol_triple<F: Scalar>(big_m: usize, lambda: &F) -> Result<[F; 3], YError> {
    check_lambda(lambda)?;
    let formula = apostol_bernoulli_formula(big_m, lambda);
    let series = crate::special::apostol_bernoulli_series(big_m, lambda).pop().unwrap();
    Ok([formula, series, apostol_via_y(big_m, lambda)?])
}

/// Number of outer terms [`cos_series_partial`] uses at `λ`.
///
/// The `i`-th term of the Apostol-Bernoulli series decays like
/// `|ln |λ||^{-2i}` (the nearest pole of `u / (λ e^u - 1)` sits at
/// `u = -ln λ`). The count below brings that factor under `10^-14`, capped
/// at 60. At `λ = 0.1` this gives 20 terms and an observed gap to the closed
/// form near `10^-15`; at `λ = 0.3` the cap leaves a gap near `10^-9`.
pub fn cos_default_terms(lambda: f64) -> usize {
    let r = lambda.abs().ln().abs();
    if lambda == 0.0 || r.is_infinite() {
        return 1;
    }
    if r <= 1.0 {
        return 60;
    }
    ((14.0 * 10f64.ln()) / (2.0 * r.ln())).ceil().clamp(1.0, 60.0) as usize
}

/// Float evaluations of `Σ_v λ^v cos v`.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct CosReport {
    pub lambda: f64,
    pub terms: usize,
    /// `(1 - λ cos 1) / (1 - 2λ cos 1 + λ²)`
    pub closed: f64,
    /// `Σ_{v<=200} λ^v cos v`
    pub direct: f64,
    /// `-Σ_{i<terms} (-1)^i 𝓑_{2i+1}(λ) / (2i+1)!`, with each 𝓑 from the `y`-sum
    pub corrected: f64,
    /// `Σ_{m=1}^{terms} Σ_n (-1)^{m+1} (n+1)! S₂(2m-1, n+1) λ^{n+1} y(n,λ) / (2 (2m-1)!)`
    pub printed: f64,
    /// `1 + Σ_{n=1}^{2 terms} (𝒢_n - 𝒢_{n-1} cos 1) λ^n` with `𝒢_n = 𝒢_n(2 cos 1, -1; 1,1,1)`
    pub fibonacci: f64,
}

/// The cosine instance of the entire-function series formula.
///
/// λ is read as the simplest rational within float precision so that the
/// inner sums stay exact; only the final conversion is inexact.
pub fn cos_series_partial(lambda: f64, terms: usize) -> CosReport {
    assert!(lambda.abs() <= 0.3, "|λ| must be at most 0.3");
    assert!(terms <= 60, "at most 60 terms");
    let c1 = 1f64.cos();
    let closed = (1.0 - lambda * c1) / (1.0 - 2.0 * lambda * c1 + lambda * lambda);
    let direct: f64 = (0..=200).map(|v| lambda.powi(v) * (v as f64).cos()).sum();
    let (corrected, printed) = if lambda == 0.0 || terms == 0 {
        // 𝓑_1(0) = -1 and every higher 𝓑_k(0) vanishes
        let on = if terms == 0 { 0.0 } else { 1.0 };
        (on, -0.5 * on)
    } else {
        let q = Rational::simplest_from_f64(lambda).expect("finite λ");
        let kmax = 2 * terms - 1;
        let ys = crate::ynum::y_recurrence_sequence(kmax, &q).expect("|λ| <= 0.3 avoids the poles");
        // (n+1)! λ^{n+1} y(n, λ)
        let mut w = Vec::with_capacity(kmax + 1);
        let mut lp = q.clone();
        for (n, y) in ys.iter().enumerate() {
            w.push(factorial(n as u64 + 1) * &lp * y);
            lp = lp * &q;
        }
        let mut corr = Rational::from(0);
        let mut prin = Rational::from(0);
        for i in 0..terms {
            let k = 2 * i + 1;
            let row = stirling2_row(k);
            let b: Rational = (0..k).map(|n| &row[n + 1] * &w[n]).sum();
            let kf = factorial(k as u64);
            corr += Rational::from(sign(i as i64)) * &b / &kf;
            // m = i + 1
            prin += Rational::from(sign(i as i64 + 2)) * &b / (Rational::from(2) * kf);
        }
        (-corr.to_f64(), prin.to_f64())
    };
    let fib_n = 2 * terms.max(1);
    let vals: Vec<f64> = (0..=fib_n as u32)
        .map(|n| fibtype_poly(n, 1, 1, 1).unwrap().eval_f64(2.0 * c1, -1.0))
        .collect();
    let mut fibonacci = 1.0;
    for n in 1..=fib_n {
        fibonacci += (vals[n] - vals[n - 1] * c1) * lambda.powi(n as i32);
    }
    CosReport { lambda, terms, closed, direct, corrected, printed, fibonacci }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::RationalFunction;
    use crate::special::{apostol_bernoulli, bernoulli_high};
    use crate::ynum::y_closed_special;

    fn q(a: i64, b: i64) -> Rational {
        Rational::new(a, b)
    }

    #[test]
    fn interpolation_values() {
        for x in [q(1, 1), q(2, 1), q(1, 2)] {
            for m in 0..=8 {
                let want = -bernoulli_high(1, m + 1).eval(&x) / Rational::from(m + 1);
                assert_eq!(multi_hurwitz_neg(1, m, &x), want);
            }
        }
        assert_eq!(multi_hurwitz_neg(1, 0, &q(1, 2)), q(0, 1));
        assert_eq!(multi_eta_neg(2, 1, &q(3, 1)), q(2, 1));
        assert_eq!(multi_eta_neg(1, 0, &q(7, 3)), q(1, 1));
    }

    #[test]
    fn lerch_geometric_tail() {
        let lam = q(1, 3);
        let partial: Rational = (0..=200).map(|v| Rational::from(v) * lam.pow(v)).sum();
        let exact = lerch_neg(&lam, 2, &q(0, 1)).unwrap();
        assert_eq!(exact, q(3, 4));
        let gap = (exact - partial).abs();
        assert!(gap < Rational::new(1, 10).pow(80));
        assert!(lerch_neg(&q(1, 1), 2, &q(0, 1)).is_err());
    }

    #[test]
    fn exponential_substitution() {
        let s = y_exp_laurent(1, ExpSign::Minus, 1, 3);
        assert_eq!(s.coeff(0).unwrap(), y_closed_special(1, crate::ynum::SpecialLambda::NegOne));
        assert_eq!(y_exp_laurent(3, ExpSign::Plus, 1, 2).valuation(), Some(-4));
    }

    #[test]
    fn negative_zeta_small() {
        assert!(check_eta_series(0, 0).holds());
        assert_eq!(eta_coefficient(0, 0), q(1, 2));
        assert!(check_eta_multinomial(1, 1).holds());
        assert!(check_zeta_series(1, 1).holds());
        assert!(check_zeta_vanishing(1, 1).holds());
        assert!(!check_eta_n0_printed(0).holds());
        assert!(check_eta_n0(3).holds());
    }

    #[test]
    fn boyadzhiev_symbolic() {
        let l = RationalFunction::var();
        let (a, b) = boyadzhiev_poly_check(1, &l).unwrap();
        assert_eq!(a, b);
        let want = l.clone() * (RationalFunction::one() - l.clone()).pow(-2);
        assert_eq!(a, want);
        let [f, s, y] = apostol_triple(1, &l).unwrap();
        assert_eq!(f, apostol_bernoulli(1));
        assert_eq!(f, s);
        assert_eq!(f, y);
        let [f, _, y] = apostol_triple(0, &q(1, 3)).unwrap();
        assert!(f.is_zero() && y.is_zero());
    }

    #[test]
    fn cosine_at_zero() {
        let r = cos_series_partial(0.0, 5);
        assert_eq!((r.corrected, r.closed), (1.0, 1.0));
        assert_eq!(r.printed, -0.5);
        assert_eq!(cos_default_terms(0.1), 20);
        let r = cos_series_partial(0.1, cos_default_terms(0.1));
        assert!((r.corrected - r.closed).abs() < 1e-12);
        assert!((r.printed + r.closed / 2.0).abs() < 1e-12);
    }
}
