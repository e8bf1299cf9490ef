use num_traits::Signed;

use crate::exact::{
    binomial, factorial, powi, series_log_one_plus, sign, LaurentSeries, Polynomial, Rational,
    RationalFunction, Scalar,
};
use crate::genfun::{
    fibtype_poly, fibtype_series, leibnitz_functional_sides, leibnitz_functional_sides_printed,
    log_product_series, series_g, series_g_hypergeometric, series_g_hypergeometric_printed,
    series_g_special, SpecialG,
};
use crate::special::{
    alt_harmonic, apostol_bernoulli_formula, apostol_bernoulli_poly, apostol_bernoulli_series,
    bernoulli, bernoulli_high, bernoulli_numbers, bernoulli_numbers_recurrence,
    bernoulli_second_kind, daehee, daehee_via_stirling, derangement, derangement_recurrence,
    euler_at_zero, harmonic, leibnitz, stirling1, stirling1_row, stirling2, stirling2_recurrence,
    LeibnitzMethod, StirlingMethod,
};
use crate::volkenborn::{
    binom_partial_closed, convergence_report, mahler_recurrence_sequence, pg_series_check,
    volkenborn_partial_sum, Integrand,
};
use crate::ynum::{
    lcm_upto, y_algorithm1, y_closed_special, y_direct, y_recurrence_sequence, y_symbolic,
    SpecialLambda,
};
use crate::zeta::{
    apostol_via_y, boyadzhiev_poly_check, check_eta_multinomial, check_eta_n0,
    check_eta_n0_printed, check_eta_series, check_zeta_series, check_zeta_vanishing,
    double_coefficient, eta_coefficient, eta_instance, mixed_value, multi_eta_neg,
    multi_hurwitz_neg, power_series_sum, ExpSign, MixedForm,
};

use super::{Eval, Family, IdentityRecord, Lambda, Point, Printed, Status, Sweep};

/// Evaluates `$body`, a pair of values over the scalar type `$F`, at the
/// point's λ, numerically or symbolically.
macro_rules! by_lambda {
    ($p:expr, $F:ident, $l:ident => $body:expr) => {{
        match $p.lambda() {
            Lambda::Value(q) => {
                #[allow(dead_code)]
                type $F = Rational;
                let $l: &Rational = q;
                let (a, b) = $body;
                Eval::compare::<Rational>(a, b)
            }
            Lambda::Symbolic => {
                #[allow(dead_code)]
                type $F = RationalFunction;
                let v = RationalFunction::var();
                let $l: &RationalFunction = &v;
                let (a, b) = $body;
                Eval::compare::<RationalFunction>(a, b)
            }
        }
    }};
}

fn y<F: Scalar>(n: usize, l: &F) -> F {
    y_direct(n, l).expect("sweep λ avoids 0 and 1")
}

fn q(a: i64, b: i64) -> Rational {
    Rational::new(a, b)
}

fn c<F: Scalar>(v: &Rational) -> F {
    F::from_rational(v)
}

fn k<F: Scalar>(v: i64) -> F {
    F::from_int(v)
}

fn inv<F: Scalar>(v: &F) -> F {
    v.inv().expect("nonzero")
}

fn coeff<F: Scalar>(s: &LaurentSeries<F>, i: usize) -> F {
    s.coeff(i as i64).expect("within precision")
}

fn two_pow(e: i64) -> Rational {
    Rational::from(2).pow(e)
}

fn half() -> Rational {
    q(1, 2)
}

fn yq(n: usize, l: &Rational) -> Rational {
    y(n, l)
}

fn bs_sum(n: usize) -> Rational {
    let bs = bernoulli_numbers(n);
    stirling1_row(n).iter().zip(&bs).map(|(s, b)| s * b).sum()
}

fn fact(n: usize) -> Rational {
    factorial(n as u64)
}

fn sgn(k: usize) -> Rational {
    Rational::from(sign(k as i64))
}

// ---- definition -----------------------------------------------------------

fn finite_sum_algorithm(p: &Point) -> Eval {
    by_lambda!(p, F, l => (y_direct(p.n, l).unwrap(), y_algorithm1(p.n, l).unwrap()))
}

fn finite_sum_recurrence(p: &Point) -> Eval {
    by_lambda!(p, F, l => (
        y::<F>(p.n, l),
        y_recurrence_sequence(p.n, l).unwrap().pop().unwrap()
    ))
}

const TABLE: [(&[i64], i64); 5] = [
    (&[1], 1),
    (&[1, -3], 2),
    (&[2, -7, 11], 6),
    (&[3, -13, 23, -25], 12),
    (&[12, -63, 137, -163, 137], 60),
];

fn value_table(p: &Point) -> Eval {
    let (num, d) = TABLE[p.n];
    let e = p.n as u32 + 1;
    let lam = Polynomial::<Rational>::var();
    let lm1 = Polynomial::from_ints(&[-1, 1]);
    let den = &(&Polynomial::constant(Rational::from(d)) * &lam.pow(e)) * &lm1.pow(e);
    Eval::compare(y_symbolic(p.n), RationalFunction::new(Polynomial::from_ints(num), den))
}

fn oeis_leading(p: &Point) -> Eval {
    let formula = Rational::from(lcm_upto(p.n)) * harmonic(p.n);
    let ys = y_symbolic(p.n - 1);
    let lead = Rational::from(ys.num().leading().unwrap().numer().abs());
    Eval::compare(formula, lead)
}

// ---- generating functions --------------------------------------------------

fn genfun_coefficients(p: &Point) -> Eval {
    let n = p.n;
    by_lambda!(p, F, l => (
        coeff(&series_g(l, n as i64).unwrap(), n),
        powi(&(F::one() - l.clone()), n as i64 + 2) * y(n, l)
    ))
}

fn genfun_hypergeometric(p: &Point) -> Eval {
    let t = p.n as i64;
    by_lambda!(p, F, l => (
        coeff(&series_g(l, t).unwrap(), p.n),
        coeff(&series_g_hypergeometric(l, t).unwrap(), p.n)
    ))
}

fn genfun_hypergeometric_printed(p: &Point) -> Eval {
    let t = p.n as i64;
    by_lambda!(p, F, l => (
        coeff(&series_g(l, t).unwrap(), p.n),
        coeff(&series_g_hypergeometric_printed(l, t).unwrap(), p.n)
    ))
}

fn special_of(tag: &str) -> SpecialG {
    match tag {
        "g1" => SpecialG::G1,
        "g2" => SpecialG::G2,
        _ => SpecialG::G3,
    }
}

fn genfun_special(p: &Point) -> Eval {
    let which = special_of(p.tag());
    let l = which.lambda();
    let s = series_g_special(which, p.n as i64);
    Eval::compare(coeff(&s, p.n), (Rational::from(1) - &l).pow(p.n as i64 + 2) * yq(p.n, &l))
}

fn leibnitz_functional(p: &Point) -> Eval {
    let x = p.x();
    by_lambda!(p, F, l => {
        let (a, b) = leibnitz_functional_sides(&k::<F>(x), l, p.n as i64).unwrap();
        (coeff(&a, p.n), coeff(&b, p.n))
    })
}

fn leibnitz_functional_printed(p: &Point) -> Eval {
    let x = p.x();
    by_lambda!(p, F, l => {
        let (a, b) = leibnitz_functional_sides_printed(&k::<F>(x), l, p.n as i64).unwrap();
        (coeff(&a, p.n), coeff(&b, p.n))
    })
}

fn leibnitz_poly(n: usize, x: &Rational) -> Rational {
    (0..=n)
        .map(|j| leibnitz(n, j, LeibnitzMethod::Closed).unwrap() * x.pow(j as i64))
        .sum()
}

fn leibnitz_coefficients(p: &Point) -> Eval {
    let n = p.n;
    let x = Rational::from(p.x());
    let lhs = (x.clone() + Rational::from(1)) * leibnitz_poly(n, &x) - x.clone() * leibnitz_poly(n - 1, &x);
    let xs = x.pow(n as i64 + 1) + Rational::from(1);
    by_lambda!(p, F, l => (
        c::<F>(&lhs),
        c::<F>(&(sgn(n) * xs.clone()))
            * powi(l, n as i64 + 1)
            * ((l.clone() - F::one()) * y(n, l) + y(n - 1, l))
    ))
}

fn derangement_sides<F: Scalar>(n: usize, l: &F) -> (F, F) {
    let wp = (F::one() - l.clone()) * inv(l);
    let mut left = F::zero();
    for m in 0..=n {
        let w = binomial(n as i64, m as i64) * daehee(n - m) * derangement(m);
        left = left - c::<F>(&w) * powi(&wp, (n - m) as i64 + 1);
    }
    let mut right = F::zero();
    for j in 0..=n {
        let w = sgn(n - j) / fact(n - j);
        right = right + c::<F>(&w) * powi(&(F::one() - l.clone()), j as i64 + 2) * y(j, l);
    }
    (left, right)
}

fn derangement_convolution(p: &Point) -> Eval {
    let n = p.n;
    by_lambda!(p, F, l => {
        let (a, b) = derangement_sides::<F>(n, l);
        (a, b * c::<F>(&fact(n)))
    })
}

fn derangement_convolution_printed(p: &Point) -> Eval {
    by_lambda!(p, F, l => derangement_sides::<F>(p.n, l))
}

fn derangement_double<F: Scalar>(n: usize, l: &F, scale: &Rational) -> F {
    let wp = (F::one() - l.clone()) * inv(l);
    let mut s = F::zero();
    for m in 0..=n {
        for j in 0..=m {
            let w = sgn(n - m + j + 1) * scale.clone() / (Rational::from(n - m + 1) * fact(j));
            s = s + c::<F>(&w) * powi(&wp, (n - m) as i64 + 1);
        }
    }
    s
}

fn derangement_double_sum(p: &Point) -> Eval {
    by_lambda!(p, F, l => (
        derangement_sides::<F>(p.n, l).1,
        derangement_double::<F>(p.n, l, &Rational::from(1))
    ))
}

fn derangement_double_sum_printed(p: &Point) -> Eval {
    by_lambda!(p, F, l => (
        derangement_sides::<F>(p.n, l).1,
        derangement_double::<F>(p.n, l, &fact(p.n))
    ))
}

fn fibonacci_type(p: &Point) -> Eval {
    let (kk, m, l) = match p.tag() {
        "k=1,m=1,l=1" => (1, 1, 1),
        "k=2,m=1,l=1" => (2, 1, 1),
        "k=1,m=2,l=1" => (1, 2, 1),
        _ => (1, 1, 2),
    };
    let n = p.n as u32;
    Eval::compare(
        fibtype_poly(n, kk, m, l).unwrap(),
        fibtype_series(n, kk, m, l).unwrap().pop().unwrap(),
    )
}

// ---- log-product apparatus ------------------------------------------------

fn log_product_rhs<F: Scalar>(n: usize, l: &F, sign_of: impl Fn(usize) -> i64) -> F {
    let om = F::one() - l.clone();
    let mut s = F::zero();
    for kk in 0..=n {
        let d = (n + 1 - kk) as i64;
        s = s + powi(&om, n as i64 + 3) * y(kk, l) * inv(&(k::<F>(d) * powi(l, d)));
    }
    s * k::<F>(sign_of(n))
}

fn log_product_coefficients(p: &Point) -> Eval {
    let n = p.n;
    by_lambda!(p, F, l => (
        coeff(&log_product_series(l, n as i64 + 1).unwrap(), n + 1),
        log_product_rhs(n, l, |_| -1)
    ))
}

fn log_product_coefficients_printed(p: &Point) -> Eval {
    let n = p.n;
    by_lambda!(p, F, l => (
        coeff(&log_product_series(l, n as i64 + 1).unwrap(), n + 1),
        log_product_rhs(n, l, |n| sign(n as i64))
    ))
}

fn log_log_coefficient(i: usize) -> Rational {
    let t = i as i64;
    let one = Rational::from(1);
    let a = series_log_one_plus(&LaurentSeries::monomial(-one.clone(), 1), t).unwrap();
    let b = series_log_one_plus(&LaurentSeries::monomial(one, 1), t).unwrap();
    coeff(&(&a * &b), i)
}

/// `H_v - H_{2v} - 1/(2v)`.
fn furdui(v: usize) -> Rational {
    harmonic(v) - harmonic(2 * v) - q(1, 2 * v as i64)
}

fn log_product_furdui(p: &Point) -> Eval {
    let v = p.n;
    Eval::compare(log_log_coefficient(2 * v), furdui(v) / Rational::from(v))
}

fn log_product_furdui_printed(p: &Point) -> Eval {
    let v = p.n;
    let printed = harmonic(v) - harmonic(v) - q(1, 2 * v as i64);
    Eval::compare(log_log_coefficient(2 * v), printed / Rational::from(v))
}

/// `Σ_{k=0}^{top} (1-λ)^e y(k, λ) / ((s-k) λ^{s-k})`.
fn k_sum<F: Scalar>(l: &F, top: i64, e: i64, s: i64, index_y_by_k: Option<usize>) -> F {
    let om = F::one() - l.clone();
    let mut acc = F::zero();
    for kk in 0..=top {
        let yk = y(index_y_by_k.unwrap_or(kk as usize), l);
        acc = acc + powi(&om, e) * yk * inv(&(k::<F>(s - kk) * powi(l, s - kk)));
    }
    acc
}

fn log_product_zero_sum(p: &Point) -> Eval {
    let n = p.n as i64;
    by_lambda!(p, F, l => (
        k_sum(l, 2 * n - 2, 2 * n + 1, 2 * n - 1, None),
        k_sum(l, 2 * n - 1, 2 * n + 2, 2 * n, None)
    ))
}

fn log_product_even_part(p: &Point) -> Eval {
    let n = p.n as i64;
    by_lambda!(p, F, l => {
        let w = (l.clone() - F::one()) * inv(l);
        (
            c::<F>(&(furdui(p.n) / Rational::from(n))) * powi(&w, 2 * n),
            k_sum(l, 2 * n - 2, 2 * n + 1, 2 * n - 1, None)
                - k_sum(l, 2 * n - 3, 2 * n, 2 * n - 2, None)
        )
    })
}

fn harmonic_difference_rhs<F: Scalar>(n: usize, l: &F, fixed: Option<usize>) -> F {
    let ni = n as i64;
    let pick = |kk: usize| y(fixed.unwrap_or(kk), l);
    let mut a = F::zero();
    for kk in 0..2 * n {
        a = a + powi(l, kk as i64 + 2) * pick(kk) * inv(&k::<F>(2 * ni - kk as i64));
    }
    let mut b = F::zero();
    for kk in 0..=2 * n {
        b = b + powi(l, kk as i64 + 1) * pick(kk) * inv(&k::<F>(2 * ni + 1 - kk as i64));
    }
    c::<F>(&q(-1, 2 * (ni + 1))) + k::<F>(ni + 1) * a + k::<F>(ni + 1) * (l.clone() - F::one()) * b
}

fn harmonic_difference(p: &Point) -> Eval {
    let n = p.n;
    let lhs = harmonic(2 * n + 2) - harmonic(n + 1);
    by_lambda!(p, F, l => (c::<F>(&lhs), harmonic_difference_rhs(n, l, None)))
}

fn harmonic_difference_printed(p: &Point) -> Eval {
    let n = p.n;
    let lhs = harmonic(2 * n + 2) - harmonic(n + 1);
    by_lambda!(p, F, l => (c::<F>(&lhs), harmonic_difference_rhs(n, l, Some(n))))
}

// ---- Apostol-Bernoulli ------------------------------------------------------

fn apostol_y_sum(p: &Point) -> Eval {
    let m = p.n;
    by_lambda!(p, F, l => {
        let via = apostol_via_y(m, l).unwrap();
        let formula = apostol_bernoulli_formula(m, l);
        let series = apostol_bernoulli_series(m, l).pop().unwrap();
        if formula != series {
            (formula, series)
        } else {
            (formula, via)
        }
    })
}

fn apostol_weighted<F: Scalar>(m: usize, l: &F, weight: impl Fn(usize, usize) -> Rational) -> F {
    let r = l.clone() * inv(&(l.clone() - F::one()));
    let mut s = F::zero();
    for n in 0..=m {
        let s2 = stirling2(m, n + 1);
        if s2.is_zero() {
            continue;
        }
        for j in 0..=n {
            s = s + c::<F>(&(weight(n, j) * &s2)) * powi(&r, (n - j) as i64);
        }
    }
    s
}

fn apostol_direct(p: &Point) -> Eval {
    let m = p.n;
    by_lambda!(p, F, l => (
        apostol_bernoulli_formula(m, l),
        apostol_weighted(m, l, |n, j| sgn(n) * fact(n + 1) / Rational::from(j + 1))
            * inv(&(l.clone() - F::one()))
    ))
}

fn apostol_daehee(p: &Point) -> Eval {
    let m = p.n;
    by_lambda!(p, F, l => (
        apostol_bernoulli_formula(m, l),
        apostol_weighted(m, l, |n, j| {
            Rational::from(n + 2) / Rational::from(j + 1) * daehee(n + 1)
        }) * inv(&(F::one() - l.clone()))
    ))
}

fn apostol_bernoulli_stirling(p: &Point) -> Eval {
    let m = p.n;
    by_lambda!(p, F, l => (
        apostol_bernoulli_formula(m, l),
        apostol_weighted(m, l, |n, j| {
            Rational::from(n + 2) / Rational::from(j + 1) * bs_sum(n + 1)
        }) * inv(&(F::one() - l.clone()))
    ))
}

fn apostol_half(p: &Point) -> Eval {
    let m = p.n;
    let h = half();
    let rhs: Rational = (0..=m)
        .map(|n| fact(n + 1) / two_pow(n as i64 + 1) * yq(n, &h) * stirling2(m, n + 1))
        .sum();
    Eval::compare(apostol_bernoulli_formula(m, &h), rhs)
}

fn half_convolution_lhs(m: usize) -> Rational {
    let h = half();
    (0..=m)
        .map(|n| binomial(m as i64, n as i64) * apostol_bernoulli_formula(n, &h) * bernoulli(m - n))
        .sum()
}

fn apostol_half_convolution(p: &Point) -> Eval {
    let m = p.n;
    let h = half();
    let rhs: Rational = if m == 0 {
        Rational::from(0)
    } else {
        (0..m)
            .map(|n| fact(n) / two_pow(n as i64 + 1) * yq(n, &h) * stirling2(m - 1, n))
            .sum::<Rational>()
            * Rational::from(m)
    };
    Eval::compare(half_convolution_lhs(m), rhs)
}

fn apostol_half_convolution_printed(p: &Point) -> Eval {
    let m = p.n;
    let h = half();
    let rhs: Rational = if m == 0 {
        Rational::from(0)
    } else {
        (0..m)
            .map(|n| fact(n + 1) / two_pow(n as i64 + 1) * yq(n, &h) * stirling2(m - 1, n + 1))
            .sum::<Rational>()
            * Rational::from(m)
    };
    Eval::compare(half_convolution_lhs(m), rhs)
}

fn harmonic_stirling2_with(m: usize, extra: i64) -> Eval {
    let h = half();
    let lhs: Rational = (0..=m).map(|n| fact(n) * alt_harmonic(n) * stirling2(m, n)).sum();
    let rhs: Rational = (0..=m)
        .map(|n| fact(n + 1) / two_pow(n as i64 + extra) * yq(n, &h) * stirling2(m, n + 1))
        .sum();
    Eval::compare(lhs, rhs)
}

fn harmonic_stirling2(p: &Point) -> Eval {
    harmonic_stirling2_with(p.n, 2)
}

fn harmonic_stirling2_printed(p: &Point) -> Eval {
    harmonic_stirling2_with(p.n, 0)
}

fn lerch_interpolation(p: &Point) -> Eval {
    let n = p.n;
    let b = p.x();
    by_lambda!(p, F, l => {
        // Σ_v λ^v (v + b)^{n-1}, expanded binomially
        let mut phi = F::zero();
        for kk in 0..n {
            let w = binomial(n as i64 - 1, kk as i64) * Rational::from(b).pow((n - 1 - kk) as i64);
            phi = phi + c::<F>(&w) * power_series_sum(kk, l);
        }
        let poly = apostol_bernoulli_poly(n, l);
        (phi, -poly.eval(&k::<F>(b)) * c::<F>(&q(1, n as i64)))
    })
}

fn lerch_at_one(p: &Point) -> Eval {
    let n = p.n;
    by_lambda!(p, F, l => {
        let at_one = apostol_bernoulli_poly(n, l).eval(&F::one());
        let plain = apostol_bernoulli_formula(n, l);
        let extra = if n == 1 { F::one() } else { F::zero() };
        (l.clone() * at_one, plain + extra)
    })
}

fn entire_series_polynomial(p: &Point) -> Eval {
    by_lambda!(p, F, l => boyadzhiev_poly_check(p.n, l).unwrap())
}

fn cosine_term_lhs<F: Scalar>(m: usize, l: &F) -> F {
    c::<F>(&(sgn(m - 1) / fact(2 * m - 2))) * power_series_sum(2 * m - 2, l)
}

fn cosine_terms(p: &Point) -> Eval {
    let m = p.n;
    by_lambda!(p, F, l => (
        cosine_term_lhs(m, l),
        c::<F>(&(sgn(m) / fact(2 * m - 1))) * apostol_via_y(2 * m - 1, l).unwrap()
    ))
}

fn cosine_terms_printed(p: &Point) -> Eval {
    let m = p.n;
    by_lambda!(p, F, l => (
        cosine_term_lhs(m, l),
        c::<F>(&(sgn(m + 1) / (Rational::from(2) * fact(2 * m - 1))))
            * apostol_via_y(2 * m - 1, l).unwrap()
    ))
}

// ---- λ = 1/2, 2, -1 ---------------------------------------------------------

fn half_daehee(p: &Point) -> Eval {
    let n = p.n;
    let rhs = two_pow(n as i64 + 2) / fact(n) * (fact(n) * alt_harmonic(n) - daehee(n));
    Eval::compare(yq(n, &half()), rhs)
}

fn half_bernoulli_stirling(p: &Point) -> Eval {
    let n = p.n;
    let rhs = two_pow(n as i64 + 2) / fact(n) * (fact(n) * alt_harmonic(n) - bs_sum(n));
    Eval::compare(yq(n, &half()), rhs)
}

fn half_alternating(p: &Point) -> Eval {
    let n = p.n;
    let rhs = two_pow(n as i64 + 2) * (alt_harmonic(n) + q(sign(n as i64 + 1), n as i64 + 1));
    Eval::compare(yq(n, &half()), rhs)
}

fn half_floor_harmonic(p: &Point) -> Eval {
    let n = p.n;
    let rhs = two_pow(n as i64 + 2)
        * (harmonic(n / 2) - harmonic(n) + q(sign(n as i64 + 1), n as i64 + 1));
    Eval::compare(yq(n, &half()), rhs)
}

fn half_harmonic_scaled(p: &Point) -> Eval {
    let n = p.n;
    Eval::compare(yq(n, &half()), two_pow(n as i64 + 2) * alt_harmonic(n + 1))
}

fn half_harmonic_scaled_printed(p: &Point) -> Eval {
    let n = p.n;
    Eval::compare(yq(n, &half()), two_pow(n as i64 + 1) * alt_harmonic(n + 1))
}

fn half_harmonic_inverse(p: &Point) -> Eval {
    let n = p.n;
    Eval::compare(alt_harmonic(n), yq(n - 1, &half()) / two_pow(n as i64 + 1))
}

fn half_generating_difference(p: &Point) -> Eval {
    let n = p.n;
    Eval::compare(
        alt_harmonic(n) - yq(n, &half()) / two_pow(n as i64 + 2),
        q(sign(n as i64), n as i64 + 1),
    )
}

fn bs_partial(m: usize, weight: impl Fn(usize) -> Rational) -> Rational {
    (0..=m).map(|v| bs_sum(v) / fact(v) * weight(v)).sum()
}

fn half_bernoulli_stirling_double(p: &Point) -> Eval {
    let m = p.n;
    let rhs = -two_pow(m as i64 + 2) * bs_partial(m, |_| Rational::from(1));
    Eval::compare(yq(m, &half()), rhs)
}

fn two_bernoulli_stirling_double(p: &Point) -> Eval {
    let m = p.n;
    let rhs = bs_partial(m, |v| sgn(v + m) / two_pow(v as i64 + 1));
    Eval::compare(yq(m, &Rational::from(2)), rhs)
}

fn cauchy_half_sum(p: &Point) -> Eval {
    let n = p.n;
    let h = half();
    let s: Rational = (0..=n)
        .map(|j| yq(j, &h) * bernoulli_second_kind(n - j) / (two_pow(j as i64) * fact(n - j)))
        .sum();
    Eval::compare(s, Rational::from(-4))
}

// ---- harmonic and Daehee ----------------------------------------------------

fn alternating_harmonic_floor(p: &Point) -> Eval {
    let n = p.n;
    Eval::compare(alt_harmonic(n), harmonic(n / 2) - harmonic(n))
}

fn daehee_alternating_step(p: &Point) -> Eval {
    let n = p.n;
    let step = alt_harmonic(n - 1) - alt_harmonic(n);
    Eval::all([
        (daehee(n - 1), fact(n - 1) * step.clone()),
        (step, q(sign(n as i64 - 1), n as i64)),
    ])
}

fn harmonic_daehee_sum(p: &Point) -> Eval {
    let n = p.n;
    let s: Rational = (0..n).map(|j| daehee(j) / fact(j)).sum();
    Eval::compare(alt_harmonic(n), -s)
}

fn harmonic_bernoulli_stirling(p: &Point) -> Eval {
    let n = p.n;
    let s: Rational = (0..n).map(|j| bs_sum(j) / fact(j)).sum();
    Eval::compare(alt_harmonic(n), -s)
}

// ---- recurrences ------------------------------------------------------------

fn recurrence_left<F: Scalar>(n: usize, l: &F) -> F {
    y(n - 1, l) + (l.clone() - F::one()) * y(n, l)
}

fn recurrence_basic(p: &Point) -> Eval {
    let n = p.n;
    by_lambda!(p, F, l => (
        recurrence_left(n, l),
        c::<F>(&q(sign(n as i64), n as i64 + 1)) * inv(&powi(l, n as i64 + 1))
    ))
}

fn recurrence_bernoulli_stirling(p: &Point) -> Eval {
    let n = p.n;
    by_lambda!(p, F, l => (
        recurrence_left(n, l),
        c::<F>(&(bs_sum(n) / fact(n))) * inv(&powi(l, n as i64 + 1))
    ))
}

fn recurrence_daehee(p: &Point) -> Eval {
    let n = p.n;
    by_lambda!(p, F, l => (
        recurrence_left(n, l),
        c::<F>(&(daehee(n) / fact(n))) * inv(&powi(l, n as i64 + 1))
    ))
}

fn recurrence_two(p: &Point) -> Eval {
    let n = p.n;
    let two = Rational::from(2);
    Eval::compare(
        yq(n - 1, &two) + yq(n, &two),
        q(sign(n as i64), n as i64 + 1) / two_pow(n as i64 + 1),
    )
}

fn euler_stirling_sum(n: usize) -> Rational {
    stirling1_row(n).iter().enumerate().map(|(j, s)| euler_at_zero(j) * s).sum()
}

fn recurrence_two_euler(p: &Point) -> Eval {
    let n = p.n;
    let two = Rational::from(2);
    Eval::compare(
        yq(n - 1, &two) + yq(n, &two),
        half() * euler_stirling_sum(n) / fact(n + 1),
    )
}

fn recurrence_half(p: &Point) -> Eval {
    let n = p.n;
    let h = half();
    Eval::compare(
        Rational::from(2) * yq(n - 1, &h) - yq(n, &h),
        Rational::from(sign(n as i64)) * two_pow(n as i64 + 2) / Rational::from(n + 1),
    )
}

fn recurrence_neg_one(p: &Point) -> Eval {
    let n = p.n;
    let l = Rational::from(-1);
    Eval::compare(
        yq(n - 1, &l) - Rational::from(2) * yq(n, &l),
        q(-1, n as i64 + 1),
    )
}

fn recurrence_neg_one_scaled(p: &Point) -> Eval {
    let n = p.n;
    let l = Rational::from(-1);
    let s = Rational::from(n + 1);
    Eval::compare(
        Rational::from(2) * s.clone() * yq(n - 1, &l) - Rational::from(4) * s * yq(n, &l),
        Rational::from(-2),
    )
}

fn neg_one_inverse_binomial(p: &Point) -> Eval {
    let n = p.n;
    Eval::compare(yq(n, &Rational::from(-1)), y_closed_special(n, SpecialLambda::NegOne))
}

fn inverse_binomial_sum(p: &Point) -> Eval {
    let n = p.n as i64;
    let a: Rational = (0..n).map(|j| binomial(n - 1, j).recip()).sum();
    let b: Rational = (0..n).map(|j| binomial(n, j).recip()).sum();
    Eval::compare(a, q(2 * n, n + 1) * b)
}

fn euler_stirling(p: &Point) -> Eval {
    let n = p.n;
    Eval::compare(euler_stirling_sum(n), sgn(n) * fact(n) / two_pow(n as i64))
}

fn daehee_stirling(p: &Point) -> Eval {
    let m = p.n;
    Eval::compare(bs_sum(m), sgn(m) * fact(m) / Rational::from(m + 1))
}

// ---- differential equations -------------------------------------------------

fn pde_sides<F: Scalar>(g: &LaurentSeries<F>, l: &F, n: usize) -> (F, F) {
    let z2z = LaurentSeries::exact(1, vec![-F::one(), F::one()]);
    let tz1 = LaurentSeries::exact(0, vec![-F::one(), k::<F>(2)]);
    let lhs = &(&z2z * &g.derivative()) + &(&tz1 * g);
    // (1-λ)/(λ + (1-λ) z) = w' Σ (-w')^n z^n with w' = (1-λ)/λ
    let wp = (F::one() - l.clone()) * inv(l);
    let rhs = wp.clone() * powi(&-wp, n as i64);
    (coeff(&lhs, n), rhs)
}

fn pde_generating(p: &Point) -> Eval {
    let n = p.n;
    by_lambda!(p, F, l => pde_sides(&series_g(l, n as i64 + 1).unwrap(), l, n))
}

fn pde_special(p: &Point) -> Eval {
    let which = special_of(p.tag());
    let l = which.lambda();
    pde_sides(&series_g_special(which, p.n as i64 + 1), &l, p.n).into()
}

impl From<(Rational, Rational)> for Eval {
    fn from((a, b): (Rational, Rational)) -> Eval {
        Eval::compare(a, b)
    }
}

fn ode_first_lhs(n: usize) -> RationalFunction {
    let l = RationalFunction::var();
    let yn = y_symbolic(n);
    (l - RationalFunction::one()) * yn.derivative() + k::<RationalFunction>(n as i64 + 2) * yn
}

fn ode_first_rhs(n: usize, sign_exp: usize) -> RationalFunction {
    let l = RationalFunction::var();
    let lm1 = l.clone() - RationalFunction::one();
    let mut s = RationalFunction::zero();
    for kk in 0..=n as i64 {
        s = s + powi(&lm1, kk - n as i64 - 1) * powi(&l, -(kk + 2));
    }
    s * k::<RationalFunction>(sign(sign_exp as i64))
}

fn ode_lambda_derivative(p: &Point) -> Eval {
    Eval::compare(ode_first_lhs(p.n), ode_first_rhs(p.n, p.n))
}

fn ode_lambda_derivative_printed(p: &Point) -> Eval {
    Eval::compare(ode_first_lhs(p.n), ode_first_rhs(p.n, p.n + 1))
}

fn ode_second_lhs(n: usize) -> RationalFunction {
    let l = RationalFunction::var();
    let yn = y_symbolic(n);
    yn.derivative() + k::<RationalFunction>(n as i64 + 2) * inv(&(l - RationalFunction::one())) * yn
}

fn ode_lambda_derivative_normalized(p: &Point) -> Eval {
    let n = p.n as i64;
    let l = RationalFunction::var();
    let lm1 = l.clone() - RationalFunction::one();
    let w = lm1.clone() * inv(&l);
    let rhs = k::<RationalFunction>(sign(n))
        * (RationalFunction::one() - powi(&w, n + 1))
        * inv(&(l * powi(&lm1, n + 2)));
    Eval::compare(ode_second_lhs(p.n), rhs)
}

fn ode_lambda_derivative_normalized_printed(p: &Point) -> Eval {
    let n = p.n as i64;
    let l = RationalFunction::var();
    let lm1 = l.clone() - RationalFunction::one();
    let r = l.clone() * inv(&lm1);
    let rhs = k::<RationalFunction>(sign(n)) * inv(&l) * (RationalFunction::one() - powi(&r, n + 1));
    Eval::compare(ode_second_lhs(p.n), rhs)
}

// ---- negative-integer zeta values -------------------------------------------

fn sides(s: crate::zeta::Sides) -> Eval {
    Eval::compare(s.lhs, s.rhs)
}

fn eta_series(p: &Point) -> Eval {
    sides(check_eta_series(p.n, p.m()))
}

fn eta_multinomial(p: &Point) -> Eval {
    sides(check_eta_multinomial(p.n, p.m()))
}

fn eta_n0(p: &Point) -> Eval {
    sides(check_eta_n0(p.m()))
}

fn eta_n0_printed(p: &Point) -> Eval {
    sides(check_eta_n0_printed(p.m()))
}

fn eta_instance_sides(n: usize, m: usize, printed: bool) -> Eval {
    let den: Vec<Rational> = (0..=n)
        .map(|j| Rational::from(j + 1) * two_pow((n + 1 - j) as i64))
        .collect();
    let lcm = den.iter().fold(num_bigint::BigInt::from(1), |a, d| {
        num_integer::Integer::lcm(&a, d.numer())
    });
    let lhs: Rational = eta_instance(n, printed)
        .into_iter()
        .map(|(w, d, x)| Rational::from(w) * multi_eta_neg(d, m, &Rational::from(x)))
        .sum();
    Eval::compare(lhs, Rational::from(lcm) * eta_coefficient(n, m))
}

fn eta_instances(p: &Point) -> Eval {
    eta_instance_sides(p.n, p.m(), false)
}

fn eta_instances_printed(p: &Point) -> Eval {
    eta_instance_sides(p.n, p.m(), true)
}

fn zeta_series(p: &Point) -> Eval {
    sides(check_zeta_series(p.n, p.m()))
}

fn zeta_vanishing(p: &Point) -> Eval {
    sides(check_zeta_vanishing(p.n, p.m()))
}

fn mixed_bernoulli(p: &Point) -> Eval {
    let (n, m) = (p.n, p.m());
    Eval::compare(double_coefficient(n, m, ExpSign::Plus), mixed_value(MixedForm::Bernoulli, n, m))
}

fn mixed_bernoulli_printed(p: &Point) -> Eval {
    let (n, m) = (p.n, p.m());
    Eval::compare(
        double_coefficient(n, m, ExpSign::Minus),
        mixed_value(MixedForm::BernoulliPrinted, n, m),
    )
}

fn mixed_euler(p: &Point) -> Eval {
    let (n, m) = (p.n, p.m());
    Eval::compare(double_coefficient(n, m, ExpSign::Plus), mixed_value(MixedForm::Mixed, n, m))
}

fn mixed_euler_printed(p: &Point) -> Eval {
    let (n, m) = (p.n, p.m());
    Eval::compare(
        double_coefficient(n, m, ExpSign::Minus),
        mixed_value(MixedForm::MixedPrinted, n, m),
    )
}

fn mixed_closing(p: &Point) -> Eval {
    let (n, m) = (p.n, p.m());
    Eval::compare(mixed_value(MixedForm::Bernoulli, n, m), mixed_value(MixedForm::Mixed, n, m))
}

fn mixed_closing_printed(p: &Point) -> Eval {
    let (n, m) = (p.n, p.m());
    Eval::compare(
        mixed_value(MixedForm::BernoulliUnsigned, n, m),
        mixed_value(MixedForm::MixedAtZero, n, m),
    )
}

fn hurwitz_shift(p: &Point) -> Eval {
    let (d, m) = (p.n, p.m());
    let x = Rational::from(p.x());
    let x1 = x.clone() + Rational::from(1);
    let lower = if d == 1 { x.pow(m as i64) } else { multi_hurwitz_neg(d - 1, m, &x) };
    Eval::compare(multi_hurwitz_neg(d, m, &x) - multi_hurwitz_neg(d, m, &x1), lower)
}

fn hurwitz_classical(p: &Point) -> Eval {
    let m = p.n;
    let x = Rational::from(p.x());
    let bpoly: Rational = (0..=m + 1)
        .map(|kk| binomial(m as i64 + 1, kk as i64) * bernoulli(kk) * x.pow((m + 1 - kk) as i64))
        .sum();
    Eval::all([
        (multi_hurwitz_neg(1, m, &x), -bpoly / Rational::from(m + 1)),
        (bernoulli_high(1, m + 1).eval(&x), {
            let b: Rational = (0..=m + 1)
                .map(|kk| binomial(m as i64 + 1, kk as i64) * bernoulli(kk) * x.pow((m + 1 - kk) as i64))
                .sum();
            b
        }),
    ])
}

fn eta_shift(p: &Point) -> Eval {
    let (d, m) = (p.n, p.m());
    let x = Rational::from(p.x());
    let x1 = x.clone() + Rational::from(1);
    let lower = if d == 1 { x.pow(m as i64) } else { multi_eta_neg(d - 1, m, &x) };
    Eval::compare(
        multi_eta_neg(d, m, &x) + multi_eta_neg(d, m, &x1),
        Rational::from(2) * lower,
    )
}

// ---- Volkenborn -------------------------------------------------------------

fn top_level(p: u64) -> u32 {
    match p {
        2 | 3 => 8,
        _ => 5,
    }
}

fn valuation_list(r: &crate::volkenborn::ConvergenceReport) -> String {
    let v: Vec<String> = r.samples.iter().map(|s| s.error_valuation.to_string()).collect();
    format!("valuations [{}]", v.join(", "))
}

fn volkenborn_power(p: &Point) -> Eval {
    let prime = p.x() as u64;
    let r = convergence_report(Integrand::Power, p.n, prime, 1..=top_level(prime)).unwrap();
    Eval {
        lhs: valuation_list(&r),
        rhs: format!("at least N-{}, strictly increasing from N=4", p.n + 2),
        holds: r.threshold_ok && r.increasing_ok,
    }
}

fn volkenborn_limit(p: &Point, integrand: Integrand) -> Eval {
    let prime = p.x() as u64;
    let top = top_level(prime);
    let r = convergence_report(integrand, p.n, prime, 1..=top).unwrap();
    let last = &r.samples.last().unwrap().error_valuation;
    Eval {
        lhs: valuation_list(&r),
        rhs: format!("at least 1 at N={top}, limit {}", integrand.limit(p.n)),
        holds: last.at_least(1),
    }
}

fn volkenborn_falling(p: &Point) -> Eval {
    volkenborn_limit(p, Integrand::Falling)
}

fn volkenborn_binom(p: &Point) -> Eval {
    let prime = p.x() as u64;
    let closed = (1..=top_level(prime)).map(|lv| {
        let s = volkenborn_partial_sum(Integrand::Binom, p.n, prime, lv).unwrap();
        (s.partial_sum, binom_partial_closed(p.n, prime, lv))
    });
    let e = Eval::all(closed);
    if !e.holds {
        return e;
    }
    volkenborn_limit(p, Integrand::Binom)
}

fn volkenborn_generating(p: &Point) -> Eval {
    let t = p.n as i64;
    let r = match p.lambda() {
        Lambda::Value(l) => pg_series_check(l, t).unwrap(),
        Lambda::Symbolic => pg_series_check(&RationalFunction::var(), t).unwrap(),
    };
    Eval {
        lhs: format!("mercator={}, stirling={}", r.mercator, r.stirling),
        rhs: "mercator=true, stirling=true".to_string(),
        holds: r.holds(),
    }
}

fn volkenborn_mahler_recurrence(p: &Point) -> Eval {
    let n = p.n;
    by_lambda!(p, F, l => (y::<F>(n, l), mahler_recurrence_sequence(n, l).unwrap().pop().unwrap()))
}

// ---- number families ---------------------------------------------------------

fn stirling_first_routes(p: &Point) -> Eval {
    let n = p.n;
    Eval::all((0..=n).map(|kk| {
        (stirling1(n, kk, StirlingMethod::Recurrence), stirling1(n, kk, StirlingMethod::Formula))
    }))
}

fn stirling_second_routes(p: &Point) -> Eval {
    let n = p.n;
    Eval::all((0..=n).map(|kk| (stirling2(n, kk), stirling2_recurrence(n, kk))))
}

fn bernoulli_routes(p: &Point) -> Eval {
    let n = p.n;
    Eval::compare(
        bernoulli_numbers(n).pop().unwrap(),
        bernoulli_numbers_recurrence(n).pop().unwrap(),
    )
}

fn daehee_routes(p: &Point) -> Eval {
    Eval::compare(daehee(p.n), daehee_via_stirling(p.n))
}

fn derangement_routes(p: &Point) -> Eval {
    Eval::compare(derangement(p.n), derangement_recurrence(p.n))
}

fn leibnitz_routes(p: &Point) -> Eval {
    let n = p.n;
    Eval::all((0..=n).flat_map(|l| {
        let closed = leibnitz(n, l, LeibnitzMethod::Closed).unwrap();
        [
            (closed.clone(), leibnitz(n, l, LeibnitzMethod::Sum).unwrap()),
            (closed, leibnitz(n, l, LeibnitzMethod::Bernstein).unwrap()),
        ]
    }))
}

// ---- the catalog --------------------------------------------------------------

fn rec(
    id: &'static str,
    family: Family,
    anchor: &'static str,
    sweep: Sweep,
    check: super::Check,
) -> IdentityRecord {
    IdentityRecord {
        id,
        family,
        anchor,
        corrected: None,
        status: Status::PrintedOk,
        sweep,
        check,
        printed: None,
    }
}

#[allow(clippy::too_many_arguments)]
fn typo(
    id: &'static str,
    family: Family,
    anchor: &'static str,
    corrected: &'static str,
    sweep: Sweep,
    check: super::Check,
    printed: super::Check,
    witness: (Point, &'static str, &'static str),
) -> IdentityRecord {
    IdentityRecord {
        id,
        family,
        anchor,
        corrected: Some(corrected),
        status: Status::PrintedFailsCorrectedOk,
        sweep,
        check,
        printed: Some(Printed {
            statement: anchor,
            check: printed,
            witness: witness.0,
            witness_lhs: witness.1,
            witness_rhs: witness.2,
        }),
    }
}

fn two() -> Rational {
    Rational::from(2)
}

/// Every catalogued identity, in no particular order.
pub fn catalog() -> Vec<IdentityRecord> {
    use Family::*;
    let gs: &[&'static str] = &["g1", "g2", "g3"];
    vec![
        // definition
        rec(
            "finite-sum-algorithm",
            Definition,
            "y(m,λ) = Σ_{v≤m} Σ_{n≤v} (-1)^{v-m} (λ-1)^{v-m-1} B_n S₁(v,n) / (λ^{v+1} v!)",
            Sweep::n(0..=20).cap(60).sample().symbolic(10),
            finite_sum_algorithm,
        ),
        rec(
            "finite-sum-recurrence",
            Definition,
            "y(n,λ) from y(0,λ) = 1/(λ(λ-1)) and the first-order recurrence equals the direct sum",
            Sweep::n(0..=20).cap(60).sample().symbolic(10),
            finite_sum_recurrence,
        ),
        rec(
            "value-table",
            Definition,
            "y(0..4,λ) = 1/(λ(λ-1)), (-3λ+1)/(2λ²(λ-1)²), …, (137λ⁴-163λ³+137λ²-63λ+12)/(60λ⁵(λ-1)⁵)",
            Sweep::n(0..=4).symbolic(4),
            value_table,
        ),
        rec(
            "oeis-leading",
            Definition,
            "|leading numerator coefficient of y(n-1,λ)| = lcm(1..n) H_n (A025529)",
            Sweep::n(1..=20).cap(40),
            oeis_leading,
        ),
        // generating functions
        rec(
            "genfun-coefficients",
            Genfun,
            "ln(1 - ((λ-1)/λ) z) / (z(z-1)) = Σ (1-λ)^{n+2} y(n,λ) z^n",
            Sweep::n(0..=20).cap(40).sample().symbolic(10),
            genfun_coefficients,
        ),
        typo(
            "genfun-hypergeometric",
            Genfun,
            "G(z,λ) = ((1-λ) z / (λ(z-1))) ₂F₁(1,1;2;((1-λ)/λ) z)",
            "G(z,λ) = ((1-λ) / (λ(z-1))) ₂F₁(1,1;2;((λ-1)/λ) z)",
            Sweep::n(0..=20).cap(40).sample().symbolic(10),
            genfun_hypergeometric,
            genfun_hypergeometric_printed,
            (Point::new(0).with_lambda(two()), "1/2", "0"),
        ),
        rec(
            "genfun-special",
            Genfun,
            "g1, g2, g3 are G(z,λ) at λ = -1, 2, 1/2",
            Sweep::n(0..=20).cap(40).tags(gs),
            genfun_special,
        ),
        typo(
            "leibnitz-functional",
            Genfun,
            "-w (x + 1 - w z) 𝒢(x, w z) = (z-1) G(z,λ) + x(xz-1) G(xz,λ), w = (λ-1)/λ",
            "-w (x + 1 - x w z) 𝒢(x, w z) = (z-1) G(z,λ) + x(xz-1) G(xz,λ)",
            Sweep::n(0..=16).cap(24).sample().symbolic(6).x(&[0, 1, 2, -3]),
            leibnitz_functional,
            leibnitz_functional_printed,
            (Point::new(1).with_lambda(two()).with_x(0), "1/8", "-1/8"),
        ),
        rec(
            "leibnitz-coefficients",
            Genfun,
            "(x+1) L_n(x) - x L_{n-1}(x) = (-1)^n λ^{n+1} (x^{n+1}+1) ((λ-1) y(n,λ) + y(n-1,λ))",
            Sweep::n(1..=16).cap(30).sample().symbolic(8).x(&[0, 1, 2, -3]),
            leibnitz_coefficients,
        ),
        typo(
            "derangement-convolution",
            Genfun,
            "-Σ_m C(n,m) ((1-λ)/λ)^{n-m+1} D_{n-m} d_m = Σ_j (-1)^{n-j}/(n-j)! (1-λ)^{j+2} y(j,λ)",
            "-Σ_m C(n,m) ((1-λ)/λ)^{n-m+1} D_{n-m} d_m = n! Σ_j (-1)^{n-j}/(n-j)! (1-λ)^{j+2} y(j,λ)",
            Sweep::n(0..=20).cap(30).sample().symbolic(8),
            derangement_convolution,
            derangement_convolution_printed,
            (Point::new(2).with_lambda(two()), "7/12", "7/24"),
        ),
        typo(
            "derangement-double-sum",
            Genfun,
            "Σ_j (-1)^{n-j}/(n-j)! (1-λ)^{j+2} y(j,λ) = Σ_m Σ_{j≤m} (-1)^{n-m+j+1} ((1-λ)/λ)^{n-m+1} n! / ((n-m+1) j!)",
            "Σ_j (-1)^{n-j}/(n-j)! (1-λ)^{j+2} y(j,λ) = Σ_m Σ_{j≤m} (-1)^{n-m+j+1} ((1-λ)/λ)^{n-m+1} / ((n-m+1) j!)",
            Sweep::n(0..=20).cap(30).sample().symbolic(8),
            derangement_double_sum,
            derangement_double_sum_printed,
            (Point::new(2).with_lambda(two()), "7/24", "7/12"),
        ),
        rec(
            "fibonacci-type",
            Numbers,
            "explicit Fibonacci-type polynomials G_n(x,y;k,m,l) satisfy their generating-function recurrence",
            Sweep::n(0..=12).cap(20).tags(&["k=1,m=1,l=1", "k=2,m=1,l=1", "k=1,m=2,l=1", "k=1,m=1,l=2"]),
            fibonacci_type,
        ),
        // log-product apparatus
        typo(
            "log-product-coefficients",
            LogProduct,
            "G(z,λ) ln(1 + wz) = Σ_n Σ_{k≤n} (-1)^n (1-λ)^{n+3} y(k,λ) / ((n+1-k) λ^{n+1-k}) z^{n+1}",
            "G(z,λ) ln(1 + wz) = -Σ_n Σ_{k≤n} (1-λ)^{n+3} y(k,λ) / ((n+1-k) λ^{n+1-k}) z^{n+1}",
            Sweep::n(0..=20).cap(30).sample().symbolic(8),
            log_product_coefficients,
            log_product_coefficients_printed,
            (Point::new(0).with_lambda(two()), "1/4", "-1/4"),
        ),
        typo(
            "log-product-furdui",
            LogProduct,
            "ln(1-y) ln(1+y) = Σ_v (H_v - H_v - 1/(2v)) y^{2v} / v",
            "ln(1-y) ln(1+y) = Σ_v (H_v - H_{2v} - 1/(2v)) y^{2v} / v",
            Sweep::n(1..=20).cap(40),
            log_product_furdui,
            log_product_furdui_printed,
            (Point::new(1), "-1", "-1/2"),
        ),
        rec(
            "log-product-even-part",
            LogProduct,
            "(H_n - H_{2n} - 1/(2n)) w^{2n}/n = Σ_{k≤2n-2} (1-λ)^{2n+1} y(k,λ)/((2n-1-k) λ^{2n-1-k}) - Σ_{k≤2n-3} (1-λ)^{2n} y(k,λ)/((2n-2-k) λ^{2n-2-k})",
            Sweep::n(1..=10).cap(20).sample().symbolic(5),
            log_product_even_part,
        ),
        rec(
            "log-product-zero-sum",
            LogProduct,
            "Σ_{k≤2n-2} (1-λ)^{2n+1} y(k,λ)/((2n-k-1) λ^{2n-k-1}) = Σ_{k≤2n-1} (1-λ)^{2n+2} y(k,λ)/((2n-k) λ^{2n-k})",
            Sweep::n(1..=10).cap(20).sample().symbolic(5),
            log_product_zero_sum,
        ),
        typo(
            "log-product-harmonic-difference",
            LogProduct,
            "H_{2n+2} - H_{n+1} = -1/(2(n+1)) + (n+1) Σ_{k≤2n-1} λ^{k+2} y(n,λ)/(2n-k) + (n+1)(λ-1) Σ_{k≤2n} λ^{k+1} y(n,λ)/(2n+1-k)",
            "H_{2n+2} - H_{n+1} = -1/(2(n+1)) + (n+1) Σ_{k≤2n-1} λ^{k+2} y(k,λ)/(2n-k) + (n+1)(λ-1) Σ_{k≤2n} λ^{k+1} y(k,λ)/(2n+1-k)",
            Sweep::n(1..=10).cap(20).sample().symbolic(5),
            harmonic_difference,
            harmonic_difference_printed,
            (Point::new(1).with_lambda(two()), "7/12", "-313/12"),
        ),
        // Apostol-Bernoulli
        rec(
            "apostol-y-sum",
            Apostol,
            "𝓑_m(λ) = Σ_{n≤m} (n+1)! λ^{n+1} y(n,λ) S₂(m,n+1)",
            Sweep::n(0..=14).cap(24).sample().symbolic(10),
            apostol_y_sum,
        ),
        rec(
            "apostol-direct-sum",
            Apostol,
            "𝓑_m(λ) = (1/(λ-1)) Σ_{n≤m} Σ_{j≤n} (-1)^n (n+1)!/(j+1) (λ/(λ-1))^{n-j} S₂(m,n+1)",
            Sweep::n(0..=14).cap(24).sample().symbolic(10),
            apostol_direct,
        ),
        rec(
            "apostol-daehee",
            Apostol,
            "𝓑_m(λ) = (1/(1-λ)) Σ_{n≤m} Σ_{j≤n} (n+2)/(j+1) (λ/(λ-1))^{n-j} D_{n+1} S₂(m,n+1)",
            Sweep::n(0..=14).cap(24).sample().symbolic(10),
            apostol_daehee,
        ),
        rec(
            "apostol-bernoulli-stirling",
            Apostol,
            "𝓑_m(λ) = (1/(1-λ)) Σ_{n≤m} Σ_{j≤n} Σ_{k≤n+1} (n+2)/(j+1) (λ/(λ-1))^{n-j} B_k S₁(n+1,k) S₂(m,n+1)",
            Sweep::n(0..=14).cap(24).sample().symbolic(10),
            apostol_bernoulli_stirling,
        ),
        rec(
            "apostol-half",
            Apostol,
            "𝓑_m(1/2) = Σ_{n≤m} (n+1)!/2^{n+1} y(n,1/2) S₂(m,n+1)",
            Sweep::n(0..=20).cap(40),
            apostol_half,
        ),
        typo(
            "apostol-half-convolution",
            Apostol,
            "Σ_n C(m,n) 𝓑_n(1/2) B_{m-n} = m Σ_{n≤m-1} (n+1)!/2^{n+1} y(n,1/2) S₂(m-1,n+1)",
            "Σ_n C(m,n) 𝓑_n(1/2) B_{m-n} = m Σ_{n≤m-1} n!/2^{n+1} y(n,1/2) S₂(m-1,n)",
            Sweep::n(0..=20).cap(40),
            apostol_half_convolution,
            apostol_half_convolution_printed,
            (Point::new(1), "-2", "0"),
        ),
        typo(
            "harmonic-alternating-stirling2",
            Harmonic,
            "Σ_n n! 𝓗_n S₂(m,n) = Σ_n (n+1)!/2^n y(n,1/2) S₂(m,n+1)",
            "Σ_n n! 𝓗_n S₂(m,n) = Σ_n (n+1)!/2^{n+2} y(n,1/2) S₂(m,n+1)",
            Sweep::n(0..=20).cap(40),
            harmonic_stirling2,
            harmonic_stirling2_printed,
            (Point::new(1), "-1", "-4"),
        ),
        rec(
            "lerch-interpolation",
            Series,
            "Φ(λ,1-n,b) = Σ_v λ^v (v+b)^{n-1} = -𝓑_n(b;λ)/n",
            Sweep::n(1..=12).cap(20).sample().symbolic(6).x(&[1, 2, 3]),
            lerch_interpolation,
        ),
        rec(
            "lerch-at-one",
            Series,
            "λ 𝓑_1(1;λ) = 1 + 𝓑_1(λ) and λ 𝓑_n(1;λ) = 𝓑_n(λ) for n ≥ 2",
            Sweep::n(1..=14).cap(24).sample().symbolic(8),
            lerch_at_one,
        ),
        rec(
            "entire-series-polynomial",
            Series,
            "Σ_v v^M λ^v = -(1/(M+1)) Σ_n (n+1)! λ^{n+1} y(n,λ) S₂(M+1,n+1)",
            Sweep::n(0..=12).cap(20).sample().symbolic(8),
            entire_series_polynomial,
        ),
        typo(
            "cosine-apostol-terms",
            Series,
            "Σ_v λ^v cos v = Σ_{m≥1} (-1)^{m+1} 𝓑_{2m-1}(λ) / (2 (2m-1)!), termwise against (-1)^{m-1}/(2m-2)! Σ_v v^{2m-2} λ^v",
            "Σ_v λ^v cos v = Σ_{m≥1} (-1)^m 𝓑_{2m-1}(λ) / (2m-1)!, termwise",
            Sweep::n(1..=10).cap(16).sample().symbolic(5),
            cosine_terms,
            cosine_terms_printed,
            (Point::new(1).with_lambda(half()), "2", "-1"),
        ),
        // λ = 1/2
        rec(
            "half-daehee",
            Half,
            "y(n,1/2) = (2^{n+2}/n!) (n! 𝓗_n - D_n)",
            Sweep::n(0..=40).cap(80),
            half_daehee,
        ),
        rec(
            "half-bernoulli-stirling",
            Half,
            "y(n,1/2) = (2^{n+2}/n!) (n! 𝓗_n - Σ_j B_j S₁(n,j))",
            Sweep::n(0..=40).cap(80),
            half_bernoulli_stirling,
        ),
        rec(
            "half-alternating",
            Half,
            "y(n,1/2) = 2^{n+2} (𝓗_n + (-1)^{n+1}/(n+1))",
            Sweep::n(0..=40).cap(80),
            half_alternating,
        ),
        rec(
            "half-floor-harmonic",
            Half,
            "y(n,1/2) = 2^{n+2} (H_{⌊n/2⌋} - H_n + (-1)^{n+1}/(n+1))",
            Sweep::n(0..=40).cap(80),
            half_floor_harmonic,
        ),
        typo(
            "half-harmonic-scaled",
            Half,
            "y(n,1/2) = 2^{n+1} 𝓗_{n+1}",
            "y(n,1/2) = 2^{n+2} 𝓗_{n+1}",
            Sweep::n(0..=40).cap(80),
            half_harmonic_scaled,
            half_harmonic_scaled_printed,
            (Point::new(0), "-4", "-2"),
        ),
        rec(
            "half-harmonic-inverse",
            Half,
            "𝓗_n = y(n-1,1/2) / 2^{n+1}",
            Sweep::n(1..=40).cap(80),
            half_harmonic_inverse,
        ),
        rec(
            "half-generating-difference",
            Half,
            "Σ 𝓗_n z^n - g3(z) = Σ (-1)^n z^n/(n+1)",
            Sweep::n(0..=40).cap(80),
            half_generating_difference,
        ),
        rec(
            "half-bernoulli-stirling-double",
            Half,
            "y(m,1/2) = -2^{m+2} Σ_{v≤m} Σ_{n≤v} B_n S₁(v,n)/v!",
            Sweep::n(0..=30).cap(60),
            half_bernoulli_stirling_double,
        ),
        rec(
            "two-bernoulli-stirling-double",
            Half,
            "y(m,2) = Σ_{v≤m} Σ_{n≤v} (-1)^{v-m} B_n S₁(v,n) / (2^{v+1} v!)",
            Sweep::n(0..=30).cap(60),
            two_bernoulli_stirling_double,
        ),
        rec(
            "cauchy-half-sum",
            Half,
            "Σ_{j≤n} y(j,1/2) b_{n-j}(0) / (2^j (n-j)!) = -4",
            Sweep::n(0..=25).cap(40),
            cauchy_half_sum,
        ),
        // harmonic and Daehee
        rec(
            "daehee-alternating-step",
            Harmonic,
            "D_{n-1} = (n-1)! (𝓗_{n-1} - 𝓗_n) and 𝓗_{n-1} - 𝓗_n = (-1)^{n-1}/n",
            Sweep::n(1..=40).cap(80),
            daehee_alternating_step,
        ),
        rec(
            "harmonic-daehee-sum",
            Harmonic,
            "𝓗_n = -Σ_{j<n} D_j / j!",
            Sweep::n(1..=40).cap(80),
            harmonic_daehee_sum,
        ),
        rec(
            "harmonic-bernoulli-stirling",
            Harmonic,
            "𝓗_n = -Σ_{j<n} Σ_{v≤j} B_v S₁(j,v) / j!",
            Sweep::n(1..=30).cap(60),
            harmonic_bernoulli_stirling,
        ),
        rec(
            "alternating-harmonic-floor",
            Harmonic,
            "𝓗_n = H_{⌊n/2⌋} - H_n",
            Sweep::n(0..=60).cap(120),
            alternating_harmonic_floor,
        ),
        // recurrences
        rec(
            "recurrence-basic",
            Recurrence,
            "y(n-1,λ) + (λ-1) y(n,λ) = (-1)^n / ((n+1) λ^{n+1})",
            Sweep::n(1..=20).cap(60).sample().symbolic(10),
            recurrence_basic,
        ),
        rec(
            "recurrence-bernoulli-stirling",
            Recurrence,
            "y(n-1,λ) + (λ-1) y(n,λ) = Σ_j B_j S₁(n,j) / (λ^{n+1} n!)",
            Sweep::n(1..=20).cap(60).sample().symbolic(10),
            recurrence_bernoulli_stirling,
        ),
        rec(
            "recurrence-daehee",
            Recurrence,
            "y(n-1,λ) + (λ-1) y(n,λ) = D_n / (λ^{n+1} n!)",
            Sweep::n(1..=20).cap(60).sample().symbolic(10),
            recurrence_daehee,
        ),
        rec(
            "recurrence-two",
            Recurrence,
            "y(n-1,2) + y(n,2) = (-1)^n / ((n+1) 2^{n+1})",
            Sweep::n(1..=40).cap(80),
            recurrence_two,
        ),
        rec(
            "recurrence-two-euler",
            Recurrence,
            "y(n-1,2) + y(n,2) = (1/2) Σ_j E_j S₁(n,j) / (n+1)!",
            Sweep::n(1..=12).cap(30),
            recurrence_two_euler,
        ),
        rec(
            "recurrence-half",
            Recurrence,
            "2 y(n-1,1/2) - y(n,1/2) = (-1)^n 2^{n+2} / (n+1)",
            Sweep::n(1..=40).cap(80),
            recurrence_half,
        ),
        rec(
            "recurrence-neg-one",
            Recurrence,
            "y(n-1,-1) - 2 y(n,-1) = -1/(n+1)",
            Sweep::n(1..=40).cap(80),
            recurrence_neg_one,
        ),
        rec(
            "recurrence-neg-one-scaled",
            Recurrence,
            "2(n+1) y(n-1,-1) - 4(n+1) y(n,-1) = -2",
            Sweep::n(1..=40).cap(80),
            recurrence_neg_one_scaled,
        ),
        rec(
            "neg-one-inverse-binomial",
            Recurrence,
            "y(n,-1) = (1/(2(n+1))) Σ_j 1/C(n,j)",
            Sweep::n(0..=40).cap(80),
            neg_one_inverse_binomial,
        ),
        rec(
            "inverse-binomial-sum",
            Numbers,
            "Σ_{j<n} 1/C(n-1,j) = (2n/(n+1)) Σ_{j<n} 1/C(n,j)",
            Sweep::n(1..=60).cap(120),
            inverse_binomial_sum,
        ),
        rec(
            "euler-stirling",
            Numbers,
            "Σ_j E_j S₁(n,j) = (-1)^n n! / 2^n, E_j = E_j(0)",
            Sweep::n(0..=12).cap(30),
            euler_stirling,
        ),
        rec(
            "daehee-bernoulli-stirling",
            Numbers,
            "Σ_{n≤m} B_n S₁(m,n) = (-1)^m m!/(m+1)",
            Sweep::n(0..=20).cap(60),
            daehee_stirling,
        ),
        // differential equations
        rec(
            "pde-generating",
            Differential,
            "(z²-z) ∂G/∂z + (2z-1) G = (1-λ)/(λ + (1-λ) z)",
            Sweep::n(0..=20).cap(40).sample().symbolic(10),
            pde_generating,
        ),
        rec(
            "pde-special",
            Differential,
            "(z²-z) g' + (2z-1) g = 2/(2z-1), 1/(z-2), 1/(z+1) for g1, g2, g3",
            Sweep::n(0..=20).cap(40).tags(gs),
            pde_special,
        ),
        typo(
            "ode-lambda-derivative",
            Differential,
            "(λ-1) dy(n,λ)/dλ + (n+2) y(n,λ) = (-1)^{n+1} Σ_{k≤n} (λ-1)^{k-n-1} / λ^{k+2}",
            "(λ-1) dy(n,λ)/dλ + (n+2) y(n,λ) = (-1)^n Σ_{k≤n} (λ-1)^{k-n-1} / λ^{k+2}",
            Sweep::n(0..=10).cap(14).symbolic(10),
            ode_lambda_derivative,
            ode_lambda_derivative_printed,
            (Point::new(0).symbolic(), "(1)/(L^3 - L^2)", "(-1)/(L^3 - L^2)"),
        ),
        typo(
            "ode-lambda-derivative-normalized",
            Differential,
            "dy(n,λ)/dλ + ((n+2)/(λ-1)) y(n,λ) = ((-1)^n/λ) (1 - (λ/(λ-1))^{n+1})",
            "dy(n,λ)/dλ + ((n+2)/(λ-1)) y(n,λ) = (-1)^n (1 - ((λ-1)/λ)^{n+1}) / (λ (λ-1)^{n+2})",
            Sweep::n(0..=10).cap(14).symbolic(10),
            ode_lambda_derivative_normalized,
            ode_lambda_derivative_normalized_printed,
            (Point::new(0).symbolic(), "(1)/(L^4 - 2*L^3 + L^2)", "(-1)/(L^2 - L)"),
        ),
        // negative-integer zeta values
        rec(
            "eta-series",
            Zeta,
            "m! [t^m] y(n,-e^{-t}) = Σ_j ζ_E^{(n+1-j)}(-m,n+2) / ((j+1) 2^{n+1-j}) with ζ_E^{(d)}(-m,x) = E_m^{(d)}(x)",
            Sweep::n(0..=6).cap(8).m(0..=8),
            eta_series,
        ),
        rec(
            "eta-multinomial",
            Zeta,
            "Σ_j ζ_E^{(n+1-j)}(-m,n+2)/((j+1)2^{n+1-j}) = Σ_j Σ_l Σ_{l_1+…+l_d=l} C(m,l) (n+2)^{m-l} l! Π E_{l_i}/l_i! / ((j+1) 2^{n+1-j})",
            Sweep::n(0..=6).cap(8).m(0..=8),
            eta_multinomial,
        ),
        typo(
            "eta-n0",
            Zeta,
            "E_{m+1}(2) = ζ_E(-m,2)",
            "E_m(2) = ζ_E(-m,2) = 2 m! [t^m] y(0,-e^{-t})",
            Sweep::n(0..=0).m(0..=12),
            eta_n0,
            eta_n0_printed,
            (Point::new(0).with_m(0), "3/2", "1"),
        ),
        typo(
            "eta-instances",
            Zeta,
            "n=1: ζ_E^{(2)}(-m,3) - ζ_E(-m,3); n=2: 3ζ_E^{(3)}(-m,4) + 3ζ_E^{(2)}(-m,4) + 8ζ_E(-m,3); n=3: weights 15,15,10,10,24 on orders 5..1 at 5",
            "n=1: weights 1,1 on orders 2,1 at 3; n=2: 3,3,4 on orders 3,2,1 at 4; n=3: 3,3,4,6 on orders 4,3,2,1 at 5 (each equals lcm × m![t^m] y(n,-e^{-t}))",
            Sweep::n(1..=3).m(0..=6),
            eta_instances,
            eta_instances_printed,
            (Point::new(1).with_m(0), "0", "2"),
        ),
        rec(
            "eta-shift",
            Zeta,
            "ζ_E^{(d)}(-m,x) + ζ_E^{(d)}(-m,x+1) = 2 ζ_E^{(d-1)}(-m,x)",
            Sweep::n(1..=5).m(0..=8).x(&[1, 2, 3]),
            eta_shift,
        ),
        rec(
            "hurwitz-classical",
            Zeta,
            "ζ(-m,x) = -B_{m+1}(x)/(m+1)",
            Sweep::n(0..=12).cap(20).x(&[1, 2, 3]),
            hurwitz_classical,
        ),
        rec(
            "hurwitz-shift",
            Zeta,
            "ζ_d(-m,x) - ζ_d(-m,x+1) = ζ_{d-1}(-m,x) with ζ_d(-m,x) = (-1)^d m! B^{(d)}_{m+d}(x)/(d+m)!",
            Sweep::n(1..=5).m(0..=8).x(&[1, 2, 3]),
            hurwitz_shift,
        ),
        rec(
            "zeta-series",
            Zeta,
            "m! [t^m] y(n,e^{-t}) = Σ_j (-1)^n ζ_{n+1-j}(-m,n+2)/(j+1) for m ≥ 0 (regular part)",
            Sweep::n(0..=4).cap(6).m(0..=6),
            zeta_series,
        ),
        rec(
            "zeta-vanishing",
            Zeta,
            "Σ_j ((-1)^n ζ_{n+1-j}(-m,n+2) + (-1)^j B^{(n+1-j)}_{m+n+1-j}(n+2) / (C(m+n+1-j,n+1-j) (n+1-j)!)) / (j+1) = 0",
            Sweep::n(0..=4).cap(6).m(0..=6),
            zeta_vanishing,
        ),
        typo(
            "mixed-bernoulli",
            Zeta,
            "m! [t^m] y(n,-e^{-2t}) = Σ_j (-1)^{j-1} (-1)^j B^{(d)}_{m+d}(n+2) / ((j+1) 2^d C(m+d,d) d!), d = n+1-j",
            "m! [t^m] y(n,e^{-2t}) = Σ_j (-1)^{j-1} 2^m B^{(d)}_{m+d}(n+2) / ((j+1) C(m+d,d) d!)",
            Sweep::n(0..=4).cap(6).m(0..=6),
            mixed_bernoulli,
            mixed_bernoulli_printed,
            (Point::new(0).with_m(0), "1/2", "-3/4"),
        ),
        typo(
            "mixed-euler",
            Zeta,
            "m! [t^m] y(n,-e^{-2t}) = Σ_j Σ_{c≤m} (-1)^{j-1} C(m,c) B^{(d)}_{c+d}(2n+4) E^{(d)}_{m-c}(n+2) / (C(c+d,d) d! (j+1) 2^d)",
            "m! [t^m] y(n,e^{-2t}) = Σ_j Σ_{c=-d}^{m} (-1)^{j-1} m! B^{(d)}_{c+d}(2n+4) E^{(d)}_{m-c}(0) / ((c+d)! (m-c)! (j+1) 2^d)",
            Sweep::n(0..=4).cap(6).m(0..=6),
            mixed_euler,
            mixed_euler_printed,
            (Point::new(0).with_m(0), "1/2", "-7/4"),
        ),
        typo(
            "mixed-closing",
            Zeta,
            "Σ_j (-1)^{j-1} B^{(d)}_{m+d}(n+2) / (d! (j+1) 2^d C(m+d,d)) = Σ_j (-1)^{j-1}/(d! (j+1) 2^d) Σ_{c≤m} C(m,c) B^{(d)}_{c+d}(2n+4) E^{(d)}_{m-c} / C(c+d,d)",
            "the 2^m Bernoulli form of m! [t^m] y(n,e^{-2t}) equals its mixed form with c from -d to m",
            Sweep::n(0..=4).cap(6).m(0..=6),
            mixed_closing,
            mixed_closing_printed,
            (Point::new(0).with_m(0), "-3/4", "-7/4"),
        ),
        // Volkenborn
        rec(
            "volkenborn-bernoulli",
            Volkenborn,
            "∫_{Z_p} x^j dμ₁ = B_j, with v_p(S_N - B_j) ≥ N - j - 2",
            Sweep::n(0..=6).cap(8).x(&[2, 3, 5]),
            volkenborn_power,
        ),
        rec(
            "volkenborn-daehee",
            Volkenborn,
            "∫_{Z_p} (x)_n dμ₁ = D_n",
            Sweep::n(0..=6).cap(8).x(&[2, 3, 5]),
            volkenborn_falling,
        ),
        rec(
            "volkenborn-mahler",
            Volkenborn,
            "∫_{Z_p} C(x,n) dμ₁ = (-1)^n/(n+1)",
            Sweep::n(0..=6).cap(8).x(&[2, 3, 5]),
            volkenborn_binom,
        ),
        rec(
            "volkenborn-generating",
            Volkenborn,
            "G(t,λ) = ((1-λ)/(λ(t-1))) ∫_{Z_p} (1 + ((1-λ)/λ) t)^x dμ₁(x)",
            Sweep::n(0..=16).cap(30).sample().symbolic(8),
            volkenborn_generating,
        ),
        rec(
            "volkenborn-mahler-recurrence",
            Volkenborn,
            "Σ (1-λ)^{n+2} y(n,λ) (t^{n+1} - t^n) = Σ (-1)^n/(n+1) ((1-λ)/λ)^{n+1} t^n",
            Sweep::n(0..=20).cap(40).sample().symbolic(8),
            volkenborn_mahler_recurrence,
        ),
        // number families
        rec(
            "stirling-first-routes",
            Numbers,
            "S₁(n,k) by recurrence equals the closed double sum from Lagrange inversion",
            Sweep::n(0..=16).cap(24),
            stirling_first_routes,
        ),
        rec(
            "stirling-second-routes",
            Numbers,
            "S₂(n,k) = (1/k!) Σ_j (-1)^{k-j} C(k,j) j^n equals the triangle recurrence",
            Sweep::n(0..=20).cap(40),
            stirling_second_routes,
        ),
        rec(
            "bernoulli-routes",
            Numbers,
            "B_n from u/(e^u-1) equals B_n from Σ_k C(n+1,k) B_k = 0",
            Sweep::n(0..=30).cap(60),
            bernoulli_routes,
        ),
        rec(
            "daehee-routes",
            Numbers,
            "D_n = (-1)^n n!/(n+1) = Σ_j B_j S₁(n,j)",
            Sweep::n(0..=30).cap(60),
            daehee_routes,
        ),
        rec(
            "derangement-routes",
            Numbers,
            "d_n = n! Σ_j (-1)^j/j! = n d_{n-1} + (-1)^n",
            Sweep::n(0..=30).cap(60),
            derangement_routes,
        ),
        rec(
            "leibnitz-routes",
            Numbers,
            "𝐥(m,l) = 1/((m+1) C(m,l)) = Σ_d (-1)^{l-d} C(l,d)/(m-d+1) = ∫_0^1 x^l (1-x)^{m-l} dx",
            Sweep::n(0..=16).cap(30),
            leibnitz_routes,
        ),
    ]
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::collections::HashSet;

    #[test]
    fn manifest() {
        let cat = catalog();
        assert!(cat.len() >= 30, "only {} records", cat.len());
        let ids: HashSet<&str> = cat.iter().map(|r| r.id).collect();
        assert_eq!(ids.len(), cat.len(), "duplicate ids");
        for r in &cat {
            let typo = r.status == Status::PrintedFailsCorrectedOk;
            assert_eq!(typo, r.printed.is_some(), "{}", r.id);
            assert_eq!(typo, r.corrected.is_some(), "{}", r.id);
        }
    }

    #[test]
    fn witnesses() {
        for r in catalog() {
            if let Some(pr) = &r.printed {
                let e = (pr.check)(&pr.witness);
                assert!(!e.holds, "{}: printed form holds at {}", r.id, pr.witness);
                assert_eq!((e.lhs.as_str(), e.rhs.as_str()), (pr.witness_lhs, pr.witness_rhs), "{}", r.id);
                assert!((r.check)(&pr.witness).holds, "{}: corrected form fails at witness", r.id);
            }
        }
    }
}
