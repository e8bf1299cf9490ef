use crate::exact::{
    binomial, factorial, series_log_one_plus, sign, LaurentSeries, Polynomial, Rational,
};

use super::{bernoulli_numbers, stirling1_row};

/// Daehee numbers `D_n = (-1)^n n! / (n+1)`.
///
/// ```
/// use finsum::exact::Rational;
/// use finsum::special::daehee;
/// assert_eq!(daehee(3), Rational::new(-3, 2));
/// ```
pub fn daehee(n: usize) -> Rational {
    factorial(n as u64) * Rational::new(sign(n as i64), n as i64 + 1)
}

/// `D_n` as `Σ_j B_j S₁(n, j)`.
pub fn daehee_via_stirling(n: usize) -> Rational {
    let b = bernoulli_numbers(n);
    stirling1_row(n).iter().zip(&b).map(|(s, b)| s * b).sum()
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum HarmonicKind {
    Plain,
    /// `Σ_{j=1}^{n} (-1)^j / j`, the negative of the usual alternating sum.
    Alternating,
}

pub fn harmonic(n: usize) -> Rational {
    (1..=n as i64).map(|j| Rational::new(1, j)).sum()
}

pub fn alt_harmonic(n: usize) -> Rational {
    (1..=n as i64).map(|j| Rational::new(sign(j), j)).sum()
}

/// ```
/// use finsum::exact::Rational;
/// use finsum::special::{harmonic_numbers, HarmonicKind};
/// assert_eq!(harmonic_numbers(HarmonicKind::Plain, 3), Rational::new(11, 6));
/// assert_eq!(harmonic_numbers(HarmonicKind::Alternating, 4), Rational::new(-7, 12));
/// ```
pub fn harmonic_numbers(kind: HarmonicKind, n: usize) -> Rational {
    match kind {
        HarmonicKind::Plain => harmonic(n),
        HarmonicKind::Alternating => alt_harmonic(n),
    }
}

/// Derangements `d_n = Σ_j (-1)^j (n-j)! C(n, j)`.
pub fn derangement(n: usize) -> Rational {
    let n = n as i64;
    (0..=n)
        .map(|j| Rational::from(sign(j)) * factorial((n - j) as u64) * binomial(n, j))
        .sum()
}

/// `d_n` from `d_n = n d_{n-1} + (-1)^n`.
pub fn derangement_recurrence(n: usize) -> Rational {
    let mut d = Rational::from(1);
    for k in 1..=n as i64 {
        d = d * Rational::from(k) + Rational::from(sign(k));
    }
    d
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum LeibnitzMethod {
    Closed,
    Sum,
    /// Integrates the Bernstein basis polynomial over `[0, 1]`.
    Bernstein,
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum LeibnitzError {
    #[error("Leibnitz number needs l <= m, got l = {l}, m = {m}")]
    OutOfRange { m: usize, l: usize },
}

fn integrate_unit(p: &Polynomial) -> Rational {
    p.coeffs()
        .iter()
        .enumerate()
        .map(|(k, c)| c * &Rational::new(1, k as i64 + 1))
        .sum()
}

/// Leibnitz numbers `l(m, l) = 1 / ((m+1) C(m, l))` by three routes.
///
/// ```
/// use finsum::exact::Rational;
/// use finsum::special::{leibnitz, LeibnitzMethod};
/// assert_eq!(leibnitz(2, 1, LeibnitzMethod::Closed).unwrap(), Rational::new(1, 6));
/// assert_eq!(leibnitz(3, 1, LeibnitzMethod::Sum).unwrap(), Rational::new(1, 12));
/// assert!(leibnitz(1, 2, LeibnitzMethod::Closed).is_err());
/// ```
pub fn leibnitz(m: usize, l: usize, method: LeibnitzMethod) -> Result<Rational, LeibnitzError> {
    if l > m {
        return Err(LeibnitzError::OutOfRange { m, l });
    }
    let (mi, li) = (m as i64, l as i64);
    Ok(match method {
        LeibnitzMethod::Closed => (Rational::from(mi + 1) * binomial(mi, li)).recip(),
        LeibnitzMethod::Sum => (0..=li)
            .map(|d| Rational::new(sign(li - d), mi - d + 1) * binomial(li, d))
            .sum(),
        LeibnitzMethod::Bernstein => {
            // x^l (1-x)^{m-l}, integrated exactly
            let x = Polynomial::<Rational>::var();
            let one_minus = Polynomial::from_ints(&[1, -1]);
            let basis = &x.pow(l as u32) * &one_minus.pow((m - l) as u32);
            integrate_unit(&basis)
        }
    })
}

/// Bernoulli numbers of the second kind: `b_n(0) = n! [u^n] u / ln(1+u)`.
///
/// ```
/// use finsum::exact::Rational;
/// use finsum::special::bernoulli_second_kind;
/// assert_eq!(bernoulli_second_kind(1), Rational::new(1, 2));
/// assert_eq!(bernoulli_second_kind(2), Rational::new(-1, 6));
/// ```
pub fn bernoulli_second_kind(n: usize) -> Rational {
    let t = n as i64;
    let log = series_log_one_plus(&LaurentSeries::<Rational>::var(), t + 1).unwrap();
    let q = LaurentSeries::var().div_through(&log, t).unwrap();
    q.coeff(t).unwrap() * factorial(n as u64)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn daehee_routes() {
        for n in 0..=15 {
            assert_eq!(daehee(n), daehee_via_stirling(n), "n={n}");
        }
        assert_eq!(daehee_via_stirling(5), Rational::from(-20));
    }

    #[test]
    fn derangements() {
        let want = [1, 0, 1, 2, 9, 44, 265];
        for (n, w) in want.iter().enumerate() {
            assert_eq!(derangement(n), Rational::from(*w));
            assert_eq!(derangement_recurrence(n), Rational::from(*w));
        }
    }

    #[test]
    fn leibnitz_routes() {
        for m in 0..=10 {
            for l in 0..=m {
                let c = leibnitz(m, l, LeibnitzMethod::Closed).unwrap();
                assert_eq!(c, leibnitz(m, l, LeibnitzMethod::Sum).unwrap());
                assert_eq!(c, leibnitz(m, l, LeibnitzMethod::Bernstein).unwrap());
            }
        }
    }
}
