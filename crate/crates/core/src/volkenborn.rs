//! Volkenborn integrals on the p-adic integers, approximated by the exact
//! partial sums `p^{-N} Σ_{x=0}^{p^N - 1} f(x)`.

use std::fmt;
use std::ops::RangeInclusive;

use num_bigint::BigInt;
use rayon::prelude::*;
use serde::Serialize;

use crate::exact::{
    binomial, factorial, padic_valuation, powi, sign, LaurentSeries, PadicValuation, Rational,
    Scalar,
};
use crate::genfun::{series_g, GenFunError};
use crate::special::{bernoulli, daehee, stirling1_row};
use crate::ynum::{check_lambda, YError};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Integrand {
    /// `x^j`, integral `B_j`
    Power,
    /// `x (x-1) ⋯ (x-n+1)`, integral `D_n`
    Falling,
    /// `C(x, n)`, integral `(-1)^n / (n+1)`
    Binom,
}

impl fmt::Display for Integrand {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Integrand::Power => "power",
            Integrand::Falling => "falling",
            Integrand::Binom => "binom",
        })
    }
}

impl std::str::FromStr for Integrand {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, String> {
        match s {
            "power" => Ok(Integrand::Power),
            "falling" => Ok(Integrand::Falling),
            "binom" => Ok(Integrand::Binom),
            _ => Err(format!("unknown integrand {s:?}; expected power, falling or binom")),
        }
    }
}

impl Integrand {
    /// The value of the full integral.
    pub fn limit(self, index: usize) -> Rational {
        match self {
            Integrand::Power => bernoulli(index),
            Integrand::Falling => daehee(index),
            Integrand::Binom => Rational::new(sign(index as i64), index as i64 + 1),
        }
    }

    fn eval(self, index: usize, x: u64) -> BigInt {
        match self {
            Integrand::Power => BigInt::from(x).pow(index as u32),
            Integrand::Falling => falling(x, index),
            Integrand::Binom => falling(x, index) / factorial(index as u64).numer(),
        }
    }
}

fn falling(x: u64, n: usize) -> BigInt {
    let mut acc = BigInt::from(1);
    for i in 0..n as i64 {
        acc *= x as i64 - i;
    }
    acc
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum VolkenbornError {
    #[error("p = {0} is not one of 2, 3, 5, 7")]
    Prime(u64),
    #[error("level N = {n} exceeds the budget {max} for p = {p}")]
    Budget { p: u64, n: u32, max: u32 },
}

/// Largest level allowed for `p`.
pub fn max_level(p: u64) -> Result<u32, VolkenbornError> {
    match p {
        2 | 3 => Ok(10),
        5 | 7 => Ok(6),
        _ => Err(VolkenbornError::Prime(p)),
    }
}

/// One partial sum and its distance to the limit.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct VolkenbornSample {
    pub p: u64,
    #[serde(rename = "N")]
    pub level: u32,
    pub integrand: Integrand,
    pub index: usize,
    pub partial_sum: Rational,
    pub limit: Rational,
    #[serde(rename = "valuation")]
    pub error_valuation: PadicValuation,
}

fn check_budget(p: u64, level: u32) -> Result<u64, VolkenbornError> {
    let max = max_level(p)?;
    if level == 0 || level > max {
        return Err(VolkenbornError::Budget { p, n: level, max });
    }
    Ok(p.pow(level))
}

/// `p^{-N} Σ_{x=0}^{p^N - 1} f(x)`, summed in parallel chunks.
///
/// ```
/// use finsum::exact::{PadicValuation, Rational};
/// use finsum::volkenborn::{volkenborn_partial_sum, Integrand};
/// let s = volkenborn_partial_sum(Integrand::Power, 1, 3, 2).unwrap();
/// assert_eq!(s.partial_sum, Rational::from(4));
/// assert_eq!(s.error_valuation, PadicValuation::Finite(2));
/// ```
pub fn volkenborn_partial_sum(
    integrand: Integrand,
    index: usize,
    p: u64,
    level: u32,
) -> Result<VolkenbornSample, VolkenbornError> {
    let count = check_budget(p, level)?;
    let total: BigInt = (0..count)
        .into_par_iter()
        .map(|x| integrand.eval(index, x))
        .reduce(|| BigInt::from(0), |a, b| a + b);
    Ok(sample(integrand, index, p, level, total, count))
}

/// The same partial sum accumulated residue class by residue class mod `p`.
pub fn volkenborn_partial_sum_blocked(
    integrand: Integrand,
    index: usize,
    p: u64,
    level: u32,
) -> Result<VolkenbornSample, VolkenbornError> {
    let count = check_budget(p, level)?;
    let mut total = BigInt::from(0);
    for r in 0..p {
        let mut x = r;
        while x < count {
            total += integrand.eval(index, x);
            x += p;
        }
    }
    Ok(sample(integrand, index, p, level, total, count))
}

fn sample(
    integrand: Integrand,
    index: usize,
    p: u64,
    level: u32,
    total: BigInt,
    count: u64,
) -> VolkenbornSample {
    let partial_sum = Rational::from(total) / Rational::from(count);
    let limit = integrand.limit(index);
    let error_valuation = padic_valuation(&(&partial_sum - &limit), p).expect("p is prime");
    VolkenbornSample { p, level, integrand, index, partial_sum, limit, error_valuation }
}

/// A run of samples over consecutive levels, with the certificate outcome.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ConvergenceReport {
    pub samples: Vec<VolkenbornSample>,
    /// Every sample has valuation at least `N - index - 2`.
    pub threshold_ok: bool,
    /// Valuations strictly increase from level 4 on (an exact zero error
    /// counts as increasing).
    pub increasing_ok: bool,
    pub violations: Vec<String>,
}

/// Samples for each level in `levels`, checked against the certificate
/// `v_p(S_N - limit) >= N - index - 2`.
///
/// The bound comes from the Faulhaber expansion of the power sums: the
/// leading error term is `(j/2) B_{j-1} p^N`, and the Bernoulli denominators
/// are squarefree, so the loss is at most `index + 2`.
pub fn convergence_report(
    integrand: Integrand,
    index: usize,
    p: u64,
    levels: RangeInclusive<u32>,
) -> Result<ConvergenceReport, VolkenbornError> {
    let samples = levels
        .map(|n| volkenborn_partial_sum(integrand, index, p, n))
        .collect::<Result<Vec<_>, _>>()?;
    let mut violations = Vec::new();
    for s in &samples {
        let floor = s.level as i64 - index as i64 - 2;
        if !s.error_valuation.at_least(floor) {
            violations.push(format!(
                "p={} N={}: valuation {} below {}",
                s.p, s.level, s.error_valuation, floor
            ));
        }
    }
    let threshold_ok = violations.is_empty();
    let mut increasing_ok = true;
    for w in samples.windows(2) {
        if w[0].level < 4 {
            continue;
        }
        let ok = w[1].error_valuation > w[0].error_valuation
            || (w[0].error_valuation.is_infinite() && w[1].error_valuation.is_infinite());
        if !ok {
            increasing_ok = false;
            violations.push(format!(
                "p={} N={}..{}: valuation {} then {}",
                p, w[0].level, w[1].level, w[0].error_valuation, w[1].error_valuation
            ));
        }
    }
    Ok(ConvergenceReport { samples, threshold_ok, increasing_ok, violations })
}

/// Outcome of comparing the p-adic integral representation of `G` with the
/// logarithmic closed form.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PgCheck {
    /// `((1-λ)/(λ(t-1))) Σ_n (-1)^n ((1-λ)t/λ)^n / (n+1)` equals `G(t, λ)`.
    pub mercator: bool,
    /// The same with `1/(n+1)` replaced by `(1/n!) Σ_j S₁(n,j) B_j` and the
    /// sign carried by `((λ-1)/λ)^n`.
    pub stirling: bool,
}

impl PgCheck {
    pub fn holds(&self) -> bool {
        self.mercator && self.stirling
    }
}

/// Builds both sides of the p-adic integral representation of `G(t, λ)`
/// through `t^t_max` and compares them with [`series_g`].
pub fn pg_series_check<F: Scalar>(lambda: &F, t_max: i64) -> Result<PgCheck, GenFunError> {
    check_lambda(lambda)?;
    let g = series_g(lambda, t_max)?;
    let r = (F::one() - lambda.clone()) * lambda.inv().unwrap();
    let pre = LaurentSeries::exact(0, vec![-F::one(), F::one()]);
    let n_max = t_max.max(0) as usize;
    let mercator: Vec<F> = (0..=n_max)
        .map(|n| F::from_rational(&Rational::new(sign(n as i64), n as i64 + 1)) * powi(&r, n as i64))
        .collect();
    let w = -r.clone();
    let bs: Vec<Rational> = (0..=n_max).map(bernoulli).collect();
    let stirling: Vec<F> = (0..=n_max)
        .map(|n| {
            let row = stirling1_row(n);
            let inner: Rational = row.iter().zip(&bs).map(|(s, b)| s * b).sum();
            let c = Rational::from(sign(n as i64)) * inner / factorial(n as u64);
            F::from_rational(&c) * powi(&w, n as i64)
        })
        .collect();
    let build = |coeffs: Vec<F>| -> Result<LaurentSeries<F>, GenFunError> {
        let s = LaurentSeries::new(0, coeffs, t_max).scale(&r);
        Ok(s.div_through(&pre, t_max)?)
    };
    Ok(PgCheck { mercator: build(mercator)? == g, stirling: build(stirling)? == g })
}

/// `∫ C(x, n) dμ₁ = (-1)^n / (n+1)`.
pub fn mahler_integral(n: usize) -> Rational {
    Integrand::Binom.limit(n)
}

/// `y(0..=n_max, λ)` from the t-coefficients of
/// `(t - 1) G(t, λ) = -Σ_n ((λ-1)/λ)^{n+1} n! ∫C(x,n) / n! (-1)^n t^n`,
/// that is `(1-λ)^{n+1} y(n-1) - (1-λ)^{n+2} y(n) = (-1)^{n+1} ((λ-1)/λ)^{n+1} ∫C(x,n)`.
pub fn mahler_recurrence_sequence<F: Scalar>(n_max: usize, lambda: &F) -> Result<Vec<F>, YError> {
    check_lambda(lambda)?;
    let om = F::one() - lambda.clone();
    let w = (lambda.clone() - F::one()) * lambda.inv().unwrap();
    let mut out: Vec<F> = Vec::with_capacity(n_max + 1);
    for n in 0..=n_max {
        let ni = n as i64;
        let rhs = F::from_rational(&(Rational::from(sign(ni + 1)) * mahler_integral(n)))
            * powi(&w, ni + 1);
        let prev = if n == 0 {
            F::zero()
        } else {
            powi(&om, ni + 1) * &out[n - 1]
        };
        out.push((prev - rhs) * powi(&om, -(ni + 2)));
    }
    Ok(out)
}

/// `C(p^N, n+1) / p^N`, the closed form of the binomial partial sum.
pub fn binom_partial_closed(n: usize, p: u64, level: u32) -> Rational {
    let q = p.pow(level) as i64;
    binomial(q, n as i64 + 1) / Rational::from(q)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::RationalFunction;
    use crate::ynum::y_recurrence_sequence;

    #[test]
    fn spot_values() {
        let s = volkenborn_partial_sum(Integrand::Binom, 0, 5, 3).unwrap();
        assert_eq!(s.partial_sum, Rational::from(1));
        assert!(s.error_valuation.is_infinite());
        let s = volkenborn_partial_sum(Integrand::Falling, 2, 2, 4).unwrap();
        let brute: i64 = (0..16).map(|x| x * (x - 1)).sum();
        assert_eq!(s.partial_sum, Rational::new(brute, 16));
        assert_eq!(s.limit, Rational::new(2, 3));
        assert!(volkenborn_partial_sum(Integrand::Power, 1, 5, 7).is_err());
        assert!(volkenborn_partial_sum(Integrand::Power, 1, 11, 1).is_err());
    }

    #[test]
    fn reports() {
        let r = convergence_report(Integrand::Power, 1, 3, 1..=5).unwrap();
        let v: Vec<_> = r.samples.iter().map(|s| s.error_valuation.finite().unwrap()).collect();
        assert_eq!(v, vec![1, 2, 3, 4, 5]);
        let r = convergence_report(Integrand::Power, 2, 5, 1..=4).unwrap();
        assert!(r.threshold_ok);
        let r = convergence_report(Integrand::Power, 0, 2, 1..=6).unwrap();
        assert!(r.samples.iter().all(|s| s.error_valuation.is_infinite()));
        assert!(r.threshold_ok && r.increasing_ok);
    }

    #[test]
    fn integral_representation() {
        assert!(pg_series_check(&Rational::from(2), 20).unwrap().holds());
        assert!(pg_series_check(&RationalFunction::var(), 6).unwrap().holds());
    }

    #[test]
    fn mahler_route() {
        let lam = Rational::new(5, 3);
        assert_eq!(
            mahler_recurrence_sequence(12, &lam).unwrap(),
            y_recurrence_sequence(12, &lam).unwrap()
        );
        assert_eq!(
            binom_partial_closed(3, 3, 2),
            volkenborn_partial_sum(Integrand::Binom, 3, 3, 2).unwrap().partial_sum
        );
    }

    #[test]
    fn json_row() {
        let s = volkenborn_partial_sum(Integrand::Power, 1, 3, 2).unwrap();
        let j = serde_json::to_string(&s).unwrap();
        assert_eq!(
            j,
            r#"{"p":3,"N":2,"integrand":"power","index":1,"partial_sum":"4","limit":"-1/2","valuation":2}"#
        );
    }
}
