use crate::exact::{binomial, factorial, LaurentSeries, Rational};

/// `B_0 ..= B_n` from `n! [u^n] u / (e^u - 1)`, with `B_1 = -1/2`.
pub fn bernoulli_numbers(n: usize) -> Vec<Rational> {
    // (e^u - 1) / u = Σ u^k / (k+1)!
    let t = n as i64;
    let base: Vec<Rational> = (0..=n as u64).map(|k| factorial(k + 1).recip()).collect();
    let inv = LaurentSeries::new(0, base, t)
        .inv_through(t)
        .expect("constant term is 1");
    (0..=n)
        .map(|k| inv.coeff(k as i64).unwrap() * factorial(k as u64))
        .collect()
}

/// `B_n`.
///
/// ```
/// use finsum::exact::Rational;
/// use finsum::special::bernoulli;
/// assert_eq!(bernoulli(1), Rational::new(-1, 2));
/// assert_eq!(bernoulli(12), Rational::new(-691, 2730));
/// ```
pub fn bernoulli(n: usize) -> Rational {
    bernoulli_numbers(n).pop().unwrap()
}

/// `B_0 ..= B_n` from `Σ_{k=0}^{m} C(m+1, k) B_k = 0` for `m >= 1`.
pub fn bernoulli_numbers_recurrence(n: usize) -> Vec<Rational> {
    let mut b = vec![Rational::from(1)];
    for m in 1..=n as i64 {
        let s: Rational = (0..m).map(|k| binomial(m + 1, k) * &b[k as usize]).sum();
        b.push(-s / Rational::from(m + 1));
    }
    b
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn both_routes_agree() {
        assert_eq!(bernoulli_numbers(30), bernoulli_numbers_recurrence(30));
        assert_eq!(bernoulli(0), Rational::from(1));
        assert_eq!(bernoulli(2), Rational::new(1, 6));
        assert_eq!(bernoulli(3), Rational::from(0));
    }
}
