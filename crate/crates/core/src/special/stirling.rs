use crate::exact::{binomial, factorial, sign, Rational};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum StirlingMethod {
    Recurrence,
    /// Closed double sum obtained by Lagrange inversion.
    Formula,
}

/// Signed Stirling numbers of the first kind `S₁(n, 0..=n)`, the coefficients
/// of the falling factorial `(u)_n`.
pub fn stirling1_row(n: usize) -> Vec<Rational> {
    let mut row = vec![Rational::from(1)];
    for m in 0..n {
        // S₁(m+1, k) = S₁(m, k-1) - m S₁(m, k)
        let mut next = vec![Rational::from(0); m + 2];
        for (k, c) in row.iter().enumerate() {
            next[k + 1] += c;
            next[k] -= &(c * &Rational::from(m as u64));
        }
        row = next;
    }
    row
}

fn stirling1_formula(n: i64, k: i64) -> Rational {
    if k == 0 {
        // the binomial C(n+c-1, -1) vanishes; only the empty product survives
        return Rational::from(i64::from(n == 0));
    }
    let mut total = Rational::from(0);
    for c in 0..=n - k {
        let outer = binomial(n + c - 1, k - 1) * binomial(2 * n - k, n - k - c) / factorial(c as u64);
        if outer == 0 {
            continue;
        }
        let e = (n - k + c) as u32;
        let inner: Rational = (0..=c)
            .map(|j| {
                // 0^0 = 1
                let pw = num_bigint::BigInt::from(j).pow(e);
                binomial(c, j) * Rational::from(pw) * Rational::from(sign(j))
            })
            .sum();
        total += outer * inner;
    }
    total
}

/// `S₁(n, k)`; zero when `k > n`.
///
/// ```
/// use finsum::special::{stirling1, StirlingMethod};
/// assert_eq!(stirling1(4, 2, StirlingMethod::Recurrence), 11);
/// assert_eq!(stirling1(3, 1, StirlingMethod::Formula), 2);
/// ```
pub fn stirling1(n: usize, k: usize, method: StirlingMethod) -> Rational {
    if k > n {
        return Rational::from(0);
    }
    match method {
        StirlingMethod::Recurrence => stirling1_row(n).swap_remove(k),
        StirlingMethod::Formula => stirling1_formula(n as i64, k as i64),
    }
}

/// `S₂(n, k) = (1/k!) Σ_c (-1)^{k-c} C(k, c) c^n`; zero when `k > n`.
///
/// ```
/// use finsum::special::stirling2;
/// assert_eq!(stirling2(4, 2), 7);
/// assert_eq!(stirling2(3, 2), 3);
/// ```
pub fn stirling2(n: usize, k: usize) -> Rational {
    if k > n {
        return Rational::from(0);
    }
    let s: Rational = (0..=k as i64)
        .map(|c| {
            let pw = num_bigint::BigInt::from(c).pow(n as u32);
            binomial(k as i64, c) * Rational::from(pw) * Rational::from(sign(k as i64 - c))
        })
        .sum();
    s / factorial(k as u64)
}

/// `S₂(n, 0..=n)` by `S₂(m+1, k) = k S₂(m, k) + S₂(m, k-1)`.
pub fn stirling2_row(n: usize) -> Vec<Rational> {
    let mut row = vec![Rational::from(1)];
    for m in 0..n {
        let mut next = vec![Rational::from(0); m + 2];
        for (k, c) in row.iter().enumerate() {
            next[k] += &(c * &Rational::from(k as u64));
            next[k + 1] += c;
        }
        row = next;
    }
    row
}

pub fn stirling2_recurrence(n: usize, k: usize) -> Rational {
    if k > n {
        return Rational::from(0);
    }
    stirling2_row(n).swap_remove(k)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rows() {
        let want: Vec<Rational> = [0, 24, -50, 35, -10, 1].iter().map(|&c| Rational::from(c)).collect();
        assert_eq!(stirling1_row(5), want);
        for n in 0..12 {
            for k in 0..=n + 1 {
                assert_eq!(
                    stirling1(n, k, StirlingMethod::Recurrence),
                    stirling1(n, k, StirlingMethod::Formula),
                    "S1({n},{k})"
                );
                assert_eq!(stirling2(n, k), stirling2_recurrence(n, k), "S2({n},{k})");
            }
        }
        assert_eq!(stirling2(0, 0), 1);
        assert_eq!(stirling1(0, 0, StirlingMethod::Formula), 1);
    }
}
