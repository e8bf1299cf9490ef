use std::cmp::Ordering;
use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};
use serde::{Serialize, Serializer};

use super::Rational;

/// A p-adic valuation: an integer, or +∞ for zero.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum PadicValuation {
    Finite(i64),
    PlusInfinity,
}

impl PadicValuation {
    pub fn finite(self) -> Option<i64> {
        match self {
            PadicValuation::Finite(v) => Some(v),
            PadicValuation::PlusInfinity => None,
        }
    }

    pub fn is_infinite(self) -> bool {
        self == PadicValuation::PlusInfinity
    }

    /// `self >= k`, counting +∞ as above every integer.
    pub fn at_least(self, k: i64) -> bool {
        self >= PadicValuation::Finite(k)
    }
}

impl Ord for PadicValuation {
    fn cmp(&self, other: &Self) -> Ordering {
        use PadicValuation::*;
        match (self, other) {
            (Finite(a), Finite(b)) => a.cmp(b),
            (Finite(_), PlusInfinity) => Ordering::Less,
            (PlusInfinity, Finite(_)) => Ordering::Greater,
            (PlusInfinity, PlusInfinity) => Ordering::Equal,
        }
    }
}

impl PartialOrd for PadicValuation {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl std::ops::Add for PadicValuation {
    type Output = PadicValuation;
    fn add(self, o: PadicValuation) -> PadicValuation {
        match (self, o) {
            (PadicValuation::Finite(a), PadicValuation::Finite(b)) => PadicValuation::Finite(a + b),
            _ => PadicValuation::PlusInfinity,
        }
    }
}

impl fmt::Display for PadicValuation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            PadicValuation::Finite(v) => write!(f, "{v}"),
            PadicValuation::PlusInfinity => f.write_str("+inf"),
        }
    }
}

impl Serialize for PadicValuation {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        match self {
            PadicValuation::Finite(v) => s.serialize_i64(*v),
            PadicValuation::PlusInfinity => s.serialize_str("+inf"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ValuationError {
    #[error("{0} is not a prime")]
    NotPrime(u64),
}

pub(crate) fn is_prime(p: u64) -> bool {
    if p < 2 {
        return false;
    }
    let mut d = 2u64;
    while d * d <= p {
        if p.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

fn int_valuation(n: &BigInt, p: &BigInt) -> i64 {
    let mut n = n.abs();
    let mut v = 0;
    loop {
        let (q, r) = n.div_rem(p);
        if !r.is_zero() {
            return v;
        }
        n = q;
        v += 1;
    }
}

/// `v_p(q)`: the exponent of `p` in `q`.
///
/// ```
/// use finsum::exact::{padic_valuation, PadicValuation, Rational};
/// assert_eq!(padic_valuation(&Rational::new(1, 2), 2).unwrap(), PadicValuation::Finite(-1));
/// assert_eq!(padic_valuation(&Rational::from(18), 3).unwrap(), PadicValuation::Finite(2));
/// assert!(padic_valuation(&Rational::from(0), 5).unwrap().is_infinite());
/// assert!(padic_valuation(&Rational::from(3), 4).is_err());
/// ```
pub fn padic_valuation(q: &Rational, p: u64) -> Result<PadicValuation, ValuationError> {
    if !is_prime(p) {
        return Err(ValuationError::NotPrime(p));
    }
    if q.numer().is_zero() {
        return Ok(PadicValuation::PlusInfinity);
    }
    let bp = BigInt::from(p);
    Ok(PadicValuation::Finite(
        int_valuation(q.numer(), &bp) - int_valuation(q.denom(), &bp),
    ))
}
