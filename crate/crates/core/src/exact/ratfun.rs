use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use super::{Polynomial, Rational, Scalar};

/// A quotient of polynomials over the rationals in canonical form.
///
/// The canonical form has coprime numerator and denominator, integer
/// coefficients with no common factor across both, and a positive leading
/// denominator coefficient. Equality is therefore structural.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct RationalFunction {
    num: Polynomial,
    den: Polynomial,
}

impl RationalFunction {
    /// Builds `num / den`. Panics if `den` is zero.
    pub fn new(num: Polynomial, den: Polynomial) -> Self {
        assert!(!den.is_zero(), "rational function with zero denominator");
        if num.is_zero() {
            return RationalFunction { num, den: Polynomial::one() };
        }
        let g = Polynomial::gcd(&num, &den);
        let (num, den) = if g.degree() == Some(0) {
            (num, den)
        } else {
            (num.div_rem(&g).0, den.div_rem(&g).0)
        };
        // joint content: lcm of all denominators over gcd of all numerators
        let mut all = num.coeffs().to_vec();
        all.extend(den.coeffs().iter().cloned());
        let c = Polynomial::new(all).content().abs();
        let mut s = c.recip();
        if den.is_negative_leading() {
            s = -s;
        }
        RationalFunction { num: num.scale(&s), den: den.scale(&s) }
    }

    pub fn from_poly(p: Polynomial) -> Self {
        Self::new(p, Polynomial::one())
    }

    pub fn constant(q: Rational) -> Self {
        Self::from_poly(Polynomial::constant(q))
    }

    /// The indeterminate λ.
    pub fn var() -> Self {
        Self::from_poly(Polynomial::var())
    }

    pub fn num(&self) -> &Polynomial {
        &self.num
    }

    pub fn den(&self) -> &Polynomial {
        &self.den
    }

    /// The value as a rational when the function is constant.
    pub fn as_constant(&self) -> Option<Rational> {
        if self.num.degree().unwrap_or(0) == 0 && self.den.degree() == Some(0) {
            Some(self.num.coeff(0) / self.den.coeff(0))
        } else {
            None
        }
    }

    /// Evaluates at `x`, `None` at a pole.
    pub fn eval(&self, x: &Rational) -> Option<Rational> {
        let d = self.den.eval(x);
        if d.is_zero() {
            return None;
        }
        Some(self.num.eval(x) / d)
    }

    pub fn derivative(&self) -> Self {
        let top = &(&self.num.derivative() * &self.den) - &(&self.num * &self.den.derivative());
        Self::new(top, &self.den * &self.den)
    }

    /// Integer power; panics on a negative power of zero.
    pub fn pow(&self, k: i64) -> Self {
        if k < 0 {
            return self.inv().expect("zero to a negative power").pow(-k);
        }
        RationalFunction {
            num: self.num.pow(k as u32),
            den: self.den.pow(k as u32),
        }
    }

    /// `self(inner)`: substitutes a rational function for the variable.
    pub fn compose(&self, inner: &RationalFunction) -> Self {
        let ev = |p: &Polynomial| {
            let mut acc = RationalFunction::zero();
            for c in p.coeffs().iter().rev() {
                acc = acc * inner + &RationalFunction::constant(c.clone());
            }
            acc
        };
        ev(&self.num) * ev(&self.den).inv().expect("composition hits a pole")
    }
}

impl fmt::Display for RationalFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.degree() == Some(0) && self.den.coeff(0) == 1 {
            write!(f, "{}", self.num.display_desc("L"))
        } else {
            write!(f, "({})/({})", self.num.display_desc("L"), self.den.display_desc("L"))
        }
    }
}

impl fmt::Debug for RationalFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl Add<&RationalFunction> for &RationalFunction {
    type Output = RationalFunction;
    fn add(self, o: &RationalFunction) -> RationalFunction {
        if self.den == o.den {
            return RationalFunction::new(&self.num + &o.num, self.den.clone());
        }
        RationalFunction::new(
            &(&self.num * &o.den) + &(&o.num * &self.den),
            &self.den * &o.den,
        )
    }
}

impl Sub<&RationalFunction> for &RationalFunction {
    type Output = RationalFunction;
    fn sub(self, o: &RationalFunction) -> RationalFunction {
        self + &(-o)
    }
}

impl Mul<&RationalFunction> for &RationalFunction {
    type Output = RationalFunction;
    fn mul(self, o: &RationalFunction) -> RationalFunction {
        if self.num.is_zero() || o.num.is_zero() {
            return RationalFunction::zero();
        }
        RationalFunction::new(&self.num * &o.num, &self.den * &o.den)
    }
}

impl Div<&RationalFunction> for &RationalFunction {
    type Output = RationalFunction;
    fn div(self, o: &RationalFunction) -> RationalFunction {
        self * &o.inv().expect("division by the zero rational function")
    }
}

impl Neg for &RationalFunction {
    type Output = RationalFunction;
    fn neg(self) -> RationalFunction {
        RationalFunction { num: -&self.num, den: self.den.clone() }
    }
}

impl Neg for RationalFunction {
    type Output = RationalFunction;
    fn neg(self) -> RationalFunction {
        -&self
    }
}

macro_rules! owned_ops {
    ($tr:ident, $m:ident) => {
        impl $tr for RationalFunction {
            type Output = RationalFunction;
            fn $m(self, o: RationalFunction) -> RationalFunction {
                (&self).$m(&o)
            }
        }
        impl<'a> $tr<&'a RationalFunction> for RationalFunction {
            type Output = RationalFunction;
            fn $m(self, o: &'a RationalFunction) -> RationalFunction {
                (&self).$m(o)
            }
        }
    };
}
owned_ops!(Add, add);
owned_ops!(Sub, sub);
owned_ops!(Mul, mul);
owned_ops!(Div, div);

impl From<Rational> for RationalFunction {
    fn from(q: Rational) -> Self {
        RationalFunction::constant(q)
    }
}

impl Scalar for RationalFunction {
    fn zero() -> Self {
        RationalFunction { num: Polynomial::zero(), den: Polynomial::one() }
    }

    fn one() -> Self {
        RationalFunction { num: Polynomial::one(), den: Polynomial::one() }
    }

    fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    fn inv(&self) -> Option<Self> {
        if self.num.is_zero() {
            None
        } else {
            Some(RationalFunction::new(self.den.clone(), self.num.clone()))
        }
    }

    fn from_rational(q: &Rational) -> Self {
        RationalFunction::constant(q.clone())
    }

    fn signed_parts(&self) -> (bool, String) {
        match self.as_constant() {
            Some(q) => q.signed_parts(),
            None => (false, format!("({self})")),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn l() -> RationalFunction {
        RationalFunction::var()
    }

    fn c(k: i64) -> RationalFunction {
        RationalFunction::from_int(k)
    }

    #[test]
    fn canonical_form() {
        let a = (l() * l() - c(1)) / (c(2) * l() - c(2));
        assert_eq!(a.to_string(), "(L + 1)/(2)");
        let b = c(1) / (c(-3) * l() + c(6));
        assert_eq!(b.to_string(), "(-1)/(3*L - 6)");
        assert_eq!(c(3) / c(6), RationalFunction::constant(Rational::new(1, 2)));
    }

    #[test]
    fn derivative_examples() {
        let f = (l() * (l() - c(1))).inv().unwrap();
        let want = -(c(2) * l() - c(1)) / (l().pow(2) * (l() - c(1)).pow(2));
        assert_eq!(f.derivative(), want);
        assert!(c(7).derivative().is_zero());
        let g = (c(1) - c(3) * l()) / (c(2) * l().pow(2) * (l() - c(1)).pow(2));
        let want = (c(9) * l().pow(2) - c(7) * l() + c(2)) / (c(2) * l().pow(3) * (l() - c(1)).pow(3));
        assert_eq!(g.derivative(), want);
    }
}
