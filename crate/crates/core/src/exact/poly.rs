use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use super::{ParseRationalError, Rational, Scalar};

/// Dense univariate polynomial, `coeffs[k]` multiplying `x^k`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Polynomial<F = Rational> {
    coeffs: Vec<F>,
}

impl<F: Scalar> Polynomial<F> {
    pub fn new(mut coeffs: Vec<F>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        Polynomial { coeffs }
    }

    pub fn zero() -> Self {
        Polynomial { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(F::one())
    }

    pub fn constant(c: F) -> Self {
        Self::new(vec![c])
    }

    /// The indeterminate `x`.
    pub fn var() -> Self {
        Self::new(vec![F::zero(), F::one()])
    }

    pub fn monomial(c: F, k: usize) -> Self {
        let mut v = vec![F::zero(); k];
        v.push(c);
        Self::new(v)
    }

    pub fn from_ints(cs: &[i64]) -> Self {
        Self::new(cs.iter().map(|&c| F::from_int(c)).collect())
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree, `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn coeffs(&self) -> &[F] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<F> {
        self.coeffs
    }

    pub fn coeff(&self, k: usize) -> F {
        self.coeffs.get(k).cloned().unwrap_or_else(F::zero)
    }

    pub fn leading(&self) -> Option<&F> {
        self.coeffs.last()
    }

    pub fn scale(&self, c: &F) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        Self::new(self.coeffs.iter().map(|a| a.clone() * c).collect())
    }

    pub fn eval(&self, x: &F) -> F {
        let mut acc = F::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }

    pub fn derivative(&self) -> Self {
        Self::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(k, c)| c.clone() * F::from_int(k as i64))
                .collect(),
        )
    }

    pub fn pow(&self, mut e: u32) -> Self {
        let mut base = self.clone();
        let mut acc = Self::one();
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// `self(inner(x))`.
    pub fn compose(&self, inner: &Self) -> Self {
        let mut acc = Self::zero();
        for c in self.coeffs.iter().rev() {
            acc = &(&acc * inner) + &Self::constant(c.clone());
        }
        acc
    }

    /// Euclidean division. Panics when `d` is zero.
    pub fn div_rem(&self, d: &Self) -> (Self, Self) {
        let dl = d.leading().expect("polynomial division by zero").inv().unwrap();
        let dd = d.coeffs.len() - 1;
        let mut r = self.coeffs.clone();
        if r.len() <= dd {
            return (Self::zero(), self.clone());
        }
        let mut q = vec![F::zero(); r.len() - dd];
        for k in (0..q.len()).rev() {
            let c = r[k + dd].clone() * &dl;
            if !c.is_zero() {
                for (i, dc) in d.coeffs.iter().enumerate() {
                    r[k + i] = r[k + i].clone() - c.clone() * dc;
                }
            }
            q[k] = c;
        }
        r.truncate(dd);
        (Self::new(q), Self::new(r))
    }

    pub fn monic(&self) -> Self {
        match self.leading() {
            Some(l) => self.scale(&l.inv().unwrap()),
            None => Self::zero(),
        }
    }

    /// Monic greatest common divisor; zero only when both inputs are zero.
    pub fn gcd(a: &Self, b: &Self) -> Self {
        let (mut a, mut b) = (a.clone(), b.clone());
        while !b.is_zero() {
            let (_, r) = a.div_rem(&b);
            a = b;
            b = r;
        }
        a.monic()
    }

    /// Formats with the given variable name, lowest degree first.
    pub fn display<'a>(&'a self, var: &'a str) -> PolyDisplay<'a, F> {
        PolyDisplay { p: self, var, descending: false }
    }

    /// Formats with the given variable name, highest degree first.
    pub fn display_desc<'a>(&'a self, var: &'a str) -> PolyDisplay<'a, F> {
        PolyDisplay { p: self, var, descending: true }
    }
}

pub struct PolyDisplay<'a, F> {
    p: &'a Polynomial<F>,
    var: &'a str,
    descending: bool,
}

impl<F: Scalar> fmt::Display for PolyDisplay<'_, F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.p.is_zero() {
            return f.write_str("0");
        }
        let mut idx: Vec<usize> = (0..self.p.coeffs.len()).collect();
        if self.descending {
            idx.reverse();
        }
        let mut first = true;
        for k in idx {
            let c = &self.p.coeffs[k];
            if c.is_zero() {
                continue;
            }
            let (neg, body) = c.signed_parts();
            match (first, neg) {
                (true, true) => f.write_str("-")?,
                (true, false) => {}
                (false, true) => f.write_str(" - ")?,
                (false, false) => f.write_str(" + ")?,
            }
            first = false;
            let unit = body == "1";
            match k {
                0 => f.write_str(&body)?,
                _ => {
                    if !unit {
                        write!(f, "{body}*")?;
                    }
                    f.write_str(self.var)?;
                    if k > 1 {
                        write!(f, "^{k}")?;
                    }
                }
            }
        }
        Ok(())
    }
}

impl<F: Scalar> fmt::Display for Polynomial<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(&self.display("x"), f)
    }
}

impl<F: Scalar> fmt::Debug for Polynomial<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Polynomial({})", self.display("x"))
    }
}

impl Polynomial<Rational> {
    /// The rational `c` for which `self / c` has coprime integer coefficients
    /// and a positive leading coefficient; zero for the zero polynomial.
    pub fn content(&self) -> Rational {
        let mut g = BigInt::zero();
        let mut l = BigInt::one();
        for c in &self.coeffs {
            g = g.gcd(c.numer());
            l = l.lcm(c.denom());
        }
        if g.is_zero() {
            return Rational::from(0);
        }
        let c = Rational::new(g, l);
        if self.leading().is_some_and(|x| x.is_negative()) {
            -c
        } else {
            c
        }
    }

    /// Integer coefficients, after checking each is integral.
    pub fn integer_coeffs(&self) -> Option<Vec<BigInt>> {
        self.coeffs
            .iter()
            .map(|c| c.is_integer().then(|| c.numer().clone()))
            .collect()
    }

    pub fn max_abs_coeff(&self) -> Rational {
        self.coeffs.iter().map(|c| c.abs()).max().unwrap_or_default()
    }

    pub fn is_negative_leading(&self) -> bool {
        self.leading().is_some_and(|c| c.is_negative())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ParsePolynomialError {
    #[error("bad coefficient: {0}")]
    Coefficient(#[from] ParseRationalError),
    #[error("bad term `{0}`")]
    Term(String),
    #[error("more than one variable name in `{0}`")]
    MixedVariables(String),
}

impl FromStr for Polynomial<Rational> {
    type Err = ParsePolynomialError;

    /// Parses sums like `1 - 3*L + 1/2*L^2`; any single alphabetic name is
    /// taken as the variable.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let t: String = s
            .chars()
            .filter(|c| !c.is_whitespace())
            .map(|c| if c == '\u{2212}' { '-' } else { c })
            .collect();
        let mut terms: Vec<(bool, String)> = Vec::new();
        let mut cur = String::new();
        let mut neg = false;
        for ch in t.chars() {
            if (ch == '+' || ch == '-') && !cur.is_empty() {
                terms.push((neg, std::mem::take(&mut cur)));
                neg = ch == '-';
            } else if (ch == '+' || ch == '-') && cur.is_empty() {
                if ch == '-' {
                    neg = !neg;
                }
            } else {
                cur.push(ch);
            }
        }
        if !cur.is_empty() {
            terms.push((neg, cur));
        } else if !terms.is_empty() || t.is_empty() {
            return Err(ParsePolynomialError::Term(t));
        }
        let mut var: Option<String> = None;
        let mut coeffs: Vec<Rational> = Vec::new();
        for (neg, body) in terms {
            let (coef, mono) = match body.split_once('*') {
                Some((c, m)) => (c.parse::<Rational>()?, Some(m)),
                None if body.starts_with(|c: char| c.is_ascii_alphabetic()) => {
                    (Rational::from(1), Some(body.as_str()))
                }
                None => (body.parse::<Rational>()?, None),
            };
            let k = match mono {
                None => 0usize,
                Some(m) => {
                    let (name, e) = match m.split_once('^') {
                        Some((n, e)) => (
                            n,
                            e.parse::<usize>()
                                .map_err(|_| ParsePolynomialError::Term(body.clone()))?,
                        ),
                        None => (m, 1),
                    };
                    if name.is_empty() || !name.chars().all(|c| c.is_ascii_alphabetic()) {
                        return Err(ParsePolynomialError::Term(body.clone()));
                    }
                    match &var {
                        Some(v) if v != name => {
                            return Err(ParsePolynomialError::MixedVariables(s.to_string()))
                        }
                        _ => var = Some(name.to_string()),
                    }
                    e
                }
            };
            if coeffs.len() <= k {
                coeffs.resize(k + 1, Rational::from(0));
            }
            let c = if neg { -coef } else { coef };
            coeffs[k] += c;
        }
        Ok(Polynomial::new(coeffs))
    }
}

impl<F: Scalar> Add<&Polynomial<F>> for &Polynomial<F> {
    type Output = Polynomial<F>;
    fn add(self, o: &Polynomial<F>) -> Polynomial<F> {
        let n = self.coeffs.len().max(o.coeffs.len());
        Polynomial::new((0..n).map(|k| self.coeff(k) + o.coeff(k)).collect())
    }
}

impl<F: Scalar> Sub<&Polynomial<F>> for &Polynomial<F> {
    type Output = Polynomial<F>;
    fn sub(self, o: &Polynomial<F>) -> Polynomial<F> {
        let n = self.coeffs.len().max(o.coeffs.len());
        Polynomial::new((0..n).map(|k| self.coeff(k) - o.coeff(k)).collect())
    }
}

impl<F: Scalar> Mul<&Polynomial<F>> for &Polynomial<F> {
    type Output = Polynomial<F>;
    fn mul(self, o: &Polynomial<F>) -> Polynomial<F> {
        if self.is_zero() || o.is_zero() {
            return Polynomial::zero();
        }
        let mut out = vec![F::zero(); self.coeffs.len() + o.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in o.coeffs.iter().enumerate() {
                out[i + j] = out[i + j].clone() + a.clone() * b;
            }
        }
        Polynomial::new(out)
    }
}

impl<F: Scalar> Neg for &Polynomial<F> {
    type Output = Polynomial<F>;
    fn neg(self) -> Polynomial<F> {
        Polynomial { coeffs: self.coeffs.iter().map(|c| -c.clone()).collect() }
    }
}

macro_rules! owned_ops {
    ($tr:ident, $m:ident) => {
        impl<F: Scalar> $tr for Polynomial<F> {
            type Output = Polynomial<F>;
            fn $m(self, o: Polynomial<F>) -> Polynomial<F> {
                (&self).$m(&o)
            }
        }
        impl<F: Scalar> $tr<&Polynomial<F>> for Polynomial<F> {
            type Output = Polynomial<F>;
            fn $m(self, o: &Polynomial<F>) -> Polynomial<F> {
                (&self).$m(o)
            }
        }
    };
}
owned_ops!(Add, add);
owned_ops!(Sub, sub);
owned_ops!(Mul, mul);

impl<F: Scalar> Neg for Polynomial<F> {
    type Output = Polynomial<F>;
    fn neg(self) -> Polynomial<F> {
        -&self
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(cs: &[i64]) -> Polynomial {
        Polynomial::from_ints(cs)
    }

    #[test]
    fn display_roundtrip() {
        let q = Polynomial::new(vec![
            Rational::from(1),
            Rational::from(-3),
            Rational::new(1, 2),
        ]);
        assert_eq!(q.display("L").to_string(), "1 - 3*L + 1/2*L^2");
        assert_eq!(q.display("L").to_string().parse::<Polynomial>().unwrap(), q);
        assert_eq!(p(&[0, -1]).display("L").to_string(), "-L");
        assert_eq!(p(&[]).to_string(), "0");
        assert_eq!("-2 + x^3 - x".parse::<Polynomial>().unwrap(), p(&[-2, -1, 0, 1]));
        assert!("1 + x*y".parse::<Polynomial>().is_err());
        assert!("x + y".parse::<Polynomial>().is_err());
    }

    #[test]
    fn division_and_gcd() {
        let a = p(&[-1, 0, 1]);
        let b = p(&[1, 1]);
        let (q, r) = a.div_rem(&b);
        assert_eq!(q, p(&[-1, 1]));
        assert!(r.is_zero());
        let g = Polynomial::gcd(&(&a * &p(&[2, 3])), &(&b * &p(&[2, 3])));
        let want = Polynomial::new(vec![Rational::new(2, 3), Rational::new(5, 3), Rational::from(1)]);
        assert_eq!(g, want);
    }

    #[test]
    fn content_sign() {
        let q = Polynomial::new(vec![Rational::new(-2, 3), Rational::new(-4, 9)]);
        assert_eq!(q.content(), Rational::new(-2, 9));
    }
}
