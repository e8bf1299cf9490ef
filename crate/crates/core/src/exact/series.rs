use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use super::{Rational, Scalar};

/// Order marker for a series that is exact in every degree (a Laurent polynomial).
pub const EXACT: i64 = i64::MAX / 8;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum SeriesError {
    #[error("coefficient of degree {requested} requested but the series is only exact through degree {order}")]
    BeyondOrder { requested: i64, order: i64 },
    #[error("division by the zero series")]
    ZeroDivisor,
    #[error("inner series must have positive valuation, found {0}")]
    InnerNotSmall(i64),
    #[error("outer series must have nonnegative valuation, found {0}")]
    OuterPole(i64),
    #[error("argument of the logarithm must have zero constant term")]
    LogConstantTerm,
    #[error("inverting a non-monomial polynomial needs an explicit truncation order")]
    NeedsOrder,
}

/// A truncated Laurent series `Σ c_k z^k + O(z^{order+1})`.
///
/// Every coefficient up to and including `order` is exact; asking for a
/// higher one is an error rather than a silent zero.
#[derive(Clone, PartialEq)]
pub struct LaurentSeries<F = Rational> {
    val: i64,
    coeffs: Vec<F>,
    order: i64,
}

fn clamp(o: i64) -> i64 {
    o.min(EXACT)
}

impl<F: Scalar> LaurentSeries<F> {
    /// `Σ coeffs[i] z^{val+i}` known through `order`; terms beyond it are dropped.
    pub fn new(val: i64, coeffs: Vec<F>, order: i64) -> Self {
        let mut s = LaurentSeries { val, coeffs, order: clamp(order) };
        s.normalize();
        s
    }

    /// An exact Laurent polynomial.
    pub fn exact(val: i64, coeffs: Vec<F>) -> Self {
        Self::new(val, coeffs, EXACT)
    }

    pub fn zero(order: i64) -> Self {
        Self::new(0, Vec::new(), order)
    }

    pub fn constant(c: F) -> Self {
        Self::exact(0, vec![c])
    }

    pub fn monomial(c: F, k: i64) -> Self {
        Self::exact(k, vec![c])
    }

    /// The series `z`.
    pub fn var() -> Self {
        Self::monomial(F::one(), 1)
    }

    fn normalize(&mut self) {
        let keep = self.order.saturating_sub(self.val).saturating_add(1);
        if keep <= 0 {
            self.coeffs.clear();
        } else if (keep as u128) < self.coeffs.len() as u128 {
            self.coeffs.truncate(keep as usize);
        }
        let lead = self.coeffs.iter().take_while(|c| c.is_zero()).count();
        if lead > 0 {
            self.coeffs.drain(..lead);
            self.val += lead as i64;
        }
        while self.coeffs.last().is_some_and(|c| c.is_zero()) {
            self.coeffs.pop();
        }
        if self.coeffs.is_empty() {
            self.val = self.order.saturating_add(1);
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Lowest degree with a nonzero coefficient; `None` for the zero series.
    pub fn valuation(&self) -> Option<i64> {
        (!self.is_zero()).then_some(self.val)
    }

    /// The degree through which coefficients are exact ([`EXACT`] if all are).
    pub fn order(&self) -> i64 {
        self.order
    }

    pub fn is_exact(&self) -> bool {
        self.order >= EXACT
    }

    pub fn coeff(&self, k: i64) -> Result<F, SeriesError> {
        if k > self.order {
            return Err(SeriesError::BeyondOrder { requested: k, order: self.order });
        }
        if k < self.val {
            return Ok(F::zero());
        }
        Ok(self.coeffs.get((k - self.val) as usize).cloned().unwrap_or_else(F::zero))
    }

    /// Coefficients of `z^from ..= z^to`.
    pub fn coeffs_range(&self, from: i64, to: i64) -> Result<Vec<F>, SeriesError> {
        (from..=to).map(|k| self.coeff(k)).collect()
    }

    /// `self + O(z^{t+1})`.
    pub fn truncate(&self, t: i64) -> Self {
        Self::new(self.val, self.coeffs.clone(), self.order.min(t))
    }

    /// Multiplies by `z^k`.
    pub fn shift(&self, k: i64) -> Self {
        let order = if self.is_exact() { EXACT } else { self.order + k };
        Self::new(self.val + k, self.coeffs.clone(), order)
    }

    pub fn scale(&self, c: &F) -> Self {
        Self::new(self.val, self.coeffs.iter().map(|a| a.clone() * c).collect(), self.order)
    }

    pub fn map_coeffs<G: Scalar>(&self, f: impl Fn(&F) -> G) -> LaurentSeries<G> {
        LaurentSeries::new(self.val, self.coeffs.iter().map(f).collect(), self.order)
    }

    /// `f(c z)`. Panics if `c` is zero and the series has a pole.
    pub fn scale_var(&self, c: &F) -> Self {
        let mut p = if self.val >= 0 {
            pow_scalar(c, self.val as u64)
        } else {
            pow_scalar(&c.inv().expect("zero scale on a pole"), (-self.val) as u64)
        };
        let mut out = Vec::with_capacity(self.coeffs.len());
        for a in &self.coeffs {
            out.push(a.clone() * &p);
            p = p * c;
        }
        Self::new(self.val, out, self.order)
    }

    pub fn derivative(&self) -> Self {
        let out = self
            .coeffs
            .iter()
            .enumerate()
            .map(|(i, a)| a.clone() * F::from_int(self.val + i as i64))
            .collect();
        let order = if self.is_exact() { EXACT } else { self.order - 1 };
        Self::new(self.val - 1, out, order)
    }

    /// The multiplicative inverse, exact through `t` (or its natural precision
    /// when that is lower).
    pub fn inv_through(&self, t: i64) -> Result<Self, SeriesError> {
        if self.is_zero() {
            return Err(SeriesError::ZeroDivisor);
        }
        let v = self.val;
        if self.is_exact() && self.coeffs.len() == 1 {
            let c = self.coeffs[0].inv().ok_or(SeriesError::ZeroDivisor)?;
            return Ok(Self::monomial(c, -v).truncate(t));
        }
        let rel = if self.is_exact() { EXACT } else { self.order - v };
        let order = clamp((-v).saturating_add(rel)).min(t);
        if order < -v {
            return Ok(Self::zero(order));
        }
        let n = (order + v + 1) as usize;
        let a0inv = self.coeffs[0].inv().ok_or(SeriesError::ZeroDivisor)?;
        let mut out: Vec<F> = Vec::with_capacity(n);
        out.push(a0inv.clone());
        for k in 1..n {
            let mut s = F::zero();
            for j in 1..=k.min(self.coeffs.len() - 1) {
                s = s + self.coeffs[j].clone() * &out[k - j];
            }
            out.push(-(s * &a0inv));
        }
        Ok(Self::new(-v, out, order))
    }

    /// The inverse at natural precision; errors for exact non-monomials.
    pub fn inv(&self) -> Result<Self, SeriesError> {
        if self.is_exact() && self.coeffs.len() > 1 {
            return Err(SeriesError::NeedsOrder);
        }
        self.inv_through(EXACT)
    }

    pub fn div(&self, b: &Self) -> Result<Self, SeriesError> {
        Ok(self * &b.inv()?)
    }

    /// `self / b` exact through `t`, whatever the precision of the inputs allows.
    pub fn div_through(&self, b: &Self, t: i64) -> Result<Self, SeriesError> {
        let bv = b.valuation().ok_or(SeriesError::ZeroDivisor)?;
        let sv = self.valuation().unwrap_or(self.order.saturating_add(1));
        // the inverse is needed through t - sv to feed the product through t
        let inv = b.inv_through(t.saturating_sub(sv).max(-bv))?;
        Ok((self * &inv).truncate(t))
    }

    /// Integer power by repeated squaring; negative powers go through [`Self::inv`].
    pub fn pow(&self, k: i64) -> Result<Self, SeriesError> {
        if k < 0 {
            return self.inv()?.pow(-k);
        }
        let mut e = k as u64;
        let mut base = self.clone();
        let mut acc = Self::constant(F::one());
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        Ok(acc)
    }

    fn eff_val(&self) -> i64 {
        self.valuation().unwrap_or(self.order.saturating_add(1))
    }

    fn rel_precision(&self) -> i64 {
        if self.is_exact() {
            EXACT
        } else {
            self.order - self.eff_val()
        }
    }
}

fn pow_scalar<F: Scalar>(c: &F, mut e: u64) -> F {
    let mut base = c.clone();
    let mut acc = F::one();
    while e > 0 {
        if e & 1 == 1 {
            acc = acc * &base;
        }
        e >>= 1;
        if e > 0 {
            base = base.clone() * &base;
        }
    }
    acc
}

impl<F: Scalar> Add<&LaurentSeries<F>> for &LaurentSeries<F> {
    type Output = LaurentSeries<F>;
    fn add(self, o: &LaurentSeries<F>) -> LaurentSeries<F> {
        let order = self.order.min(o.order);
        if self.is_zero() {
            return o.truncate(order);
        }
        if o.is_zero() {
            return self.truncate(order);
        }
        let lo = self.val.min(o.val);
        let hi = (self.val + self.coeffs.len() as i64).max(o.val + o.coeffs.len() as i64) - 1;
        let hi = hi.min(order);
        if hi < lo {
            return LaurentSeries::zero(order);
        }
        let get = |s: &LaurentSeries<F>, k: i64| {
            if k < s.val {
                F::zero()
            } else {
                s.coeffs.get((k - s.val) as usize).cloned().unwrap_or_else(F::zero)
            }
        };
        let out = (lo..=hi).map(|k| get(self, k) + &get(o, k)).collect();
        LaurentSeries::new(lo, out, order)
    }
}

impl<F: Scalar> Neg for &LaurentSeries<F> {
    type Output = LaurentSeries<F>;
    fn neg(self) -> LaurentSeries<F> {
        LaurentSeries {
            val: self.val,
            coeffs: self.coeffs.iter().map(|c| -c.clone()).collect(),
            order: self.order,
        }
    }
}

impl<F: Scalar> Neg for LaurentSeries<F> {
    type Output = LaurentSeries<F>;
    fn neg(self) -> LaurentSeries<F> {
        -&self
    }
}

impl<F: Scalar> Sub<&LaurentSeries<F>> for &LaurentSeries<F> {
    type Output = LaurentSeries<F>;
    fn sub(self, o: &LaurentSeries<F>) -> LaurentSeries<F> {
        self + &(-o)
    }
}

impl<F: Scalar> Mul<&LaurentSeries<F>> for &LaurentSeries<F> {
    type Output = LaurentSeries<F>;
    fn mul(self, o: &LaurentSeries<F>) -> LaurentSeries<F> {
        let (va, vb) = (self.eff_val(), o.eff_val());
        let rel = self.rel_precision().min(o.rel_precision());
        let order = if rel >= EXACT {
            EXACT
        } else {
            clamp(va.saturating_add(vb).saturating_add(rel))
        };
        if self.is_zero() || o.is_zero() {
            return LaurentSeries::zero(order);
        }
        let v = va + vb;
        let full = self.coeffs.len() + o.coeffs.len() - 1;
        let n = if order >= EXACT { full } else { ((order - v + 1).max(0) as usize).min(full) };
        let mut out = vec![F::zero(); n];
        for (i, a) in self.coeffs.iter().enumerate() {
            if i >= n {
                break;
            }
            if a.is_zero() {
                continue;
            }
            for (j, b) in o.coeffs.iter().enumerate().take(n - i) {
                out[i + j] = out[i + j].clone() + a.clone() * b;
            }
        }
        LaurentSeries::new(v, out, order)
    }
}

macro_rules! owned_ops {
    ($tr:ident, $m:ident) => {
        impl<F: Scalar> $tr for LaurentSeries<F> {
            type Output = LaurentSeries<F>;
            fn $m(self, o: LaurentSeries<F>) -> LaurentSeries<F> {
                (&self).$m(&o)
            }
        }
        impl<'a, F: Scalar> $tr<&'a LaurentSeries<F>> for LaurentSeries<F> {
            type Output = LaurentSeries<F>;
            fn $m(self, o: &'a LaurentSeries<F>) -> LaurentSeries<F> {
                (&self).$m(o)
            }
        }
    };
}
owned_ops!(Add, add);
owned_ops!(Sub, sub);
owned_ops!(Mul, mul);

impl<F: Scalar> fmt::Display for LaurentSeries<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let k = self.val + i as i64;
            let (neg, body) = c.signed_parts();
            match (first, neg) {
                (true, true) => f.write_str("-")?,
                (true, false) => {}
                (false, true) => f.write_str(" - ")?,
                (false, false) => f.write_str(" + ")?,
            }
            first = false;
            match k {
                0 => f.write_str(&body)?,
                1 if body == "1" => f.write_str("z")?,
                1 => write!(f, "{body}*z")?,
                _ if body == "1" => write!(f, "z^{k}")?,
                _ => write!(f, "{body}*z^{k}")?,
            }
        }
        if first {
            f.write_str("0")?;
        }
        if !self.is_exact() {
            write!(f, " + O(z^{})", self.order + 1)?;
        }
        Ok(())
    }
}

impl<F: Scalar> fmt::Debug for LaurentSeries<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// `outer(inner)` exact through `t` (or less, if the inputs are less precise).
pub fn series_compose<F: Scalar>(
    outer: &LaurentSeries<F>,
    inner: &LaurentSeries<F>,
    t: i64,
) -> Result<LaurentSeries<F>, SeriesError> {
    if let Some(v) = outer.valuation() {
        if v < 0 {
            return Err(SeriesError::OuterPole(v));
        }
    }
    let vi = match inner.valuation() {
        Some(v) if v >= 1 => v,
        Some(v) => return Err(SeriesError::InnerNotSmall(v)),
        None => inner.order.saturating_add(1).max(1),
    };
    let mut order = t;
    if !outer.is_exact() {
        order = order.min((outer.order + 1).saturating_mul(vi) - 1);
    }
    if !inner.is_exact() {
        if let Some(k1) = outer.coeffs.iter().enumerate().find(|(_, c)| !c.is_zero()).map(|(i, _)| outer.val + i as i64) {
            if k1 >= 1 {
                order = order.min(inner.order.saturating_add((k1 - 1).saturating_mul(vi)));
            }
        }
    }
    let order = clamp(order);
    if outer.is_zero() {
        return Ok(LaurentSeries::zero(order));
    }
    let inner_t = inner.truncate(order);
    let top = outer.val + outer.coeffs.len() as i64 - 1;
    // Horner, dropping powers whose contribution starts beyond `order`
    let kmax = if vi > 0 { top.min(order / vi) } else { top };
    let mut acc = LaurentSeries::zero(order);
    for k in (0..=kmax).rev() {
        acc = (&acc * &inner_t).truncate(order);
        let c = outer.coeff(k)?;
        acc = &acc + &LaurentSeries::constant(c).truncate(order);
    }
    Ok(acc.truncate(order))
}

/// `ln(1 + u)` exact through `t`, by composing the Mercator series.
pub fn series_log_one_plus<F: Scalar>(
    u: &LaurentSeries<F>,
    t: i64,
) -> Result<LaurentSeries<F>, SeriesError> {
    match u.valuation() {
        Some(v) if v < 1 => return Err(SeriesError::LogConstantTerm),
        _ => {}
    }
    let tt = t.max(0);
    let merc: Vec<F> = (1..=tt)
        .map(|j| {
            let c = F::from_rational(&Rational::new(1, j));
            if j % 2 == 0 {
                -c
            } else {
                c
            }
        })
        .collect();
    let outer = LaurentSeries::new(1, merc, tt);
    series_compose(&outer, u, t)
}

/// `1 + z + … + z^t + O(z^{t+1})`.
pub fn series_geometric<F: Scalar>(t: i64) -> LaurentSeries<F> {
    LaurentSeries::new(0, vec![F::one(); (t.max(-1) + 1) as usize], t)
}

/// `exp(c z)` exact through `t`.
pub fn series_exp<F: Scalar>(c: &F, t: i64) -> LaurentSeries<F> {
    let mut out = Vec::with_capacity((t.max(-1) + 1) as usize);
    let mut term = F::one();
    for k in 0..=t {
        if k > 0 {
            term = term * c * &F::from_rational(&Rational::new(1, k));
        }
        out.push(term.clone());
    }
    LaurentSeries::new(0, out, t)
}

#[cfg(test)]
mod tests {
    use super::*;

    type S = LaurentSeries<Rational>;

    fn q(a: i64, b: i64) -> Rational {
        Rational::new(a, b)
    }

    fn ints(cs: &[i64]) -> Vec<Rational> {
        cs.iter().map(|&c| Rational::from(c)).collect()
    }

    #[test]
    fn mercator() {
        let z = S::var();
        let l = series_log_one_plus(&z, 3).unwrap();
        assert_eq!(l.coeffs_range(0, 3).unwrap(), vec![q(0, 1), q(1, 1), q(-1, 2), q(1, 3)]);
        assert!(l.coeff(4).is_err());
        let l2 = series_log_one_plus(&z.scale(&Rational::from(2)), 2).unwrap();
        assert_eq!(l2.coeffs_range(1, 2).unwrap(), ints(&[2, -2]));
        assert!(series_log_one_plus(&S::zero(EXACT), 5).unwrap().is_zero());
        assert_eq!(
            series_log_one_plus(&S::constant(Rational::from(1)), 2),
            Err(SeriesError::LogConstantTerm)
        );
    }

    #[test]
    fn geometric_and_products() {
        let g: S = series_geometric(2);
        assert_eq!(g.coeffs_range(0, 2).unwrap(), ints(&[1, 1, 1]));
        assert_eq!(series_geometric::<Rational>(0).coeffs_range(0, 0).unwrap(), ints(&[1]));
        let one_minus = S::exact(0, ints(&[1, -1]));
        let p = &series_geometric(5) * &one_minus;
        assert_eq!(p.order(), 5);
        assert_eq!(p.coeffs_range(0, 5).unwrap(), ints(&[1, 0, 0, 0, 0, 0]));
        let a = S::exact(0, ints(&[1, 1]));
        assert_eq!(&a * &one_minus, S::exact(0, ints(&[1, 0, -1])));
    }

    #[test]
    fn division() {
        let a = S::exact(1, vec![q(1, 1), q(-1, 2)]);
        let b = a.div(&S::var()).unwrap();
        assert_eq!(b, S::exact(0, vec![q(1, 1), q(-1, 2)]));
        assert!(S::var().inv().unwrap().valuation() == Some(-1));
        assert_eq!(a.div(&S::zero(EXACT)), Err(SeriesError::ZeroDivisor));
        assert_eq!(a.div(&S::exact(0, ints(&[1, 1]))), Err(SeriesError::NeedsOrder));
        // ln(1+z) / (z(z-1))
        let l = series_log_one_plus(&S::var(), 4).unwrap();
        let d = S::exact(1, ints(&[-1, 1]));
        let r = l.div_through(&d, 2).unwrap();
        assert_eq!(r.coeffs_range(0, 2).unwrap(), vec![q(-1, 1), q(-1, 2), q(-5, 6)]);
        assert_eq!(r.order(), 2);
    }

    #[test]
    fn composition() {
        let expm1 = &series_exp(&Rational::from(1), 6) - &S::constant(Rational::from(1));
        let sq = S::monomial(Rational::from(1), 2);
        let c = series_compose(&sq, &expm1, 3).unwrap();
        assert_eq!(c.coeffs_range(0, 3).unwrap(), ints(&[0, 0, 1, 1]));
        let outer = S::exact(0, ints(&[3, 0, 5]));
        assert_eq!(series_compose(&outer, &S::var(), 10).unwrap(), outer.truncate(10));
        let merc = series_log_one_plus(&S::var(), 4).unwrap();
        let c = series_compose(&merc, &expm1, 4).unwrap();
        assert_eq!(c.coeffs_range(0, 4).unwrap(), ints(&[0, 1, 0, 0, 0]));
        assert!(series_compose(&outer, &S::constant(Rational::from(1)), 3).is_err());
    }

    #[test]
    fn order_tracking() {
        // (z + O(z^3)) * (z^-1 + 1 + O(z^2)) is exact through z^1
        let a = S::new(1, ints(&[1, 0]), 2);
        let b = S::new(-1, ints(&[1, 1, 0]), 1);
        let p = &a * &b;
        assert_eq!(p.order(), 1);
        let zero = S::zero(3);
        assert_eq!((&zero * &b).order(), 2);
        assert_eq!(a.derivative().order(), 1);
        assert_eq!(a.shift(-2).valuation(), Some(-1));
    }

    #[test]
    fn powers() {
        let a = S::exact(0, ints(&[1, 1]));
        assert_eq!(a.pow(3).unwrap(), S::exact(0, ints(&[1, 3, 3, 1])));
        let z2 = S::monomial(Rational::from(2), 1).pow(-2).unwrap();
        assert_eq!(z2, S::monomial(q(1, 4), -2));
    }
}
