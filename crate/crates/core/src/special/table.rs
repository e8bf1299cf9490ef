use std::collections::HashMap;
use std::sync::RwLock;

use crate::exact::Rational;

use super::{
    alt_harmonic, bernoulli, bernoulli_second_kind, daehee, derangement, euler_at_zero, harmonic,
    leibnitz, stirling1, stirling2, LeibnitzMethod, StirlingMethod,
};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Family {
    Bernoulli,
    EulerAtZero,
    Stirling1,
    Stirling2,
    Daehee,
    Derangement,
    Harmonic,
    AltHarmonic,
    Leibnitz,
    Bernoulli2nd,
}

impl Family {
    pub const ALL: [Family; 10] = [
        Family::Bernoulli,
        Family::EulerAtZero,
        Family::Stirling1,
        Family::Stirling2,
        Family::Daehee,
        Family::Derangement,
        Family::Harmonic,
        Family::AltHarmonic,
        Family::Leibnitz,
        Family::Bernoulli2nd,
    ];

    /// Whether the family is indexed by a pair.
    pub fn is_pair(self) -> bool {
        matches!(self, Family::Stirling1 | Family::Stirling2 | Family::Leibnitz)
    }

    /// The value from its defining formula, bypassing any cache.
    ///
    /// Single-index families ignore `k`. Leibnitz numbers with `k > n` are 0.
    pub fn compute(self, n: usize, k: usize) -> Rational {
        match self {
            Family::Bernoulli => bernoulli(n),
            Family::EulerAtZero => euler_at_zero(n),
            Family::Stirling1 => stirling1(n, k, StirlingMethod::Recurrence),
            Family::Stirling2 => stirling2(n, k),
            Family::Daehee => daehee(n),
            Family::Derangement => derangement(n),
            Family::Harmonic => harmonic(n),
            Family::AltHarmonic => alt_harmonic(n),
            Family::Leibnitz => leibnitz(n, k, LeibnitzMethod::Closed).unwrap_or_default(),
            Family::Bernoulli2nd => bernoulli_second_kind(n),
        }
    }
}

/// Append-only memo table shared between threads.
#[derive(Debug, Default)]
pub struct NumberFamilyTable {
    entries: RwLock<HashMap<(Family, usize, usize), Rational>>,
}

impl NumberFamilyTable {
    pub fn new() -> Self {
        Self::default()
    }

    /// Cached [`Family::compute`].
    ///
    /// ```
    /// use finsum::special::{Family, NumberFamilyTable};
    /// let t = NumberFamilyTable::new();
    /// assert_eq!(t.get(Family::Stirling2, 4, 2), Family::Stirling2.compute(4, 2));
    /// assert_eq!(t.len(), 1);
    /// ```
    pub fn get(&self, family: Family, n: usize, k: usize) -> Rational {
        let key = (family, n, if family.is_pair() { k } else { 0 });
        if let Some(v) = self.entries.read().unwrap().get(&key) {
            return v.clone();
        }
        let v = family.compute(key.1, key.2);
        self.entries
            .write()
            .unwrap()
            .entry(key)
            .or_insert(v)
            .clone()
    }

    pub fn len(&self) -> usize {
        self.entries.read().unwrap().len()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }
}
