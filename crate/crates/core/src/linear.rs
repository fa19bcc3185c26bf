//! Sparse free modules over the rationals.

use std::collections::btree_map::{self, BTreeMap, Entry};
use std::ops::{Add, Neg, Sub};

use num_traits::Zero;

use crate::scalar::Rational;

/// A finite linear combination of keys with nonzero rational coefficients.
///
/// Terms iterate in key order, so two equal combinations always print and
/// serialize identically.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct LinearCombination<K: Ord> {
    terms: BTreeMap<K, Rational>,
}

impl<K: Ord> Default for LinearCombination<K> {
    fn default() -> Self {
        Self { terms: BTreeMap::new() }
    }
}

impl<K: Ord + Clone> LinearCombination<K> {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn single(key: K, coeff: Rational) -> Self {
        let mut out = Self::zero();
        out.add_term(key, coeff);
        out
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, key: &K) -> Rational {
        self.terms.get(key).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn iter(&self) -> btree_map::Iter<'_, K, Rational> {
        self.terms.iter()
    }

    pub fn keys(&self) -> btree_map::Keys<'_, K, Rational> {
        self.terms.keys()
    }

    /// Adds `coeff · key`, removing the entry if it cancels.
    pub fn add_term(&mut self, key: K, coeff: Rational) {
        if coeff.is_zero() {
            return;
        }
        match self.terms.entry(key) {
            Entry::Vacant(v) => {
                v.insert(coeff);
            }
            Entry::Occupied(mut o) => {
                *o.get_mut() += coeff;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn add_scaled(&mut self, c: &Rational, other: &Self) {
        if c.is_zero() {
            return;
        }
        for (k, v) in &other.terms {
            self.add_term(k.clone(), c * v);
        }
    }

    pub fn scale(&self, c: &Rational) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        Self {
            terms: self.terms.iter().map(|(k, v)| (k.clone(), c * v)).collect(),
        }
    }

    /// `c1·v1 + c2·v2`.
    pub fn combine(c1: &Rational, v1: &Self, c2: &Rational, v2: &Self) -> Self {
        let mut out = v1.scale(c1);
        out.add_scaled(c2, v2);
        out
    }

    /// Extends a key map linearly.
    pub fn map_keys<K2: Ord + Clone>(&self, mut f: impl FnMut(&K) -> K2) -> LinearCombination<K2> {
        let mut out = LinearCombination::zero();
        for (k, v) in &self.terms {
            out.add_term(f(k), v.clone());
        }
        out
    }

    /// Extends a map from keys to combinations linearly.
    pub fn flat_map<K2: Ord + Clone>(
        &self,
        mut f: impl FnMut(&K) -> LinearCombination<K2>,
    ) -> LinearCombination<K2> {
        let mut out = LinearCombination::zero();
        for (k, v) in &self.terms {
            out.add_scaled(v, &f(k));
        }
        out
    }

    /// Bilinear extension of a key-pair product.
    pub fn bilinear<K2: Ord + Clone, K3: Ord + Clone>(
        &self,
        other: &LinearCombination<K2>,
        mut f: impl FnMut(&K, &K2) -> LinearCombination<K3>,
    ) -> LinearCombination<K3> {
        let mut out = LinearCombination::zero();
        for (k1, v1) in &self.terms {
            for (k2, v2) in &other.terms {
                out.add_scaled(&(v1 * v2), &f(k1, k2));
            }
        }
        out
    }

    pub fn retain(&mut self, mut f: impl FnMut(&K) -> bool) {
        self.terms.retain(|k, _| f(k));
    }
}

impl<K: Ord + Clone> FromIterator<(K, Rational)> for LinearCombination<K> {
    fn from_iter<I: IntoIterator<Item = (K, Rational)>>(iter: I) -> Self {
        let mut out = Self::zero();
        for (k, v) in iter {
            out.add_term(k, v);
        }
        out
    }
}

impl<K: Ord> IntoIterator for LinearCombination<K> {
    type Item = (K, Rational);
    type IntoIter = btree_map::IntoIter<K, Rational>;

    fn into_iter(self) -> Self::IntoIter {
        self.terms.into_iter()
    }
}

impl<'a, K: Ord> IntoIterator for &'a LinearCombination<K> {
    type Item = (&'a K, &'a Rational);
    type IntoIter = btree_map::Iter<'a, K, Rational>;

    fn into_iter(self) -> Self::IntoIter {
        self.terms.iter()
    }
}

impl<K: Ord + Clone> Add for &LinearCombination<K> {
    type Output = LinearCombination<K>;

    fn add(self, rhs: Self) -> Self::Output {
        let mut out = self.clone();
        for (k, v) in &rhs.terms {
            out.add_term(k.clone(), v.clone());
        }
        out
    }
}

impl<K: Ord + Clone> Sub for &LinearCombination<K> {
    type Output = LinearCombination<K>;

    fn sub(self, rhs: Self) -> Self::Output {
        let mut out = self.clone();
        for (k, v) in &rhs.terms {
            out.add_term(k.clone(), -v);
        }
        out
    }
}

impl<K: Ord + Clone> Neg for &LinearCombination<K> {
    type Output = LinearCombination<K>;

    fn neg(self) -> Self::Output {
        LinearCombination {
            terms: self.terms.iter().map(|(k, v)| (k.clone(), -v)).collect(),
        }
    }
}
