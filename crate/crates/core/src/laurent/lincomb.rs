//! Finite linear combinations of basis keys with Laurent polynomial
//! coefficients.

use std::collections::btree_map::{self, BTreeMap};
use std::ops::{Add, Neg, Sub};

use super::poly::LaurentPoly;

/// A normalized map `key -> coefficient` without zero coefficients.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct LinComb<K: Ord> {
    terms: BTreeMap<K, LaurentPoly>,
}

impl<K: Ord> Default for LinComb<K> {
    fn default() -> Self {
        LinComb {
            terms: BTreeMap::new(),
        }
    }
}

impl<K: Ord + Clone> LinComb<K> {
    /// The zero combination.
    pub fn zero() -> Self {
        Self::default()
    }

    /// `c * key`.
    pub fn term(key: K, c: LaurentPoly) -> Self {
        let mut out = Self::zero();
        out.add_term(key, &c);
        out
    }

    /// Adds `c * key` in place.
    pub fn add_term(&mut self, key: K, c: &LaurentPoly) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(key) {
            btree_map::Entry::Vacant(v) => {
                v.insert(c.clone());
            }
            btree_map::Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    /// Adds `c * other` in place.
    pub fn add_scaled(&mut self, other: &LinComb<K>, c: &LaurentPoly) {
        if c.is_zero() {
            return;
        }
        for (k, v) in &other.terms {
            self.add_term(k.clone(), &(v * c));
        }
    }

    /// `c * self`.
    pub fn scale(&self, c: &LaurentPoly) -> Self {
        let mut out = Self::zero();
        out.add_scaled(self, c);
        out
    }

    /// True for zero.
    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Number of keys.
    pub fn len(&self) -> usize {
        self.terms.len()
    }

    /// True when there are no keys.
    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Coefficient of `key`, zero when absent.
    pub fn coeff(&self, key: &K) -> LaurentPoly {
        self.terms.get(key).cloned().unwrap_or_default()
    }

    /// Terms in key order.
    pub fn iter(&self) -> btree_map::Iter<'_, K, LaurentPoly> {
        self.terms.iter()
    }

    /// Keys in order.
    pub fn keys(&self) -> impl Iterator<Item = &K> {
        self.terms.keys()
    }

    /// Applies `f` to every key, adding coefficients of colliding images.
    pub fn map_keys<K2: Ord + Clone>(&self, mut f: impl FnMut(&K) -> K2) -> LinComb<K2> {
        let mut out = LinComb::zero();
        for (k, v) in &self.terms {
            out.add_term(f(k), v);
        }
        out
    }

    /// Keeps the terms whose key satisfies `pred`.
    pub fn filter(&self, mut pred: impl FnMut(&K) -> bool) -> Self {
        LinComb {
            terms: self
                .terms
                .iter()
                .filter(|(k, _)| pred(k))
                .map(|(k, v)| (k.clone(), v.clone()))
                .collect(),
        }
    }
}

impl<K: Ord + Clone> FromIterator<(K, LaurentPoly)> for LinComb<K> {
    fn from_iter<I: IntoIterator<Item = (K, LaurentPoly)>>(iter: I) -> Self {
        let mut out = Self::zero();
        for (k, v) in iter {
            out.add_term(k, &v);
        }
        out
    }
}

impl<K: Ord + Clone> Add<&LinComb<K>> for &LinComb<K> {
    type Output = LinComb<K>;
    fn add(self, o: &LinComb<K>) -> LinComb<K> {
        let mut out = self.clone();
        out.add_scaled(o, &LaurentPoly::one());
        out
    }
}

impl<K: Ord + Clone> Sub<&LinComb<K>> for &LinComb<K> {
    type Output = LinComb<K>;
    fn sub(self, o: &LinComb<K>) -> LinComb<K> {
        let mut out = self.clone();
        out.add_scaled(o, &LaurentPoly::constant(-1));
        out
    }
}

impl<K: Ord + Clone> Neg for &LinComb<K> {
    type Output = LinComb<K>;
    fn neg(self) -> LinComb<K> {
        self.scale(&LaurentPoly::constant(-1))
    }
}

impl<'a, K: Ord> IntoIterator for &'a LinComb<K> {
    type Item = (&'a K, &'a LaurentPoly);
    type IntoIter = btree_map::Iter<'a, K, LaurentPoly>;
    fn into_iter(self) -> Self::IntoIter {
        self.terms.iter()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn normalization() {
        let x: LinComb<u32> = [(1, LaurentPoly::q()), (2, LaurentPoly::one())]
            .into_iter()
            .collect();
        assert_eq!(&LinComb::zero() + &x, x);
        assert!((&x - &x).is_zero());
        let y = x.scale(&LaurentPoly::q());
        assert_eq!(y.coeff(&1), LaurentPoly::monomial(1, 2));
        assert_eq!(y.coeff(&2), LaurentPoly::q());
        assert_eq!(y.coeff(&3), LaurentPoly::zero());
        let merged = x.map_keys(|_| 0u32);
        assert_eq!(merged.coeff(&0), &LaurentPoly::q() + &LaurentPoly::one());
    }
}
