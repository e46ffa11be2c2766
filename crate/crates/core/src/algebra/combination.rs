use std::collections::btree_map::{self, BTreeMap};
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};

use num_traits::Zero;

use crate::scalar::Scalar;

/// A finitely supported linear combination of keys with exact coefficients.
///
/// Zero coefficients are never stored, so structural equality is equality
/// of vectors.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Combination<K: Ord> {
    terms: BTreeMap<K, Scalar>,
}

impl<K: Ord> Default for Combination<K> {
    fn default() -> Self {
        Combination {
            terms: BTreeMap::new(),
        }
    }
}

impl<K: Ord + Clone> Combination<K> {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn basis(key: K) -> Self {
        Self::term(key, crate::scalar::one())
    }

    pub fn term(key: K, coeff: Scalar) -> Self {
        let mut c = Self::zero();
        c.add_term(key, coeff);
        c
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

    pub fn coeff(&self, key: &K) -> Scalar {
        self.terms.get(key).cloned().unwrap_or_else(Scalar::zero)
    }

    pub fn get(&self, key: &K) -> Option<&Scalar> {
        self.terms.get(key)
    }

    pub fn iter(&self) -> btree_map::Iter<'_, K, Scalar> {
        self.terms.iter()
    }

    pub fn keys(&self) -> btree_map::Keys<'_, K, Scalar> {
        self.terms.keys()
    }

    pub fn add_term(&mut self, key: K, coeff: Scalar) {
        if coeff.is_zero() {
            return;
        }
        match self.terms.entry(key) {
            btree_map::Entry::Vacant(v) => {
                v.insert(coeff);
            }
            btree_map::Entry::Occupied(mut o) => {
                *o.get_mut() += coeff;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn add_term_ref(&mut self, key: &K, coeff: &Scalar) {
        if coeff.is_zero() {
            return;
        }
        match self.terms.get_mut(key) {
            Some(v) => {
                *v += coeff;
                if v.is_zero() {
                    self.terms.remove(key);
                }
            }
            None => {
                self.terms.insert(key.clone(), coeff.clone());
            }
        }
    }

    /// `self += factor * other`.
    pub fn add_scaled(&mut self, other: &Self, factor: &Scalar) {
        if factor.is_zero() {
            return;
        }
        for (k, v) in &other.terms {
            self.add_term_ref(k, &(v * factor));
        }
    }

    pub fn scaled(&self, factor: &Scalar) -> Self {
        if factor.is_zero() {
            return Self::zero();
        }
        Combination {
            terms: self
                .terms
                .iter()
                .map(|(k, v)| (k.clone(), v * factor))
                .collect(),
        }
    }

    /// Keeps the terms whose key satisfies `keep`.
    pub fn filter(&self, mut keep: impl FnMut(&K) -> bool) -> Self {
        Combination {
            terms: self
                .terms
                .iter()
                .filter(|(k, _)| keep(k))
                .map(|(k, v)| (k.clone(), v.clone()))
                .collect(),
        }
    }

    /// Re-keys every term, merging collisions.
    pub fn map_keys<L: Ord + Clone>(&self, mut f: impl FnMut(&K) -> L) -> Combination<L> {
        let mut out = Combination::zero();
        for (k, v) in &self.terms {
            out.add_term(f(k), v.clone());
        }
        out
    }

    /// Applies a linear map given on keys.
    pub fn map_linear<L: Ord + Clone>(
        &self,
        mut f: impl FnMut(&K) -> Combination<L>,
    ) -> Combination<L> {
        let mut out = Combination::zero();
        for (k, v) in &self.terms {
            out.add_scaled(&f(k), v);
        }
        out
    }

    pub fn into_terms(self) -> BTreeMap<K, Scalar> {
        self.terms
    }
}

impl<K: Ord + Clone> FromIterator<(K, Scalar)> for Combination<K> {
    fn from_iter<I: IntoIterator<Item = (K, Scalar)>>(iter: I) -> Self {
        let mut c = Combination::zero();
        for (k, v) in iter {
            c.add_term(k, v);
        }
        c
    }
}

impl<'a, K: Ord> IntoIterator for &'a Combination<K> {
    type Item = (&'a K, &'a Scalar);
    type IntoIter = btree_map::Iter<'a, K, Scalar>;

    fn into_iter(self) -> Self::IntoIter {
        self.terms.iter()
    }
}

impl<K: Ord + Clone> AddAssign<&Combination<K>> for Combination<K> {
    fn add_assign(&mut self, rhs: &Combination<K>) {
        for (k, v) in &rhs.terms {
            self.add_term_ref(k, v);
        }
    }
}

impl<K: Ord + Clone> SubAssign<&Combination<K>> for Combination<K> {
    fn sub_assign(&mut self, rhs: &Combination<K>) {
        for (k, v) in &rhs.terms {
            self.add_term_ref(k, &-v);
        }
    }
}

impl<K: Ord + Clone> Add for Combination<K> {
    type Output = Combination<K>;

    fn add(mut self, rhs: Self) -> Self {
        self += &rhs;
        self
    }
}

impl<K: Ord + Clone> Add<&Combination<K>> for &Combination<K> {
    type Output = Combination<K>;

    fn add(self, rhs: &Combination<K>) -> Combination<K> {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl<K: Ord + Clone> Sub for Combination<K> {
    type Output = Combination<K>;

    fn sub(mut self, rhs: Self) -> Self {
        self -= &rhs;
        self
    }
}

impl<K: Ord + Clone> Sub<&Combination<K>> for &Combination<K> {
    type Output = Combination<K>;

    fn sub(self, rhs: &Combination<K>) -> Combination<K> {
        let mut out = self.clone();
        out -= rhs;
        out
    }
}

impl<K: Ord + Clone> Neg for Combination<K> {
    type Output = Combination<K>;

    fn neg(mut self) -> Self {
        for v in self.terms.values_mut() {
            *v = -v.clone();
        }
        self
    }
}

impl<K: Ord + Clone> Neg for &Combination<K> {
    type Output = Combination<K>;

    fn neg(self) -> Combination<K> {
        -self.clone()
    }
}

impl<K: Ord + Clone> Mul<&Scalar> for &Combination<K> {
    type Output = Combination<K>;

    fn mul(self, rhs: &Scalar) -> Combination<K> {
        self.scaled(rhs)
    }
}

impl<K: Ord + Clone> Mul<Scalar> for Combination<K> {
    type Output = Combination<K>;

    fn mul(self, rhs: Scalar) -> Combination<K> {
        self.scaled(&rhs)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::{frac, int};

    #[test]
    fn zeros_are_dropped() {
        let mut c = Combination::term(1u8, int(2));
        c.add_term(1, int(-2));
        assert!(c.is_zero());
        c.add_term(3, int(0));
        assert_eq!(c.len(), 0);
    }

    #[test]
    fn arithmetic() {
        let a: Combination<u8> = [(1, int(1)), (2, frac(1, 2))].into_iter().collect();
        let b: Combination<u8> = [(2, frac(-1, 2)), (3, int(4))].into_iter().collect();
        let s = &a + &b;
        assert_eq!(s.coeff(&2), int(0));
        assert_eq!(s.len(), 2);
        assert_eq!(&(&a - &a), &Combination::zero());
        assert_eq!((-a.clone()).coeff(&1), int(-1));
        assert_eq!(a.scaled(&int(2)).coeff(&2), int(1));
    }
}
