//! Formal finite linear combinations of basis objects with coefficients in a
//! pluggable commutative ring. Zero coefficients are never stored.

use alloc::collections::BTreeMap;
use alloc::vec::Vec;

use crate::rings::Ring;

/// A formal sum `sum_i c_i * k_i` over ordered basis keys `K`.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Debug)]
pub struct LinComb<K: Ord + Clone, R: Ring> {
    terms: BTreeMap<K, R>,
}

impl<K: Ord + Clone, R: Ring> LinComb<K, R> {
    pub fn zero() -> Self {
        LinComb {
            terms: BTreeMap::new(),
        }
    }

    pub fn basis(key: K) -> Self {
        Self::term(key, R::one())
    }

    pub fn term(key: K, coef: R) -> Self {
        let mut terms = BTreeMap::new();
        if !coef.is_zero() {
            terms.insert(key, coef);
        }
        LinComb { terms }
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

    pub fn iter(&self) -> impl Iterator<Item = (&K, &R)> {
        self.terms.iter()
    }

    pub fn into_terms(self) -> Vec<(K, R)> {
        self.terms.into_iter().collect()
    }

    pub fn coef(&self, key: &K) -> R {
        self.terms.get(key).cloned().unwrap_or_else(R::zero)
    }

    pub fn add_term(&mut self, key: K, coef: R) {
        if coef.is_zero() {
            return;
        }
        let entry = self.terms.entry(key.clone()).or_insert_with(R::zero);
        *entry = entry.add(&coef);
        if entry.is_zero() {
            self.terms.remove(&key);
        }
    }

    pub fn add(&self, rhs: &Self) -> Self {
        let mut out = self.clone();
        for (k, c) in rhs.iter() {
            out.add_term(k.clone(), c.clone());
        }
        out
    }

    pub fn sub(&self, rhs: &Self) -> Self {
        self.add(&rhs.scale(&R::one().neg()))
    }

    pub fn scale(&self, c: &R) -> Self {
        let mut out = Self::zero();
        for (k, v) in self.iter() {
            out.add_term(k.clone(), v.mul(c));
        }
        out
    }

    /// Apply a linear map given on basis elements.
    pub fn map_basis<K2: Ord + Clone, F>(&self, mut f: F) -> LinComb<K2, R>
    where
        F: FnMut(&K) -> LinComb<K2, R>,
    {
        let mut out = LinComb::zero();
        for (k, c) in self.iter() {
            for (k2, c2) in f(k).iter() {
                out.add_term(k2.clone(), c.mul(c2));
            }
        }
        out
    }

    /// Extract the unique term `(key, coef)` if the sum has exactly one term.
    pub fn single(&self) -> Option<(&K, &R)> {
        if self.terms.len() == 1 {
            self.terms.iter().next()
        } else {
            None
        }
    }
}
