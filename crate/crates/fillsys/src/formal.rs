//! Integer formal sums over ordered canonical keys.

use std::collections::BTreeMap;

/// A finite Z-linear combination with no zero coefficients stored.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FormalSum<K: Ord> {
    terms: BTreeMap<K, i64>,
}

impl<K: Ord> Default for FormalSum<K> {
    fn default() -> Self {
        FormalSum {
            terms: BTreeMap::new(),
        }
    }
}

impl<K: Ord> FormalSum<K> {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn add(&mut self, key: K, coeff: i64) {
        if coeff == 0 {
            return;
        }
        let entry = self.terms.entry(key);
        match entry {
            std::collections::btree_map::Entry::Occupied(mut o) => {
                let v = o.get_mut();
                *v += coeff;
                if *v == 0 {
                    o.remove();
                }
            }
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(coeff);
            }
        }
    }

    pub fn add_sum(&mut self, other: FormalSum<K>, scale: i64) {
        for (k, c) in other.terms {
            self.add(k, c * scale);
        }
    }

    pub fn negate(&mut self) {
        for v in self.terms.values_mut() {
            *v = -*v;
        }
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

    pub fn coeff(&self, key: &K) -> i64 {
        self.terms.get(key).copied().unwrap_or(0)
    }

    pub fn iter(&self) -> impl Iterator<Item = (&K, i64)> {
        self.terms.iter().map(|(k, &c)| (k, c))
    }
}

impl<K: Ord> FromIterator<(K, i64)> for FormalSum<K> {
    fn from_iter<T: IntoIterator<Item = (K, i64)>>(iter: T) -> Self {
        let mut sum = FormalSum::new();
        for (k, c) in iter {
            sum.add(k, c);
        }
        sum
    }
}
