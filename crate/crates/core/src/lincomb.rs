//! Sparse formal linear combinations with machine-integer coefficients.
//!
//! The combinatorial layers only ever need integral coefficients, either in
//! Z or reduced modulo a prime. Coefficients are kept canonical for the
//! chosen ring and arithmetic overflow is treated as a bug (it panics).

use std::collections::HashMap;
use std::hash::Hash;

use crate::exactlin::{ChainComplex, LinError, Ring, SparseMatrix};

/// A finite linear combination `Σ c_k · k` with no zero coefficients.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Lin<K: Eq + Hash> {
    ring: Ring,
    terms: HashMap<K, i64>,
}

impl<K: Clone + Eq + Hash + Ord> Lin<K> {
    pub fn zero(ring: Ring) -> Self {
        Lin {
            ring,
            terms: HashMap::new(),
        }
    }

    pub fn single(ring: Ring, k: K, c: i64) -> Self {
        let mut l = Lin::zero(ring);
        l.add_term(k, c);
        l
    }

    pub fn ring(&self) -> Ring {
        self.ring
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

    pub fn coeff(&self, k: &K) -> i64 {
        self.terms.get(k).copied().unwrap_or(0)
    }

    pub fn add_term(&mut self, k: K, c: i64) {
        let c = self.ring.reduce_i64(c);
        if c == 0 {
            return;
        }
        match self.terms.get_mut(&k) {
            Some(old) => {
                let s = self
                    .ring
                    .reduce_i64(old.checked_add(c).expect("coefficient overflow"));
                if s == 0 {
                    self.terms.remove(&k);
                } else {
                    *old = s;
                }
            }
            None => {
                self.terms.insert(k, c);
            }
        }
    }

    /// `self += c · other`
    pub fn add_scaled(&mut self, other: &Lin<K>, c: i64) {
        for (k, v) in &other.terms {
            self.add_term(k.clone(), mul(*v, c));
        }
    }

    pub fn scaled(&self, c: i64) -> Lin<K> {
        let mut out = Lin::zero(self.ring);
        out.add_scaled(self, c);
        out
    }

    pub fn iter(&self) -> impl Iterator<Item = (&K, i64)> {
        self.terms.iter().map(|(k, v)| (k, *v))
    }

    /// Terms sorted by key, for deterministic output.
    pub fn sorted(&self) -> Vec<(K, i64)> {
        let mut v: Vec<(K, i64)> = self.terms.iter().map(|(k, c)| (k.clone(), *c)).collect();
        v.sort();
        v
    }

    /// Applies a linear map given on basis elements.
    pub fn map_linear<L, F>(&self, ring: Ring, mut f: F) -> Lin<L>
    where
        L: Clone + Eq + Hash + Ord,
        F: FnMut(&K) -> Lin<L>,
    {
        let mut out = Lin::zero(ring);
        for (k, c) in &self.terms {
            out.add_scaled(&f(k), *c);
        }
        out
    }
}

impl<K: Clone + Eq + Hash + Ord> FromIterator<(K, i64)> for Lin<K> {
    /// Collects into a combination over Z.
    fn from_iter<T: IntoIterator<Item = (K, i64)>>(iter: T) -> Self {
        let mut l = Lin::zero(Ring::Integers);
        for (k, c) in iter {
            l.add_term(k, c);
        }
        l
    }
}

/// Checked product of two coefficients.
pub fn mul(a: i64, b: i64) -> i64 {
    a.checked_mul(b).expect("coefficient overflow")
}

/// `(-1)^e`
pub fn sign_of(e: i64) -> i64 {
    if e.rem_euclid(2) == 0 {
        1
    } else {
        -1
    }
}

/// Koszul sign of rearranging graded items.
///
/// `degrees[i]` is the degree of the item at position `i` of the original
/// sequence and `order` lists original positions in their new order. Each
/// pair of items whose relative order is swapped contributes
/// `(-1)^(deg a · deg b)`.
pub fn koszul_sign(degrees: &[i64], order: &[usize]) -> i64 {
    debug_assert_eq!(degrees.len(), order.len());
    let mut parity = 0i64;
    for i in 0..order.len() {
        for j in i + 1..order.len() {
            if order[i] > order[j] {
                parity += degrees[order[i]] * degrees[order[j]];
            }
        }
    }
    sign_of(parity)
}

/// Sign of a permutation given as a list of distinct comparable values.
pub fn permutation_sign<T: Ord>(values: &[T]) -> i64 {
    let mut inversions = 0i64;
    for i in 0..values.len() {
        for j in i + 1..values.len() {
            if values[i] > values[j] {
                inversions += 1;
            }
        }
    }
    sign_of(inversions)
}

/// Assembles a chain complex from graded basis elements and a differential.
///
/// Basis elements are indexed in the order given, separately in each
/// degree. A differential term outside the basis is an error.
pub fn complex_from_basis<K, F>(
    ring: Ring,
    basis: &[(K, i64)],
    mut diff: F,
) -> Result<ChainComplex, LinError>
where
    K: Clone + Eq + Hash + Ord,
    F: FnMut(&K) -> Lin<K>,
{
    let mut index: HashMap<&K, (i64, usize)> = HashMap::new();
    let mut cx = ChainComplex::new(ring);
    for (k, d) in basis {
        let slot = cx.dims.entry(*d).or_insert(0);
        index.insert(k, (*d, *slot));
        *slot += 1;
    }
    let mut triples: std::collections::BTreeMap<i64, Vec<(usize, usize, i64)>> = Default::default();
    for (k, d) in basis {
        let col = index[k].1;
        for (t, c) in diff(k).iter() {
            match index.get(t) {
                Some(&(dt, row)) if dt == d - 1 => triples.entry(*d).or_default().push((row, col, c)),
                _ => {
                    return Err(LinError::Dimension(
                        "differential leaves the truncated basis".to_string(),
                    ))
                }
            }
        }
    }
    for (d, t) in triples {
        let m = SparseMatrix::from_i64_entries(ring, cx.dim(d - 1), cx.dim(d), t);
        cx.diffs.insert(d, m);
    }
    Ok(cx)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn zero_coefficients_are_dropped() {
        let mut l: Lin<u8> = Lin::zero(Ring::Integers);
        l.add_term(1, 2);
        l.add_term(1, -2);
        assert!(l.is_zero());
        let mut l: Lin<u8> = Lin::zero(Ring::PrimeField(2));
        l.add_term(1, 1);
        l.add_term(1, 1);
        assert!(l.is_zero());
        l.add_term(2, -3);
        assert_eq!(l.coeff(&2), 1);
    }

    #[test]
    fn koszul_signs() {
        // swapping two odd items costs a sign, moving past an even one does not
        assert_eq!(koszul_sign(&[1, 1], &[1, 0]), -1);
        assert_eq!(koszul_sign(&[1, 2], &[1, 0]), 1);
        assert_eq!(koszul_sign(&[1, 1, 1], &[2, 0, 1]), 1);
        assert_eq!(koszul_sign(&[1, 1, 1], &[2, 1, 0]), -1);
    }

    #[test]
    fn permutation_signs() {
        assert_eq!(permutation_sign(&[1, 2, 3]), 1);
        assert_eq!(permutation_sign(&[2, 1, 3]), -1);
        assert_eq!(permutation_sign(&[3, 1, 2]), 1);
    }
}
