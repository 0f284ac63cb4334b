use std::collections::BTreeMap;

use super::{LinError, Ring, Scalar};

/// A sparse matrix with exact entries; zero entries are never stored.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SparseMatrix {
    ring: Ring,
    rows: usize,
    cols: usize,
    entries: BTreeMap<(usize, usize), Scalar>,
}

impl SparseMatrix {
    pub fn zeros(ring: Ring, rows: usize, cols: usize) -> SparseMatrix {
        SparseMatrix {
            ring,
            rows,
            cols,
            entries: BTreeMap::new(),
        }
    }

    pub fn identity(ring: Ring, n: usize) -> SparseMatrix {
        SparseMatrix::from_i64_entries(ring, n, n, (0..n).map(|i| (i, i, 1)))
    }

    /// Builds a matrix from integer triples, summing repeated positions and
    /// reducing into `ring`.
    pub fn from_i64_entries<I>(ring: Ring, rows: usize, cols: usize, triples: I) -> SparseMatrix
    where
        I: IntoIterator<Item = (usize, usize, i64)>,
    {
        let mut m = SparseMatrix::zeros(ring, rows, cols);
        for (r, c, v) in triples {
            m.add_to(r, c, &Scalar::from_i64(ring, v));
        }
        m
    }

    /// Builds a matrix from dense integer rows.
    pub fn from_rows(ring: Ring, rows: &[Vec<i64>]) -> SparseMatrix {
        let cols = rows.first().map_or(0, |r| r.len());
        SparseMatrix::from_i64_entries(
            ring,
            rows.len(),
            cols,
            rows.iter()
                .enumerate()
                .flat_map(|(i, row)| row.iter().enumerate().map(move |(j, &v)| (i, j, v))),
        )
    }

    pub fn ring(&self) -> Ring {
        self.ring
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn nnz(&self) -> usize {
        self.entries.len()
    }

    pub fn is_zero(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn get(&self, r: usize, c: usize) -> Scalar {
        self.entries
            .get(&(r, c))
            .cloned()
            .unwrap_or_else(|| Scalar::zero(self.ring))
    }

    /// Adds `v` to entry `(r, c)`, dropping the entry if it becomes zero.
    pub fn add_to(&mut self, r: usize, c: usize, v: &Scalar) {
        assert!(r < self.rows && c < self.cols, "entry ({r},{c}) out of bounds");
        assert_eq!(v.ring(), self.ring, "entry from a different ring");
        if v.is_zero() {
            return;
        }
        let key = (r, c);
        let sum = match self.entries.get(&key) {
            Some(old) => old.add(v),
            None => v.clone(),
        };
        if sum.is_zero() {
            self.entries.remove(&key);
        } else {
            self.entries.insert(key, sum);
        }
    }

    /// Iterates over the stored (nonzero) entries in row-major order.
    pub fn entries(&self) -> impl Iterator<Item = (usize, usize, &Scalar)> {
        self.entries.iter().map(|(&(r, c), v)| (r, c, v))
    }

    pub fn transpose(&self) -> SparseMatrix {
        SparseMatrix {
            ring: self.ring,
            rows: self.cols,
            cols: self.rows,
            entries: self
                .entries
                .iter()
                .map(|(&(r, c), v)| ((c, r), v.clone()))
                .collect(),
        }
    }

    /// Reinterprets integer entries in another ring (e.g. reduction mod p).
    pub fn change_ring(&self, ring: Ring) -> SparseMatrix {
        let mut m = SparseMatrix::zeros(ring, self.rows, self.cols);
        for (&(r, c), v) in &self.entries {
            let int = v
                .to_bigint()
                .expect("only integral matrices can change ring");
            m.add_to(r, c, &Scalar::from_bigint(ring, int));
        }
        m
    }

    /// Matrix product `self · other`.
    pub fn mul(&self, other: &SparseMatrix) -> Result<SparseMatrix, LinError> {
        if self.ring != other.ring {
            return Err(LinError::RingMismatch(self.ring, other.ring));
        }
        if self.cols != other.rows {
            return Err(LinError::Dimension(format!(
                "{}x{} times {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        let mut by_row: Vec<Vec<(usize, &Scalar)>> = vec![Vec::new(); other.rows];
        for (&(r, c), v) in &other.entries {
            by_row[r].push((c, v));
        }
        let mut out = SparseMatrix::zeros(self.ring, self.rows, other.cols);
        for (&(r, k), a) in &self.entries {
            for &(c, b) in &by_row[k] {
                out.add_to(r, c, &a.mul(b));
            }
        }
        Ok(out)
    }

    /// Applies the matrix to a sparse column vector given as (index, value) pairs.
    pub fn apply(&self, v: &BTreeMap<usize, Scalar>) -> BTreeMap<usize, Scalar> {
        let mut out: BTreeMap<usize, Scalar> = BTreeMap::new();
        for (&(r, c), a) in &self.entries {
            if let Some(x) = v.get(&c) {
                let t = a.mul(x);
                let e = out.entry(r).or_insert_with(|| Scalar::zero(self.ring));
                *e = e.add(&t);
            }
        }
        out.retain(|_, s| !s.is_zero());
        out
    }

    /// Rows as sorted (column, value) lists.
    pub(crate) fn row_lists(&self) -> Vec<Vec<(usize, Scalar)>> {
        let mut rows = vec![Vec::new(); self.rows];
        for (&(r, c), v) in &self.entries {
            rows[r].push((c, v.clone()));
        }
        rows
    }

    /// Horizontal concatenation `[self | other]`.
    pub fn hstack(&self, other: &SparseMatrix) -> Result<SparseMatrix, LinError> {
        if self.ring != other.ring {
            return Err(LinError::RingMismatch(self.ring, other.ring));
        }
        if self.rows != other.rows {
            return Err(LinError::Dimension("hstack with different row counts".into()));
        }
        let mut m = self.clone();
        m.cols += other.cols;
        for (&(r, c), v) in &other.entries {
            m.entries.insert((r, c + self.cols), v.clone());
        }
        Ok(m)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn zero_entries_are_not_stored() {
        let m = SparseMatrix::from_i64_entries(Ring::Integers, 2, 2, [(0, 0, 1), (0, 0, -1), (1, 1, 0)]);
        assert_eq!(m.nnz(), 0);
        let m = SparseMatrix::from_i64_entries(Ring::PrimeField(2), 1, 1, [(0, 0, 4)]);
        assert!(m.is_zero());
    }

    #[test]
    fn product_matches_hand_computation() {
        let a = SparseMatrix::from_rows(Ring::Integers, &[vec![1, 2], vec![0, 1]]);
        let b = SparseMatrix::from_rows(Ring::Integers, &[vec![3, 0], vec![1, -1]]);
        let c = a.mul(&b).unwrap();
        assert_eq!(c, SparseMatrix::from_rows(Ring::Integers, &[vec![5, -2], vec![1, -1]]));
    }

    #[test]
    fn product_rejects_mismatches() {
        let a = SparseMatrix::zeros(Ring::Integers, 2, 3);
        let b = SparseMatrix::zeros(Ring::Integers, 2, 3);
        assert!(matches!(a.mul(&b), Err(LinError::Dimension(_))));
        let c = SparseMatrix::zeros(Ring::Rationals, 3, 1);
        assert!(matches!(a.mul(&c), Err(LinError::RingMismatch(..))));
    }
}
