//! Row reduction over fields: ranks, kernels and ranks of induced maps.

use std::collections::BTreeMap;

use super::{LinError, Ring, Scalar, SparseMatrix};

type Row = Vec<(usize, Scalar)>;

/// Rank of a matrix over Q or F_p.
pub fn rank(m: &SparseMatrix) -> Result<usize, LinError> {
    match m.ring() {
        Ring::Integers => Err(LinError::WrongRing {
            expected: "a field",
            found: m.ring(),
        }),
        Ring::PrimeField(p) => {
            let rows: Vec<Vec<(usize, u64)>> = m
                .row_lists()
                .into_iter()
                .map(|r| r.into_iter().map(|(c, v)| (c, v.as_residue())).collect())
                .collect();
            Ok(rank_mod_p(rows, p))
        }
        Ring::Rationals => {
            let mut ech = Echelon::default();
            for row in m.row_lists() {
                ech.insert(row);
            }
            Ok(ech.pivots.len())
        }
    }
}

/// Rank over F_p of an integral matrix (used to certify Smith forms).
pub(crate) fn rank_mod_p_of_integral(m: &SparseMatrix, p: u64) -> usize {
    use num_integer::Integer;
    use num_traits::ToPrimitive;
    let modulus = num_bigint::BigInt::from(p);
    let mut rows: Vec<Vec<(usize, u64)>> = vec![Vec::new(); m.rows()];
    for (r, c, v) in m.entries() {
        let big = v.to_bigint().expect("integral entry");
        let red = big.mod_floor(&modulus).to_u64().expect("residue fits");
        if red != 0 {
            rows[r].push((c, red));
        }
    }
    rank_mod_p(rows, p)
}

fn rank_mod_p(rows: Vec<Vec<(usize, u64)>>, p: u64) -> usize {
    let mut pivots: BTreeMap<usize, Vec<(usize, u64)>> = BTreeMap::new();
    for mut row in rows {
        loop {
            let Some(&(lead, a)) = row.first() else { break };
            if let Some(piv) = pivots.get(&lead) {
                // row -= a * piv  (piv has leading coefficient 1)
                row = axpy_mod(&row, piv, p - a, p);
            } else {
                let inv = super::scalar::inv_mod(a, p);
                for e in row.iter_mut() {
                    e.1 = ((e.1 as u128 * inv as u128) % p as u128) as u64;
                }
                pivots.insert(lead, row);
                break;
            }
        }
    }
    pivots.len()
}

fn axpy_mod(x: &[(usize, u64)], y: &[(usize, u64)], a: u64, p: u64) -> Vec<(usize, u64)> {
    let mut out = Vec::with_capacity(x.len() + y.len());
    let (mut i, mut j) = (0, 0);
    let mul = |v: u64| ((v as u128 * a as u128) % p as u128) as u64;
    while i < x.len() || j < y.len() {
        let ci = x.get(i).map_or(usize::MAX, |e| e.0);
        let cj = y.get(j).map_or(usize::MAX, |e| e.0);
        if ci < cj {
            out.push(x[i]);
            i += 1;
        } else if cj < ci {
            let v = mul(y[j].1);
            if v != 0 {
                out.push((cj, v));
            }
            j += 1;
        } else {
            let v = (x[i].1 + mul(y[j].1)) % p;
            if v != 0 {
                out.push((ci, v));
            }
            i += 1;
            j += 1;
        }
    }
    out
}

fn axpy(x: &[(usize, Scalar)], y: &[(usize, Scalar)], a: &Scalar) -> Row {
    let mut out = Vec::with_capacity(x.len() + y.len());
    let (mut i, mut j) = (0, 0);
    while i < x.len() || j < y.len() {
        let ci = x.get(i).map_or(usize::MAX, |e| e.0);
        let cj = y.get(j).map_or(usize::MAX, |e| e.0);
        if ci < cj {
            out.push(x[i].clone());
            i += 1;
        } else if cj < ci {
            out.push((cj, y[j].1.mul(a)));
            j += 1;
        } else {
            let v = x[i].1.add(&y[j].1.mul(a));
            if !v.is_zero() {
                out.push((ci, v));
            }
            i += 1;
            j += 1;
        }
    }
    out
}

/// Incremental row echelon form over a field; pivot rows have leading 1.
#[derive(Default)]
struct Echelon {
    pivots: BTreeMap<usize, Row>,
}

impl Echelon {
    fn insert(&mut self, mut row: Row) -> bool {
        loop {
            let Some((lead, a)) = row.first().cloned() else { return false };
            if let Some(piv) = self.pivots.get(&lead) {
                row = axpy(&row, piv, &a.neg());
            } else {
                let inv = a.inv().expect("nonzero field element");
                for e in row.iter_mut() {
                    e.1 = e.1.mul(&inv);
                }
                self.pivots.insert(lead, row);
                return true;
            }
        }
    }

    /// Turns the echelon form into reduced echelon form.
    fn reduce(&mut self) {
        let leads: Vec<usize> = self.pivots.keys().rev().copied().collect();
        for &lead in &leads {
            let piv = self.pivots[&lead].clone();
            for (_, row) in self.pivots.range_mut(..lead) {
                if let Some(pos) = row.iter().position(|e| e.0 == lead) {
                    let a = row[pos].1.neg();
                    *row = axpy(row, &piv, &a);
                }
            }
        }
    }
}

/// A basis of the kernel of `m` (over a field), each vector as a sparse map.
pub fn kernel_basis(m: &SparseMatrix) -> Result<Vec<BTreeMap<usize, Scalar>>, LinError> {
    if !m.ring().is_field() {
        return Err(LinError::WrongRing {
            expected: "a field",
            found: m.ring(),
        });
    }
    let mut ech = Echelon::default();
    for row in m.row_lists() {
        ech.insert(row);
    }
    ech.reduce();
    let ring = m.ring();
    let mut basis = Vec::new();
    for free in (0..m.cols()).filter(|c| !ech.pivots.contains_key(c)) {
        let mut v = BTreeMap::new();
        v.insert(free, Scalar::one(ring));
        for (&lead, row) in &ech.pivots {
            if let Some((_, a)) = row.iter().find(|e| e.0 == free) {
                v.insert(lead, a.neg());
            }
        }
        basis.push(v);
    }
    Ok(basis)
}

/// Rank of the map induced on homology in one degree.
///
/// `f` maps the source chains to the target chains, `d_src` is the source
/// differential leaving that degree and `d_tgt_in` the target differential
/// arriving in it. Works over fields.
pub fn induced_map_rank(
    f: &SparseMatrix,
    d_src: &SparseMatrix,
    d_tgt_in: &SparseMatrix,
) -> Result<usize, LinError> {
    let cycles = kernel_basis(d_src)?;
    let ring = f.ring();
    let mut img = SparseMatrix::zeros(ring, f.rows(), cycles.len());
    for (j, z) in cycles.iter().enumerate() {
        for (i, v) in f.apply(z) {
            img.add_to(i, j, &v);
        }
    }
    let stacked = d_tgt_in.hstack(&img)?;
    Ok(rank(&stacked)? - rank(d_tgt_in)?)
}
