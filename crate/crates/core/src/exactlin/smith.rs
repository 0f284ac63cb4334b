//! Smith normal form of sparse integer matrices.

use std::collections::{BTreeMap, BTreeSet};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use super::elimination::rank_mod_p_of_integral;
use super::{LinError, Ring, SparseMatrix};

/// A prime used to certify the rank part of every Smith form.
const CERTIFY_PRIME: u64 = 2_147_483_647;

/// Invariant factors `d_1 | d_2 | ... | d_k` of an integer matrix, `k` its rank.
///
/// Elimination always pivots on an entry of smallest absolute value, ties
/// broken by column and then by row. The result is certified by checking,
/// for every prime dividing some factor and for one large prime, that the
/// rank mod p equals the number of factors not divisible by p.
pub fn smith_normal_form(m: &SparseMatrix) -> Result<Vec<BigInt>, LinError> {
    if m.ring() != Ring::Integers {
        return Err(LinError::WrongRing {
            expected: "the integers",
            found: m.ring(),
        });
    }
    let diag = diagonalize(m);
    let factors = invariant_factors(diag);
    certify(m, &factors)?;
    Ok(factors)
}

fn certify(m: &SparseMatrix, factors: &[BigInt]) -> Result<(), LinError> {
    let mut primes: BTreeSet<u64> = BTreeSet::new();
    primes.insert(CERTIFY_PRIME);
    for d in factors {
        if d > &BigInt::one() {
            primes.extend(small_prime_factors(d));
        }
    }
    for p in primes {
        let expected = factors
            .iter()
            .filter(|d| !(*d % p).is_zero())
            .count();
        let got = rank_mod_p_of_integral(m, p);
        if got != expected {
            return Err(LinError::Certification(format!(
                "rank mod {p} is {got} but the Smith form predicts {expected}"
            )));
        }
    }
    Ok(())
}

/// Prime factors below 2^20 of `d` (larger ones are left uncertified).
fn small_prime_factors(d: &BigInt) -> Vec<u64> {
    let mut out = Vec::new();
    let mut n = d.abs();
    let mut p = 2u64;
    while p < (1 << 20) && n > BigInt::one() {
        let bp = BigInt::from(p);
        if (&n % &bp).is_zero() {
            out.push(p);
            while (&n % &bp).is_zero() {
                n /= &bp;
            }
        }
        p += 1;
    }
    if n > BigInt::one() {
        if let Some(q) = n.to_u64().filter(|&q| q < (1 << 40)) {
            out.push(q);
        }
    }
    out
}

/// Replaces a list of nonzero diagonal entries by the equivalent divisibility chain.
fn invariant_factors(mut d: Vec<BigInt>) -> Vec<BigInt> {
    for x in d.iter_mut() {
        *x = x.abs();
    }
    d.sort();
    let k = d.len();
    for i in 0..k {
        for j in i + 1..k {
            let g = d[i].gcd(&d[j]);
            if g != d[i] {
                let l = &d[i] / &g * &d[j];
                d[i] = g;
                d[j] = l;
            }
        }
    }
    d.sort();
    d
}

struct Work {
    rows: Vec<BTreeMap<usize, BigInt>>,
    cols: Vec<BTreeSet<usize>>,
}

impl Work {
    fn get(&self, r: usize, c: usize) -> &BigInt {
        &self.rows[r][&c]
    }

    fn set(&mut self, r: usize, c: usize, v: BigInt) {
        if v.is_zero() {
            self.rows[r].remove(&c);
            self.cols[c].remove(&r);
        } else {
            self.rows[r].insert(c, v);
            self.cols[c].insert(r);
        }
    }

    /// row_t -= q * row_s
    fn row_axpy(&mut self, t: usize, s: usize, q: &BigInt) {
        let src: Vec<(usize, BigInt)> = self.rows[s].iter().map(|(c, v)| (*c, v.clone())).collect();
        for (c, v) in src {
            let old = self.rows[t].get(&c).cloned().unwrap_or_else(BigInt::zero);
            self.set(t, c, old - q * v);
        }
    }

    fn smallest_entry(&self) -> Option<(usize, usize)> {
        let mut best: Option<(usize, usize, BigInt)> = None;
        for (c, rs) in self.cols.iter().enumerate() {
            for &r in rs {
                let a = self.get(r, c).abs();
                if best.as_ref().map_or(true, |b| a < b.2) {
                    let unit = a.is_one();
                    best = Some((r, c, a));
                    if unit {
                        return best.map(|b| (b.0, b.1));
                    }
                }
            }
        }
        best.map(|b| (b.0, b.1))
    }
}

/// Quotient rounding toward zero so that |remainder| < |divisor|.
fn quotient(a: &BigInt, b: &BigInt) -> BigInt {
    a / b
}

fn diagonalize(m: &SparseMatrix) -> Vec<BigInt> {
    let mut w = Work {
        rows: vec![BTreeMap::new(); m.rows()],
        cols: vec![BTreeSet::new(); m.cols()],
    };
    for (r, c, v) in m.entries() {
        w.set(r, c, v.to_bigint().expect("integer entry"));
    }
    let mut diag = Vec::new();
    while let Some((mut pr, mut pc)) = w.smallest_entry() {
        loop {
            let p = w.get(pr, pc).clone();
            // Clear the pivot column with row operations.
            let others: Vec<usize> = w.cols[pc].iter().copied().filter(|&r| r != pr).collect();
            let mut smaller: Option<(usize, BigInt)> = None;
            for r in others {
                let q = quotient(w.get(r, pc), &p);
                w.row_axpy(r, pr, &q);
                if let Some(rem) = w.rows[r].get(&pc) {
                    let a = rem.abs();
                    if smaller.as_ref().map_or(true, |s| a < s.1) {
                        smaller = Some((r, a));
                    }
                }
            }
            if let Some((r, _)) = smaller {
                pr = r;
                continue;
            }
            // Clear the pivot row with column operations; the pivot column
            // now has a single entry, so only row `pr` changes.
            let others: Vec<usize> = w.rows[pr].keys().copied().filter(|&c| c != pc).collect();
            let mut smaller: Option<(usize, BigInt)> = None;
            for c in others {
                let a = w.get(pr, c).clone();
                let q = quotient(&a, &p);
                let rem = a - q * &p;
                let abs = rem.abs();
                w.set(pr, c, rem);
                if !abs.is_zero() && smaller.as_ref().map_or(true, |s| abs < s.1) {
                    smaller = Some((c, abs));
                }
            }
            if let Some((c, _)) = smaller {
                pc = c;
                continue;
            }
            diag.push(p);
            w.set(pr, pc, BigInt::zero());
            break;
        }
    }
    diag
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::{Rng, SeedableRng};

    fn snf(rows: &[Vec<i64>]) -> Vec<i64> {
        let m = SparseMatrix::from_rows(Ring::Integers, rows);
        smith_normal_form(&m)
            .unwrap()
            .into_iter()
            .map(|d| d.to_i64().unwrap())
            .collect()
    }

    /// Invariant factors of a 2x2 integer matrix from determinantal divisors:
    /// d_1 = gcd of entries, d_1 d_2 = |det|.
    fn two_by_two_oracle(a: i64, b: i64, c: i64, d: i64) -> Vec<i64> {
        let g = a.gcd(&b).gcd(&c).gcd(&d);
        let det = (a * d - b * c).abs();
        match (g, det) {
            (0, _) => vec![],
            (g, 0) => vec![g],
            (g, det) => vec![g, det / g],
        }
    }

    #[test]
    fn documented_examples() {
        assert_eq!(snf(&[vec![1, 0], vec![0, 1]]), vec![1, 1]);
        assert_eq!(snf(&[vec![2, 0], vec![0, 4]]), vec![2, 4]);
        assert_eq!(snf(&[vec![2, 0], vec![0, 3]]), vec![1, 6]);
    }

    #[test]
    fn matches_determinantal_oracle_on_all_small_2x2() {
        for a in -3..=3 {
            for b in -3..=3 {
                for c in -3..=3 {
                    for d in -3..=3 {
                        assert_eq!(
                            snf(&[vec![a, b], vec![c, d]]),
                            two_by_two_oracle(a, b, c, d),
                            "matrix [[{a},{b}],[{c},{d}]]"
                        );
                    }
                }
            }
        }
    }

    #[test]
    fn rejects_field_matrices() {
        let m = SparseMatrix::zeros(Ring::Rationals, 1, 1);
        assert!(matches!(smith_normal_form(&m), Err(LinError::WrongRing { .. })));
    }

    fn mat_mul(a: &[Vec<i64>], b: &[Vec<i64>]) -> Vec<Vec<i64>> {
        let n = a.len();
        let k = b.len();
        let m = b[0].len();
        (0..n)
            .map(|i| (0..m).map(|j| (0..k).map(|t| a[i][t] * b[t][j]).sum()).collect())
            .collect()
    }

    /// A random unimodular matrix as a product of elementary operations.
    fn random_unimodular(n: usize, rng: &mut impl Rng) -> Vec<Vec<i64>> {
        let mut u: Vec<Vec<i64>> = (0..n)
            .map(|i| (0..n).map(|j| i64::from(i == j)).collect())
            .collect();
        for _ in 0..4 {
            let i = rng.gen_range(0..n);
            let j = rng.gen_range(0..n);
            if i == j {
                continue;
            }
            let q = rng.gen_range(-2..=2);
            let mut e: Vec<Vec<i64>> = (0..n)
                .map(|a| (0..n).map(|b| i64::from(a == b)).collect())
                .collect();
            e[i][j] = q;
            u = mat_mul(&e, &u);
        }
        u
    }

    #[test]
    fn invariant_under_unimodular_changes() {
        let mut rng = rand::rngs::StdRng::seed_from_u64(11);
        for _ in 0..60 {
            let rows = rng.gen_range(1..5);
            let cols = rng.gen_range(1..5);
            let a: Vec<Vec<i64>> = (0..rows)
                .map(|_| (0..cols).map(|_| rng.gen_range(-4..=4)).collect())
                .collect();
            let u = random_unimodular(rows, &mut rng);
            let v = random_unimodular(cols, &mut rng);
            let b = mat_mul(&mat_mul(&u, &a), &v);
            assert_eq!(snf(&a), snf(&b));
        }
    }

    #[test]
    fn factors_form_a_divisibility_chain() {
        let mut rng = rand::rngs::StdRng::seed_from_u64(5);
        for _ in 0..40 {
            let a: Vec<Vec<i64>> = (0..5)
                .map(|_| (0..4).map(|_| rng.gen_range(-6..=6)).collect())
                .collect();
            let f = snf(&a);
            for w in f.windows(2) {
                assert_eq!(w[1] % w[0], 0);
            }
        }
    }
}
