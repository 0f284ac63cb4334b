//! Counting formulas for the expected homology, independent of any chain
//! complex.

use std::collections::BTreeMap;

use crate::symseq::{factorial, set_partitions};

/// Graded dimensions of `(C ∘ Λ^(1-n) L)(r)` with `dim L(s) = (s-1)!`: a set
/// partition into `k` blocks contributes `Π (|b|-1)!` in degree
/// `(n-1)(r-k)`.
pub fn gerstenhaber_dims(n: u32, r: usize) -> BTreeMap<i64, u64> {
    let labels: Vec<u32> = (1..=r as u32).collect();
    let mut out = BTreeMap::new();
    for p in set_partitions(&labels) {
        let dim: u64 = p.iter().map(|b| factorial(b.len() - 1)).product();
        *out.entry((n as i64 - 1) * (r - p.len()) as i64).or_insert(0) += dim;
    }
    out
}

/// Graded dimensions of `C(Σ^(n-1) L^c(ΣI))(r)`, the multilinear part: a set
/// partition into `k` blocks contributes `Π (|b|-1)!` in degree
/// `r + (n-1)k`.
pub fn shuffle_multilinear_dims(n: u32, r: usize) -> BTreeMap<i64, u64> {
    let labels: Vec<u32> = (1..=r as u32).collect();
    let mut out = BTreeMap::new();
    for p in set_partitions(&labels) {
        let dim: u64 = p.iter().map(|b| factorial(b.len() - 1)).product();
        *out.entry(r as i64 + (n as i64 - 1) * p.len() as i64).or_insert(0) += dim;
    }
    out
}

/// Dimensions `ℓ_k` of the weight-`k` part of the free graded Lie algebra on
/// one generator of degree 1, in characteristic 0, from the
/// Poincaré-Birkhoff-Witt identity
/// `Π_(k odd) (1 + t^k)^ℓ_k · Π_(k even) (1 - t^k)^(-ℓ_k) = 1 / (1 - t)`.
pub fn odd_lie_dims(weight_max: usize) -> Vec<i64> {
    let mut ell = vec![0i64; weight_max + 1];
    let mut series = vec![0i64; weight_max + 1];
    series[0] = 1;
    for k in 1..=weight_max {
        ell[k] = 1 - series[k];
        for _ in 0..ell[k] {
            series = multiply_factor(&series, k, k % 2 == 1);
        }
    }
    ell
}

/// Multiplies a truncated series by `1 + t^k` (exterior) or `1/(1 - t^k)`.
fn multiply_factor(series: &[i64], k: usize, exterior: bool) -> Vec<i64> {
    let mut out = series.to_vec();
    if exterior {
        for w in (k..series.len()).rev() {
            out[w] += series[w - k];
        }
    } else {
        for w in k..series.len() {
            out[w] += out[w - k];
        }
    }
    out
}

/// Bigraded dimensions, keyed by `(weight, degree)`, of the free graded
/// commutative algebra `C(Σ^(n-1) L^c(Σk))` on one generator of degree 0,
/// in characteristic 0, up to `weight_max`.
pub fn trivial_algebra_dims(n: u32, weight_max: usize) -> BTreeMap<(usize, i64), u64> {
    let ell = odd_lie_dims(weight_max);
    // polynomial in (weight, degree)
    let mut poly: BTreeMap<(usize, i64), u64> = BTreeMap::new();
    poly.insert((0, 0), 1);
    for (k, &count) in ell.iter().enumerate().skip(1) {
        let degree = k as i64 + n as i64 - 1;
        for _ in 0..count {
            let mut next = BTreeMap::new();
            for (&(w, d), &c) in &poly {
                let mut j = 0;
                while w + j * k <= weight_max {
                    *next.entry((w + j * k, d + j as i64 * degree)).or_insert(0) += c;
                    j += 1;
                    if degree % 2 != 0 && j == 2 {
                        break;
                    }
                }
            }
            poly = next;
        }
    }
    poly.remove(&(0, 0));
    poly
}

/// Bigraded dimensions of `C(Σ^n k)` on one generator of degree 0, in
/// characteristic 0: polynomial for even `n`, exterior for odd `n`.
pub fn free_commutative_dims(n: u32, weight_max: usize) -> BTreeMap<(usize, i64), u64> {
    let mut out = BTreeMap::new();
    for w in 1..=weight_max {
        if w == 1 || n % 2 == 0 {
            out.insert((w, (n as usize * w) as i64), 1);
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn gerstenhaber_small_arities() {
        assert_eq!(gerstenhaber_dims(2, 2).into_iter().collect::<Vec<_>>(), vec![(0, 1), (1, 1)]);
        assert_eq!(gerstenhaber_dims(2, 3).into_iter().collect::<Vec<_>>(), vec![(0, 1), (1, 3), (2, 2)]);
        // total dimension is r! (Poincaré-Birkhoff-Witt)
        for r in 1..=5 {
            assert_eq!(gerstenhaber_dims(3, r).values().sum::<u64>(), factorial(r));
        }
    }

    #[test]
    fn odd_generator_lie_algebra() {
        // x and [x, x]; [x, [x, x]] vanishes by the Jacobi identity
        assert_eq!(odd_lie_dims(6), vec![0, 1, 1, 0, 0, 0, 0]);
    }

    #[test]
    fn trivial_algebra_tables() {
        // n = 1: one class in each weight w, degree w
        let t = trivial_algebra_dims(1, 5);
        assert_eq!(t.into_iter().collect::<Vec<_>>(), (1..=5).map(|w| ((w, w as i64), 1)).collect::<Vec<_>>());
        // n = 2, weight 2: [x, x] in degree 3 and the square of x in degree 4
        let t = trivial_algebra_dims(2, 2);
        assert_eq!(t.get(&(2, 3)), Some(&1));
        assert_eq!(t.get(&(2, 4)), Some(&1));
        assert_eq!(t.len(), 3);
        for n in 1..=3 {
            assert_eq!(trivial_algebra_dims(n, 3).get(&(1, n as i64)), Some(&1));
        }
    }

    #[test]
    fn multilinear_total_is_r_factorial() {
        for r in 1..=5 {
            assert_eq!(shuffle_multilinear_dims(2, r).values().sum::<u64>(), factorial(r));
        }
        assert_eq!(shuffle_multilinear_dims(2, 2).into_iter().collect::<Vec<_>>(), vec![(3, 1), (4, 1)]);
    }
}
