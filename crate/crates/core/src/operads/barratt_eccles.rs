//! The Barratt-Eccles operad on raw simplices.
//!
//! Composition runs the Eilenberg-Zilber shuffle map over the product of
//! the simplices and substitutes permutations vertex by vertex. Every
//! function here works on arbitrary input sets; the inputs of a simplex are
//! the labels of its first vertex.

use super::simplex::{faces, pair_order, Perm};

/// Block substitution of orderings: `ys[k]` is plugged into the `k`-th
/// smallest input of `x`, and the result lists the blocks in the order `x`
/// lists the inputs.
pub fn substitute(x: &[u32], ys: &[&[u32]]) -> Perm {
    let mut labels = x.to_vec();
    labels.sort_unstable();
    let mut out = Vec::with_capacity(ys.iter().map(|y| y.len()).sum());
    for v in x {
        let k = labels.binary_search(v).expect("input of x");
        out.extend_from_slice(ys[k]);
    }
    out
}

/// Sorted input labels of a simplex.
pub fn inputs_of(s: &[Perm]) -> Vec<u32> {
    let mut l = s[0].clone();
    l.sort_unstable();
    l
}

struct ShuffleWalk<'a> {
    x: &'a [Perm],
    ys: &'a [Vec<Perm>],
    idx: Vec<usize>,
    path: Vec<Perm>,
    out: Vec<(Vec<Perm>, i64)>,
}

impl ShuffleWalk<'_> {
    fn vertex(&self) -> Perm {
        let blocks: Vec<&[u32]> = self
            .ys
            .iter()
            .zip(&self.idx[1..])
            .map(|(y, &i)| y[i].as_slice())
            .collect();
        substitute(&self.x[self.idx[0]], &blocks)
    }

    fn len(&self, factor: usize) -> usize {
        if factor == 0 {
            self.x.len()
        } else {
            self.ys[factor - 1].len()
        }
    }

    fn walk(&mut self, sign: i64) {
        let mut done = true;
        for f in 0..self.idx.len() {
            if self.idx[f] + 1 >= self.len(f) {
                continue;
            }
            done = false;
            // Steps already taken in later factors come before this one in
            // the canonical order, each contributing one inversion.
            let later: usize = self.idx[f + 1..].iter().sum();
            let step_sign = if later % 2 == 0 { sign } else { -sign };
            self.idx[f] += 1;
            let v = self.vertex();
            if self.path.last() != Some(&v) {
                self.path.push(v);
                self.walk(step_sign);
                self.path.pop();
            }
            self.idx[f] -= 1;
        }
        if done {
            self.out.push((self.path.clone(), sign));
        }
    }
}

/// Composite `x(y_1, ..., y_r)` where `ys[k]` is plugged into the `k`-th
/// smallest input of `x`. Returns signed nondegenerate simplices, possibly
/// with repetitions.
pub fn compose_simplices(x: &[Perm], ys: &[Vec<Perm>]) -> Vec<(Vec<Perm>, i64)> {
    assert_eq!(x[0].len(), ys.len(), "one block per input of x");
    let mut walk = ShuffleWalk {
        x,
        ys,
        idx: vec![0; ys.len() + 1],
        path: Vec::new(),
        out: Vec::new(),
    };
    let v = walk.vertex();
    walk.path.push(v);
    walk.walk(1);
    walk.out
}

/// The contracting homotopy `ν(w_0, ..., w_d) = (-1)^d (w_0, ..., w_d, σ)`,
/// zero when `w_d = σ`.
pub fn nu(s: &[Perm], sigma: &[u32]) -> Option<(Vec<Perm>, i64)> {
    if s.last().map(|w| w.as_slice()) == Some(sigma) {
        return None;
    }
    let mut t = s.to_vec();
    t.push(sigma.to_vec());
    let sign = if (s.len() - 1) % 2 == 0 { 1 } else { -1 };
    Some((t, sign))
}

/// All nondegenerate simplices on `labels` of degree at most `degree_max`.
pub fn enumerate_simplices(labels: &[u32], degree_max: usize) -> Vec<Vec<Perm>> {
    enumerate_bounded(labels, degree_max, u32::MAX)
}

/// All nondegenerate simplices in the E_n filtration on `labels`: every pair
/// varies at most `n - 1` times.
pub fn enumerate_en_simplices(n: u32, labels: &[u32]) -> Vec<Vec<Perm>> {
    assert!(n >= 1);
    enumerate_bounded(labels, usize::MAX, n - 1)
}

fn enumerate_bounded(labels: &[u32], degree_max: usize, max_var: u32) -> Vec<Vec<Perm>> {
    let perms = crate::symseq::permutations(labels);
    let r = labels.len();
    let pairs: Vec<(u32, u32)> = (0..r)
        .flat_map(|a| (a + 1..r).map(move |b| (labels[a], labels[b])))
        .collect();
    let orders: Vec<Vec<bool>> = perms
        .iter()
        .map(|w| pairs.iter().map(|&(e, f)| pair_order(w, e, f)).collect())
        .collect();
    let mut out = Vec::new();
    let mut path: Vec<usize> = Vec::new();
    let mut counts = vec![0u32; pairs.len()];
    fn rec(
        orders: &[Vec<bool>],
        perms: &[Perm],
        degree_max: usize,
        max_var: u32,
        path: &mut Vec<usize>,
        counts: &mut [u32],
        out: &mut Vec<Vec<Perm>>,
    ) {
        out.push(path.iter().map(|&i| perms[i].clone()).collect());
        if path.len() > degree_max {
            return;
        }
        let last = *path.last().expect("nonempty path");
        for next in 0..perms.len() {
            if next == last {
                continue;
            }
            let mut ok = true;
            for (p, c) in counts.iter_mut().enumerate() {
                if orders[last][p] != orders[next][p] {
                    *c += 1;
                    ok &= *c <= max_var;
                }
            }
            if ok {
                path.push(next);
                rec(orders, perms, degree_max, max_var, path, counts, out);
                path.pop();
            }
            for (p, c) in counts.iter_mut().enumerate() {
                if orders[last][p] != orders[next][p] {
                    *c -= 1;
                }
            }
        }
    }
    for start in 0..perms.len() {
        path.push(start);
        rec(
            &orders,
            &perms,
            degree_max,
            max_var,
            &mut path,
            &mut counts,
            &mut out,
        );
        path.pop();
    }
    out
}

/// Face differential of a simplex as a signed list.
pub fn boundary(s: &[Perm]) -> Vec<(Vec<Perm>, i64)> {
    faces(s)
}
