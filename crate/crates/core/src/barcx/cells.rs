//! Cells of `T^n` and `T^n ∘ R` indexed by complete graphs.
//!
//! A word lies in the cell of `κ = (μ, σ)` when every pair of leaves that
//! parts at level `m` has `μ > m - 1`, or `μ = m - 1` with `σ` ordering the
//! pair as the word does. The least such graph is [`theta_min`]. The same
//! cells are also computed from the recursive description by blocks, in
//! [`in_tn_cell_inductive`]; the two are compared in the tests.

use std::collections::BTreeMap;

use crate::operads::{in_cell, CompleteGraphElement};

use super::words::{factor_ranges, separation_level, Block, Composite, Leaf, LevelWord, Simplex};

/// The least graph whose cell contains the word: weight `m - 1` on a pair
/// separated at level `m`, oriented by leaf order.
pub fn theta_min(w: &LevelWord) -> CompleteGraphElement {
    let mut weights = BTreeMap::new();
    for i in 0..w.leaves.len() {
        for j in i + 1..w.leaves.len() {
            let (e, f) = (w.leaves[i], w.leaves[j]);
            let key = if e < f { (e, f) } else { (f, e) };
            weights.insert(key, separation_level(&w.seps, i, j) as u32 - 1);
        }
    }
    CompleteGraphElement::new(weights, w.leaves.clone()).expect("valid word")
}

/// Pairwise test against `κ`: every separated pair of leaves `(e, f)`, `e`
/// on the left, at level `m` needs `μ_ef > m - 1`, or equality with `e`
/// before `f` in `σ`.
fn cross_pairs_ok(kappa: &CompleteGraphElement, seps: &[u8], blocks: &[Vec<u32>]) -> bool {
    for i in 0..blocks.len() {
        for j in i + 1..blocks.len() {
            let m = separation_level(seps, i, j) as u32 - 1;
            for &e in &blocks[i] {
                for &f in &blocks[j] {
                    let mu = kappa.weight(e, f);
                    if mu < m || (mu == m && !kappa.precedes(e, f)) {
                        return false;
                    }
                }
            }
        }
    }
    true
}

/// Membership of a word in `(T^n)_κ`.
pub fn in_tn_cell(w: &LevelWord, kappa: &CompleteGraphElement) -> bool {
    let blocks: Vec<Vec<u32>> = w.leaves.iter().map(|&x| vec![x]).collect();
    cross_pairs_ok(kappa, &w.seps, &blocks)
}

/// Membership in `(T^n)_κ` by the recursive conditions on a word
/// `x_1 ⊗ ... ⊗ x_k` with blocks `e_1, ..., e_k`:
/// each `x_i` lies in `(T^(n-1))_{κ|e_i}`; a pair with `μ < n - 1` stays
/// inside one block; a pair with `μ = n - 1` in two blocks is ordered by
/// `σ` as the blocks are.
pub fn in_tn_cell_inductive(w: &LevelWord, kappa: &CompleteGraphElement) -> bool {
    if w.level == 0 {
        return true;
    }
    let n = w.level as u32;
    let parts = factor_ranges(&w.seps, w.level);
    let block_of = |x: u32| {
        parts
            .iter()
            .position(|r| w.leaves[r.clone()].contains(&x))
            .expect("leaf of the word")
    };
    let labels = &w.leaves;
    for (a, &e) in labels.iter().enumerate() {
        for &f in &labels[a + 1..] {
            let mu = kappa.weight(e, f);
            let (be, bf) = (block_of(e), block_of(f));
            if mu < n - 1 && be != bf {
                return false;
            }
            if mu == n - 1 && be != bf && kappa.precedes(e, f) != (be < bf) {
                return false;
            }
        }
    }
    parts.iter().all(|r| {
        let sub = LevelWord {
            level: w.level - 1,
            seps: w.seps[r.start..r.end - 1].to_vec(),
            leaves: w.leaves[r.clone()].to_vec(),
        };
        let mut set = sub.leaves.clone();
        set.sort_unstable();
        in_tn_cell_inductive(&sub, &kappa.restrict(&set).expect("subset of inputs"))
    })
}

/// Decorations that have cells of their own.
pub trait CellLeaf: Leaf {
    fn in_cell(&self, kappa: &CompleteGraphElement) -> bool;
}

impl CellLeaf for Block {
    /// The commutative operad has a single cell.
    fn in_cell(&self, _kappa: &CompleteGraphElement) -> bool {
        true
    }
}

impl CellLeaf for Simplex {
    fn in_cell(&self, kappa: &CompleteGraphElement) -> bool {
        in_cell(self, kappa).expect("graph on the inputs of the simplex")
    }
}

/// Membership of a composite in `(T^n ∘ R)_κ`: every decoration lies in the
/// cell of the restricted graph and the leaves satisfy the pairwise test
/// across blocks.
pub fn composite_in_cell<D: CellLeaf>(c: &Composite<D>, kappa: &CompleteGraphElement) -> bool {
    let blocks: Vec<Vec<u32>> = c.leaves.iter().map(|d| d.labels()).collect();
    if !cross_pairs_ok(kappa, &c.seps, &blocks) {
        return false;
    }
    c.leaves.iter().zip(&blocks).all(|(d, b)| {
        b.len() == 1 || d.in_cell(&kappa.restrict(b).expect("subset of inputs"))
    })
}

/// The cell `(θ_min(ξ).μ, id)` of a generator shape.
pub fn generator_cell(n: u8, seps: &[u8]) -> CompleteGraphElement {
    let w = LevelWord {
        level: n,
        seps: seps.to_vec(),
        leaves: (1..=seps.len() as u32 + 1).collect(),
    };
    theta_min(&w)
}
