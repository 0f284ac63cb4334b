//! Shuffle products, deconcatenation and the iterated bar differential with
//! commutative leaves.
//!
//! A level-`m` word is a tensor `s x_1 ⊗ ... ⊗ s x_k` of suspended level
//! `m - 1` words. With `|x|` the degree of a factor, the bar differential is
//!
//! ```text
//! D(s x_1 ⊗ ... ⊗ s x_k) = Σ_i -(-1)^(Σ_{j<i} (|x_j|+1)) ... ⊗ s D(x_i) ⊗ ...
//!                        + Σ_i  (-1)^(Σ_{j≤i} (|x_j|+1)) ... ⊗ s (x_i · x_{i+1}) ⊗ ...
//! ```
//!
//! where the product of two level-`m - 1` words is their shuffle product for
//! `m - 1 ≥ 1`, and the union of blocks for two leaves.

use crate::exactlin::Ring;
use crate::lincomb::{sign_of, Lin};

use super::words::{Block, Composite, Leaf};

/// Degree of a suspended factor `s x`.
fn suspended_degree<D: Leaf>(x: &Composite<D>) -> i64 {
    x.degree() + 1
}

/// Shuffle product of two words at the same level `m ≥ 1`: all interleavings
/// of their factors, with the Koszul sign of the suspended factors.
pub fn shuffle_product<D: Leaf>(ring: Ring, x: &Composite<D>, y: &Composite<D>) -> Lin<Composite<D>> {
    assert_eq!(x.level, y.level, "shuffle of words at different levels");
    assert!(x.level >= 1);
    let level = x.level;
    let xs: Vec<Composite<D>> = x.factors().into_iter().map(|r| x.sub(r)).collect();
    let ys: Vec<Composite<D>> = y.factors().into_iter().map(|r| y.sub(r)).collect();
    let dx: Vec<i64> = xs.iter().map(suspended_degree).collect();
    let dy: Vec<i64> = ys.iter().map(suspended_degree).collect();
    let mut out = Lin::zero(ring);
    let mut order: Vec<&Composite<D>> = Vec::with_capacity(xs.len() + ys.len());
    fn rec<'a, D: Leaf>(
        level: u8,
        xs: &'a [Composite<D>],
        ys: &'a [Composite<D>],
        dx: &[i64],
        dy: &[i64],
        i: usize,
        j: usize,
        parity: i64,
        order: &mut Vec<&'a Composite<D>>,
        out: &mut Lin<Composite<D>>,
    ) {
        if i == xs.len() && j == ys.len() {
            out.add_term(Composite::join(level, order), sign_of(parity));
            return;
        }
        if i < xs.len() {
            order.push(&xs[i]);
            rec(level, xs, ys, dx, dy, i + 1, j, parity, order, out);
            order.pop();
        }
        if j < ys.len() {
            // y_j jumps over the remaining x factors
            let passed: i64 = dx[i..].iter().sum();
            order.push(&ys[j]);
            rec(level, xs, ys, dx, dy, i, j + 1, parity + passed * dy[j], order, out);
            order.pop();
        }
    }
    rec(level, &xs, &ys, &dx, &dy, 0, 0, 0, &mut order, &mut out);
    out
}

/// Proper deconcatenations `w = a ⊗ b` at the top level, both sides nonempty.
pub fn deconcatenate<D: Leaf>(w: &Composite<D>) -> Vec<(Composite<D>, Composite<D>)> {
    let parts = w.factors();
    let mut out = Vec::new();
    for cut in 1..parts.len() {
        let split = parts[cut].start;
        let a = Composite {
            level: w.level,
            seps: w.seps[..split - 1].to_vec(),
            leaves: w.leaves[..split].to_vec(),
        };
        let b = Composite {
            level: w.level,
            seps: w.seps[split..].to_vec(),
            leaves: w.leaves[split..].to_vec(),
        };
        out.push((a, b));
    }
    out
}

/// Reduced coproduct with its Koszul sign. A composite is stored as its
/// word followed by all leaves, so splitting it into `a ⊗ b` moves the word
/// of `b` past the leaves of `a`.
pub fn coproduct<D: Leaf>(w: &Composite<D>) -> Vec<(Composite<D>, Composite<D>, i64)> {
    deconcatenate(w)
        .into_iter()
        .map(|(a, b)| {
            let leaves: i64 = a.leaves.iter().map(|l| l.degree()).sum();
            let s = sign_of(b.word_degree() * leaves);
            (a, b, s)
        })
        .collect()
}

/// How two leaves multiply when adjacent level-1 factors merge.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum LeafProduct {
    /// Union of blocks: the operad `C`, or powers of a generator when every
    /// label is the same.
    Union,
    /// The trivial algebra: all products vanish.
    Zero,
}

/// Product of two words of level `m - 1` inside a level `m` word.
fn product(
    ring: Ring,
    x: &Composite<Block>,
    y: &Composite<Block>,
    leaf: LeafProduct,
) -> Lin<Composite<Block>> {
    if x.level == 0 {
        match leaf {
            LeafProduct::Union => {
                let mut b = x.leaves[0].clone();
                b.extend_from_slice(&y.leaves[0]);
                b.sort_unstable();
                Lin::single(ring, Composite::new(0, Vec::new(), vec![b]), 1)
            }
            LeafProduct::Zero => Lin::zero(ring),
        }
    } else {
        shuffle_product(ring, x, y)
    }
}

/// Which sign the merge terms carry; only the first gives a differential.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub(crate) enum MergeSign {
    /// `(-1)^(Σ_{j≤i} (|x_j|+1))`
    Koszul,
    /// `(-1)^(i-1+Σ_{j<i} |x_j|)`, compared against in the tests.
    #[cfg_attr(not(test), allow(dead_code))]
    PrefixOnly,
}

/// The iterated bar differential on `T^n ∘ C`.
pub fn bar_differential(ring: Ring, w: &Composite<Block>) -> Lin<Composite<Block>> {
    bar_differential_with(ring, w, LeafProduct::Union, MergeSign::Koszul)
}

/// The iterated bar differential of an algebra whose leaves multiply by `leaf`.
pub fn bar_differential_in(ring: Ring, w: &Composite<Block>, leaf: LeafProduct) -> Lin<Composite<Block>> {
    bar_differential_with(ring, w, leaf, MergeSign::Koszul)
}

pub(crate) fn bar_differential_with(
    ring: Ring,
    w: &Composite<Block>,
    leaf: LeafProduct,
    merge: MergeSign,
) -> Lin<Composite<Block>> {
    let mut out = Lin::zero(ring);
    if w.level == 0 {
        return out;
    }
    let level = w.level;
    let parts: Vec<Composite<Block>> = w.factors().into_iter().map(|r| w.sub(r)).collect();
    let mut prefix = 0i64;
    for i in 0..parts.len() {
        let own = suspended_degree(&parts[i]);
        if level >= 2 {
            for (t, c) in bar_differential_with(ring, &parts[i], leaf, merge).iter() {
                let mut row: Vec<&Composite<Block>> = parts.iter().collect();
                row[i] = t;
                out.add_term(Composite::join(level, &row), -sign_of(prefix) * c);
            }
        }
        if i + 1 < parts.len() {
            let s = match merge {
                MergeSign::Koszul => sign_of(prefix + own),
                MergeSign::PrefixOnly => sign_of(prefix),
            };
            for (t, c) in product(ring, &parts[i], &parts[i + 1], leaf).iter() {
                let mut row: Vec<&Composite<Block>> = Vec::with_capacity(parts.len() - 1);
                row.extend(parts[..i].iter());
                row.push(t);
                row.extend(parts[i + 2..].iter());
                out.add_term(Composite::join(level, &row), s * c);
            }
        }
        prefix += own;
    }
    out
}

/// Extends a map on basis elements linearly.
pub fn apply<D: Leaf, F>(x: &Lin<Composite<D>>, f: F) -> Lin<Composite<D>>
where
    F: FnMut(&Composite<D>) -> Lin<Composite<D>>,
{
    x.map_linear(x.ring(), f)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::barcx::words::{generator, generator_shapes};
    use crate::symseq::ordered_set_partitions;

    const Z: Ring = Ring::Integers;

    /// Every basis element of `T^n ∘ C` on `{1..r}`.
    fn all_words(n: u8, r: u32) -> Vec<Composite<Block>> {
        let labels: Vec<u32> = (1..=r).collect();
        let mut out = Vec::new();
        for blocks in ordered_set_partitions(&labels) {
            for seps in generator_shapes(n, blocks.len()) {
                out.push(Composite::new(n, seps, blocks.clone()));
            }
        }
        out
    }

    fn lin(terms: Vec<(Composite<Block>, i64)>) -> Lin<Composite<Block>> {
        terms.into_iter().collect()
    }

    #[test]
    fn arity_two_differential() {
        // D((1)(2)) = -(12) at level one
        let g = generator(1, &[1]);
        let d = bar_differential(Z, &g);
        assert_eq!(d, lin(vec![(Composite::new(1, vec![], vec![vec![1, 2]]), -1)]));
        // at level two, ((1))((2)) merges by the shuffle of (1) and (2)
        let g = generator(2, &[2]);
        let d = bar_differential(Z, &g);
        let expect = lin(vec![
            (Composite::new(2, vec![1], vec![vec![1], vec![2]]), 1),
            (Composite::new(2, vec![1], vec![vec![2], vec![1]]), -1),
        ]);
        assert_eq!(d, expect);
    }

    #[test]
    fn shuffle_of_two_letters() {
        let a = Composite::new(1, vec![], vec![vec![1]]);
        let b = Composite::new(1, vec![], vec![vec![2]]);
        // suspended letters have degree one: ab - ba
        let p = shuffle_product(Z, &a, &b);
        assert_eq!(
            p,
            lin(vec![
                (Composite::new(1, vec![1], vec![vec![1], vec![2]]), 1),
                (Composite::new(1, vec![1], vec![vec![2], vec![1]]), -1),
            ])
        );
        // number of terms of a shuffle: binomial coefficient
        let x = Composite::new(1, vec![1, 1], vec![vec![1], vec![2], vec![3]]);
        let y = Composite::new(1, vec![1], vec![vec![4], vec![5]]);
        assert_eq!(shuffle_product(Z, &x, &y).len(), 10);
    }

    #[test]
    fn differential_squares_to_zero() {
        for n in 1..=3u8 {
            for r in 1..=4u32 {
                if n == 3 && r == 4 {
                    continue;
                }
                for w in all_words(n, r) {
                    let d = bar_differential(Z, &w);
                    let dd = apply(&d, |t| bar_differential(Z, t));
                    assert!(dd.is_zero(), "D^2 != 0 on {}", w.encode());
                }
            }
        }
    }

    #[test]
    fn prefix_only_merge_sign_fails() {
        let mut failures = 0;
        for w in all_words(2, 3) {
            let d = bar_differential_with(Z, &w, LeafProduct::Union, MergeSign::PrefixOnly);
            let dd = apply(&d, |t| bar_differential_with(Z, t, LeafProduct::Union, MergeSign::PrefixOnly));
            failures += usize::from(!dd.is_zero());
        }
        assert!(failures > 0);
    }

    #[test]
    fn differential_is_a_derivation_of_the_shuffle_product() {
        let labels = [1u32, 2, 3, 4];
        for n in 1..=2u8 {
            let words = all_words(n, 2);
            for x in &words {
                for y in &words {
                    // relabel y onto {3, 4}
                    let y = Composite {
                        level: y.level,
                        seps: y.seps.clone(),
                        leaves: y
                            .leaves
                            .iter()
                            .map(|b| b.iter().map(|v| labels[*v as usize + 1]).collect())
                            .collect(),
                    };
                    let lhs = apply(&shuffle_product(Z, x, &y), |t| bar_differential(Z, t));
                    let mut rhs = Lin::zero(Z);
                    for (t, c) in bar_differential(Z, x).iter() {
                        rhs.add_scaled(&shuffle_product(Z, t, &y), c);
                    }
                    for (t, c) in bar_differential(Z, &y).iter() {
                        rhs.add_scaled(&shuffle_product(Z, x, t), c * sign_of(x.degree()));
                    }
                    assert_eq!(lhs, rhs);
                }
            }
        }
    }

    #[test]
    fn differential_is_a_coderivation() {
        for n in 1..=2u8 {
            for w in all_words(n, 4) {
                let mut lhs: Lin<(Composite<Block>, Composite<Block>)> = Lin::zero(Z);
                for (t, c) in bar_differential(Z, &w).iter() {
                    for (a, b) in deconcatenate(t) {
                        lhs.add_term((a, b), c);
                    }
                }
                let mut rhs = Lin::zero(Z);
                for (a, b) in deconcatenate(&w) {
                    for (t, c) in bar_differential(Z, &a).iter() {
                        rhs.add_term((t.clone(), b.clone()), c);
                    }
                    for (t, c) in bar_differential(Z, &b).iter() {
                        rhs.add_term((a.clone(), t.clone()), c * sign_of(a.degree()));
                    }
                }
                assert_eq!(lhs, rhs, "on {}", w.encode());
            }
        }
    }

    #[test]
    fn deconcatenation_cuts_top_level_only() {
        let g = generator(2, &[1, 2, 1]);
        let cuts = deconcatenate(&g);
        assert_eq!(cuts.len(), 1);
        assert_eq!(cuts[0].0.encode(), "((1)(2))");
        assert_eq!(cuts[0].1.encode(), "((3)(4))");
    }
}
