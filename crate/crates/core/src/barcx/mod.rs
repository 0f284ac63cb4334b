//! The iterated tensor coalgebra `T^n = (T^cΣ)^n(I)` on level words, its
//! generating collection `G^n`, the shuffle product and deconcatenation,
//! the commutative twisting homomorphism `∂_γ` of `B^n_C`, the suspension
//! morphisms, cells indexed by complete graphs, and the Harrison quotient.

mod bar;
mod cells;
mod harrison;
mod twisting;
mod words;

pub use bar::{apply, bar_differential, bar_differential_in, coproduct, deconcatenate, shuffle_product, LeafProduct};
pub use cells::{
    composite_in_cell, generator_cell, in_tn_cell, in_tn_cell_inductive, theta_min, CellLeaf,
};
pub use harrison::{harrison_complex, HarrisonInput};
pub use twisting::{
    build_gamma, internal_differential, pure, OperadLeaf, TargetOperad, TwistingHom,
};
pub use words::{
    factor_ranges, generator, generator_shapes, separation_level, word_degree, Block, Composite,
    Leaf, LevelWord, Simplex,
};

use std::sync::Arc;

use thiserror::Error;

use crate::exactlin::{LinError, Ring};
use crate::lincomb::Lin;
use crate::symseq::{permutations, primitive_relabel, BasisElement, FiniteSet, Label, SigmaModule, Truncation};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum BarError {
    #[error("shuffle image is not a direct summand: {0}")]
    NotSplit(String),
    #[error(transparent)]
    Lin(#[from] LinError),
}

/// The Σ_*-module `T^n` with zero differential, up to `arity_max`.
pub fn build_tn(n: u8, arity_max: usize, ring: Ring) -> SigmaModule {
    let mut bases = vec![Vec::new(); arity_max + 1];
    for (r, basis) in bases.iter_mut().enumerate().skip(1) {
        let labels: Vec<u32> = (1..=r as u32).collect();
        for seps in generator_shapes(n, r) {
            for leaves in permutations(&labels) {
                basis.push(BasisElement {
                    degree: word_degree(n, &seps),
                    inputs: FiniteSet::canonical(r),
                    label: Label::Word {
                        level: n,
                        seps: seps.clone(),
                        leaves,
                    },
                });
            }
        }
    }
    SigmaModule::from_parts(
        format!("T^{n}"),
        ring,
        Truncation::new(arity_max, i64::MAX),
        bases,
        primitive_relabel(),
        Arc::new(|_| Vec::new()),
    )
}

/// The suspension morphism `Σ B^(n-1)_R → B^n_R`: a level `n - 1` composite
/// becomes the single top-level factor of a level `n` composite. It raises
/// degrees by one and anticommutes with the differentials.
pub fn suspension_morphism<D: Leaf>(x: &Lin<Composite<D>>) -> Lin<Composite<D>> {
    x.map_linear(x.ring(), |c| Lin::single(x.ring(), c.suspend(), 1))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::symseq::{factorial, ordered_set_partitions, Bijection};
    use rand::rngs::StdRng;
    use rand::seq::SliceRandom;
    use rand::{Rng, SeedableRng};

    #[test]
    fn tn_dimensions() {
        let t1 = build_tn(1, 2, Ring::Integers);
        assert_eq!(t1.dims(2).into_iter().collect::<Vec<_>>(), vec![(2, 2)]);
        // Σ over ordered partitions of the product of block orderings
        let labels = [1u32, 2, 3];
        let oracle: u64 = ordered_set_partitions(&labels)
            .iter()
            .map(|p| p.iter().map(|b| factorial(b.len())).product::<u64>())
            .sum();
        assert_eq!(oracle, 24);
        let t2 = build_tn(2, 3, Ring::Integers);
        assert_eq!(t2.basis(3).len() as u64, oracle);
        for n in 0..=3u8 {
            let t = build_tn(n, 1, Ring::Integers);
            assert_eq!(t.dims(1).into_iter().collect::<Vec<_>>(), vec![(n as i64, 1)]);
        }
    }

    #[test]
    fn canonical_forms_round_trip() {
        let mut rng = StdRng::seed_from_u64(5);
        for _ in 0..100 {
            let n = rng.gen_range(1..=3u8);
            let r = rng.gen_range(1..=4usize);
            let seps: Vec<u8> = (1..r).map(|_| rng.gen_range(1..=n)).collect();
            let mut leaves: Vec<u32> = (1..=r as u32).collect();
            leaves.shuffle(&mut rng);
            let w = LevelWord { level: n, seps, leaves };
            let (shape, u, sign) = w.canonicalize();
            let g = LevelWord {
                level: n,
                seps: shape,
                leaves: (1..=r as u32).collect(),
            };
            assert_eq!(sign, 1);
            assert_eq!(g.relabel(&u), w);
        }
        // the two words of T^1({1,2}) share one generator
        let a = LevelWord::parse("(1)(2)").unwrap().canonicalize();
        let b = LevelWord::parse("(2)(1)").unwrap().canonicalize();
        assert_eq!(a.0, b.0);
        assert!(a.1.is_identity());
        assert_eq!(b.1, Bijection::from_values(vec![2, 1]).unwrap());
    }

    #[test]
    fn deconcatenation_is_coassociative() {
        let mut rng = StdRng::seed_from_u64(9);
        for _ in 0..50 {
            let n = rng.gen_range(1..=3u8);
            let r = rng.gen_range(1..=5usize);
            let seps: Vec<u8> = (1..r).map(|_| rng.gen_range(1..=n)).collect();
            let w = generator(n, &seps);
            let mut left = Vec::new();
            for (a, b) in deconcatenate(&w) {
                for (x, y) in deconcatenate(&a) {
                    left.push((x, y, b.clone()));
                }
            }
            let mut right = Vec::new();
            for (a, b) in deconcatenate(&w) {
                for (x, y) in deconcatenate(&b) {
                    right.push((a.clone(), x, y));
                }
            }
            left.sort();
            right.sort();
            assert_eq!(left, right);
        }
        assert!(deconcatenate(&generator(2, &[1])).is_empty());
        assert_eq!(deconcatenate(&generator(1, &[1, 1])).len(), 2);
    }

    #[test]
    fn shuffle_is_associative_and_graded_commutative() {
        let z = Ring::Integers;
        let words = |labels: &[u32]| -> Vec<Composite<Block>> {
            let mut out = Vec::new();
            for blocks in ordered_set_partitions(labels) {
                for seps in generator_shapes(2, blocks.len()) {
                    out.push(Composite::new(2, seps, blocks.clone()));
                }
            }
            out
        };
        for x in words(&[1]).iter().chain(words(&[1, 2]).iter()) {
            for y in words(&[3, 4]) {
                let xy = shuffle_product(z, x, &y);
                let yx = shuffle_product(z, &y, x);
                let s = crate::lincomb::sign_of(x.degree() * y.degree());
                assert_eq!(xy, yx.scaled(s));
                for zc in words(&[5]) {
                    let l = apply(&xy, |t| shuffle_product(z, t, &zc));
                    let yz = shuffle_product(z, &y, &zc);
                    let mut r = Lin::zero(z);
                    for (t, c) in yz.iter() {
                        r.add_scaled(&shuffle_product(z, x, t), c);
                    }
                    assert_eq!(l, r);
                }
            }
        }
        // (2, 2) shuffles: six terms
        let a = Composite::new(1, vec![1], vec![vec![1], vec![2]]);
        let b = Composite::new(1, vec![1], vec![vec![3], vec![4]]);
        assert_eq!(shuffle_product(z, &a, &b).len(), 6);
    }

    #[test]
    fn suspension_is_a_chain_map() {
        let z = Ring::Integers;
        for n in 2..=3u8 {
            for s in 1..=4 {
                for seps in generator_shapes(n - 1, s) {
                    let w = Lin::single(z, generator(n - 1, &seps), 1);
                    let lhs = apply(&suspension_morphism(&w), |t| bar_differential(z, t));
                    let rhs = suspension_morphism(&apply(&w, |t| bar_differential(z, t)));
                    assert_eq!(lhs, rhs.scaled(-1));
                    for (t, _) in suspension_morphism(&w).iter() {
                        assert!(deconcatenate(t).is_empty());
                    }
                }
            }
        }
    }
}
