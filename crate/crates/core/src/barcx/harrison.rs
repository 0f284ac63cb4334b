//! The Harrison complex: the bar complex `T^c(ΣA)` modulo the image of the
//! shuffle product, in the multilinear part of arity `r`.
//!
//! Words whose first leaf contains the label 1 span a complement of the
//! shuffle image. The projection onto that complement is found by
//! eliminating the shuffle relations with unit pivots, so the quotient is
//! computed over Z and reduced afterwards.

use std::collections::HashMap;

use crate::exactlin::{ChainComplex, Ring};
use crate::lincomb::{complex_from_basis, Lin};
use crate::symseq::{ordered_set_partitions, permutations};

use super::bar::{bar_differential_in, shuffle_product, LeafProduct};
use super::words::{Block, Composite};
use super::BarError;

/// The commutative algebra whose Harrison complex is taken.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum HarrisonInput {
    /// The augmentation ideal of the operad `C`, as an algebra in Σ_*-modules.
    Commutative,
    /// The trivial algebra on the unit Σ_*-module: `T^c(ΣI)` with zero
    /// differential.
    Trivial,
}

impl HarrisonInput {
    fn leaf_product(self) -> LeafProduct {
        match self {
            HarrisonInput::Commutative => LeafProduct::Union,
            HarrisonInput::Trivial => LeafProduct::Zero,
        }
    }

    /// Level-1 words on `labels`.
    fn words(self, labels: &[u32]) -> Vec<Composite<Block>> {
        let leaves: Vec<Vec<Vec<u32>>> = match self {
            HarrisonInput::Commutative => ordered_set_partitions(labels),
            HarrisonInput::Trivial => permutations(labels)
                .into_iter()
                .map(|p| p.into_iter().map(|x| vec![x]).collect())
                .collect(),
        };
        leaves
            .into_iter()
            .map(|b| Composite::new(1, vec![1; b.len() - 1], b))
            .collect()
    }
}

type Word = Composite<Block>;

/// Projection of words onto the complement spanned by words starting with
/// the least label, along the shuffle image.
struct Reducer {
    rows: HashMap<Word, Lin<Word>>,
}

impl Reducer {
    fn kept(w: &Word, least: u32) -> bool {
        w.leaves[0].contains(&least)
    }

    fn reduce(&self, v: &Lin<Word>) -> Lin<Word> {
        let mut cur = v.clone();
        loop {
            let hit = cur.iter().find(|(k, _)| self.rows.contains_key(*k)).map(|(k, c)| (k.clone(), c));
            match hit {
                Some((k, c)) => cur.add_scaled(&self.rows[&k], -c),
                None => return cur,
            }
        }
    }

    fn build(words: &[Word], relations: Vec<Lin<Word>>, least: u32) -> Result<Reducer, BarError> {
        let mut red = Reducer {
            rows: HashMap::new(),
        };
        for rel in relations {
            let r = red.reduce(&rel);
            let pivot = r
                .sorted()
                .into_iter()
                .filter(|(k, _)| !Reducer::kept(k, least))
                .find(|(_, c)| c.abs() == 1);
            match pivot {
                Some((k, c)) => {
                    red.rows.insert(k, r.scaled(c));
                }
                None => {
                    if r.iter().any(|(k, _)| !Reducer::kept(k, least)) {
                        return Err(BarError::NotSplit(
                            "a shuffle relation has no unit pivot".to_string(),
                        ));
                    }
                    if !r.is_zero() {
                        return Err(BarError::NotSplit(
                            "the shuffle image meets the complement".to_string(),
                        ));
                    }
                }
            }
        }
        let missing = words.iter().filter(|w| !Reducer::kept(w, least)).any(|w| !red.rows.contains_key(w));
        if missing {
            return Err(BarError::NotSplit(
                "the shuffle image does not span the complement".to_string(),
            ));
        }
        Ok(red)
    }
}

/// The arity-`r` component of the Harrison complex of `input`.
pub fn harrison_complex(input: HarrisonInput, r: usize, ring: Ring) -> Result<ChainComplex, BarError> {
    let labels: Vec<u32> = (1..=r as u32).collect();
    let words = input.words(&labels);
    let z = Ring::Integers;
    let mut relations = Vec::new();
    // μ(x, y) = ±μ(y, x), so the part containing 1 may go first
    for (u, v) in crate::symseq::proper_splits(&labels) {
        if !u.contains(&1) {
            continue;
        }
        let xs = input.words(&u);
        let ys = input.words(&v);
        for x in &xs {
            for y in &ys {
                relations.push(shuffle_product(z, x, y));
            }
        }
    }
    let red = Reducer::build(&words, relations, 1)?;
    let mut kept: Vec<Word> = words.into_iter().filter(|w| Reducer::kept(w, 1)).collect();
    kept.sort_by_key(|w| w.encode());
    let basis: Vec<(Word, i64)> = kept.iter().map(|w| (w.clone(), w.degree())).collect();
    let cx = complex_from_basis(z, &basis, |w| red.reduce(&bar_differential_in(z, w, input.leaf_product())))?;
    Ok(cx.change_ring(ring))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn total_dim(cx: &ChainComplex) -> usize {
        cx.dims.values().sum()
    }

    #[test]
    fn lie_coalgebra_dimensions() {
        // T^c(ΣI) modulo shuffles is the cofree Lie coalgebra: (r-1)! in arity r
        for (r, expect) in [(1, 1), (2, 1), (3, 2), (4, 6)] {
            let cx = harrison_complex(HarrisonInput::Trivial, r, Ring::Integers).unwrap();
            assert_eq!(total_dim(&cx), expect);
        }
    }

    #[test]
    fn harrison_complex_of_c_is_acyclic_above_arity_one() {
        let h1 = harrison_complex(HarrisonInput::Commutative, 1, Ring::Integers).unwrap().homology().unwrap();
        assert_eq!(h1.ranks().into_iter().collect::<Vec<_>>(), vec![(1, 1)]);
        for r in 2..=4 {
            for ring in [Ring::Integers, Ring::PrimeField(2), Ring::PrimeField(3)] {
                let cx = harrison_complex(HarrisonInput::Commutative, r, ring).unwrap();
                let h = cx.homology().unwrap();
                assert!(h.is_zero(), "arity {r} over {ring}");
            }
        }
    }
}
