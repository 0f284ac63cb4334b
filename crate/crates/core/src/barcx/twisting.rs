//! Twisting homomorphisms of quasi-free right modules `T^n ∘ R` and the
//! differential they induce on composites.
//!
//! A composite `η(q_1, ..., q_t)` in the table of a generator `ξ` of arity
//! `s` carries decorations on subsets of the leaf positions `1..s` of `ξ`.
//! Evaluated on a composite `ξ(p_1, ..., p_s)` the term becomes
//! `η(q_1(p_{f_1}), ..., q_t(p_{f_t}))` up to the Koszul sign of moving every
//! `p_j` next to the `q_k` that receives it.

use std::collections::BTreeMap;

use rayon::prelude::*;
use serde_json::{json, Value};

use crate::exactlin::Ring;
use crate::lincomb::{koszul_sign, mul, sign_of, Lin};
use crate::operads::{boundary, compose_simplices};

use super::bar::bar_differential;
use super::words::{generator, generator_shapes, Block, Composite, Leaf, Simplex};

/// Decorations that form an operad: composition, unit and differential.
pub trait OperadLeaf: Leaf {
    /// `outer(inner_1, ..., inner_k)` with `inner` listed by increasing
    /// input of `outer`.
    fn compose(outer: &Self, inner: &[&Self]) -> Vec<(Self, i64)>;
    fn unit(label: u32) -> Self;
    fn boundary(&self) -> Vec<(Self, i64)>;
}

impl OperadLeaf for Block {
    fn compose(_outer: &Self, inner: &[&Self]) -> Vec<(Self, i64)> {
        let mut b: Vec<u32> = inner.iter().flat_map(|x| x.iter().copied()).collect();
        b.sort_unstable();
        vec![(b, 1)]
    }

    fn unit(label: u32) -> Self {
        vec![label]
    }

    fn boundary(&self) -> Vec<(Self, i64)> {
        Vec::new()
    }
}

impl OperadLeaf for Simplex {
    fn compose(outer: &Self, inner: &[&Self]) -> Vec<(Self, i64)> {
        let ys: Vec<Simplex> = inner.iter().map(|&y| y.clone()).collect();
        compose_simplices(outer, &ys)
    }

    fn unit(label: u32) -> Self {
        vec![vec![label]]
    }

    fn boundary(&self) -> Vec<(Self, i64)> {
        boundary(self)
    }
}

/// The operad a twisting homomorphism takes values in.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum TargetOperad {
    Commutative,
    BarrattEccles,
    /// The E_n filtration layer of the Barratt-Eccles operad.
    BarrattEcclesN(u32),
}

impl TargetOperad {
    pub fn name(&self) -> String {
        match self {
            TargetOperad::Commutative => "C".to_string(),
            TargetOperad::BarrattEccles => "E".to_string(),
            TargetOperad::BarrattEcclesN(n) => format!("E_{n}"),
        }
    }
}

/// A table `ξ ↦ α(ξ)` on the generator shapes of `G^n` up to an arity
/// bound, split into homogeneous parts by operad degree.
#[derive(Clone, Debug)]
pub struct TwistingHom<D: Leaf> {
    level: u8,
    ring: Ring,
    arity_max: usize,
    target: TargetOperad,
    table: BTreeMap<Vec<u8>, Vec<Lin<Composite<D>>>>,
}

/// A composite in the generic position of its generator: unit decorations.
pub fn pure<D: OperadLeaf>(n: u8, seps: &[u8]) -> Composite<D> {
    Composite::new(
        n,
        seps.to_vec(),
        (1..=seps.len() as u32 + 1).map(D::unit).collect(),
    )
}

impl<D: OperadLeaf> TwistingHom<D> {
    pub fn from_table(
        level: u8,
        ring: Ring,
        arity_max: usize,
        target: TargetOperad,
        table: BTreeMap<Vec<u8>, Vec<Lin<Composite<D>>>>,
    ) -> Self {
        TwistingHom {
            level,
            ring,
            arity_max,
            target,
            table,
        }
    }

    pub fn level(&self) -> u8 {
        self.level
    }

    pub fn ring(&self) -> Ring {
        self.ring
    }

    pub fn arity_max(&self) -> usize {
        self.arity_max
    }

    pub fn target(&self) -> TargetOperad {
        self.target
    }

    pub fn shapes(&self) -> impl Iterator<Item = &Vec<u8>> {
        self.table.keys()
    }

    /// The parts `α_0(ξ), α_1(ξ), ...` of the value on a generator shape.
    pub fn parts(&self, seps: &[u8]) -> Option<&[Lin<Composite<D>>]> {
        self.table.get(seps).map(|v| v.as_slice())
    }

    /// The full value `α(ξ)`.
    pub fn value(&self, seps: &[u8]) -> Option<Lin<Composite<D>>> {
        let parts = self.parts(seps)?;
        let mut out = Lin::zero(self.ring);
        for p in parts {
            out.add_scaled(p, 1);
        }
        Some(out)
    }

    /// Sets the parts of the value on a generator shape.
    pub fn insert(&mut self, seps: Vec<u8>, parts: Vec<Lin<Composite<D>>>) {
        self.table.insert(seps, parts);
    }

    /// Retargets the same table.
    pub fn with_target(mut self, target: TargetOperad) -> Self {
        self.target = target;
        self
    }

    /// `∂_α(ξ(p_1, ..., p_s))`, using only the part of operad degree `part`
    /// when given. Panics outside the arity bound.
    pub fn extend(&self, w: &Composite<D>, part: Option<usize>) -> Lin<Composite<D>> {
        let mut out = Lin::zero(self.ring);
        let parts = self
            .table
            .get(&w.seps)
            .unwrap_or_else(|| panic!("generator {:?} outside the table", w.seps));
        let selected: Vec<&Lin<Composite<D>>> = match part {
            Some(p) => parts.get(p).into_iter().collect(),
            None => parts.iter().collect(),
        };
        for value in selected {
            for (term, c) in value.iter() {
                plug(term, &w.leaves, c, &mut out);
            }
        }
        out
    }

    /// Internal differential `δ(ξ(p_1, ..., p_s))`.
    pub fn internal(&self, w: &Composite<D>) -> Lin<Composite<D>> {
        internal_differential(self.ring, w)
    }

    /// The total differential `δ + ∂_α`.
    pub fn total(&self, w: &Composite<D>) -> Lin<Composite<D>> {
        let mut out = self.internal(w);
        out.add_scaled(&self.extend(w, None), 1);
        out
    }

    /// Deterministic JSON: generator encoding to sorted signed terms.
    pub fn to_json(&self) -> Value {
        let mut rows = Vec::new();
        for seps in self.table.keys() {
            let g = generator(self.level, seps);
            let mut terms: Vec<(String, i64)> = self
                .value(seps)
                .expect("listed shape")
                .iter()
                .map(|(t, c)| (t.encode(), c))
                .collect();
            terms.sort();
            rows.push(json!({
                "generator": g.encode(),
                "degree": g.degree(),
                "terms": terms
                    .into_iter()
                    .map(|(t, c)| json!({"coeff": c, "term": t}))
                    .collect::<Vec<_>>(),
            }));
        }
        rows.sort_by(|a, b| a["generator"].as_str().cmp(&b["generator"].as_str()));
        json!({
            "level": self.level,
            "operad": self.target.name(),
            "ring": self.ring.to_string(),
            "arity_max": self.arity_max,
            "table": rows,
        })
    }
}

/// Adds `c · term ∘ (leaves)` to `out`: each decoration `q_k` of `term`,
/// living on leaf positions of the generator, receives the leaves at those
/// positions.
fn plug<D: OperadLeaf>(term: &Composite<D>, leaves: &[D], c: i64, out: &mut Lin<Composite<D>>) {
    let t = term.leaves.len();
    let s = leaves.len();
    // Koszul sign of (q_1 .. q_t, p_1 .. p_s) -> (q_1, p_{f_1}, q_2, p_{f_2}, ...)
    let mut degrees: Vec<i64> = term.leaves.iter().map(|q| q.degree()).collect();
    degrees.extend(leaves.iter().map(|p| p.degree()));
    let mut order = Vec::with_capacity(t + s);
    let mut inputs: Vec<Vec<&D>> = Vec::with_capacity(t);
    for (k, q) in term.leaves.iter().enumerate() {
        order.push(k);
        let f = q.labels();
        for &j in &f {
            order.push(t + j as usize - 1);
        }
        inputs.push(f.iter().map(|&j| &leaves[j as usize - 1]).collect());
    }
    let sign = if degrees.iter().all(|&d| d % 2 == 0) {
        1
    } else {
        koszul_sign(&degrees, &order)
    };
    // expand the product over k of the composites
    let mut acc: Vec<(Vec<D>, i64)> = vec![(Vec::with_capacity(t), mul(c, sign))];
    for (k, q) in term.leaves.iter().enumerate() {
        let comps = D::compose(q, &inputs[k]);
        let mut next = Vec::with_capacity(acc.len() * comps.len());
        for (prefix, pc) in &acc {
            for (x, xc) in &comps {
                let mut v = prefix.clone();
                v.push(x.clone());
                next.push((v, mul(*pc, *xc)));
            }
        }
        acc = next;
        if acc.is_empty() {
            return;
        }
    }
    for (ls, coef) in acc {
        out.add_term(
            Composite {
                level: term.level,
                seps: term.seps.clone(),
                leaves: ls,
            },
            coef,
        );
    }
}

/// `δ(ξ(p_1, ..., p_s)) = Σ_i (-1)^(|ξ| + Σ_{j<i} |p_j|) ξ(..., δ p_i, ...)`.
pub fn internal_differential<D: OperadLeaf>(ring: Ring, w: &Composite<D>) -> Lin<Composite<D>> {
    let mut out = Lin::zero(ring);
    let mut prefix = w.word_degree();
    for i in 0..w.leaves.len() {
        for (f, c) in w.leaves[i].boundary() {
            let mut leaves = w.leaves.clone();
            leaves[i] = f;
            out.add_term(
                Composite {
                    level: w.level,
                    seps: w.seps.clone(),
                    leaves,
                },
                c * sign_of(prefix),
            );
        }
        prefix += w.leaves[i].degree();
    }
    out
}

/// `∂_γ` on the generators of `G^n` up to `arity_max`: the bar
/// differential of the generator with singleton leaves.
pub fn build_gamma(n: u8, arity_max: usize, ring: Ring) -> TwistingHom<Block> {
    assert!(n >= 1);
    let shapes: Vec<Vec<u8>> = (1..=arity_max).flat_map(|s| generator_shapes(n, s)).collect();
    let table: BTreeMap<Vec<u8>, Vec<Lin<Composite<Block>>>> = shapes
        .into_par_iter()
        .map(|seps| {
            let value = bar_differential(ring, &generator(n, &seps));
            (seps, vec![value])
        })
        .collect();
    TwistingHom::from_table(n, ring, arity_max, TargetOperad::Commutative, table)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::barcx::bar::apply;
    use crate::symseq::ordered_set_partitions;

    const Z: Ring = Ring::Integers;

    #[test]
    fn gamma_examples() {
        let g = build_gamma(1, 3, Z);
        let two = g.value(&[1]).unwrap();
        assert_eq!(two.len(), 1);
        assert_eq!(two.iter().next().unwrap().1.abs(), 1);
        assert_eq!(g.value(&[1, 1]).unwrap().len(), 2);
        assert!(g.value(&[]).unwrap().is_zero());
    }

    #[test]
    fn module_differential_matches_bar_differential() {
        // ∂_γ extended to T^n ∘ C is the bar differential with block leaves
        for n in 1..=2u8 {
            let g = build_gamma(n, 4, Z);
            let labels = [1u32, 2, 3, 4];
            for blocks in ordered_set_partitions(&labels) {
                for seps in generator_shapes(n, blocks.len()) {
                    let w = Composite::new(n, seps, blocks.clone());
                    assert_eq!(g.total(&w), bar_differential(Z, &w));
                }
            }
        }
    }

    #[test]
    fn gamma_squares_to_zero_on_generators() {
        for n in 1..=3u8 {
            let g = build_gamma(n, 4, Z);
            for seps in g.shapes() {
                let v = g.value(seps).unwrap();
                assert!(apply(&v, |t| g.total(t)).is_zero());
            }
        }
    }
}
