//! Symmetric sequences in chain complexes.
//!
//! A [`SigmaModule`] assigns to every finite set of labels a free graded
//! module with a differential, functorially in bijections. Only the
//! canonical sets `{1..r}` store a basis; other input sets are reached by
//! transport along bijections. Tensor and composition products follow the
//! Koszul sign rule: moving a symbol of degree p past one of degree q costs
//! `(-1)^(pq)`.

mod combinat;
mod module;

pub use combinat::{factorial, ordered_set_partitions, permutations, proper_splits, set_partitions};
pub use module::{
    composition_product, operadic_suspend, primitive_relabel, suspend, tensor_product,
    tensor_symmetry, unit, DiffFn, RelabelFn, SigmaModule, Truncation,
};

use std::collections::BTreeMap;
use std::fmt;

use thiserror::Error;

use crate::exactlin::Ring;
use crate::lincomb::{permutation_sign, Lin};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SymError {
    #[error("ring mismatch: {0} versus {1}")]
    RingMismatch(Ring, Ring),
    #[error("composition product needs a connected right factor (nonzero arity 0 part)")]
    NotConnected,
    #[error("bijection source {expected:?} does not match the input set {found:?}")]
    InputMismatch { expected: Vec<u32>, found: Vec<u32> },
    #[error("labels are not distinct: {0:?}")]
    NotDistinct(Vec<u32>),
}

/// A finite set of non-negative labels, stored in increasing order.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct FiniteSet(Vec<u32>);

impl FiniteSet {
    pub fn new(mut labels: Vec<u32>) -> Result<FiniteSet, SymError> {
        labels.sort_unstable();
        if labels.windows(2).any(|w| w[0] == w[1]) {
            return Err(SymError::NotDistinct(labels));
        }
        Ok(FiniteSet(labels))
    }

    /// The canonical set `{1, ..., r}`.
    pub fn canonical(r: usize) -> FiniteSet {
        FiniteSet((1..=r as u32).collect())
    }

    pub fn elements(&self) -> &[u32] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn least(&self) -> Option<u32> {
        self.0.first().copied()
    }

    pub fn union(&self, other: &FiniteSet) -> FiniteSet {
        let mut v = self.0.clone();
        v.extend_from_slice(&other.0);
        v.sort_unstable();
        v.dedup();
        FiniteSet(v)
    }
}

/// A bijection given by its sequence of values on an ordered source set.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Bijection {
    source: Vec<u32>,
    values: Vec<u32>,
}

impl Bijection {
    /// The bijection `{1..r} -> image` with `i ↦ values[i-1]`.
    pub fn from_values(values: Vec<u32>) -> Result<Bijection, SymError> {
        let source = (1..=values.len() as u32).collect();
        Bijection::between(source, values)
    }

    /// The bijection sending `source[i]` to `values[i]`; `source` must be increasing.
    pub fn between(source: Vec<u32>, values: Vec<u32>) -> Result<Bijection, SymError> {
        FiniteSet::new(values.clone())?;
        let s = FiniteSet::new(source.clone())?;
        assert_eq!(s.elements(), source.as_slice(), "source must be listed increasingly");
        assert_eq!(source.len(), values.len());
        Ok(Bijection { source, values })
    }

    /// The order-preserving bijection between two sets of equal size.
    pub fn increasing(source: &FiniteSet, target: &FiniteSet) -> Bijection {
        assert_eq!(source.len(), target.len());
        Bijection {
            source: source.elements().to_vec(),
            values: target.elements().to_vec(),
        }
    }

    pub fn identity(set: &FiniteSet) -> Bijection {
        Bijection::increasing(set, set)
    }

    pub fn source(&self) -> FiniteSet {
        FiniteSet(self.source.clone())
    }

    pub fn target(&self) -> FiniteSet {
        FiniteSet::new(self.values.clone()).expect("distinct values")
    }

    pub fn values(&self) -> &[u32] {
        &self.values
    }

    pub fn apply(&self, x: u32) -> u32 {
        let i = self
            .source
            .binary_search(&x)
            .unwrap_or_else(|_| panic!("{x} is not in the source of the bijection"));
        self.values[i]
    }

    /// `then ∘ self`
    pub fn then(&self, then: &Bijection) -> Bijection {
        Bijection {
            source: self.source.clone(),
            values: self.values.iter().map(|&v| then.apply(v)).collect(),
        }
    }

    pub fn inverse(&self) -> Bijection {
        let mut pairs: Vec<(u32, u32)> = self
            .values
            .iter()
            .copied()
            .zip(self.source.iter().copied())
            .collect();
        pairs.sort_unstable();
        Bijection {
            source: pairs.iter().map(|p| p.0).collect(),
            values: pairs.iter().map(|p| p.1).collect(),
        }
    }

    /// Restriction to a subset of the source.
    pub fn restrict(&self, subset: &[u32]) -> Bijection {
        let mut s = subset.to_vec();
        s.sort_unstable();
        Bijection {
            values: s.iter().map(|&x| self.apply(x)).collect(),
            source: s,
        }
    }

    /// Sign of the underlying permutation once both sets are identified
    /// with `{1..r}` increasingly.
    pub fn sign(&self) -> i64 {
        permutation_sign(&self.values)
    }

    pub fn is_identity(&self) -> bool {
        self.source == self.values
    }
}

/// Tag identifying a basis element inside its module.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Label {
    /// The unit `x(e)` of the unit module, on a singleton.
    Unit,
    /// The commutative word on the input set.
    Comm,
    /// An ordering of the input set.
    Perm(Vec<u32>),
    /// A Barratt-Eccles simplex: a sequence of orderings.
    Simplex(Vec<Vec<u32>>),
    /// A level word: separation levels between consecutive leaves and the
    /// leaf labels from left to right.
    Word { level: u8, seps: Vec<u8>, leaves: Vec<u32> },
    /// A tensor `x ⊗ y`.
    Pair(Box<BasisElement>, Box<BasisElement>),
    /// A composite `x(y_1, ..., y_r)` with blocks ordered by minima; `x`
    /// lives on `{1..r}`.
    Composite(Box<BasisElement>, Vec<BasisElement>),
    /// A degree shift.
    Shifted(i64, Box<BasisElement>),
    /// An operadic suspension `Λ^k`.
    Twisted(i64, Box<BasisElement>),
}

/// A basis element of some module on some input set.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct BasisElement {
    pub label: Label,
    pub degree: i64,
    pub inputs: FiniteSet,
}

/// Formal linear combination of basis elements.
pub type Element = Lin<BasisElement>;

pub fn fmt_labels(labels: &[u32]) -> String {
    if labels.iter().all(|&l| l < 10) {
        labels.iter().map(|l| l.to_string()).collect()
    } else {
        labels
            .iter()
            .map(|l| l.to_string())
            .collect::<Vec<_>>()
            .join(",")
    }
}

/// Nested-bracket text of a level word, e.g. `((1)(2))((3))`.
pub fn fmt_word(level: u8, seps: &[u8], leaves: &[String]) -> String {
    fn rec(level: u8, seps: &[u8], leaves: &[String], out: &mut String) {
        if level == 0 {
            out.push_str(&leaves[0]);
            return;
        }
        let mut start = 0;
        for i in 0..=seps.len() {
            if i == seps.len() || seps[i] >= level {
                out.push('(');
                rec(level - 1, &seps[start..i], &leaves[start..=i], out);
                out.push(')');
                start = i + 1;
            }
        }
    }
    let mut out = String::new();
    rec(level, seps, leaves, &mut out);
    out
}

impl BasisElement {
    /// Deterministic text encoding; basis lists are sorted by it.
    pub fn encode(&self) -> String {
        match &self.label {
            Label::Unit => format!("x({})", fmt_labels(self.inputs.elements())),
            Label::Comm => format!("c{{{}}}", fmt_labels(self.inputs.elements())),
            Label::Perm(p) => format!("({})", fmt_labels(p)),
            Label::Simplex(s) => format!(
                "[{}]",
                s.iter().map(|w| fmt_labels(w)).collect::<Vec<_>>().join("|")
            ),
            Label::Word { level, seps, leaves } => {
                let l: Vec<String> = leaves.iter().map(|x| x.to_string()).collect();
                fmt_word(*level, seps, &l)
            }
            Label::Pair(x, y) => format!("{} * {}", x.encode(), y.encode()),
            Label::Composite(x, ys) => format!(
                "{} o ({})",
                x.encode(),
                ys.iter().map(|y| y.encode()).collect::<Vec<_>>().join(", ")
            ),
            Label::Shifted(k, x) => format!("s^{k} {}", x.encode()),
            Label::Twisted(k, x) => format!("L^{k} {}", x.encode()),
        }
    }

    /// Renames the labels of a primitive element (no nested elements).
    pub(crate) fn rename_primitive(&self, u: &Bijection) -> BasisElement {
        let f = |x: &u32| u.apply(*x);
        let label = match &self.label {
            Label::Unit => Label::Unit,
            Label::Comm => Label::Comm,
            Label::Perm(p) => Label::Perm(p.iter().map(f).collect()),
            Label::Simplex(s) => Label::Simplex(s.iter().map(|w| w.iter().map(f).collect()).collect()),
            Label::Word { level, seps, leaves } => Label::Word {
                level: *level,
                seps: seps.clone(),
                leaves: leaves.iter().map(f).collect(),
            },
            other => panic!("rename_primitive on a structured label {other:?}"),
        };
        BasisElement {
            label,
            degree: self.degree,
            inputs: u.target(),
        }
    }
}

impl fmt::Display for BasisElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.encode())
    }
}

/// Graded dimensions of a list of basis elements.
pub fn graded_dims(basis: &[BasisElement]) -> BTreeMap<i64, usize> {
    let mut d = BTreeMap::new();
    for b in basis {
        *d.entry(b.degree).or_insert(0) += 1;
    }
    d
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn finite_sets_are_canonical() {
        assert_eq!(FiniteSet::new(vec![3, 1]).unwrap().elements(), &[1, 3]);
        assert!(FiniteSet::new(vec![1, 1]).is_err());
    }

    #[test]
    fn bijection_algebra() {
        let u = Bijection::from_values(vec![2, 3, 1]).unwrap();
        let v = Bijection::between(vec![1, 2, 3], vec![3, 1, 2]).unwrap();
        let w = u.then(&v);
        for x in 1..=3 {
            assert_eq!(w.apply(x), v.apply(u.apply(x)));
        }
        assert!(u.then(&u.inverse()).is_identity());
        assert_eq!(u.sign(), 1);
        assert_eq!(Bijection::from_values(vec![2, 1]).unwrap().sign(), -1);
        assert!(Bijection::from_values(vec![1, 1]).is_err());
    }

    #[test]
    fn word_encoding() {
        let leaves: Vec<String> = ["1", "2", "3"].iter().map(|s| s.to_string()).collect();
        assert_eq!(fmt_word(2, &[1, 2], &leaves), "((1)(2))((3))");
        assert_eq!(fmt_word(1, &[1, 1], &leaves), "(1)(2)(3)");
        assert_eq!(fmt_word(2, &[], &leaves[..1]), "((1))");
    }
}
