//! Operads as Σ_*-modules with a composition product.

use std::sync::Arc;

use super::barratt_eccles::{boundary, compose_simplices, enumerate_en_simplices, enumerate_simplices, nu};
use super::simplex::Perm;
use super::OperadError;
use crate::exactlin::{ChainComplex, LinError, Ring};
use crate::lincomb::{complex_from_basis, mul, Lin};
use crate::symseq::{
    permutations, primitive_relabel, BasisElement, Element, FiniteSet, Label, SigmaModule,
    Truncation,
};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum OperadKind {
    Commutative,
    Associative,
    BarrattEccles,
    /// The suboperad `E_n ⊂ E` of simplices with filtration level at most n.
    BarrattEcclesN(u32),
}

/// An operad: its underlying Σ_*-module and a composition product.
#[derive(Clone, Debug)]
pub struct Operad {
    kind: OperadKind,
    module: SigmaModule,
}

pub fn comm_element(inputs: FiniteSet) -> BasisElement {
    BasisElement {
        label: Label::Comm,
        degree: 0,
        inputs,
    }
}

pub fn simplex_element(s: Vec<Perm>) -> BasisElement {
    let mut labels = s[0].clone();
    labels.sort_unstable();
    BasisElement {
        degree: s.len() as i64 - 1,
        inputs: FiniteSet::new(labels).expect("distinct labels"),
        label: Label::Simplex(s),
    }
}

fn perm_element(p: Perm) -> BasisElement {
    let mut labels = p.clone();
    labels.sort_unstable();
    BasisElement {
        label: Label::Perm(p),
        degree: 0,
        inputs: FiniteSet::new(labels).expect("distinct labels"),
    }
}

fn simplex_of(x: &BasisElement) -> Result<&Vec<Perm>, OperadError> {
    match &x.label {
        Label::Simplex(s) => Ok(s),
        other => Err(OperadError::WrongOperad(format!("{other:?} is not a simplex"))),
    }
}

fn simplex_diff() -> Arc<dyn Fn(&BasisElement) -> Vec<(BasisElement, i64)> + Send + Sync> {
    Arc::new(|x: &BasisElement| match &x.label {
        Label::Simplex(s) => boundary(s)
            .into_iter()
            .map(|(f, c)| (simplex_element(f), c))
            .collect(),
        _ => Vec::new(),
    })
}

/// The commutative operad: one operation of degree 0 in every arity.
pub fn commutative_operad(ring: Ring, arity_max: usize) -> Operad {
    let bases = (0..=arity_max)
        .map(|r| {
            if r == 0 {
                vec![]
            } else {
                vec![comm_element(FiniteSet::canonical(r))]
            }
        })
        .collect();
    Operad {
        kind: OperadKind::Commutative,
        module: SigmaModule::from_parts(
            "C",
            ring,
            Truncation::new(arity_max, 0),
            bases,
            primitive_relabel(),
            Arc::new(|_| Vec::new()),
        ),
    }
}

/// The associative operad: `A(r)` spanned by the orderings of `{1..r}`.
pub fn associative_operad(ring: Ring, arity_max: usize) -> Operad {
    let bases = (0..=arity_max)
        .map(|r| {
            let items: Vec<u32> = (1..=r as u32).collect();
            if r == 0 {
                vec![]
            } else {
                permutations(&items).into_iter().map(perm_element).collect()
            }
        })
        .collect();
    Operad {
        kind: OperadKind::Associative,
        module: SigmaModule::from_parts(
            "A",
            ring,
            Truncation::new(arity_max, 0),
            bases,
            primitive_relabel(),
            Arc::new(|_| Vec::new()),
        ),
    }
}

/// The Barratt-Eccles operad truncated in arity and degree.
pub fn barratt_eccles(ring: Ring, arity_max: usize, degree_max: usize) -> Operad {
    let bases = (0..=arity_max)
        .map(|r| {
            let items: Vec<u32> = (1..=r as u32).collect();
            if r == 0 {
                vec![]
            } else {
                enumerate_simplices(&items, degree_max)
                    .into_iter()
                    .map(simplex_element)
                    .collect()
            }
        })
        .collect();
    Operad {
        kind: OperadKind::BarrattEccles,
        module: SigmaModule::from_parts(
            "E",
            ring,
            Truncation::new(arity_max, degree_max as i64),
            bases,
            primitive_relabel(),
            simplex_diff(),
        ),
    }
}

/// The suboperad `E_n` truncated in arity; each `E_n(r)` is finite.
pub fn en_operad(n: u32, ring: Ring, arity_max: usize) -> Operad {
    let bases: Vec<Vec<BasisElement>> = (0..=arity_max)
        .map(|r| {
            let items: Vec<u32> = (1..=r as u32).collect();
            if r == 0 {
                vec![]
            } else {
                enumerate_en_simplices(n, &items)
                    .into_iter()
                    .map(simplex_element)
                    .collect()
            }
        })
        .collect();
    let top = bases.iter().flatten().map(|x| x.degree).max().unwrap_or(0);
    Operad {
        kind: OperadKind::BarrattEcclesN(n),
        module: SigmaModule::from_parts(
            format!("E_{n}"),
            ring,
            Truncation::new(arity_max, top),
            bases,
            primitive_relabel(),
            simplex_diff(),
        ),
    }
}

/// The chain complex `E_n(r)`.
pub fn enumerate_en(n: u32, r: usize, ring: Ring) -> Result<ChainComplex, LinError> {
    let items: Vec<u32> = (1..=r as u32).collect();
    let mut basis: Vec<(Vec<Perm>, i64)> = enumerate_en_simplices(n, &items)
        .into_iter()
        .map(|s| {
            let d = s.len() as i64 - 1;
            (s, d)
        })
        .collect();
    basis.sort_by_cached_key(|(s, d)| (*d, super::simplex::encode_simplex(s)));
    complex_from_basis(ring, &basis, |s| boundary(s).into_iter().collect::<Lin<_>>())
}

impl Operad {
    pub fn kind(&self) -> OperadKind {
        self.kind
    }

    pub fn module(&self) -> &SigmaModule {
        &self.module
    }

    pub fn ring(&self) -> Ring {
        self.module.ring()
    }

    /// The unit operation on a single input.
    pub fn unit_on(&self, label: u32) -> BasisElement {
        let inputs = FiniteSet::new(vec![label]).expect("singleton");
        match self.kind {
            OperadKind::Commutative => comm_element(inputs),
            OperadKind::Associative => perm_element(vec![label]),
            _ => simplex_element(vec![vec![label]]),
        }
    }

    /// Composite `x(y_1, ..., y_r)` where `ys[k]` is plugged into the `k`-th
    /// smallest input of `x`.
    pub fn compose(&self, x: &BasisElement, ys: &[BasisElement]) -> Result<Element, OperadError> {
        let ring = self.ring();
        if ys.len() != x.inputs.len() {
            return Err(OperadError::InputMismatch(format!(
                "{} blocks for {} inputs",
                ys.len(),
                x.inputs.len()
            )));
        }
        let mut all = FiniteSet::default();
        let mut total = 0;
        for y in ys {
            total += y.inputs.len();
            all = all.union(&y.inputs);
        }
        if all.len() != total {
            return Err(OperadError::NonDisjoint);
        }
        match self.kind {
            OperadKind::Commutative => Ok(Lin::single(ring, comm_element(all), 1)),
            OperadKind::Associative => {
                let Label::Perm(w) = &x.label else {
                    return Err(OperadError::WrongOperad("expected an ordering".into()));
                };
                let blocks: Result<Vec<&[u32]>, OperadError> = ys
                    .iter()
                    .map(|y| match &y.label {
                        Label::Perm(p) => Ok(p.as_slice()),
                        _ => Err(OperadError::WrongOperad("expected an ordering".into())),
                    })
                    .collect();
                Ok(Lin::single(
                    ring,
                    perm_element(super::barratt_eccles::substitute(w, &blocks?)),
                    1,
                ))
            }
            OperadKind::BarrattEccles | OperadKind::BarrattEcclesN(_) => {
                let sx = simplex_of(x)?;
                let sys: Result<Vec<Vec<Perm>>, OperadError> =
                    ys.iter().map(|y| simplex_of(y).cloned()).collect();
                let mut out = Lin::zero(ring);
                for (s, c) in compose_simplices(sx, &sys?) {
                    out.add_term(simplex_element(s), c);
                }
                Ok(out)
            }
        }
    }

    /// Multilinear extension of [`Operad::compose`].
    pub fn compose_elements(&self, x: &Element, ys: &[Element]) -> Result<Element, OperadError> {
        let mut out = Lin::zero(self.ring());
        let mut tuples: Vec<(Vec<BasisElement>, i64)> = vec![(Vec::new(), 1)];
        for y in ys {
            let mut next = Vec::new();
            for (t, c) in &tuples {
                for (b, cb) in y.iter() {
                    let mut t2 = t.clone();
                    t2.push(b.clone());
                    next.push((t2, mul(*c, cb)));
                }
            }
            tuples = next;
        }
        for (b, c) in x.iter() {
            for (t, ct) in &tuples {
                out.add_scaled(&self.compose(b, t)?, mul(c, *ct));
            }
        }
        Ok(out)
    }
}

/// The augmentation `ε: E -> C`: degree-0 simplices go to the commutative
/// word, positive degrees to zero.
pub fn augmentation_eps(x: &Element) -> Element {
    x.map_linear(x.ring(), |b| match &b.label {
        Label::Simplex(s) if s.len() == 1 => Lin::single(x.ring(), comm_element(b.inputs.clone()), 1),
        _ => Lin::zero(x.ring()),
    })
}

/// The section `ι: C -> E`: the commutative word on `e` goes to the
/// 0-simplex given by the increasing ordering of `e`.
pub fn section_iota(x: &Element) -> Element {
    x.map_linear(x.ring(), |b| {
        Lin::single(x.ring(), simplex_element(vec![b.inputs.elements().to_vec()]), 1)
    })
}

/// The homotopy `ν` with respect to `sigma` (increasing order when absent).
pub fn homotopy_nu(x: &Element, sigma: Option<&[u32]>) -> Result<Element, OperadError> {
    let mut out = Lin::zero(x.ring());
    for (b, c) in x.iter() {
        let s = simplex_of(b)?;
        let order: Vec<u32> = match sigma {
            Some(o) => {
                let mut sorted = o.to_vec();
                sorted.sort_unstable();
                if sorted != b.inputs.elements() {
                    return Err(OperadError::OrderingMismatch(o.to_vec()));
                }
                o.to_vec()
            }
            None => b.inputs.elements().to_vec(),
        };
        if let Some((t, sg)) = nu(s, &order) {
            out.add_term(simplex_element(t), mul(sg, c));
        }
    }
    Ok(out)
}
