//! The [`SigmaModule`] type and its products.

use std::collections::BTreeMap;
use std::fmt;
use std::sync::Arc;

use super::combinat::{proper_splits, set_partitions};
use super::{BasisElement, Bijection, Element, FiniteSet, Label, SymError};
use crate::exactlin::{ChainComplex, LinError, Ring};
use crate::lincomb::{complex_from_basis, koszul_sign, mul, sign_of, Lin};

/// Bounds carried by every module: largest arity and largest degree kept.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Truncation {
    pub max_arity: usize,
    pub max_degree: i64,
}

impl Truncation {
    pub fn new(max_arity: usize, max_degree: i64) -> Truncation {
        Truncation {
            max_arity,
            max_degree,
        }
    }

    pub fn meet(self, other: Truncation) -> Truncation {
        Truncation {
            max_arity: self.max_arity.min(other.max_arity),
            max_degree: self.max_degree.min(other.max_degree),
        }
    }
}

/// Action of a bijection `u: inputs(x) -> target` on a basis element,
/// returning a sign and the transported element.
pub type RelabelFn = Arc<dyn Fn(&BasisElement, &Bijection) -> (i64, BasisElement) + Send + Sync>;

/// Differential of a basis element on any input set.
pub type DiffFn = Arc<dyn Fn(&BasisElement) -> Vec<(BasisElement, i64)> + Send + Sync>;

/// A truncated Σ_*-module of free graded modules with a differential.
///
/// `basis[r]` lists the basis on the canonical set `{1..r}`; index 0 is
/// always empty. The relabelling and differential closures must accept
/// elements on arbitrary input sets.
#[derive(Clone)]
pub struct SigmaModule {
    name: String,
    ring: Ring,
    trunc: Truncation,
    basis: Vec<Vec<BasisElement>>,
    relabel_fn: RelabelFn,
    diff_fn: DiffFn,
}

impl fmt::Debug for SigmaModule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("SigmaModule")
            .field("name", &self.name)
            .field("ring", &self.ring)
            .field("trunc", &self.trunc)
            .field("dims", &self.basis.iter().map(|b| b.len()).collect::<Vec<_>>())
            .finish()
    }
}

/// Relabelling for modules whose labels carry input names directly.
pub fn primitive_relabel() -> RelabelFn {
    Arc::new(|x: &BasisElement, u: &Bijection| (1, x.rename_primitive(u)))
}

impl SigmaModule {
    /// Builds a module from canonical bases (arity 1 upwards) and closures.
    ///
    /// Bases are filtered by the truncation and sorted by text encoding.
    pub fn from_parts(
        name: impl Into<String>,
        ring: Ring,
        trunc: Truncation,
        bases: Vec<Vec<BasisElement>>,
        relabel_fn: RelabelFn,
        diff_fn: DiffFn,
    ) -> SigmaModule {
        let mut basis = vec![Vec::new(); trunc.max_arity + 1];
        for (r, b) in bases.into_iter().enumerate() {
            if r == 0 || r > trunc.max_arity {
                continue;
            }
            let mut b: Vec<BasisElement> =
                b.into_iter().filter(|x| x.degree <= trunc.max_degree).collect();
            sort_basis(&mut b);
            basis[r] = b;
        }
        SigmaModule {
            name: name.into(),
            ring,
            trunc,
            basis,
            relabel_fn,
            diff_fn,
        }
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn ring(&self) -> Ring {
        self.ring
    }

    pub fn truncation(&self) -> Truncation {
        self.trunc
    }

    /// Basis on the canonical set `{1..r}` (empty beyond the truncation).
    pub fn basis(&self, r: usize) -> &[BasisElement] {
        self.basis.get(r).map(|b| b.as_slice()).unwrap_or(&[])
    }

    /// Basis on an arbitrary finite set, transported increasingly.
    pub fn basis_on(&self, set: &FiniteSet) -> Vec<BasisElement> {
        let r = set.len();
        let u = Bijection::increasing(&FiniteSet::canonical(r), set);
        self.basis(r)
            .iter()
            .map(|x| (self.relabel_fn)(x, &u).1)
            .collect()
    }

    /// Graded dimensions at arity `r`.
    pub fn dims(&self, r: usize) -> BTreeMap<i64, usize> {
        super::graded_dims(self.basis(r))
    }

    /// Relabels a basis element along `u`, whose source must be its input set.
    pub fn relabel_basis(
        &self,
        u: &Bijection,
        x: &BasisElement,
    ) -> Result<(i64, BasisElement), SymError> {
        if u.source() != x.inputs {
            return Err(SymError::InputMismatch {
                expected: u.source().elements().to_vec(),
                found: x.inputs.elements().to_vec(),
            });
        }
        Ok((self.relabel_fn)(x, u))
    }

    /// Relabels an element along `u`.
    pub fn relabel(&self, u: &Bijection, x: &Element) -> Result<Element, SymError> {
        let mut out = Lin::zero(self.ring);
        for (b, c) in x.iter() {
            let (s, y) = self.relabel_basis(u, b)?;
            out.add_term(y, mul(s, c));
        }
        Ok(out)
    }

    pub fn differential_basis(&self, x: &BasisElement) -> Element {
        let mut out = Lin::zero(self.ring);
        for (y, c) in (self.diff_fn)(x) {
            out.add_term(y, c);
        }
        out
    }

    pub fn differential(&self, x: &Element) -> Element {
        x.map_linear(self.ring, |b| self.differential_basis(b))
    }

    /// The arity `r` part as a finite chain complex, basis sorted by encoding.
    pub fn complex(&self, r: usize) -> Result<ChainComplex, LinError> {
        let basis: Vec<(BasisElement, i64)> =
            self.basis(r).iter().map(|b| (b.clone(), b.degree)).collect();
        complex_from_basis(self.ring, &basis, |b| self.differential_basis(b))
    }

    /// Trace of the action of a permutation of `{1..r}` on the degree `d` part.
    pub fn character(&self, r: usize, d: i64, sigma: &Bijection) -> i64 {
        self.basis(r)
            .iter()
            .filter(|x| x.degree == d)
            .map(|x| {
                let (s, y) = (self.relabel_fn)(x, sigma);
                if &y == x {
                    s
                } else {
                    0
                }
            })
            .sum()
    }

    /// Transports an element to the canonical set of its arity.
    pub fn transport_to_canonical(&self, x: &Element) -> Element {
        let mut out = Lin::zero(self.ring);
        for (b, c) in x.iter() {
            let u = Bijection::increasing(&b.inputs, &FiniteSet::canonical(b.inputs.len()));
            let (s, y) = (self.relabel_fn)(b, &u);
            out.add_term(y, mul(s, c));
        }
        out
    }

    fn same_ring(&self, other: &SigmaModule) -> Result<(), SymError> {
        if self.ring != other.ring {
            return Err(SymError::RingMismatch(self.ring, other.ring));
        }
        Ok(())
    }
}

pub(crate) fn sort_basis(b: &mut [BasisElement]) {
    b.sort_by_cached_key(|x| (x.degree, x.encode()));
}

/// The unit Σ_*-module: one element of degree 0 in arity 1.
pub fn unit(ring: Ring, trunc: Truncation) -> SigmaModule {
    let x = BasisElement {
        label: Label::Unit,
        degree: 0,
        inputs: FiniteSet::canonical(1),
    };
    SigmaModule::from_parts(
        "I",
        ring,
        trunc,
        vec![vec![], vec![x]],
        primitive_relabel(),
        Arc::new(|_| Vec::new()),
    )
}

fn pair(x: BasisElement, y: BasisElement) -> BasisElement {
    BasisElement {
        degree: x.degree + y.degree,
        inputs: x.inputs.union(&y.inputs),
        label: Label::Pair(Box::new(x), Box::new(y)),
    }
}

fn split_pair(x: &BasisElement) -> (&BasisElement, &BasisElement) {
    match &x.label {
        Label::Pair(a, b) => (a, b),
        other => panic!("expected a tensor, found {other:?}"),
    }
}

/// `M ⊗ N`, indexed by ordered splittings of the input set into two
/// nonempty parts.
pub fn tensor_product(m: &SigmaModule, n: &SigmaModule) -> Result<SigmaModule, SymError> {
    m.same_ring(n)?;
    let trunc = m.trunc.meet(n.trunc);
    let mut bases = vec![Vec::new(); trunc.max_arity + 1];
    for (r, slot) in bases.iter_mut().enumerate().skip(1) {
        let items: Vec<u32> = (1..=r as u32).collect();
        for (u, v) in proper_splits(&items) {
            let bu = m.basis_on(&FiniteSet::new(u).expect("split"));
            let bv = n.basis_on(&FiniteSet::new(v).expect("split"));
            for x in &bu {
                for y in &bv {
                    slot.push(pair(x.clone(), y.clone()));
                }
            }
        }
    }
    let (mr, nr) = (m.relabel_fn.clone(), n.relabel_fn.clone());
    let relabel: RelabelFn = Arc::new(move |p, u| {
        let (x, y) = split_pair(p);
        let (sx, x2) = mr(x, &u.restrict(x.inputs.elements()));
        let (sy, y2) = nr(y, &u.restrict(y.inputs.elements()));
        (sx * sy, pair(x2, y2))
    });
    let (md, nd) = (m.diff_fn.clone(), n.diff_fn.clone());
    let diff: DiffFn = Arc::new(move |p| {
        let (x, y) = split_pair(p);
        let mut out = Vec::new();
        for (dx, c) in md(x) {
            out.push((pair(dx, y.clone()), c));
        }
        let s = sign_of(x.degree);
        for (dy, c) in nd(y) {
            out.push((pair(x.clone(), dy), s * c));
        }
        out
    });
    Ok(SigmaModule::from_parts(
        format!("({} * {})", m.name, n.name),
        m.ring,
        trunc,
        bases,
        relabel,
        diff,
    ))
}

/// The symmetry isomorphism `x ⊗ y ↦ (-1)^{|x||y|} y ⊗ x`.
pub fn tensor_symmetry(x: &Element) -> Element {
    x.map_linear(x.ring(), |p| {
        let (a, b) = split_pair(p);
        Lin::single(
            x.ring(),
            pair(b.clone(), a.clone()),
            sign_of(a.degree * b.degree),
        )
    })
}

fn composite(x: BasisElement, ys: Vec<BasisElement>) -> BasisElement {
    let mut inputs = FiniteSet::default();
    let mut degree = x.degree;
    for y in &ys {
        inputs = inputs.union(&y.inputs);
        degree += y.degree;
    }
    BasisElement {
        label: Label::Composite(Box::new(x), ys),
        degree,
        inputs,
    }
}

fn split_composite(x: &BasisElement) -> (&BasisElement, &[BasisElement]) {
    match &x.label {
        Label::Composite(a, ys) => (a, ys),
        other => panic!("expected a composite, found {other:?}"),
    }
}

/// Cartesian product of lists.
fn cartesian<T: Clone>(lists: &[Vec<T>]) -> Vec<Vec<T>> {
    let mut out = vec![Vec::new()];
    for l in lists {
        let mut next = Vec::with_capacity(out.len() * l.len());
        for prefix in &out {
            for item in l {
                let mut p = prefix.clone();
                p.push(item.clone());
                next.push(p);
            }
        }
        out = next;
    }
    out
}

/// `M ∘ N` with composites `x(y_1, ..., y_r)`, blocks ordered by minima.
pub fn composition_product(m: &SigmaModule, n: &SigmaModule) -> Result<SigmaModule, SymError> {
    m.same_ring(n)?;
    if n.basis.iter().all(|b| b.is_empty()) && m.trunc.max_arity > 0 {
        return Err(SymError::NotConnected);
    }
    let trunc = m.trunc.meet(n.trunc);
    let mut bases = vec![Vec::new(); trunc.max_arity + 1];
    for (r, slot) in bases.iter_mut().enumerate().skip(1) {
        let items: Vec<u32> = (1..=r as u32).collect();
        for blocks in set_partitions(&items) {
            let xs = m.basis(blocks.len());
            if xs.is_empty() {
                continue;
            }
            let ys: Vec<Vec<BasisElement>> = blocks
                .iter()
                .map(|b| n.basis_on(&FiniteSet::new(b.clone()).expect("block")))
                .collect();
            for tuple in cartesian(&ys) {
                for x in xs {
                    let c = composite(x.clone(), tuple.clone());
                    if c.degree <= trunc.max_degree {
                        slot.push(c);
                    }
                }
            }
        }
    }
    let (mr, nr) = (m.relabel_fn.clone(), n.relabel_fn.clone());
    let relabel: RelabelFn = Arc::new(move |c, u| {
        let (x, ys) = split_composite(c);
        let mut sign = 1;
        let mut moved: Vec<(u32, BasisElement)> = Vec::with_capacity(ys.len());
        for y in ys {
            let (s, y2) = nr(y, &u.restrict(y.inputs.elements()));
            sign *= s;
            moved.push((y2.inputs.least().expect("nonempty block"), y2));
        }
        // New position of each old block after sorting by minima.
        let mut order: Vec<usize> = (0..moved.len()).collect();
        order.sort_by_key(|&i| moved[i].0);
        let degrees: Vec<i64> = moved.iter().map(|p| p.1.degree).collect();
        sign *= koszul_sign(&degrees, &order);
        let mut position = vec![0u32; order.len()];
        for (new, &old) in order.iter().enumerate() {
            position[old] = new as u32 + 1;
        }
        let (sx, x2) = mr(x, &Bijection::from_values(position).expect("permutation"));
        sign *= sx;
        let ys2: Vec<BasisElement> = order.iter().map(|&i| moved[i].1.clone()).collect();
        (sign, composite(x2, ys2))
    });
    let (md, nd) = (m.diff_fn.clone(), n.diff_fn.clone());
    let diff: DiffFn = Arc::new(move |c| {
        let (x, ys) = split_composite(c);
        let mut out = Vec::new();
        for (dx, s) in md(x) {
            out.push((composite(dx, ys.to_vec()), s));
        }
        let mut preceding = x.degree;
        for (i, y) in ys.iter().enumerate() {
            for (dy, s) in nd(y) {
                let mut ys2 = ys.to_vec();
                ys2[i] = dy;
                out.push((composite(x.clone(), ys2), sign_of(preceding) * s));
            }
            preceding += y.degree;
        }
        out
    });
    Ok(SigmaModule::from_parts(
        format!("({} o {})", m.name, n.name),
        m.ring,
        trunc,
        bases,
        relabel,
        diff,
    ))
}

fn peel_shift(x: &BasisElement) -> (i64, &BasisElement) {
    match &x.label {
        Label::Shifted(k, inner) => (*k, inner),
        _ => (0, x),
    }
}

fn wrap_shift(k: i64, inner: BasisElement) -> BasisElement {
    if k == 0 {
        return inner;
    }
    BasisElement {
        degree: inner.degree + k,
        inputs: inner.inputs.clone(),
        label: Label::Shifted(k, Box::new(inner)),
    }
}

/// Strips `k` from the accumulated shift of `x`, recovering the element of
/// the module that was shifted.
fn unshift(x: &BasisElement, k: i64) -> BasisElement {
    let (total, inner) = peel_shift(x);
    wrap_shift(total - k, inner.clone())
}

fn reshift(x: BasisElement, k: i64) -> BasisElement {
    let (total, inner) = peel_shift(&x);
    wrap_shift(total + k, inner.clone())
}

/// The degree shift `Σ^k M`; the differential picks up `(-1)^k`.
pub fn suspend(m: &SigmaModule, k: i64) -> SigmaModule {
    let trunc = Truncation::new(m.trunc.max_arity, m.trunc.max_degree + k);
    let bases = m
        .basis
        .iter()
        .map(|b| b.iter().map(|x| reshift(x.clone(), k)).collect())
        .collect();
    let mr = m.relabel_fn.clone();
    let relabel: RelabelFn = Arc::new(move |x, u| {
        let (s, y) = mr(&unshift(x, k), u);
        (s, reshift(y, k))
    });
    let md = m.diff_fn.clone();
    let diff: DiffFn = Arc::new(move |x| {
        md(&unshift(x, k))
            .into_iter()
            .map(|(y, c)| (reshift(y, k), sign_of(k) * c))
            .collect()
    });
    SigmaModule::from_parts(
        format!("S^{k} {}", m.name),
        m.ring,
        trunc,
        bases,
        relabel,
        diff,
    )
}

fn peel_twist(x: &BasisElement) -> (i64, &BasisElement) {
    match &x.label {
        Label::Twisted(k, inner) => (*k, inner),
        _ => (0, x),
    }
}

fn retwist(x: BasisElement, k: i64) -> BasisElement {
    let (total, inner) = peel_twist(&x);
    let k2 = total + k;
    let inner = inner.clone();
    if k2 == 0 {
        return inner;
    }
    let r = inner.inputs.len() as i64;
    BasisElement {
        degree: inner.degree + k2 * (1 - r),
        inputs: inner.inputs.clone(),
        label: Label::Twisted(k2, Box::new(inner)),
    }
}

/// The operadic suspension `Λ^k M`, with `(Λ^k M)(r) = Σ^{k(1-r)} M(r) ⊗ sgn_r^k`.
pub fn operadic_suspend(m: &SigmaModule, k: i64) -> SigmaModule {
    let bases: Vec<Vec<BasisElement>> = m
        .basis
        .iter()
        .map(|b| b.iter().map(|x| retwist(x.clone(), k)).collect())
        .collect();
    let max_degree = bases
        .iter()
        .flatten()
        .map(|x| x.degree)
        .max()
        .unwrap_or(m.trunc.max_degree)
        .max(m.trunc.max_degree + k.max(0));
    let trunc = Truncation::new(m.trunc.max_arity, max_degree);
    let mr = m.relabel_fn.clone();
    let relabel: RelabelFn = Arc::new(move |x, u| {
        let (s, y) = mr(&retwist(x.clone(), -k), u);
        (s * u.sign().pow(k.unsigned_abs() as u32), retwist(y, k))
    });
    let md = m.diff_fn.clone();
    let diff: DiffFn = Arc::new(move |x| {
        let r = x.inputs.len() as i64;
        let s = sign_of(k * (1 - r));
        md(&retwist(x.clone(), -k))
            .into_iter()
            .map(|(y, c)| (retwist(y, k), s * c))
            .collect()
    });
    SigmaModule::from_parts(
        format!("L^{k} {}", m.name),
        m.ring,
        trunc,
        bases,
        relabel,
        diff,
    )
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::symseq::permutations;

    fn comm_module(ring: Ring, max_arity: usize) -> SigmaModule {
        let bases = (0..=max_arity)
            .map(|r| {
                if r == 0 {
                    vec![]
                } else {
                    vec![BasisElement {
                        label: Label::Comm,
                        degree: 0,
                        inputs: FiniteSet::canonical(r),
                    }]
                }
            })
            .collect();
        SigmaModule::from_parts(
            "C",
            ring,
            Truncation::new(max_arity, 10),
            bases,
            primitive_relabel(),
            Arc::new(|_| Vec::new()),
        )
    }

    /// A small module with a nonzero differential: on each arity, the
    /// orderings in degree 1 and the commutative word in degree 0, with
    /// `d(w) = c`. Relabelling permutes orderings.
    fn ordered_cone(ring: Ring, max_arity: usize) -> SigmaModule {
        let bases = (0..=max_arity)
            .map(|r| {
                if r == 0 {
                    return vec![];
                }
                let items: Vec<u32> = (1..=r as u32).collect();
                let mut b: Vec<BasisElement> = permutations(&items)
                    .into_iter()
                    .map(|p| BasisElement {
                        label: Label::Perm(p),
                        degree: 1,
                        inputs: FiniteSet::canonical(r),
                    })
                    .collect();
                b.push(BasisElement {
                    label: Label::Comm,
                    degree: 0,
                    inputs: FiniteSet::canonical(r),
                });
                b
            })
            .collect();
        SigmaModule::from_parts(
            "P",
            ring,
            Truncation::new(max_arity, 10),
            bases,
            primitive_relabel(),
            Arc::new(|x: &BasisElement| match x.label {
                Label::Perm(_) => vec![(
                    BasisElement {
                        label: Label::Comm,
                        degree: 0,
                        inputs: x.inputs.clone(),
                    },
                    1,
                )],
                _ => vec![],
            }),
        )
    }

    fn total(m: &SigmaModule, r: usize) -> usize {
        m.basis(r).len()
    }

    fn all_bijections(r: usize) -> Vec<Bijection> {
        let items: Vec<u32> = (1..=r as u32).collect();
        permutations(&items)
            .into_iter()
            .map(|p| Bijection::from_values(p).unwrap())
            .collect()
    }

    #[test]
    fn unit_tensor_examples() {
        let i = unit(Ring::Integers, Truncation::new(4, 10));
        let ii = tensor_product(&i, &i).unwrap();
        assert_eq!(total(&ii, 2), 2);
        assert_eq!(total(&ii, 1), 0);
        let c = comm_module(Ring::Integers, 4);
        assert_eq!(total(&tensor_product(&c, &c).unwrap(), 3), 6);
    }

    #[test]
    fn composition_examples() {
        let z = Ring::Integers;
        let i = unit(z, Truncation::new(4, 10));
        let c = comm_module(z, 4);
        let cc = composition_product(&c, &c).unwrap();
        assert_eq!(total(&cc, 2), 2);
        assert_eq!(total(&cc, 3), 5);
        for r in 1..=4 {
            assert_eq!(composition_product(&c, &i).unwrap().dims(r), c.dims(r));
            assert_eq!(composition_product(&i, &c).unwrap().dims(r), c.dims(r));
        }
        let empty = SigmaModule::from_parts(
            "0",
            z,
            Truncation::new(3, 3),
            vec![],
            primitive_relabel(),
            Arc::new(|_| Vec::new()),
        );
        assert_eq!(
            composition_product(&c, &empty).unwrap_err(),
            SymError::NotConnected
        );
        let f2 = unit(Ring::PrimeField(2), Truncation::new(2, 2));
        assert!(matches!(
            tensor_product(&i, &f2),
            Err(SymError::RingMismatch(..))
        ));
    }

    #[test]
    fn suspension_examples() {
        let z = Ring::Integers;
        let i = unit(z, Truncation::new(3, 10));
        let si = suspend(&i, 1);
        assert_eq!(si.dims(1), BTreeMap::from([(1, 1)]));
        let p = ordered_cone(z, 3);
        let back = suspend(&suspend(&p, 1), -1);
        for r in 1..=3 {
            assert_eq!(back.basis(r), p.basis(r));
            let sp = suspend(&p, 1);
            for (d, k) in p.dims(r) {
                assert_eq!(sp.dims(r).get(&(d + 1)), Some(&k));
            }
        }
    }

    #[test]
    fn operadic_suspension_examples() {
        let z = Ring::Integers;
        let c = comm_module(z, 5);
        let lc = operadic_suspend(&c, 1);
        assert_eq!(lc.dims(2), BTreeMap::from([(-1, 1)]));
        for r in 1..=5 {
            assert_eq!(lc.dims(r), BTreeMap::from([(1 - r as i64, 1)]));
            assert_eq!(operadic_suspend(&c, 0).basis(r), c.basis(r));
        }
        let x = Lin::single(z, lc.basis(2)[0].clone(), 1);
        let tau = Bijection::from_values(vec![2, 1]).unwrap();
        assert_eq!(lc.relabel(&tau, &x).unwrap(), x.scaled(-1));
        assert_eq!(lc.character(2, -1, &tau), -1);
        let back = operadic_suspend(&lc, -1);
        assert_eq!(back.basis(3), c.basis(3));
    }

    #[test]
    fn relabel_is_functorial_and_checks_inputs() {
        let z = Ring::Integers;
        let p = ordered_cone(z, 3);
        let m = composition_product(&tensor_product(&p, &p).unwrap(), &suspend(&p, 1)).unwrap();
        let mm = operadic_suspend(&m, 1);
        for module in [&m, &mm] {
            for r in 1..=3 {
                let bij = all_bijections(r);
                for x in module.basis(r) {
                    let e = Lin::single(z, x.clone(), 1);
                    let id = Bijection::identity(&FiniteSet::canonical(r));
                    assert_eq!(module.relabel(&id, &e).unwrap(), e);
                    for u in &bij {
                        let ue = module.relabel(u, &e).unwrap();
                        for v in &bij {
                            let lhs = module.relabel(&u.then(v), &e).unwrap();
                            let rhs = module.relabel(v, &ue).unwrap();
                            assert_eq!(lhs, rhs);
                        }
                    }
                }
            }
        }
        let x = Lin::single(z, p.basis(2)[0].clone(), 1);
        let wrong = Bijection::from_values(vec![1, 2, 3]).unwrap();
        assert!(matches!(
            p.relabel(&wrong, &x),
            Err(SymError::InputMismatch { .. })
        ));
    }

    #[test]
    fn differentials_square_to_zero_and_commute_with_relabelling() {
        let z = Ring::Integers;
        let p = ordered_cone(z, 3);
        let sp = suspend(&p, 1);
        let modules = vec![
            tensor_product(&p, &sp).unwrap(),
            composition_product(&p, &sp).unwrap(),
            composition_product(&tensor_product(&p, &p).unwrap(), &p).unwrap(),
            operadic_suspend(&composition_product(&sp, &p).unwrap(), 1),
        ];
        for m in &modules {
            for r in 1..=3 {
                m.complex(r).unwrap().check_square_zero().unwrap();
                for x in m.basis(r) {
                    let e = Lin::single(z, x.clone(), 1);
                    for u in all_bijections(r) {
                        let a = m.differential(&m.relabel(&u, &e).unwrap());
                        let b = m.relabel(&u, &m.differential(&e)).unwrap();
                        assert_eq!(a, b);
                    }
                }
            }
        }
    }

    /// Graded dimensions together with the character of every permutation.
    fn signature(m: &SigmaModule, r: usize) -> Vec<(i64, usize, Vec<i64>)> {
        m.dims(r)
            .into_iter()
            .map(|(d, k)| {
                let chars = all_bijections(r).iter().map(|s| m.character(r, d, s)).collect();
                (d, k, chars)
            })
            .collect()
    }

    #[test]
    fn products_are_associative_up_to_basis_identification() {
        let z = Ring::Integers;
        let p = ordered_cone(z, 4);
        let sp = suspend(&p, 1);
        let c = comm_module(z, 4);
        let t1 = tensor_product(&tensor_product(&p, &sp).unwrap(), &c).unwrap();
        let t2 = tensor_product(&p, &tensor_product(&sp, &c).unwrap()).unwrap();
        let c1 = composition_product(&composition_product(&c, &sp).unwrap(), &c).unwrap();
        let c2 = composition_product(&c, &composition_product(&sp, &c).unwrap()).unwrap();
        for r in 1..=4 {
            assert_eq!(signature(&t1, r), signature(&t2, r));
            assert_eq!(signature(&c1, r), signature(&c2, r));
        }
    }

    #[test]
    fn composition_distributes_over_tensor() {
        let z = Ring::Integers;
        let p = ordered_cone(z, 4);
        let c = comm_module(z, 4);
        let lhs = composition_product(&tensor_product(&c, &p).unwrap(), &p).unwrap();
        let rhs = tensor_product(
            &composition_product(&c, &p).unwrap(),
            &composition_product(&p, &p).unwrap(),
        )
        .unwrap();
        for r in 1..=4 {
            assert_eq!(lhs.dims(r), rhs.dims(r));
        }
    }

    #[test]
    fn tensor_symmetry_is_an_involution_with_koszul_sign() {
        let z = Ring::Integers;
        let sp = suspend(&ordered_cone(z, 2), 1);
        let t = tensor_product(&sp, &sp).unwrap();
        for x in t.basis(2) {
            let e = Lin::single(z, x.clone(), 1);
            let swapped = tensor_symmetry(&e);
            assert_eq!(tensor_symmetry(&swapped), e);
            let (a, b) = split_pair(x);
            assert_eq!(swapped.iter().next().unwrap().1, sign_of(a.degree * b.degree));
        }
    }
}
