//! Explicit finite complexes: arity components of the bar modules and
//! weight components of `B^n(A)` for small algebras.

use std::collections::{BTreeMap, HashMap};

use rayon::prelude::*;

use crate::barcx::{
    build_gamma, generator_shapes, Block, Composite, Leaf, OperadLeaf, Simplex, TwistingHom,
};
use crate::exactlin::{ChainComplex, LinError, Ring, SparseMatrix};
use crate::lifting::{eps_chain, lift_level, restrict_to_en, LiftError};
use crate::lincomb::Lin;
use crate::operads::{enumerate_en_simplices, enumerate_simplices};
use crate::symseq::ordered_set_partitions;

use super::EvalError;

/// The operad over which a bar module is taken.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum OperadChoice {
    /// The commutative operad `C`.
    Commutative,
    /// The Barratt-Eccles operad `E`, cut off above a total degree; homology
    /// is exact strictly below the cut-off.
    BarrattEccles { degree_max: i64 },
    /// The E_n filtration layer `E_n`, with `n` equal to the bar level.
    En,
}

impl OperadChoice {
    pub fn name(&self) -> String {
        match self {
            OperadChoice::Commutative => "C".to_string(),
            OperadChoice::BarrattEccles { degree_max } => format!("E[deg<={degree_max}]"),
            OperadChoice::En => "E_n".to_string(),
        }
    }
}

/// A finite complex together with its graded basis, ordered in each degree
/// by textual encoding.
#[derive(Clone, Debug)]
pub struct BasedComplex<K> {
    pub basis: BTreeMap<i64, Vec<K>>,
    pub complex: ChainComplex,
}

impl<K: Clone + Eq + std::hash::Hash> BasedComplex<K> {
    /// Position of a basis element within its degree.
    pub fn index(&self) -> HashMap<K, (i64, usize)> {
        let mut out = HashMap::new();
        for (&d, elems) in &self.basis {
            for (i, k) in elems.iter().enumerate() {
                out.insert(k.clone(), (d, i));
            }
        }
        out
    }

    pub fn dim(&self) -> usize {
        self.basis.values().map(Vec::len).sum()
    }
}

/// Builds a complex over Z from a basis and an integral differential
/// (computed in parallel), then reduces it to `ring`.
pub(crate) fn assemble<K, F>(ring: Ring, basis: Vec<K>, encode: impl Fn(&K) -> String, degree: impl Fn(&K) -> i64, diff: F) -> Result<BasedComplex<K>, EvalError>
where
    K: Clone + Eq + Ord + std::hash::Hash + Send + Sync,
    F: Fn(&K) -> Lin<K> + Sync,
{
    let mut keyed: Vec<(i64, String, K)> = basis.into_iter().map(|k| (degree(&k), encode(&k), k)).collect();
    keyed.sort_by(|a, b| (a.0, &a.1).cmp(&(b.0, &b.1)));
    let mut graded: BTreeMap<i64, Vec<K>> = BTreeMap::new();
    for (d, _, k) in keyed {
        graded.entry(d).or_default().push(k);
    }
    let mut index: HashMap<&K, (i64, usize)> = HashMap::new();
    for (&d, elems) in &graded {
        for (i, k) in elems.iter().enumerate() {
            index.insert(k, (d, i));
        }
    }
    let z = Ring::Integers;
    let mut cx = ChainComplex::new(z);
    for (&d, elems) in &graded {
        cx.dims.insert(d, elems.len());
    }
    for (&d, elems) in &graded {
        let columns: Vec<Lin<K>> = elems.par_iter().map(&diff).collect();
        let mut triples = Vec::new();
        for (col, v) in columns.iter().enumerate() {
            for (t, c) in v.iter() {
                match index.get(t) {
                    Some(&(dt, row)) if dt == d - 1 => triples.push((row, col, c)),
                    _ => {
                        return Err(EvalError::Lin(LinError::Dimension(
                            "differential leaves the enumerated basis".to_string(),
                        )))
                    }
                }
            }
        }
        if !triples.is_empty() {
            cx.diffs.insert(d, SparseMatrix::from_i64_entries(z, cx.dim(d - 1), cx.dim(d), triples));
        }
    }
    Ok(BasedComplex {
        basis: graded,
        complex: cx.change_ring(ring),
    })
}

/// Composites `ξ(p_1, ..., p_s)` of level `n` on `{1..r}` whose leaves are
/// drawn from `leaves(block)`.
pub(crate) fn composites<D: Leaf>(n: u8, r: usize, leaves: impl Fn(&[u32]) -> Vec<D>) -> Vec<Composite<D>> {
    let labels: Vec<u32> = (1..=r as u32).collect();
    let mut out = Vec::new();
    for blocks in ordered_set_partitions(&labels) {
        let mut choices: Vec<Vec<D>> = vec![Vec::new()];
        for b in &blocks {
            let options = leaves(b);
            choices = choices
                .into_iter()
                .flat_map(|prefix| {
                    options.iter().map(move |d| {
                        let mut v = prefix.clone();
                        v.push(d.clone());
                        v
                    })
                })
                .collect();
        }
        for seps in generator_shapes(n, blocks.len()) {
            for ls in &choices {
                out.push(Composite::new(n, seps.clone(), ls.clone()));
            }
        }
    }
    out
}

fn from_twisting<D: OperadLeaf + Send + Sync>(
    hom: &TwistingHom<D>,
    basis: Vec<Composite<D>>,
    ring: Ring,
) -> Result<BasedComplex<Composite<D>>, EvalError> {
    assemble(ring, basis, |c| c.encode(), |c| c.degree(), |c| hom.total(c))
}

/// The arity-`r` component of `B^n_C`.
pub fn bar_module_c(n: u8, r: usize, ring: Ring) -> Result<BasedComplex<Composite<Block>>, EvalError> {
    let gamma = build_gamma(n, r, Ring::Integers);
    let basis = composites(n, r, |b| vec![b.to_vec()]);
    from_twisting(&gamma, basis, ring)
}

/// The arity-`r` component of `B^n_E` (truncated above `degree_max`) or of
/// `B^n_{E_n}` (`degree_max = None`).
pub fn bar_module_e(
    n: u8,
    r: usize,
    degree_max: Option<i64>,
    ring: Ring,
) -> Result<BasedComplex<Composite<Simplex>>, EvalError> {
    let alpha = lift_level(n, r, Ring::Integers);
    match degree_max {
        None => {
            let alpha = restrict_to_en(alpha, n as u32)?;
            let basis = composites(n, r, |b| enumerate_en_simplices(n as u32, b));
            from_twisting(&alpha, basis, ring)
        }
        Some(dmax) => {
            let room = (dmax - n as i64).max(0) as usize;
            let basis: Vec<Composite<Simplex>> = composites(n, r, |b| enumerate_simplices(b, room))
                .into_iter()
                .filter(|c| c.degree() <= dmax)
                .collect();
            from_twisting(&alpha, basis, ring)
        }
    }
}

/// The arity-`r` component of a bar module as a plain complex.
pub fn bar_module_complex(n: u8, r: usize, choice: OperadChoice, ring: Ring) -> Result<ChainComplex, EvalError> {
    Ok(match choice {
        OperadChoice::Commutative => bar_module_c(n, r, ring)?.complex,
        OperadChoice::BarrattEccles { degree_max } => bar_module_e(n, r, Some(degree_max), ring)?.complex,
        OperadChoice::En => bar_module_e(n, r, None, ring)?.complex,
    })
}

/// Small algebras with one generator `x` of degree 0; their elements are
/// written as blocks of the label 0, the block of length `k` standing for
/// `x^k`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum AlgebraDatum {
    /// `k x` with zero product.
    Trivial,
    /// The augmentation ideal of `k[x]`.
    FreeCommutative,
}

impl AlgebraDatum {
    pub fn name(&self) -> &'static str {
        match self {
            AlgebraDatum::Trivial => "trivial:1",
            AlgebraDatum::FreeCommutative => "commutative:1",
        }
    }

    pub fn kind(&self) -> &'static str {
        match self {
            AlgebraDatum::Trivial => "trivial",
            AlgebraDatum::FreeCommutative => "commutative",
        }
    }

    /// Basis of the weight-`w` part.
    fn basis(&self, w: usize) -> Vec<Block> {
        match self {
            AlgebraDatum::Trivial if w == 1 => vec![vec![0]],
            AlgebraDatum::Trivial => Vec::new(),
            AlgebraDatum::FreeCommutative if w >= 1 => vec![vec![0; w]],
            AlgebraDatum::FreeCommutative => Vec::new(),
        }
    }

    /// The commutative product of basis elements.
    pub fn product(&self, factors: &[&Block]) -> Option<Block> {
        match self {
            AlgebraDatum::Trivial if factors.len() > 1 => None,
            _ => {
                let mut b: Block = factors.iter().flat_map(|f| f.iter().copied()).collect();
                b.sort_unstable();
                Some(b)
            }
        }
    }
}

/// Words of `B^n(A)` of weight `w`.
fn eval_basis(n: u8, a: AlgebraDatum, w: usize) -> Vec<Composite<Block>> {
    let mut out = Vec::new();
    for parts in compositions(w) {
        let mut choices: Vec<Vec<Block>> = vec![Vec::new()];
        for &k in &parts {
            let options = a.basis(k);
            choices = choices
                .into_iter()
                .flat_map(|prefix| {
                    options.iter().map(move |d| {
                        let mut v = prefix.clone();
                        v.push(d.clone());
                        v
                    })
                })
                .collect();
        }
        for seps in generator_shapes(n, parts.len()) {
            for ls in &choices {
                out.push(Composite::new(n, seps.clone(), ls.clone()));
            }
        }
    }
    out
}

/// Ordered compositions of `w` into positive parts.
pub(crate) fn compositions(w: usize) -> Vec<Vec<usize>> {
    if w == 0 {
        return vec![Vec::new()];
    }
    let mut out = Vec::new();
    for first in 1..=w {
        for mut rest in compositions(w - first) {
            rest.insert(0, first);
            out.push(rest);
        }
    }
    out
}

/// `ξ(a_1, ..., a_s) ↦ Σ c · η(Π a_f)`: the value of a twisting table on a
/// generator, with the commutative operations in its leaves acting on `A`.
fn evaluate_terms(a: AlgebraDatum, value: &Lin<Composite<Block>>, slots: &[Block], ring: Ring) -> Lin<Composite<Block>> {
    let mut out = Lin::zero(ring);
    for (t, c) in value.iter() {
        let mut leaves = Vec::with_capacity(t.leaves.len());
        let mut dead = false;
        for block in &t.leaves {
            let factors: Vec<&Block> = block.iter().map(|&j| &slots[j as usize - 1]).collect();
            match a.product(&factors) {
                Some(p) => leaves.push(p),
                None => {
                    dead = true;
                    break;
                }
            }
        }
        if !dead {
            out.add_term(Composite::new(t.level, t.seps.clone(), leaves), c);
        }
    }
    out
}

/// How the bar module acts on the algebra.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum EvalSource {
    /// `B^n_C`, through the commutative twisting table.
    Commutative,
    /// `B^n_E`, whose operations act through the augmentation `E → C`.
    BarrattEccles,
}

/// The weight-`w` component of `B^n(A) = Sym(B^n_R, A)`.
///
/// Both modules are quasi-free, so evaluation is substitution: a word
/// `ξ(a_1, ..., a_s)` goes to the table value of `ξ` with each leaf
/// operation applied to the `a_i` it gathers.
pub fn evaluate_module(
    n: u8,
    a: AlgebraDatum,
    w: usize,
    source: EvalSource,
    ring: Ring,
) -> Result<BasedComplex<Composite<Block>>, EvalError> {
    let z = Ring::Integers;
    let basis = eval_basis(n, a, w);
    let arity = basis.iter().map(|c| c.arity()).max().unwrap_or(1);
    let table: HashMap<Vec<u8>, Lin<Composite<Block>>> = match source {
        EvalSource::Commutative => {
            let gamma = build_gamma(n, arity, z);
            gamma.shapes().map(|s| (s.clone(), gamma.value(s).expect("listed shape"))).collect()
        }
        EvalSource::BarrattEccles => {
            let alpha = lift_level(n, arity, z);
            alpha
                .shapes()
                .map(|s| (s.clone(), eps_chain(&alpha.value(s).expect("listed shape"))))
                .collect()
        }
    };
    assemble(ring, basis, |c| c.encode(), |c| c.degree(), |c| {
        evaluate_terms(a, &table[&c.seps], &c.leaves, z)
    })
}

impl From<LiftError> for EvalError {
    fn from(e: LiftError) -> Self {
        EvalError::Lift(e)
    }
}

/// The trivial algebra on the unit Σ_*-module in arity `r`: level-`n` words
/// with singleton leaves labelled by `{1..r}`, where every merge of leaves
/// vanishes.
pub fn trivial_multilinear(n: u8, r: usize, ring: Ring) -> Result<BasedComplex<Composite<Block>>, EvalError> {
    let labels: Vec<u32> = (1..=r as u32).collect();
    let mut basis = Vec::new();
    for p in crate::symseq::permutations(&labels) {
        for seps in generator_shapes(n, r) {
            basis.push(Composite::new(n, seps, p.iter().map(|&x| vec![x]).collect()));
        }
    }
    assemble(ring, basis, |c| c.encode(), |c| c.degree(), |c| {
        crate::barcx::bar_differential_in(Ring::Integers, c, crate::barcx::LeafProduct::Zero)
    })
}

/// Number of basis elements of the arity-`r` component, without building it.
pub fn bar_module_size(n: u8, r: usize, choice: OperadChoice) -> u128 {
    let labels: Vec<u32> = (1..=r as u32).collect();
    let mut per_size: HashMap<usize, u128> = HashMap::new();
    let mut count = |k: usize| -> u128 {
        *per_size.entry(k).or_insert_with(|| {
            let b: Vec<u32> = (1..=k as u32).collect();
            match choice {
                OperadChoice::Commutative => 1,
                OperadChoice::En => enumerate_en_simplices(n as u32, &b).len() as u128,
                OperadChoice::BarrattEccles { degree_max } => {
                    enumerate_simplices(&b, (degree_max - n as i64).max(0) as usize).len() as u128
                }
            }
        })
    };
    let mut total = 0u128;
    for blocks in ordered_set_partitions(&labels) {
        let shapes = (n as u128).pow(blocks.len() as u32 - 1);
        let leaves: u128 = blocks.iter().map(|b| count(b.len())).product();
        total += shapes * leaves;
    }
    total
}
