//! The complete graph operad: weighted complete graphs oriented by a total
//! ordering of the vertices, and the cells they cut out of the
//! Barratt-Eccles operad.

use std::collections::BTreeMap;
use std::fmt;

use super::simplex::{pair_order, pair_variations, Perm};
use super::OperadError;
use crate::symseq::fmt_labels;

/// A complete graph `κ = (μ, σ)`: a weight for every pair of vertices and a
/// total ordering `σ` of the vertices that orients every edge.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct CompleteGraphElement {
    inputs: Vec<u32>,
    weights: BTreeMap<(u32, u32), u32>,
    sigma: Perm,
}

impl CompleteGraphElement {
    /// Builds a graph from weights keyed by pairs `(e, f)` with `e < f`.
    pub fn new(weights: BTreeMap<(u32, u32), u32>, sigma: Perm) -> Result<Self, OperadError> {
        let mut inputs = sigma.clone();
        inputs.sort_unstable();
        if inputs.windows(2).any(|w| w[0] == w[1]) {
            return Err(OperadError::InputMismatch(format!("ordering {sigma:?} repeats a vertex")));
        }
        for (a, &e) in inputs.iter().enumerate() {
            for &f in &inputs[a + 1..] {
                if !weights.contains_key(&(e, f)) {
                    return Err(OperadError::InputMismatch(format!("no weight on the edge {{{e},{f}}}")));
                }
            }
        }
        if weights.len() != inputs.len() * inputs.len().saturating_sub(1) / 2 {
            return Err(OperadError::InputMismatch("weights on edges outside the vertex set".into()));
        }
        Ok(CompleteGraphElement {
            inputs,
            weights,
            sigma,
        })
    }

    /// The graph with the same weight on every edge.
    pub fn constant(weight: u32, sigma: Perm) -> Self {
        let mut inputs = sigma.clone();
        inputs.sort_unstable();
        let mut weights = BTreeMap::new();
        for (a, &e) in inputs.iter().enumerate() {
            for &f in &inputs[a + 1..] {
                weights.insert((e, f), weight);
            }
        }
        CompleteGraphElement::new(weights, sigma).expect("constant graph")
    }

    pub fn inputs(&self) -> &[u32] {
        &self.inputs
    }

    pub fn sigma(&self) -> &[u32] {
        &self.sigma
    }

    pub fn weight(&self, e: u32, f: u32) -> u32 {
        let key = if e < f { (e, f) } else { (f, e) };
        self.weights[&key]
    }

    /// Whether `e` precedes `f` in the orientation.
    pub fn precedes(&self, e: u32, f: u32) -> bool {
        pair_order(&self.sigma, e, f)
    }

    pub fn max_weight(&self) -> u32 {
        self.weights.values().copied().max().unwrap_or(0)
    }

    fn pairs(&self) -> impl Iterator<Item = (u32, u32)> + '_ {
        self.weights.keys().copied()
    }

    fn check_same_inputs(&self, other_inputs: &[u32]) -> Result<(), OperadError> {
        if self.inputs != other_inputs {
            return Err(OperadError::InputMismatch(format!(
                "vertex sets {:?} and {:?} differ",
                self.inputs, other_inputs
            )));
        }
        Ok(())
    }

    /// The subgraph on a subset of the vertices.
    pub fn restrict(&self, subset: &[u32]) -> Result<Self, OperadError> {
        let mut weights = BTreeMap::new();
        for (a, &e) in subset.iter().enumerate() {
            for &f in &subset[a + 1..] {
                if self.inputs.binary_search(&e).is_err() || self.inputs.binary_search(&f).is_err() {
                    return Err(OperadError::InputMismatch(format!("{subset:?} is not a subset")));
                }
                weights.insert((e.min(f), e.max(f)), self.weight(e, f));
            }
        }
        let sigma = self.sigma.iter().copied().filter(|x| subset.contains(x)).collect();
        CompleteGraphElement::new(weights, sigma)
    }

    /// Vertex substitution `κ(π_1, ..., π_r)`; `pis[k]` replaces the `k`-th
    /// smallest vertex of `κ`.
    pub fn compose(&self, pis: &[CompleteGraphElement]) -> Result<Self, OperadError> {
        if pis.len() != self.inputs.len() {
            return Err(OperadError::InputMismatch(format!(
                "{} blocks for {} vertices",
                pis.len(),
                self.inputs.len()
            )));
        }
        let mut all: Vec<u32> = pis.iter().flat_map(|p| p.inputs.iter().copied()).collect();
        all.sort_unstable();
        if all.windows(2).any(|w| w[0] == w[1]) {
            return Err(OperadError::NonDisjoint);
        }
        let mut weights = BTreeMap::new();
        for p in pis {
            weights.extend(p.weights.iter().map(|(k, v)| (*k, *v)));
        }
        for (i, pi) in pis.iter().enumerate() {
            for (j, pj) in pis.iter().enumerate().skip(i + 1) {
                let w = self.weight(self.inputs[i], self.inputs[j]);
                for &e in &pi.inputs {
                    for &f in &pj.inputs {
                        weights.insert((e.min(f), e.max(f)), w);
                    }
                }
            }
        }
        let sigma = self
            .sigma
            .iter()
            .flat_map(|v| {
                let k = self.inputs.binary_search(v).expect("vertex");
                pis[k].sigma.iter().copied()
            })
            .collect();
        CompleteGraphElement::new(weights, sigma)
    }

    /// The partial order: every edge has strictly smaller weight, or equal
    /// weight and the same orientation.
    pub fn leq(&self, other: &CompleteGraphElement) -> Result<bool, OperadError> {
        self.check_same_inputs(&other.inputs)?;
        Ok(self.pairs().all(|(e, f)| {
            let (a, b) = (self.weight(e, f), other.weight(e, f));
            a < b || (a == b && self.precedes(e, f) == other.precedes(e, f))
        }))
    }

    /// Membership of a simplex in the cell `E_κ`.
    pub fn contains(&self, s: &[Perm]) -> Result<bool, OperadError> {
        let mut labels = s[0].clone();
        labels.sort_unstable();
        self.check_same_inputs(&labels)?;
        let last = s.last().expect("nonempty simplex");
        Ok(self.pairs().all(|(e, f)| {
            let v = pair_variations(s, e, f);
            let mu = self.weight(e, f);
            v < mu || (v == mu && pair_order(last, e, f) == self.precedes(e, f))
        }))
    }

    /// Text form `{12:1>,13:0<} sigma=(...)`; `>` marks an edge oriented
    /// from the smaller label to the larger one.
    pub fn encode(&self) -> String {
        let edges: Vec<String> = self
            .pairs()
            .map(|(e, f)| {
                format!(
                    "{}:{}{}",
                    fmt_labels(&[e, f]),
                    self.weight(e, f),
                    if self.precedes(e, f) { '>' } else { '<' }
                )
            })
            .collect();
        format!("{{{}}} sigma=({})", edges.join(","), fmt_labels(&self.sigma))
    }
}

impl fmt::Display for CompleteGraphElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.encode())
    }
}

/// Membership test `in_cell(x, κ)`.
pub fn in_cell(s: &[Perm], kappa: &CompleteGraphElement) -> Result<bool, OperadError> {
    kappa.contains(s)
}
