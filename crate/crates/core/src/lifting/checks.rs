//! Verification suites for the lifted twisting homomorphism.
//!
//! Each check walks a finite family of generators or composites and stops
//! at the first failure, which it reports as a [`Counterexample`].

use serde::Serialize;

use crate::barcx::{
    apply, composite_in_cell, coproduct, generator, generator_cell, generator_shapes, pure,
    suspension_morphism, Block, Composite, Simplex, TwistingHom,
};
use crate::exactlin::Ring;
use crate::lincomb::{sign_of, Lin};
use crate::operads::{enumerate_simplices, CompleteGraphElement};
use crate::symseq::ordered_set_partitions;

use super::{all_shapes, eps_chain, lift_level, restrict_to_en, LiftError};

/// The first failure of a suite.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Counterexample {
    pub suite: String,
    pub element: String,
    pub detail: String,
}

/// Outcome of one suite.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SuiteReport {
    pub suite: String,
    pub checked: usize,
    pub passed: bool,
    pub counterexample: Option<Counterexample>,
}

fn fail(suite: &str, element: String, detail: impl Into<String>) -> Counterexample {
    Counterexample {
        suite: suite.to_string(),
        element,
        detail: detail.into(),
    }
}

fn describe<D: crate::barcx::Leaf>(x: &Lin<Composite<D>>) -> String {
    let mut terms: Vec<String> = x.iter().map(|(t, c)| format!("{c:+}{}", t.encode())).collect();
    terms.sort();
    terms.truncate(8);
    terms.join(" ")
}

/// Composites `ξ(p_1, ..., p_s)` on `{1..r}` for `r ≤ arity_max` with every
/// decoration of degree at most `deco_degree`.
pub fn test_composites(n: u8, arity_max: usize, deco_degree: usize) -> Vec<Composite<Simplex>> {
    let mut out = Vec::new();
    for r in 1..=arity_max as u32 {
        let labels: Vec<u32> = (1..=r).collect();
        for blocks in ordered_set_partitions(&labels) {
            let choices: Vec<Vec<Simplex>> = blocks.iter().map(|b| enumerate_simplices(b, deco_degree)).collect();
            let mut decorations: Vec<Vec<Simplex>> = vec![Vec::new()];
            for c in &choices {
                decorations = decorations
                    .into_iter()
                    .flat_map(|prefix| {
                        c.iter().map(move |d| {
                            let mut v = prefix.clone();
                            v.push(d.clone());
                            v
                        })
                    })
                    .collect();
            }
            for seps in generator_shapes(n, blocks.len()) {
                for leaves in &decorations {
                    out.push(Composite::new(n, seps.clone(), leaves.clone()));
                }
            }
        }
    }
    out
}

/// `(δ + ∂_α)² = 0` on every generator and on the given composites.
pub fn check_twisting(alpha: &TwistingHom<Simplex>, composites: &[Composite<Simplex>]) -> Result<usize, Counterexample> {
    let mut checked = 0;
    for seps in alpha.shapes() {
        let v = alpha.value(seps).expect("listed shape");
        let dd = apply(&v, |t| alpha.total(t));
        if !dd.is_zero() {
            return Err(fail(
                "twisting",
                generator(alpha.level(), seps).encode(),
                format!("δα + α∘α = {}", describe(&dd)),
            ));
        }
        checked += 1;
    }
    for c in composites {
        let d = alpha.total(c);
        let dd = apply(&d, |t| alpha.total(t));
        if !dd.is_zero() {
            return Err(fail("twisting", c.encode(), format!("D² = {}", describe(&dd))));
        }
        checked += 1;
    }
    Ok(checked)
}

/// `ε̃ ∂_ε = ∂_γ ε̃` on the given composites.
pub fn check_projection(
    alpha: &TwistingHom<Simplex>,
    gamma: &TwistingHom<Block>,
    composites: &[Composite<Simplex>],
) -> Result<usize, Counterexample> {
    let ring = alpha.ring();
    for c in composites {
        let x = Lin::single(ring, c.clone(), 1);
        let lhs = eps_chain(&alpha.total(c));
        let rhs = apply(&eps_chain(&x), |t| gamma.total(t));
        if lhs != rhs {
            return Err(fail(
                "projection",
                c.encode(),
                format!("ε∂ = {} but ∂ε = {}", describe(&lhs), describe(&rhs)),
            ));
        }
    }
    Ok(composites.len())
}

/// `Δ ∂ = (∂ ⊗ id + id ⊗ ∂) Δ` on generators, with reduced deconcatenation.
pub fn check_coderivation(alpha: &TwistingHom<Simplex>) -> Result<usize, Counterexample> {
    let ring = alpha.ring();
    let mut checked = 0;
    for seps in alpha.shapes() {
        let xi: Composite<Simplex> = pure(alpha.level(), seps);
        let mut lhs: Lin<(Composite<Simplex>, Composite<Simplex>)> = Lin::zero(ring);
        for (t, c) in alpha.total(&xi).iter() {
            for (a, b, s) in coproduct(t) {
                lhs.add_term((a, b), s * c);
            }
        }
        let mut rhs = Lin::zero(ring);
        for (a, b, e) in coproduct(&xi) {
            for (t, c) in alpha.total(&a).iter() {
                rhs.add_term((t.clone(), b.clone()), e * c);
            }
            let s = e * sign_of(a.degree());
            for (t, c) in alpha.total(&b).iter() {
                rhs.add_term((a.clone(), t.clone()), s * c);
            }
        }
        if lhs != rhs {
            return Err(fail("coderivation", generator(alpha.level(), seps).encode(), "Δ∂ ≠ (∂⊗1 + 1⊗∂)Δ"));
        }
        checked += 1;
    }
    Ok(checked)
}

/// Every graph `(μ, id)` on `{1..s}` with weights at most `max_weight`.
fn graphs_with_identity(s: usize, max_weight: u32) -> Vec<CompleteGraphElement> {
    let labels: Vec<u32> = (1..=s as u32).collect();
    let pairs: Vec<(u32, u32)> = (0..s)
        .flat_map(|a| (a + 1..s).map(move |b| (a as u32 + 1, b as u32 + 1)))
        .collect();
    let mut out = Vec::new();
    let total = (max_weight as usize + 1).pow(pairs.len() as u32);
    for mut code in 0..total {
        let mut weights = std::collections::BTreeMap::new();
        for &p in &pairs {
            weights.insert(p, (code % (max_weight as usize + 1)) as u32);
            code /= max_weight as usize + 1;
        }
        out.push(CompleteGraphElement::new(weights, labels.clone()).expect("complete graph"));
    }
    out
}

/// `∂_α(ξ) ∈ (T^n ∘ E)_κ` for every generator `ξ` and every `κ = (μ, id)`
/// whose cell contains `ξ`; exhaustively over `κ` up to arity
/// `exhaustive_arity`, and for the minimal cell above it.
pub fn check_cells<D: crate::barcx::CellLeaf + crate::barcx::OperadLeaf>(
    alpha: &TwistingHom<D>,
    exhaustive_arity: usize,
) -> Result<usize, Counterexample> {
    let n = alpha.level();
    let mut checked = 0;
    for seps in alpha.shapes() {
        let s = seps.len() + 1;
        let minimal = generator_cell(n, seps);
        let kappas = if s <= exhaustive_arity {
            let word = crate::barcx::LevelWord {
                level: n,
                seps: seps.clone(),
                leaves: (1..=s as u32).collect(),
            };
            graphs_with_identity(s, n as u32)
                .into_iter()
                .filter(|k| crate::barcx::in_tn_cell(&word, k))
                .collect()
        } else {
            vec![minimal]
        };
        let value = alpha.value(seps).expect("listed shape");
        for kappa in kappas {
            for (t, _) in value.iter() {
                if !composite_in_cell(t, &kappa) {
                    return Err(fail(
                        "cells",
                        generator(n, seps).encode(),
                        format!("{} is outside the cell {}", t.encode(), kappa.encode()),
                    ));
                }
            }
            checked += 1;
        }
    }
    Ok(checked)
}

/// Every simplex of every `∂_ε(ξ)` has filtration level at most `n`.
pub fn check_restriction(alpha: &TwistingHom<Simplex>) -> Result<usize, Counterexample> {
    let n = alpha.level() as u32;
    match restrict_to_en(alpha.clone(), n) {
        Ok(_) => Ok(alpha.shapes().count()),
        Err(LiftError::RestrictionViolation {
            generator,
            simplex,
            level,
            ..
        }) => Err(fail(
            "restriction",
            generator,
            format!("{simplex} has filtration level {level} > {n}"),
        )),
    }
}

/// `∂^(n) σ = -σ ∂^(n-1)` on generators of level `n - 1`.
pub fn check_suspension(
    upper: &TwistingHom<Simplex>,
    lower: &TwistingHom<Simplex>,
) -> Result<usize, Counterexample> {
    let ring = upper.ring();
    let mut checked = 0;
    for seps in lower.shapes() {
        let xi: Composite<Simplex> = pure(lower.level(), seps);
        let x = Lin::single(ring, xi.clone(), 1);
        let lhs = apply(&suspension_morphism(&x), |t| upper.total(t));
        let rhs = suspension_morphism(&lower.total(&xi)).scaled(-1);
        if lhs != rhs {
            return Err(fail(
                "suspension",
                generator(lower.level(), seps).encode(),
                format!("∂σ = {} but -σ∂ = {}", describe(&lhs), describe(&rhs)),
            ));
        }
        checked += 1;
    }
    Ok(checked)
}

fn report(suite: &str, r: Result<usize, Counterexample>) -> SuiteReport {
    match r {
        Ok(checked) => SuiteReport {
            suite: suite.to_string(),
            checked,
            passed: true,
            counterexample: None,
        },
        Err(c) => SuiteReport {
            suite: suite.to_string(),
            checked: 0,
            passed: false,
            counterexample: Some(c),
        },
    }
}

/// All suites at level `n` up to `arity_max`.
pub fn run_suites(n: u8, arity_max: usize, ring: Ring) -> Vec<SuiteReport> {
    let gamma = crate::barcx::build_gamma(n, arity_max, ring);
    let alpha = lift_level(n, arity_max, ring);
    let composites = test_composites(n, arity_max.min(3), 1);
    let mut out = Vec::new();
    let gamma_sq = (|| {
        for seps in all_shapes(n, arity_max) {
            let v = gamma.value(&seps).expect("listed shape");
            let dd = apply(&v, |t| gamma.total(t));
            if !dd.is_zero() {
                return Err(fail("gamma", generator(n, &seps).encode(), "∂_γ² ≠ 0"));
            }
        }
        Ok(gamma.shapes().count())
    })();
    out.push(report("gamma", gamma_sq));
    out.push(report("twisting", check_twisting(&alpha, &composites)));
    out.push(report("projection", check_projection(&alpha, &gamma, &composites)));
    out.push(report("coderivation", check_coderivation(&alpha)));
    out.push(report("cells", check_cells(&alpha, 3)));
    out.push(report("restriction", check_restriction(&alpha)));
    if n >= 2 {
        let lower = lift_level(n - 1, arity_max, ring);
        out.push(report("suspension", check_suspension(&alpha, &lower)));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn all_suites_pass_for_small_levels() {
        for (n, arity) in [(1u8, 4usize), (2, 3), (3, 3)] {
            for r in run_suites(n, arity, Ring::Integers) {
                assert!(r.passed, "n={n}: {:?}", r.counterexample);
                assert!(r.checked > 0);
            }
        }
    }

    #[test]
    fn suites_pass_modulo_two() {
        for r in run_suites(2, 3, Ring::PrimeField(2)) {
            assert!(r.passed, "{:?}", r.counterexample);
        }
    }
}
