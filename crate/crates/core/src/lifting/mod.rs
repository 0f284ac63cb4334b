//! Lifting the commutative twisting homomorphism `∂_γ` of `B^n_C` to the
//! Barratt-Eccles operad, cup products, and the restriction to the E_n
//! filtration.
//!
//! With `ι̃`, `ε̃` and `ν̃` the extensions of `ι`, `ε` and `ν` to composites,
//! the lift is `α_0 = ι̃ ∂_γ` and
//!
//! ```text
//! α_m = ν̃ ( Σ_{p+q=m-1} ∂_{α_p} α_q ),
//! ```
//!
//! where `α_m` has operad degree `m`. Since `δν̃ + ν̃δ = ι̃ε̃ - id`, every
//! step solves `δ α_m + Σ ∂_{α_p} α_q = 0`.

mod checks;

pub use checks::{
    check_cells, check_coderivation, check_projection, check_restriction, check_suspension,
    check_twisting, run_suites, test_composites, Counterexample, SuiteReport,
};

use std::collections::BTreeMap;

use rayon::prelude::*;
use thiserror::Error;

use crate::barcx::{
    build_gamma, generator, generator_shapes, Block, Composite, Simplex, TargetOperad, TwistingHom,
};
use crate::exactlin::Ring;
use crate::lincomb::{sign_of, Lin};
use crate::operads::{filtration_level, nu, Perm};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LiftError {
    #[error("∂_ε({generator}) contains {simplex} of filtration level {level} > {n}")]
    RestrictionViolation {
        generator: String,
        simplex: String,
        level: u32,
        n: u32,
    },
}

/// `ι̃`: every block becomes the identity 0-simplex on it.
pub fn iota_tilde(c: &Composite<Block>) -> Composite<Simplex> {
    Composite {
        level: c.level,
        seps: c.seps.clone(),
        leaves: c.leaves.iter().map(|b| vec![b.clone()]).collect(),
    }
}

/// `ε̃`: nonzero only when every decoration has degree 0.
pub fn eps_tilde(c: &Composite<Simplex>) -> Option<Composite<Block>> {
    if c.leaves.iter().any(|d| d.len() != 1) {
        return None;
    }
    Some(Composite {
        level: c.level,
        seps: c.seps.clone(),
        leaves: c
            .leaves
            .iter()
            .map(|d| {
                let mut b = d[0].clone();
                b.sort_unstable();
                b
            })
            .collect(),
    })
}

/// `ε̃` on linear combinations.
pub fn eps_chain(x: &Lin<Composite<Simplex>>) -> Lin<Composite<Block>> {
    x.map_linear(x.ring(), |c| match eps_tilde(c) {
        Some(b) => Lin::single(x.ring(), b, 1),
        None => Lin::zero(x.ring()),
    })
}

/// `ι̃` on linear combinations.
pub fn iota_chain(x: &Lin<Composite<Block>>) -> Lin<Composite<Simplex>> {
    x.map_linear(x.ring(), |c| Lin::single(x.ring(), iota_tilde(c), 1))
}

fn sorted_labels(d: &Simplex) -> Perm {
    let mut s = d[0].clone();
    s.sort_unstable();
    s
}

/// `ν̃ ξ(p_1, ..., p_t) = Σ_i ± ξ(ιε p_1, ..., ιε p_(i-1), ν p_i, p_(i+1), ...)`,
/// with the Koszul sign `(-1)^(|ξ| + Σ_{j<i} |p_j|)` and `ν` taken with
/// respect to the increasing order of each block. Terms where some earlier
/// `p_j` has positive degree vanish.
pub fn nu_tilde(ring: Ring, c: &Composite<Simplex>) -> Lin<Composite<Simplex>> {
    let mut out = Lin::zero(ring);
    let base = sign_of(c.word_degree());
    for i in 0..c.leaves.len() {
        let sigma = sorted_labels(&c.leaves[i]);
        if let Some((v, s)) = nu(&c.leaves[i], &sigma) {
            let mut leaves = Vec::with_capacity(c.leaves.len());
            leaves.extend(c.leaves[..i].iter().map(|d| vec![sorted_labels(d)]));
            leaves.push(v);
            leaves.extend(c.leaves[i + 1..].iter().cloned());
            out.add_term(
                Composite {
                    level: c.level,
                    seps: c.seps.clone(),
                    leaves,
                },
                base * s,
            );
        }
        if c.leaves[i].len() > 1 {
            break;
        }
    }
    out
}

/// `ν̃` on linear combinations.
pub fn nu_chain(x: &Lin<Composite<Simplex>>) -> Lin<Composite<Simplex>> {
    x.map_linear(x.ring(), |c| nu_tilde(x.ring(), c))
}

/// The lift of `γ` to the Barratt-Eccles operad, computed by increasing
/// generator degree; generators of equal degree are independent.
pub fn lift_twisting(gamma: &TwistingHom<Block>) -> TwistingHom<Simplex> {
    let n = gamma.level();
    let ring = gamma.ring();
    let mut stages: BTreeMap<i64, Vec<Vec<u8>>> = BTreeMap::new();
    for seps in gamma.shapes() {
        stages
            .entry(generator(n, seps).degree())
            .or_default()
            .push(seps.clone());
    }
    let mut hom: TwistingHom<Simplex> = TwistingHom::from_table(
        n,
        ring,
        gamma.arity_max(),
        TargetOperad::BarrattEccles,
        BTreeMap::new(),
    );
    for (degree, shapes) in stages {
        let done: Vec<(Vec<u8>, Vec<Lin<Composite<Simplex>>>)> = shapes
            .into_par_iter()
            .map(|seps| {
                let alpha0 = iota_chain(&gamma.value(&seps).expect("shape of the table"));
                // operad degree of α_m(ξ) is m and its word degree is at least n
                let m_max = (degree - 1 - n as i64).max(0) as usize;
                let mut parts = vec![alpha0];
                for m in 1..=m_max {
                    let mut y = Lin::zero(ring);
                    for q in 0..m {
                        for (t, c) in parts[q].iter() {
                            y.add_scaled(&hom.extend(t, Some(m - 1 - q)), c);
                        }
                    }
                    parts.push(nu_chain(&y));
                }
                while parts.len() > 1 && parts.last().is_some_and(|p| p.is_zero()) {
                    parts.pop();
                }
                (seps, parts)
            })
            .collect();
        for (seps, parts) in done {
            hom.insert(seps, parts);
        }
    }
    hom
}

/// Lift of `∂_γ` at level `n` up to `arity_max`.
pub fn lift_level(n: u8, arity_max: usize, ring: Ring) -> TwistingHom<Simplex> {
    lift_twisting(&build_gamma(n, arity_max, ring))
}

/// Checks that every simplex in the table lies in `E_n` and retargets the
/// table to `E_n`.
pub fn restrict_to_en(alpha: TwistingHom<Simplex>, n: u32) -> Result<TwistingHom<Simplex>, LiftError> {
    for seps in alpha.shapes() {
        let value = alpha.value(seps).expect("listed shape");
        let mut terms = value.sorted();
        terms.sort_by_key(|(t, _)| t.encode());
        for (t, _) in terms {
            for d in &t.leaves {
                let level = filtration_level(d);
                if level > n {
                    return Err(LiftError::RestrictionViolation {
                        generator: generator(alpha.level(), seps).encode(),
                        simplex: crate::operads::encode_simplex(d),
                        level,
                        n,
                    });
                }
            }
        }
    }
    Ok(alpha.with_target(TargetOperad::BarrattEcclesN(n)))
}

/// Transposition of the labels 1 and 2.
fn tau(s: &Simplex) -> Simplex {
    s.iter()
        .map(|w| w.iter().map(|&x| if x == 1 { 2 } else if x == 2 { 1 } else { x }).collect())
        .collect()
}

fn tau_chain(x: &Lin<Simplex>) -> Lin<Simplex> {
    x.map_linear(x.ring(), |s| Lin::single(x.ring(), tau(s), 1))
}

/// Sign `s_m` in `z_m = υ_m + s_m τ υ_m`: `+1` for `m = 0`, `(-1)^(m+1)`
/// afterwards, the choice that makes every `z_m` a cycle.
pub fn cup_cycle_sign(m: usize) -> i64 {
    if m == 0 {
        1
    } else {
        sign_of(m as i64 + 1)
    }
}

/// The cup products `υ_m ∈ E(2)` of degree `m`: `υ_0 = (12)` and
/// `υ_m = ν(z_(m-1))`.
pub fn cup_product(m: usize, ring: Ring) -> Lin<Simplex> {
    let mut u: Lin<Simplex> = Lin::single(ring, vec![vec![1, 2]], 1);
    for k in 0..m {
        let z = cup_cycle_from(&u, k);
        u = z.map_linear(ring, |s| match nu(s, &[1, 2]) {
            Some((t, c)) => Lin::single(ring, t, c),
            None => Lin::zero(ring),
        });
    }
    u
}

fn cup_cycle_from(u: &Lin<Simplex>, m: usize) -> Lin<Simplex> {
    let mut z = u.clone();
    z.add_scaled(&tau_chain(u), cup_cycle_sign(m));
    z
}

/// The cycle `z_m = υ_m + s_m τ υ_m`.
pub fn cup_cycle(m: usize, ring: Ring) -> Lin<Simplex> {
    cup_cycle_from(&cup_product(m, ring), m)
}

/// Text of a chain of simplices, terms sorted by encoding, e.g. `+[21|12]`.
pub fn encode_simplex_chain(x: &Lin<Simplex>) -> String {
    let mut terms: Vec<(String, i64)> = x
        .iter()
        .map(|(s, c)| (crate::operads::encode_simplex(s), c))
        .collect();
    terms.sort();
    if terms.is_empty() {
        return "0".to_string();
    }
    terms
        .into_iter()
        .map(|(s, c)| match c {
            1 => format!("+{s}"),
            -1 => format!("-{s}"),
            c if c > 0 => format!("+{c}{s}"),
            c => format!("{c}{s}"),
        })
        .collect::<Vec<_>>()
        .join(" ")
}

/// Generator shapes of `G^n` up to `arity_max`, in increasing order.
pub fn all_shapes(n: u8, arity_max: usize) -> Vec<Vec<u8>> {
    (1..=arity_max).flat_map(|s| generator_shapes(n, s)).collect()
}
