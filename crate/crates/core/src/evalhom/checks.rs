//! Homology checks against counting oracles, the augmentation onto the
//! unit, and the stabilization scan over the bar level.

use std::collections::BTreeMap;

use rayon::prelude::*;
use serde::Serialize;

use crate::barcx::{harrison_complex, Composite, HarrisonInput, Leaf};
use crate::exactlin::{class_generates, induced_map_rank, HomologySummary, Ring, SparseMatrix};

use super::complexes::{bar_module_c, bar_module_e, evaluate_module, AlgebraDatum, EvalSource, OperadChoice};
use super::oracles::{free_commutative_dims, shuffle_multilinear_dims, trivial_algebra_dims};
use super::EvalError;

/// Expected against computed homology in one position.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CheckRow {
    pub n: u8,
    pub arity: Option<usize>,
    pub weight: Option<usize>,
    pub degree: i64,
    pub expected: u64,
    pub found: usize,
    pub torsion: Vec<String>,
}

/// Outcome of a homology check.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CheckReport {
    pub check: String,
    pub ring: String,
    pub passed: bool,
    pub rows: Vec<CheckRow>,
    /// Failed structural properties other than homology ranks.
    pub violations: Vec<String>,
}

impl CheckReport {
    /// Mismatching rows.
    pub fn failures(&self) -> Vec<&CheckRow> {
        self.rows.iter().filter(|r| !row_ok(r, self.torsion_matters())).collect()
    }

    fn torsion_matters(&self) -> bool {
        !self.check.starts_with("trivial-algebra")
    }
}

fn row_ok(r: &CheckRow, torsion_matters: bool) -> bool {
    r.expected == r.found as u64 && (!torsion_matters || r.torsion.is_empty())
}

/// Compares a homology summary with expected ranks in every degree that
/// occurs in either.
fn compare(
    n: u8,
    arity: Option<usize>,
    weight: Option<usize>,
    h: &HomologySummary,
    expected: &BTreeMap<i64, u64>,
) -> Vec<CheckRow> {
    let mut degrees: Vec<i64> = h.records.iter().map(|r| r.degree).collect();
    degrees.extend(expected.keys());
    degrees.sort_unstable();
    degrees.dedup();
    degrees
        .into_iter()
        .map(|d| {
            let g = h.group(d);
            CheckRow {
                n,
                arity,
                weight,
                degree: d,
                expected: expected.get(&d).copied().unwrap_or(0),
                found: g.free_rank,
                torsion: g.torsion.iter().map(|t| t.to_string()).collect(),
            }
        })
        .collect()
}

fn finish(check: &str, ring: Ring, rows: Vec<Vec<CheckRow>>) -> CheckReport {
    finish_with(check, ring, rows, Vec::new())
}

fn finish_with(check: &str, ring: Ring, rows: Vec<Vec<CheckRow>>, violations: Vec<String>) -> CheckReport {
    let rows: Vec<CheckRow> = rows.into_iter().flatten().collect();
    let torsion_matters = !check.starts_with("trivial-algebra");
    CheckReport {
        check: check.to_string(),
        ring: ring.to_string(),
        passed: violations.is_empty() && rows.iter().all(|r| row_ok(r, torsion_matters)),
        rows,
        violations,
    }
}

/// `H_*(B^n_C)(r)` is one class in degree `nr`, for `r ≤ r_max`, `n ≤ n_max`.
pub fn free_commutative_check(r_max: usize, n_max: u8, ring: Ring) -> Result<CheckReport, EvalError> {
    let cases: Vec<(u8, usize)> = (1..=n_max).flat_map(|n| (1..=r_max).map(move |r| (n, r))).collect();
    let rows = cases
        .par_iter()
        .map(|&(n, r)| {
            let h = bar_module_c(n, r, ring)?.complex.homology()?;
            let expected = BTreeMap::from([(n as i64 * r as i64, 1u64)]);
            Ok(compare(n, Some(r), None, &h, &expected))
        })
        .collect::<Result<Vec<_>, EvalError>>()?;
    Ok(finish("free-commutative", ring, rows))
}

/// The Harrison complex of `C` has homology `ΣI`: one class in degree 1 at
/// arity 1 and nothing above.
pub fn harrison_acyclicity_check(r_max: usize, ring: Ring) -> Result<CheckReport, EvalError> {
    let rows = (1..=r_max)
        .into_par_iter()
        .map(|r| {
            let h = harrison_complex(HarrisonInput::Commutative, r, ring)?.homology()?;
            let expected = if r == 1 { BTreeMap::from([(1i64, 1u64)]) } else { BTreeMap::new() };
            Ok(compare(1, Some(r), None, &h, &expected))
        })
        .collect::<Result<Vec<_>, EvalError>>()?;
    Ok(finish("harrison", ring, rows))
}

/// `B^n(A)` for the trivial algebra on one generator of degree 0, by
/// weight, against the graded dimensions of `C(Σ^(n-1) L^c(Σk))`. The
/// oracle is a characteristic-0 count; free ranks are compared and torsion
/// is reported.
pub fn trivial_algebra_check(n: u8, weight_max: usize, ring: Ring) -> Result<CheckReport, EvalError> {
    let oracle = trivial_algebra_dims(n as u32, weight_max);
    let rows = (1..=weight_max)
        .into_par_iter()
        .map(|w| {
            let h = evaluate_module(n, AlgebraDatum::Trivial, w, EvalSource::Commutative, ring)?.complex.homology()?;
            let expected: BTreeMap<i64, u64> =
                oracle.iter().filter(|((ww, _), _)| *ww == w).map(|(&(_, d), &c)| (d, c)).collect();
            Ok(compare(n, None, Some(w), &h, &expected))
        })
        .collect::<Result<Vec<_>, EvalError>>()?;
    Ok(finish("trivial-algebra", ring, rows))
}

/// The multilinear part of the same computation: the trivial algebra on the
/// unit Σ_*-module, in arity `r`, against `Σ_partitions Π (|b|-1)!`.
pub fn trivial_multilinear_check(n: u8, r_max: usize, ring: Ring) -> Result<CheckReport, EvalError> {
    let rows = (1..=r_max)
        .into_par_iter()
        .map(|r| {
            let h = super::complexes::trivial_multilinear(n, r, ring)?.complex.homology()?;
            Ok(compare(n, Some(r), None, &h, &shuffle_multilinear_dims(n as u32, r)))
        })
        .collect::<Result<Vec<_>, EvalError>>()?;
    Ok(finish("trivial-algebra-multilinear", ring, rows))
}

/// `B^n(A)` for the free commutative algebra on one generator of degree 0
/// against `C(Σ^n k)`, over a field of characteristic 0.
pub fn free_commutative_algebra_check(n: u8, weight_max: usize, ring: Ring) -> Result<CheckReport, EvalError> {
    let oracle = free_commutative_dims(n as u32, weight_max);
    let rows = (1..=weight_max)
        .into_par_iter()
        .map(|w| {
            let h = evaluate_module(n, AlgebraDatum::FreeCommutative, w, EvalSource::Commutative, ring)?
                .complex
                .homology()?;
            let expected: BTreeMap<i64, u64> =
                oracle.iter().filter(|((ww, _), _)| *ww == w).map(|(&(_, d), &c)| (d, c)).collect();
            Ok(compare(n, None, Some(w), &h, &expected))
        })
        .collect::<Result<Vec<_>, EvalError>>()?;
    Ok(finish("free-commutative-algebra", ring, rows))
}

/// The augmentation `B^n_R → Σ^n I`: the coefficient of the arity-one word
/// with a unit leaf.
pub fn augmentation<D: Leaf>(c: &Composite<D>) -> i64 {
    if c.leaves.len() == 1 && c.leaves[0].labels().len() == 1 && c.leaves[0].degree() == 0 {
        1
    } else {
        0
    }
}

/// Checks that the augmentation is a quasi-isomorphism in arities
/// `1..=r_max`: it kills boundaries, is compatible with the suspension
/// morphism, sends a generator of `H_n` at arity 1 to a generator, and the
/// homology vanishes at arities `≥ 2`.
pub fn augmentation_check(n: u8, r_max: usize, choice: OperadChoice, ring: Ring) -> Result<CheckReport, EvalError> {
    let rows = (1..=r_max)
        .into_par_iter()
        .map(|r| {
            let (h, chain_map, unit_class, suspension) = match choice {
                OperadChoice::Commutative => {
                    let m = bar_module_c(n, r, ring)?;
                    let facts = augmentation_facts(&m.basis, &m.complex, |c| {
                        crate::barcx::bar_differential(Ring::Integers, c)
                    })?;
                    (m.complex.homology()?, facts.0, facts.1, facts.2)
                }
                OperadChoice::En | OperadChoice::BarrattEccles { .. } => {
                    let dmax = match choice {
                        OperadChoice::BarrattEccles { degree_max } => Some(degree_max),
                        _ => None,
                    };
                    let m = bar_module_e(n, r, dmax, ring)?;
                    let alpha = crate::lifting::lift_level(n, r, Ring::Integers);
                    let facts = augmentation_facts(&m.basis, &m.complex, |c| alpha.total(c))?;
                    (m.complex.homology()?, facts.0, facts.1, facts.2)
                }
            };
            let mut expected = BTreeMap::new();
            if r == 1 {
                expected.insert(n as i64, 1u64);
            }
            let mut violations = Vec::new();
            for (ok, what) in [
                (chain_map, "ε∂ ≠ 0"),
                (unit_class, "the unit word does not generate H_n"),
                (suspension, "εσ ≠ ε"),
            ] {
                if !ok {
                    violations.push(format!("n={n} r={r}: {what}"));
                }
            }
            Ok((compare(n, Some(r), None, &h, &expected), violations))
        })
        .collect::<Result<Vec<_>, EvalError>>()?;
    let (rows, violations): (Vec<_>, Vec<_>) = rows.into_iter().unzip();
    Ok(finish_with(
        &format!("augmentation[{}]", choice.name()),
        ring,
        rows,
        violations.into_iter().flatten().collect(),
    ))
}

/// (ε∂ = 0, the unit word generates its homology group, ε σ = ε).
fn augmentation_facts<D: Leaf + Clone + Eq + std::hash::Hash>(
    basis: &BTreeMap<i64, Vec<Composite<D>>>,
    cx: &crate::exactlin::ChainComplex,
    diff: impl Fn(&Composite<D>) -> crate::lincomb::Lin<Composite<D>>,
) -> Result<(bool, bool, bool), EvalError> {
    let mut chain_map = true;
    let mut suspension = true;
    let mut unit = None;
    for (&d, elems) in basis {
        for (i, c) in elems.iter().enumerate() {
            let image: i64 = diff(c).iter().map(|(t, k)| k * augmentation(t)).sum();
            chain_map &= image == 0;
            suspension &= augmentation(&c.suspend()) == augmentation(c);
            if augmentation(c) != 0 {
                unit = Some((d, i));
            }
        }
    }
    let unit_class = match unit {
        None => true,
        Some((d, i)) => {
            let z = BTreeMap::from([(i, 1i64)]);
            class_generates(&[z], &cx.differential(d + 1), &cx.differential(d))?
        }
    };
    Ok((chain_map, unit_class, suspension))
}

/// One stage of the stabilization scan.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct StabilizationRow {
    pub n: u8,
    /// Degree after desuspending `n` times.
    pub degree: i64,
    pub rank: usize,
    /// Rank of the map induced by the suspension morphism from stage
    /// `n - 1`; absent at the first stage.
    pub map_rank: Option<usize>,
}

/// Homology of `Σ^(-n) B^n_C(r)` for `n = 1..=n_max` in a degree window.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct StabilizationReport {
    pub arity: usize,
    pub ring: String,
    pub window: (i64, i64),
    pub rows: Vec<StabilizationRow>,
    /// Image of the last stage but one in the last stage, by degree.
    pub colimit: BTreeMap<i64, usize>,
    pub passed: bool,
}

/// Scans `Σ^(-n) B^n_C(r)` over `n`, with the maps induced by suspension.
///
/// Ranks of induced maps are computed over a field: over Z they are taken
/// over Q. The colimit in the window is estimated by the image of stage
/// `n_max - 1` in stage `n_max`. It should be `k` in degree 0 at arity 1 and
/// zero at higher arities.
pub fn stabilization_scan(r: usize, window: (i64, i64), n_max: u8, ring: Ring) -> Result<StabilizationReport, EvalError> {
    let field = if ring.is_field() { ring } else { Ring::Rationals };
    let stages = (1..=n_max)
        .into_par_iter()
        .map(|n| bar_module_c(n, r, field))
        .collect::<Result<Vec<_>, EvalError>>()?;
    let homology = stages
        .par_iter()
        .map(|s| s.complex.change_ring(ring).homology())
        .collect::<Result<Vec<_>, _>>()?;
    let mut rows = Vec::new();
    let mut colimit = BTreeMap::new();
    let mut maps_vanish = true;
    for (i, stage) in stages.iter().enumerate() {
        let n = i as u8 + 1;
        for d in window.0..=window.1 {
            let k = d + n as i64;
            let rank = homology[i].group(k).free_rank;
            let map_rank = if i == 0 {
                None
            } else {
                let prev = &stages[i - 1];
                let f = suspension_matrix(prev, stage, k - 1);
                Some(induced_map_rank(&f, &prev.complex.differential(k - 1), &stage.complex.differential(k + 1))?)
            };
            if r >= 2 && map_rank.is_some_and(|m| m > 0) {
                maps_vanish = false;
            }
            if i + 1 == stages.len() {
                let c = if i == 0 { rank } else { map_rank.unwrap_or(0) };
                colimit.insert(d, c);
            }
            rows.push(StabilizationRow { n, degree: d, rank, map_rank });
        }
    }
    let expected_colimit: BTreeMap<i64, usize> =
        (window.0..=window.1).map(|d| (d, usize::from(r == 1 && d == 0))).collect();
    Ok(StabilizationReport {
        arity: r,
        ring: ring.to_string(),
        window,
        rows,
        passed: maps_vanish && colimit == expected_colimit,
        colimit,
    })
}

/// Matrix of `σ` from degree `k` of `prev` to degree `k + 1` of `next`.
fn suspension_matrix(
    prev: &super::complexes::BasedComplex<Composite<crate::barcx::Block>>,
    next: &super::complexes::BasedComplex<Composite<crate::barcx::Block>>,
    k: i64,
) -> SparseMatrix {
    let ring = next.complex.ring;
    let empty = Vec::new();
    let src = prev.basis.get(&k).unwrap_or(&empty);
    let tgt = next.basis.get(&(k + 1)).unwrap_or(&empty);
    let pos: std::collections::HashMap<&Composite<crate::barcx::Block>, usize> =
        tgt.iter().enumerate().map(|(i, c)| (c, i)).collect();
    let triples = src.iter().enumerate().map(|(j, c)| (pos[&c.suspend()], j, 1i64));
    SparseMatrix::from_i64_entries(ring, tgt.len(), src.len(), triples)
}

#[cfg(test)]
mod tests {
    use super::*;

    const Z: Ring = Ring::Integers;

    #[test]
    fn free_commutative_small() {
        let rep = free_commutative_check(3, 2, Z).unwrap();
        assert!(rep.passed, "{:?}", rep.failures());
        // n = 1, r = 2: one class in degree 2, nothing in degree 1
        let h = bar_module_c(1, 2, Z).unwrap().complex.homology().unwrap();
        assert_eq!(h.ranks().into_iter().collect::<Vec<_>>(), vec![(2, 1)]);
    }

    #[test]
    fn harrison_report() {
        let rep = harrison_acyclicity_check(4, Ring::PrimeField(2)).unwrap();
        assert!(rep.passed);
        assert_eq!(rep.rows.iter().filter(|r| r.found > 0).count(), 1);
    }

    #[test]
    fn trivial_algebra_small() {
        // n = 1: zero differential and one word per weight
        let rep = trivial_algebra_check(1, 5, Z).unwrap();
        assert!(rep.passed, "{:?}", rep.failures());
        for n in 2..=3 {
            let rep = trivial_algebra_check(n, 4, Ring::Rationals).unwrap();
            assert!(rep.passed, "n={n} {:?}", rep.failures());
        }
        let rep = trivial_multilinear_check(2, 3, Z).unwrap();
        assert!(rep.passed, "{:?}", rep.failures());
    }

    #[test]
    fn free_commutative_algebra_small() {
        for n in 1..=3 {
            let rep = free_commutative_algebra_check(n, 4, Ring::Rationals).unwrap();
            assert!(rep.passed, "n={n} {:?}", rep.failures());
        }
    }

    #[test]
    fn augmentation_small() {
        for ring in [Z, Ring::PrimeField(3)] {
            let rep = augmentation_check(1, 3, OperadChoice::En, ring).unwrap();
            assert!(rep.passed, "{:?} {:?}", rep.failures(), rep.violations);
            let rep = augmentation_check(2, 2, OperadChoice::En, ring).unwrap();
            assert!(rep.passed, "{:?}", rep.failures());
        }
    }

    #[test]
    fn stabilization_small() {
        let rep = stabilization_scan(1, (0, 2), 3, Z).unwrap();
        assert!(rep.passed, "{rep:?}");
        let rep = stabilization_scan(2, (0, 3), 4, Ring::Rationals).unwrap();
        assert!(rep.passed, "{rep:?}");
        // the class of B^1_C(2) sits in desuspended degree 1 and dies
        assert!(rep.rows.iter().any(|r| r.n == 1 && r.degree == 1 && r.rank == 1));
        assert!(rep.rows.iter().all(|r| r.map_rank.unwrap_or(0) == 0));
    }
}
