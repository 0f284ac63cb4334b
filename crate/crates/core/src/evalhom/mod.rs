//! Evaluation of the bar modules on small algebras, the finite complexes
//! `B^n_R(r)` and `E_n(r)`, homology checks against counting oracles, and
//! deterministic reports.

mod checks;
mod complexes;
mod oracles;
mod report;

pub use checks::{
    augmentation, augmentation_check, free_commutative_algebra_check, free_commutative_check,
    harrison_acyclicity_check, stabilization_scan, trivial_algebra_check, trivial_multilinear_check,
    CheckReport, CheckRow, StabilizationReport, StabilizationRow,
};
pub use complexes::{
    bar_module_c, bar_module_complex, bar_module_e, bar_module_size, evaluate_module,
    trivial_multilinear, AlgebraDatum, BasedComplex, EvalSource, OperadChoice,
};
pub use oracles::{
    free_commutative_dims, gerstenhaber_dims, odd_lie_dims, shuffle_multilinear_dims,
    trivial_algebra_dims,
};
pub use report::{rows, Report, TableRow};

use rayon::prelude::*;
use thiserror::Error;

use crate::barcx::BarError;
use crate::exactlin::{HomologySummary, LinError, Ring};
use crate::lifting::LiftError;
use crate::operads::enumerate_en;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum EvalError {
    #[error(transparent)]
    Lin(#[from] LinError),
    #[error(transparent)]
    Bar(#[from] BarError),
    #[error(transparent)]
    Lift(LiftError),
}

/// Homology of `E_n(r)`.
pub fn en_homology(n: u32, r: usize, ring: Ring) -> Result<HomologySummary, EvalError> {
    Ok(enumerate_en(n, r, ring)?.homology()?)
}

/// Homology of the arity components of a bar module.
pub fn bar_module_report(n: u8, arities: &[usize], choice: OperadChoice, ring: Ring) -> Result<Report, EvalError> {
    let tables = arities
        .par_iter()
        .map(|&r| Ok(rows(&bar_module_complex(n, r, choice, ring)?.homology()?, Some(r), None)))
        .collect::<Result<Vec<_>, EvalError>>()?;
    let mut bounds = vec![("n", n as i64), ("arity_max", arities.iter().copied().max().unwrap_or(0) as i64)];
    if let OperadChoice::BarrattEccles { degree_max } = choice {
        bounds.push(("degree_max", degree_max));
    }
    let operad = match choice {
        OperadChoice::En => format!("E_{n}"),
        other => other.name(),
    };
    Ok(Report::new(
        format!("bar-module B^{n}_{operad}"),
        ring,
        &bounds,
        tables.into_iter().flatten().collect(),
    ))
}

/// Homology of `E_n(r)` for the given arities.
pub fn en_report(n: u32, arities: &[usize], ring: Ring) -> Result<Report, EvalError> {
    let tables = arities
        .par_iter()
        .map(|&r| Ok(rows(&en_homology(n, r, ring)?, Some(r), None)))
        .collect::<Result<Vec<_>, EvalError>>()?;
    Ok(Report::new(
        format!("en-operad E_{n}"),
        ring,
        &[("n", n as i64), ("arity_max", arities.iter().copied().max().unwrap_or(0) as i64)],
        tables.into_iter().flatten().collect(),
    ))
}

/// Homology of `B^n(A)` by weight.
pub fn bar_eval_report(n: u8, a: AlgebraDatum, weight_max: usize, ring: Ring) -> Result<Report, EvalError> {
    let tables = (1..=weight_max)
        .into_par_iter()
        .map(|w| {
            let h = evaluate_module(n, a, w, EvalSource::Commutative, ring)?.complex.homology()?;
            Ok(rows(&h, None, Some(w)))
        })
        .collect::<Result<Vec<_>, EvalError>>()?;
    Ok(Report::new(
        format!("bar-eval B^{n}({})", a.name()),
        ring,
        &[("n", n as i64), ("weight_max", weight_max as i64)],
        tables.into_iter().flatten().collect(),
    ))
}

/// Homology of the Harrison complex of `C` by arity.
pub fn harrison_report(arities: &[usize], ring: Ring) -> Result<Report, EvalError> {
    let tables = arities
        .par_iter()
        .map(|&r| {
            let h = crate::barcx::harrison_complex(crate::barcx::HarrisonInput::Commutative, r, ring)?.homology()?;
            Ok(rows(&h, Some(r), None))
        })
        .collect::<Result<Vec<_>, EvalError>>()?;
    Ok(Report::new(
        "harrison C",
        ring,
        &[("arity_max", arities.iter().copied().max().unwrap_or(0) as i64)],
        tables.into_iter().flatten().collect(),
    ))
}
