//! Concrete operads: commutative `C`, associative `A` and Barratt-Eccles
//! `E` with its augmentation `ε`, section `ι` and contracting homotopy `ν`,
//! together with the complete graph operad and the E_n filtration of `E`.
//!
//! The homotopy is `ν(w_0, ..., w_d) = (-1)^d (w_0, ..., w_d, σ)`, so that
//! `δν + νδ = ιε - id` for the face differential `Σ (-1)^i d_i`.

mod barratt_eccles;
mod kgraph;
mod operad;
mod simplex;

pub use barratt_eccles::{
    boundary, compose_simplices, enumerate_en_simplices, enumerate_simplices, inputs_of, nu,
    substitute,
};
pub use kgraph::{in_cell, CompleteGraphElement};
pub use operad::{
    associative_operad, augmentation_eps, barratt_eccles, comm_element, commutative_operad,
    enumerate_en, en_operad, homotopy_nu, section_iota, simplex_element, Operad, OperadKind,
};
pub use simplex::{
    encode_simplex, faces, filtration_level, is_degenerate, max_variations, pair_order,
    pair_variations, parse_simplex, Perm,
};

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum OperadError {
    #[error("cannot parse `{0}`")]
    Parse(String),
    #[error("input mismatch: {0}")]
    InputMismatch(String),
    #[error("blocks of a composite are not disjoint")]
    NonDisjoint,
    #[error("the ordering {0:?} does not order the inputs of the element")]
    OrderingMismatch(Vec<u32>),
    #[error("element of the wrong operad: {0}")]
    WrongOperad(String),
}
