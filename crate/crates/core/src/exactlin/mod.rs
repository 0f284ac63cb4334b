//! Exact scalars over Z, Q and F_p, sparse matrices, Smith normal form and
//! homology of finite chain complexes.
//!
//! Everything here is value-typed and re-entrant. Matrices store no zero
//! entries and every entry lives in the ring recorded on the matrix.

mod complex;
mod elimination;
mod ring;
mod scalar;
mod smith;
mod sparse;

pub use complex::{
    chain_homology, class_generates, uct_consistent, ChainComplex, HomologyGroup, HomologyRecord,
    HomologySummary,
};
pub use elimination::{induced_map_rank, kernel_basis, rank};
pub use ring::Ring;
pub use scalar::Scalar;
pub use smith::smith_normal_form;
pub use sparse::SparseMatrix;

use thiserror::Error;

/// Errors raised by the linear algebra layer.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LinError {
    #[error("{0} is not a prime")]
    NotPrime(u64),
    #[error("cannot parse ring specification `{0}` (expected z, q or fp:<prime>)")]
    BadRingSpec(String),
    #[error("operation requires {expected} but the matrix is over {found}")]
    WrongRing { expected: &'static str, found: Ring },
    #[error("ring mismatch: {0} versus {1}")]
    RingMismatch(Ring, Ring),
    #[error("dimension mismatch: {0}")]
    Dimension(String),
    #[error("composite of consecutive differentials is nonzero ({nonzero} nonzero entries)")]
    CompositionNonzero { nonzero: usize },
    #[error("internal certification failed: {0}")]
    Certification(String),
}
