//! Exact, desk-scale constructions around iterated bar complexes of
//! E_n-operads.
//!
//! The crate is organised bottom-up:
//!
//! * [`exactlin`]: exact scalars, sparse matrices, Smith normal form and
//!   homology of finite complexes.
//! * [`symseq`]: symmetric sequences (Σ_*-modules) with tensor and
//!   composition products and suspensions.
//! * [`operads`]: the commutative, associative and Barratt-Eccles operads,
//!   complete graphs, cells and the E_n filtration.
//! * [`barcx`]: level words, the iterated tensor coalgebra T^n, its
//!   generators, shuffles, deconcatenation and the commutative bar
//!   differential.
//! * [`lifting`]: quasi-free right modules, the lifted twisting
//!   homomorphism over the Barratt-Eccles operad, cup products and the
//!   restriction to E_n.
//! * [`evalhom`]: assembled complexes, evaluation on small algebras and
//!   homology reports.

pub mod barcx;
pub mod evalhom;
pub mod exactlin;
pub mod lincomb;
pub mod lifting;
pub mod operads;
pub mod symseq;
