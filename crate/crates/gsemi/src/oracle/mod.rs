//! Independent verification over F_p.
//!
//! Nothing here consults the relation quiver: modules are realized from
//! paths, and covers, syzygies, Hom and Ext are computed by linear algebra.

pub mod certify;
pub mod matrix;
pub mod module;
pub mod realize;
pub mod rep;

use thiserror::Error;

pub use certify::{GpCertifier, GpVerdict};
pub use matrix::{is_prime, Matrix};
pub use module::{
    cokernel, direct_sum, ext_dims, ext_vanishing, hom_basis, hom_dim, is_isomorphic,
    module_isomorphism, projective_cover_and_syzygy, realize_ideal, realize_indec,
    realize_projective, realize_regular, verify_exact_sequence, MatrixModule,
};
pub use rep::{GradedMap, IsoOutcome, LinRep};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum OracleError {
    #[error("module is zero")]
    ZeroModule,
    #[error("inconclusive: {0}")]
    Inconclusive(String),
    #[error("shape mismatch: {0}")]
    ShapeMismatch(String),
    #[error("map does not commute with the action of `{0}`")]
    NotEquivariant(String),
    #[error("block entry does not fit its summands: {0}")]
    EntryMismatch(String),
}
