//! Gorenstein projective representations of acyclic quivers, the
//! monomorphism categories `S_n`, and their Auslander-Reiten theory.

pub mod export;
pub mod io;
pub mod knit;
pub mod reps;
pub mod sn;
pub mod symbolic;

use thiserror::Error;

use crate::gp::GpError;
use crate::oracle::OracleError;
use crate::qalg::QalgError;

pub use knit::{
    divisibility_report, knit_stable_component, stable_components, DivisibilityReport,
    StableComponent,
};
pub use reps::{lift, psi, stable_isomorphic, verify_gp_rep, GpRep, GpRepReport, StableRep};
pub use sn::{
    almost_split_sn, sn_indecomposables, verify_sequence, AlmostSplitSequence, Family, SnObject,
};
pub use symbolic::{Entry, SymbolicModule, SymbolicMorphism};

#[derive(Debug, Error)]
pub enum RepError {
    #[error("invalid representation: {0}")]
    Invalid(String),
    #[error("pattern violation: {0}")]
    PatternViolation(String),
    #[error("quiver has an oriented cycle")]
    CyclicQuiver,
    #[error("no almost split sequence formula covers {0}")]
    NotCovered(String),
    #[error("oracle inconclusive: {0}")]
    OracleInconclusive(String),
    #[error(transparent)]
    Oracle(#[from] OracleError),
    #[error(transparent)]
    Qalg(#[from] QalgError),
    #[error(transparent)]
    Gp(#[from] GpError),
    #[error("format error: {0}")]
    Format(String),
    #[error("format `{0}` is not supported here")]
    UnsupportedFormat(String),
}
