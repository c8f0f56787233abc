//! Hopf algebras given by structure constants, their integrals, and the
//! derived qcqs bundle (pairing, copairing, adjoint action, braiding).

mod integrals;
mod io;
mod presentation;
mod qcqs;
mod sparse;
mod verify;

pub use integrals::{
    center, compute_integrals, dual_integrals, left_integrals, right_integrals, IntegralData, IntegralSide,
    LambdaNormalization,
};
pub use io::{read_hopf, write_hopf, HopfFileError};
pub use presentation::{HopfData, HopfPresentation};
pub use qcqs::{build_qcqs, check_lambda_symmetry, prepare, verify_yd, verify_yd_with, LambdaSymmetry, QcqsBundle};
pub use sparse::{Accumulator, SparseVec};
pub use verify::verify_hopf;

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum HopfError {
    #[error("malformed presentation: {0}")]
    Malformed(String),
    #[error("not a finite-dimensional Hopf algebra presentation ({0})")]
    NotFiniteHopf(String),
    #[error("degenerate pairing")]
    DegeneratePairing,
    #[error("algebra is not unimodular")]
    NotUnimodular,
    #[error("λ form degenerate")]
    LambdaFormDegenerate,
    #[error("integral inconsistency: {0}")]
    IntegralInconsistency(String),
    #[error("presentation unverified: failing axioms {0:?}")]
    Unverified(Vec<String>),
    #[error("scale factor must be nonzero")]
    ZeroScale,
}
