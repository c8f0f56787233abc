//! The example Hopf algebras: group algebras, quantum doubles of groups,
//! the Kac-Paljutkin type algebras B₄ₘ and the small quantum group Ū_q(sl₂).

mod b4m;
mod expected;
mod group;
mod group_algebra;
mod uq;

pub use b4m::{b4m_index, b4m_label, kac_b4m, B4mElements};
pub use expected::{AltBasis, ExpectedData};
pub use group::{builtin_group, GroupTable};
pub use group_algebra::{group_algebra, quantum_double};
pub use uq::{uq_op_isomorphism, uq_sl2, uq_sl2_conj, uq_sl2_root, UqAlgebra, UqParams};

use thiserror::Error;

use crate::hopf::{HopfData, HopfError, HopfPresentation, SparseVec};
use crate::scalar::{DenseMatrix, Scalar};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ZooError {
    #[error("not a group: {0}")]
    NotAGroup(String),
    #[error("m out of range (need m > 2, got {0})")]
    MOutOfRange(usize),
    #[error("q must differ from ±1 (need n ≥ 3, got {0})")]
    QOutOfRange(u32),
    #[error("{0}")]
    Parse(String),
    #[error(transparent)]
    Hopf(#[from] HopfError),
}

/// Presentation with only the algebra structure filled in, used while
/// building coproducts and antipodes multiplicatively.
pub(crate) fn algebra_only(name: &str, labels: &[String], conductor: u32, mult: Vec<SparseVec>, unit: SparseVec) -> HopfPresentation {
    let d = labels.len();
    HopfPresentation::new(HopfData {
        name: name.to_string(),
        labels: labels.to_vec(),
        conductor,
        mult,
        unit,
        comult: vec![Vec::new(); d],
        counit: vec![Scalar::zero(conductor); d],
        antipode: DenseMatrix::identity(d, conductor),
        antipode_inv: DenseMatrix::identity(d, conductor),
    })
    .expect("well-formed algebra data")
}

/// Fills in coalgebra and antipode data; S⁻¹ is obtained by inverting S.
pub(crate) fn finish(
    alg: HopfPresentation,
    comult: Vec<SparseVec>,
    counit: Vec<Scalar>,
    antipode_cols: Vec<SparseVec>,
) -> Result<HopfPresentation, ZooError> {
    let d = alg.dim();
    let n = alg.conductor();
    let mut s = DenseMatrix::zeros(d, d, n);
    for (j, col) in antipode_cols.iter().enumerate() {
        for (i, c) in col.iter() {
            s[(*i, j)] = c.clone();
        }
    }
    let s_inv = s.inverse().map_err(|_| HopfError::Malformed("antipode is not invertible".into()))?;
    let mut data = alg.to_data();
    data.comult = comult
        .iter()
        .map(|v| v.iter().map(|(p, c)| (p / d, p % d, c.clone())).collect())
        .collect();
    data.counit = counit;
    data.antipode = s;
    data.antipode_inv = s_inv;
    Ok(HopfPresentation::new(data)?)
}

/// u ⊗ v over pair indices.
pub(crate) fn tensor2(u: &SparseVec, v: &SparseVec, d: usize) -> SparseVec {
    SparseVec::from_pairs(u.iter().flat_map(|(i, a)| v.iter().map(move |(j, b)| (i * d + j, a * b))))
}
