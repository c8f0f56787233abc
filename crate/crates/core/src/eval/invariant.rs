use serde::Serialize;

use super::engine::{Evaluator, PreparedTangle};
use crate::hopf::{HopfError, QcqsBundle};
use crate::scalar::Scalar;
use crate::tangle::{horn, horn_positions, Gen, HornError, TangleExpr};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum EvalError {
    #[error("expected a closed tangle, got arity {0}→{1}")]
    NotClosed(usize, usize),
    #[error("expected a tangle of arity 0→0 or 0→1, got {0}→{1}")]
    NotHornable(usize, usize),
    #[error("assumption λ(z)=λ(S(z)) fails for central z")]
    AssumptionFails,
    #[error("functoriality violated: F(H^∧)(1) is not a multiple of the unit")]
    FunctorialityViolated,
    #[error("{0}")]
    Horn(#[from] HornError),
    #[error("{0}")]
    Hopf(#[from] HopfError),
}

/// Value of F_A or v_A on a tangle, with the bookkeeping needed to interpret it.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct InvariantResult {
    pub value: Scalar,
    pub algebra_id: String,
    pub tangle_id: String,
    /// Caps and cups after expanding every Nu into (Mu ⊗ Id)(Id ⊗ Cup).
    pub cap_count: usize,
    pub cup_count: usize,
    pub cosemisimple: bool,
    pub assumption15: bool,
    pub horned_position: Option<usize>,
}

impl InvariantResult {
    pub fn with_tangle_id(mut self, id: impl Into<String>) -> Self {
        self.tangle_id = id.into();
        self
    }
}

/// (#caps, #cups) with Nu counted through its expansion.
pub fn cap_cup_counts(e: &TangleExpr) -> (usize, usize) {
    (e.count(Gen::Cap), e.count(Gen::Cup) + e.count(Gen::Nu))
}

fn result(b: &QcqsBundle, e: &TangleExpr, value: Scalar, assumption15: bool, horned: Option<usize>) -> InvariantResult {
    let (cap_count, cup_count) = cap_cup_counts(e);
    InvariantResult {
        value,
        algebra_id: b.algebra().name().to_string(),
        tangle_id: e.to_string(),
        cap_count,
        cup_count,
        cosemisimple: b.integrals().cosemisimple,
        assumption15,
        horned_position: horned,
    }
}

/// F_A(H) for a closed tangle H.
pub fn invariant_f(b: &QcqsBundle, e: &TangleExpr) -> Result<InvariantResult, EvalError> {
    let (s, t) = e.arity();
    if (s, t) != (0, 0) {
        return Err(EvalError::NotClosed(s, t));
    }
    let ev = Evaluator::new(b);
    let col = ev.column(&PreparedTangle::new(e), 0);
    let value = col.get(0).cloned().unwrap_or_else(|| b.algebra().zero());
    let a15 = b.lambda_symmetry().assumption15;
    Ok(result(b, e, value, a15, None))
}

/// v_A(H) = ε(F_A(H^∧)(1)); closed tangles are horned at cap `position`.
pub fn invariant_v_at(b: &QcqsBundle, e: &TangleExpr, position: usize) -> Result<InvariantResult, EvalError> {
    if !b.lambda_symmetry().assumption15 {
        return Err(EvalError::AssumptionFails);
    }
    let (horned, pos) = match e.arity() {
        (0, 0) => (horn(e, position)?, Some(position)),
        (0, 1) => (e.clone(), None),
        (s, t) => return Err(EvalError::NotHornable(s, t)),
    };
    let h = b.algebra();
    let w = Evaluator::new(b).column(&PreparedTangle::new(&horned), 0);
    let c = if w.is_zero() {
        h.zero()
    } else {
        w.ratio_to(h.unit()).ok_or(EvalError::FunctorialityViolated)?
    };
    let value = &c * &h.counit(h.unit());
    Ok(result(b, e, value, true, pos))
}

pub fn invariant_v(b: &QcqsBundle, e: &TangleExpr) -> Result<InvariantResult, EvalError> {
    invariant_v_at(b, e, 0)
}

/// v_A at every cap of a closed tangle that can be horned.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct HornSweep {
    pub values: Vec<(usize, Scalar)>,
    /// Cap positions enclosed by other parts of the diagram.
    pub skipped: Vec<usize>,
}

impl HornSweep {
    pub fn independent(&self) -> bool {
        self.values.windows(2).all(|w| w[0].1 == w[1].1)
    }
}

pub fn horn_sweep(b: &QcqsBundle, e: &TangleExpr) -> Result<HornSweep, EvalError> {
    let (s, t) = e.arity();
    if (s, t) != (0, 0) {
        return Err(EvalError::NotClosed(s, t));
    }
    let mut values = Vec::new();
    let mut skipped = Vec::new();
    for (pos, ok) in horn_positions(e) {
        if ok {
            values.push((pos, invariant_v_at(b, e, pos)?.value));
        } else {
            skipped.push(pos);
        }
    }
    Ok(HornSweep { values, skipped })
}

/// True iff v_A takes the same value at every hornable cap.
pub fn check_horn_independence(b: &QcqsBundle, e: &TangleExpr) -> Result<bool, EvalError> {
    Ok(horn_sweep(b, e)?.independent())
}
