use std::sync::Arc;

use rayon::prelude::*;
use serde::Serialize;

use super::engine::{Evaluator, PreparedTangle};
use super::invariant::{cap_cup_counts, invariant_f, invariant_v, EvalError};
use super::map::{radix_len, reverse_index};
use crate::hopf::{build_qcqs, compute_integrals, HopfError, QcqsBundle};
use crate::report::{salt, AxiomReport, Coverage};
use crate::scalar::Scalar;
use crate::tangle::{RelationCatalogue, TangleExpr};

/// Evaluates both sides of every relation and compares them column by column.
pub fn verify_relations(b: &QcqsBundle, cat: &RelationCatalogue) -> AxiomReport {
    verify_relations_with(b, cat, Coverage::Exhaustive)
}

/// [`verify_relations`] with a choice of which source basis tensors are used.
pub fn verify_relations_with(b: &QcqsBundle, cat: &RelationCatalogue, coverage: Coverage) -> AxiomReport {
    let ev = Evaluator::new(b);
    let d = b.dim();
    let mut report = AxiomReport::new();
    for rel in cat.iter() {
        let sides: Vec<PreparedTangle> = rel.sides.iter().map(PreparedTangle::new).collect();
        let n = radix_len(d, rel.arity().0);
        let cost: f64 = sides.iter().map(|s| ev.column_cost(s)).sum();
        let (sources, scope) = coverage.select(n, cost, salt(rel.name));
        let fails: Vec<String> = sources
            .par_iter()
            .flat_map_iter(|&s| {
                let first = ev.column(&sides[0], s);
                let mut out = Vec::new();
                for (k, side) in sides.iter().enumerate().skip(1) {
                    if ev.column(side, s) != first {
                        out.push(format!("side {k} differs from side 0 on source index {s}"));
                    }
                }
                out
            })
            .collect();
        report.record_scoped(rel.name, sources.len() * (sides.len() - 1), fails, scope);
    }
    report
}

/// Outcome of the scaling check for λ ↦ cλ.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ScalingCheck {
    pub exponent_f: i64,
    pub exponent_v: i64,
    pub f_holds: bool,
    /// `None` when v is undefined for the algebra.
    pub v_holds: Option<bool>,
}

impl ScalingCheck {
    pub fn holds(&self) -> bool {
        self.f_holds && self.v_holds.unwrap_or(true)
    }
}

/// Checks F_{cλ}(H) = c^{#∩−#∪} F_λ(H) and v_{cλ}(H) = c^{#∩−#∪−1} v_λ(H).
pub fn check_scaling(b: &QcqsBundle, e: &TangleExpr, c: &Scalar) -> Result<ScalingCheck, EvalError> {
    if c.is_zero() {
        return Err(HopfError::ZeroScale.into());
    }
    let scaled = b.rescaled(c)?;
    let (caps, cups) = cap_cup_counts(e);
    let exponent_f = caps as i64 - cups as i64;
    let exponent_v = exponent_f - 1;
    let f0 = invariant_f(b, e)?.value;
    let f1 = invariant_f(&scaled, e)?.value;
    let f_holds = f1 == &c.pow(exponent_f) * &f0;
    let v_holds = if b.lambda_symmetry().assumption15 {
        let v0 = invariant_v(b, e)?.value;
        let v1 = invariant_v(&scaled, e)?.value;
        Some(v1 == &c.pow(exponent_v) * &v0)
    } else {
        None
    };
    Ok(ScalingCheck {
        exponent_f,
        exponent_v,
        f_holds,
        v_holds,
    })
}

/// The bundle of A^op, with integrals solved afresh.
pub fn opposite_bundle(b: &QcqsBundle) -> Result<QcqsBundle, HopfError> {
    let op = b.algebra().opposite();
    let ints = compute_integrals(&op)?;
    build_qcqs(Arc::new(op), ints)
}

/// τ_n ∘ F_A(e*) = F_{A^op}(e) ∘ τ_m, compared on every source multi-index.
pub fn check_mirror(b: &QcqsBundle, op: &QcqsBundle, e: &TangleExpr) -> bool {
    let d = b.dim();
    let (m, n) = e.arity();
    let lhs = PreparedTangle::new(&e.mirror());
    let rhs = PreparedTangle::new(e);
    let ev = Evaluator::new(b);
    let ev_op = Evaluator::new(op);
    (0..radix_len(d, m)).into_par_iter().all(|s| {
        let left = ev.column(&lhs, s).map_indices(|t| reverse_index(t, d, n));
        let right = ev_op.column(&rhs, reverse_index(s, d, m));
        left == right
    })
}
