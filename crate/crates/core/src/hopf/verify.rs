use rayon::prelude::*;

use super::{Accumulator, HopfPresentation, SparseVec};
use crate::report::AxiomReport;

/// Runs `check` over 0..n in parallel and collects failure messages in index order.
fn collect_failures<F>(n: usize, check: F) -> Vec<String>
where
    F: Fn(usize) -> Vec<String> + Sync + Send,
{
    (0..n).into_par_iter().flat_map_iter(check).collect()
}

/// Checks every Hopf algebra axiom exhaustively over the basis.
pub fn verify_hopf(h: &HopfPresentation) -> AxiomReport {
    let d = h.dim();
    let mut report = AxiomReport::new();
    let lbl = |i: usize| h.label(i).to_string();
    let unit = h.unit();

    let fails = collect_failures(d, |i| {
        let mut out = Vec::new();
        for j in 0..d {
            let ij = h.mul_basis(i, j);
            for k in 0..d {
                let left = h.mul(ij, &h.basis(k));
                let right = h.mul(&h.basis(i), h.mul_basis(j, k));
                if left != right {
                    out.push(format!("triple ({i}, {j}, {k}) = ({}, {}, {})", lbl(i), lbl(j), lbl(k)));
                }
            }
        }
        out
    });
    report.record("associativity", d * d * d, fails);

    let fails = collect_failures(d, |i| {
        let b = h.basis(i);
        if h.mul(unit, &b) != b || h.mul(&b, unit) != b {
            vec![format!("basis element {i} ({})", lbl(i))]
        } else {
            vec![]
        }
    });
    report.record("unit", d, fails);

    let fails = collect_failures(d, |i| {
        let mut left = Accumulator::new();
        let mut right = Accumulator::new();
        for (p, q, c) in h.comult_terms(i) {
            for (pp, c2) in h.comult_basis(p).iter() {
                left.add_product(pp * d + q, c, c2);
            }
            for (qq, c2) in h.comult_basis(q).iter() {
                right.add_product(p * d * d + qq, c, c2);
            }
        }
        if left.finish() != right.finish() {
            vec![format!("basis element {i} ({})", lbl(i))]
        } else {
            vec![]
        }
    });
    report.record("coassociativity", d, fails);

    let fails = collect_failures(d, |i| {
        let mut left = Accumulator::new();
        let mut right = Accumulator::new();
        for (p, q, c) in h.comult_terms(i) {
            left.add_product(q, h.counit_basis(p), c);
            right.add_product(p, h.counit_basis(q), c);
        }
        let b = h.basis(i);
        if left.finish() != b || right.finish() != b {
            vec![format!("basis element {i} ({})", lbl(i))]
        } else {
            vec![]
        }
    });
    report.record("counit", d, fails);

    let mut fails = collect_failures(d, |i| {
        let mut out = Vec::new();
        for j in 0..d {
            let lhs = h.comult(h.mul_basis(i, j));
            let rhs = h.mul_tensor2(h.comult_basis(i), h.comult_basis(j));
            if lhs != rhs {
                out.push(format!("pair ({i}, {j}) = ({}, {})", lbl(i), lbl(j)));
            }
        }
        out
    });
    let unit2: SparseVec = unit
        .iter()
        .flat_map(|(i, a)| unit.iter().map(move |(j, b)| (i * d + j, a * b)))
        .collect();
    if h.comult(unit) != unit2 {
        fails.insert(0, "Δ(1) ≠ 1⊗1".to_string());
    }
    report.record("comultiplicativity", d * d + 1, fails);

    let mut fails = collect_failures(d, |i| {
        (0..d)
            .filter(|&j| h.counit(h.mul_basis(i, j)) != h.counit_basis(i) * h.counit_basis(j))
            .map(|j| format!("pair ({i}, {j}) = ({}, {})", lbl(i), lbl(j)))
            .collect()
    });
    if !h.counit(unit).is_one() {
        fails.insert(0, "ε(1) ≠ 1".to_string());
    }
    report.record("counit_multiplicativity", d * d + 1, fails);

    let fails = collect_failures(d, |i| {
        let mut left = Accumulator::new();
        let mut right = Accumulator::new();
        for (p, q, c) in h.comult_terms(i) {
            left.add_vec(&h.mul(h.antipode_basis(p), &h.basis(q)), Some(c));
            right.add_vec(&h.mul(&h.basis(p), h.antipode_basis(q)), Some(c));
        }
        let expected = unit.scale(h.counit_basis(i));
        if left.finish() != expected || right.finish() != expected {
            vec![format!("basis element {i} ({})", lbl(i))]
        } else {
            vec![]
        }
    });
    report.record("antipode", d, fails);

    let fails = collect_failures(d, |i| {
        let b = h.basis(i);
        if h.antipode(h.antipode_inv_basis(i)) != b || h.antipode_inv(h.antipode_basis(i)) != b {
            vec![format!("basis element {i} ({})", lbl(i))]
        } else {
            vec![]
        }
    });
    report.record("antipode_inverse", d, fails);

    report
}
