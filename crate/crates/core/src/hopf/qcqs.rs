use std::sync::{Arc, OnceLock};

use rayon::prelude::*;
use serde::Serialize;

use super::{center, Accumulator, HopfError, HopfPresentation, IntegralData, SparseVec};
use crate::report::{salt, AxiomReport, Coverage};
use crate::scalar::{DenseMatrix, Scalar};

/// A unimodular Hopf algebra viewed as a quantum-commutative
/// quantum-symmetric algebra in Yetter-Drinfeld modules over itself.
///
/// Elements of A ⊗ A are sparse vectors over pair indices i·d + j.
#[derive(Debug, Clone)]
pub struct QcqsBundle {
    algebra: Arc<HopfPresentation>,
    integrals: IntegralData,
    ev: Vec<Scalar>,
    coev: SparseVec,
    action: Vec<SparseVec>,
    braid: Vec<SparseVec>,
    braid_inv: Vec<SparseVec>,
    symmetry: OnceLock<LambdaSymmetry>,
}

fn tensor(u: &SparseVec, v: &SparseVec, d: usize) -> SparseVec {
    let mut acc = Accumulator::new();
    for (i, a) in u.iter() {
        for (j, b) in v.iter() {
            acc.add_product(i * d + j, a, b);
        }
    }
    acc.finish()
}

fn ev_table(h: &HopfPresentation, lambda: &[Scalar]) -> Vec<Scalar> {
    let d = h.dim();
    (0..d * d)
        .into_par_iter()
        .map(|ij| {
            let mut s = h.zero();
            for (k, c) in h.mul_basis(ij / d, ij % d).iter() {
                s.add_mul(c, &lambda[*k]);
            }
            s
        })
        .collect()
}

/// Runs the Hopf axiom check, solves for integrals and builds the bundle.
pub fn prepare(h: HopfPresentation) -> Result<QcqsBundle, HopfError> {
    let report = super::verify_hopf(&h);
    if !report.all_passed() {
        return Err(HopfError::Unverified(report.failed_names().iter().map(|s| s.to_string()).collect()));
    }
    let ints = super::compute_integrals(&h)?;
    build_qcqs(Arc::new(h), ints)
}

/// Assembles ev, coev, the adjoint action and the braiding; the copairing is
/// computed three ways and the results must agree.
pub fn build_qcqs(h: Arc<HopfPresentation>, ints: IntegralData) -> Result<QcqsBundle, HopfError> {
    if !ints.unimodular {
        return Err(HopfError::NotUnimodular);
    }
    let d = h.dim();
    let n = h.conductor();
    let ev = ev_table(&h, &ints.lambda);

    let delta_big = h.comult(&ints.big_lambda);
    let mut u1 = Accumulator::new();
    let mut u2 = Accumulator::new();
    for (pr, c) in delta_big.iter() {
        let (p, r) = (pr / d, pr % d);
        for (s, c2) in h.antipode_basis(p).iter() {
            u1.add_product(s * d + r, c, c2);
        }
        for (s, c2) in h.antipode_inv_basis(p).iter() {
            u2.add_product(r * d + s, c, c2);
        }
    }
    let (u1, u2) = (u1.finish(), u2.finish());

    let gram = DenseMatrix::from_rows((0..d).map(|i| ev[i * d..(i + 1) * d].to_vec()).collect(), n);
    let x = gram.inverse().map_err(|_| HopfError::LambdaFormDegenerate)?;
    let mut u3 = Accumulator::new();
    for k in 0..d {
        for i in 0..d {
            u3.add(k * d + i, &x[(k, i)]);
        }
    }
    let u3 = u3.finish();
    if u1 != u3 {
        return Err(HopfError::IntegralInconsistency(
            "S(Λ(1))⊗Λ(2) differs from the dual-basis copairing".into(),
        ));
    }
    if u2 != u3 {
        return Err(HopfError::IntegralInconsistency(
            "Λ(2)⊗S⁻¹(Λ(1)) differs from the dual-basis copairing".into(),
        ));
    }

    let action: Vec<SparseVec> = (0..d * d)
        .into_par_iter()
        .map(|ij| {
            let (i, j) = (ij / d, ij % d);
            let mut acc = Accumulator::new();
            for (p, q, c) in h.comult_terms(i) {
                let left = h.mul_basis(p, j);
                acc.add_vec(&h.mul(left, h.antipode_basis(q)), Some(c));
            }
            acc.finish()
        })
        .collect();

    let braid: Vec<SparseVec> = (0..d * d)
        .into_par_iter()
        .map(|ij| {
            let (i, j) = (ij / d, ij % d);
            let mut acc = Accumulator::new();
            for (p, r, c) in h.comult_terms(i) {
                for (s, c2) in action[p * d + j].iter() {
                    acc.add_product(s * d + r, c, c2);
                }
            }
            acc.finish()
        })
        .collect();

    // braid_inv(b_j ⊗ b_i) = Σ b_r ⊗ S⁻¹(b_p) ▷ b_j over Δ(b_i) = Σ b_p ⊗ b_r
    let braid_inv: Vec<SparseVec> = (0..d * d)
        .into_par_iter()
        .map(|ji| {
            let (j, i) = (ji / d, ji % d);
            let mut acc = Accumulator::new();
            for (p, r, c) in h.comult_terms(i) {
                for (t, c2) in h.antipode_inv_basis(p).iter() {
                    let ct = c * c2;
                    for (s, c3) in action[t * d + j].iter() {
                        acc.add_product(r * d + s, &ct, c3);
                    }
                }
            }
            acc.finish()
        })
        .collect();

    Ok(QcqsBundle {
        algebra: h,
        integrals: ints,
        ev,
        coev: u3,
        action,
        braid,
        braid_inv,
        symmetry: OnceLock::new(),
    })
}

impl QcqsBundle {
    pub fn algebra(&self) -> &HopfPresentation {
        &self.algebra
    }

    pub fn algebra_arc(&self) -> Arc<HopfPresentation> {
        Arc::clone(&self.algebra)
    }

    pub fn dim(&self) -> usize {
        self.algebra.dim()
    }

    pub fn conductor(&self) -> u32 {
        self.algebra.conductor()
    }

    pub fn integrals(&self) -> &IntegralData {
        &self.integrals
    }

    pub fn lambda(&self) -> &[Scalar] {
        &self.integrals.lambda
    }

    pub fn big_lambda(&self) -> &SparseVec {
        &self.integrals.big_lambda
    }

    /// λ(b_i b_j).
    #[inline]
    pub fn ev(&self, i: usize, j: usize) -> &Scalar {
        &self.ev[i * self.dim() + j]
    }

    /// U_λ over pair indices.
    pub fn coev(&self) -> &SparseVec {
        &self.coev
    }

    /// b_i ▷ b_j.
    #[inline]
    pub fn action_basis(&self, i: usize, j: usize) -> &SparseVec {
        &self.action[i * self.dim() + j]
    }

    /// c(b_i ⊗ b_j) over pair indices.
    #[inline]
    pub fn braid_basis(&self, i: usize, j: usize) -> &SparseVec {
        &self.braid[i * self.dim() + j]
    }

    /// c⁻¹(b_i ⊗ b_j) over pair indices.
    #[inline]
    pub fn braid_inv_basis(&self, i: usize, j: usize) -> &SparseVec {
        &self.braid_inv[i * self.dim() + j]
    }

    /// x ▷ y for arbitrary elements.
    pub fn act(&self, x: &SparseVec, y: &SparseVec) -> SparseVec {
        let mut acc = Accumulator::new();
        for (i, a) in x.iter() {
            for (j, b) in y.iter() {
                let ab = a * b;
                acc.add_vec(self.action_basis(*i, *j), Some(&ab));
            }
        }
        acc.finish()
    }

    /// Apply a map given on basis pairs to an element of A ⊗ A.
    fn apply2(&self, table: &[SparseVec], u: &SparseVec) -> SparseVec {
        let mut acc = Accumulator::new();
        for (ij, c) in u.iter() {
            acc.add_vec(&table[*ij], Some(c));
        }
        acc.finish()
    }

    pub fn braid(&self, u: &SparseVec) -> SparseVec {
        self.apply2(&self.braid, u)
    }

    pub fn braid_inverse(&self, u: &SparseVec) -> SparseVec {
        self.apply2(&self.braid_inv, u)
    }

    pub fn ev_pair(&self, u: &SparseVec) -> Scalar {
        let mut s = self.algebra.zero();
        for (ij, c) in u.iter() {
            s.add_mul(c, &self.ev[*ij]);
        }
        s
    }

    /// Same bundle with λ ↦ cλ, Λ ↦ c⁻¹Λ (so ev ↦ c·ev, coev ↦ c⁻¹·coev).
    pub fn rescaled(&self, c: &Scalar) -> Result<QcqsBundle, HopfError> {
        let ints = self.integrals.rescaled(c)?;
        let inv = c.inverse().map_err(|_| HopfError::ZeroScale)?;
        Ok(QcqsBundle {
            algebra: Arc::clone(&self.algebra),
            integrals: ints,
            ev: self.ev.iter().map(|x| x * c).collect(),
            coev: self.coev.scale(&inv),
            action: self.action.clone(),
            braid: self.braid.clone(),
            braid_inv: self.braid_inv.clone(),
            symmetry: self.symmetry.clone(),
        })
    }

    /// Replaces the pairing by `functional ∘ m`, leaving everything else as is.
    /// Only useful for fault injection.
    pub fn with_pairing_functional(&self, functional: Vec<Scalar>) -> QcqsBundle {
        let mut out = self.clone();
        out.ev = ev_table(&self.algebra, &functional);
        out.integrals.lambda = functional;
        out.symmetry = OnceLock::new();
        out
    }

    /// Replaces the braiding and its inverse, given on basis pairs.
    /// Only useful for fault injection.
    pub fn with_braiding(&self, braid: Vec<SparseVec>, braid_inv: Vec<SparseVec>) -> QcqsBundle {
        let d = self.dim();
        assert!(braid.len() == d * d && braid_inv.len() == d * d);
        let mut out = self.clone();
        out.braid = braid;
        out.braid_inv = braid_inv;
        out
    }

    /// Cached result of [`check_lambda_symmetry`].
    pub fn lambda_symmetry(&self) -> &LambdaSymmetry {
        self.symmetry.get_or_init(|| check_lambda_symmetry(self))
    }
}

fn mean_len(vs: &[SparseVec]) -> f64 {
    vs.iter().map(SparseVec::len).sum::<usize>() as f64 / vs.len().max(1) as f64
}

/// Runs `check` on the selected members of `0..n` and records the failures.
fn run_check<F>(report: &mut AxiomReport, name: &str, n: usize, cost: f64, coverage: Coverage, check: F)
where
    F: Fn(usize) -> Option<String> + Sync + Send,
{
    let (items, scope) = coverage.select(n, cost, salt(name));
    let fails: Vec<String> = items.par_iter().filter_map(|&k| check(k)).collect();
    report.record_scoped(name, items.len(), fails, scope);
}

/// Checks that (A, ▷, Δ) is a Yetter-Drinfeld module, that m, ev, coev are
/// morphisms there, and the qcqs identities, over every basis tuple.
pub fn verify_yd(b: &QcqsBundle) -> AxiomReport {
    verify_yd_with(b, Coverage::Exhaustive)
}

/// [`verify_yd`] with a choice of which basis tuples are visited.
pub fn verify_yd_with(b: &QcqsBundle, coverage: Coverage) -> AxiomReport {
    let h = b.algebra();
    let d = h.dim();
    let lbl = |i: usize| h.label(i).to_string();
    let pair_msg = |ij: usize| {
        let (i, j) = (ij / d, ij % d);
        format!("pair ({i}, {j}) = ({}, {})", lbl(i), lbl(j))
    };
    let triple_msg = |ijk: usize| {
        let (i, j, k) = (ijk / (d * d), (ijk / d) % d, ijk % d);
        format!("triple ({i}, {j}, {k}) = ({}, {}, {})", lbl(i), lbl(j), lbl(k))
    };
    let basis_msg = |i: usize| format!("basis element {i} ({})", lbl(i));
    let mut report = AxiomReport::new();

    let comults: Vec<SparseVec> = (0..d).map(|i| h.comult_basis(i).clone()).collect();
    let cm = mean_len(&comults);
    let mm = mean_len(&(0..d * d).map(|ij| h.mul_basis(ij / d, ij % d).clone()).collect::<Vec<_>>());
    let am = mean_len(&b.action);
    let sm = mean_len(&(0..d).map(|i| h.antipode_basis(i).clone()).collect::<Vec<_>>());
    let delta2: Vec<SparseVec> = (0..d).into_par_iter().map(|i| h.comult2_basis(i)).collect();
    let c2 = mean_len(&delta2);

    run_check(&mut report, "yd_compatibility", d * d, c2 * cm * (mm * mm * sm + am), coverage, |ij| {
        let (i, j) = (ij / d, ij % d);
        let lhs = h.comult(b.action_basis(i, j));
        let mut acc = Accumulator::new();
        for (pqr, c) in delta2[i].iter() {
            let (p, q, r) = (pqr / (d * d), (pqr / d) % d, pqr % d);
            for (s, t, c2) in h.comult_terms(j) {
                let left = h.mul(h.mul_basis(p, s), h.antipode_basis(r));
                let right = b.action_basis(q, t);
                let cc = c * c2;
                for (x, a) in left.iter() {
                    let ca = &cc * a;
                    for (y, e) in right.iter() {
                        acc.add_product(x * d + y, &ca, e);
                    }
                }
            }
        }
        (acc.finish() != lhs).then(|| pair_msg(ij))
    });

    run_check(&mut report, "quantum_commutativity", d * d, cm * am * mm, coverage, |ij| {
        let (i, j) = (ij / d, ij % d);
        let mut acc = Accumulator::new();
        for (p, q, c) in h.comult_terms(i) {
            acc.add_vec(&h.mul(b.action_basis(p, j), &h.basis(q)), Some(c));
        }
        (&acc.finish() != h.mul_basis(i, j)).then(|| pair_msg(ij))
    });

    run_check(&mut report, "m_linear", d * d * d, cm * am * am * mm, coverage, |ijk| {
        let (i, j, k) = (ijk / (d * d), (ijk / d) % d, ijk % d);
        let lhs = b.act(&h.basis(i), h.mul_basis(j, k));
        let mut acc = Accumulator::new();
        for (p, q, c) in h.comult_terms(i) {
            acc.add_vec(&h.mul(b.action_basis(p, j), b.action_basis(q, k)), Some(c));
        }
        (acc.finish() != lhs).then(|| triple_msg(ijk))
    });

    run_check(&mut report, "m_colinear", d * d, cm * cm * mm * mm, coverage, |ij| {
        let (i, j) = (ij / d, ij % d);
        (h.comult(h.mul_basis(i, j)) != h.mul_tensor2(h.comult_basis(i), h.comult_basis(j))).then(|| pair_msg(ij))
    });

    run_check(&mut report, "ev_linear", d * d * d, cm * am * am, coverage, |ijk| {
        let (i, j, k) = (ijk / (d * d), (ijk / d) % d, ijk % d);
        let mut s = h.zero();
        for (p, q, c) in h.comult_terms(i) {
            let t = tensor(b.action_basis(p, j), b.action_basis(q, k), d);
            s.add_mul(c, &b.ev_pair(&t));
        }
        (s != h.counit_basis(i) * b.ev(j, k)).then(|| triple_msg(ijk))
    });

    run_check(&mut report, "ev_colinear", d * d, cm * cm * mm, coverage, |ij| {
        let (i, j) = (ij / d, ij % d);
        let mut acc = Accumulator::new();
        for (p, q, c) in h.comult_terms(i) {
            for (s, t, c2) in h.comult_terms(j) {
                let e = b.ev(q, t);
                if e.is_zero() {
                    continue;
                }
                let k = &(c * c2) * e;
                acc.add_vec(h.mul_basis(p, s), Some(&k));
            }
        }
        (acc.finish() != h.unit().scale(b.ev(i, j))).then(|| pair_msg(ij))
    });

    let coev = b.coev();
    run_check(&mut report, "coev_linear", d, cm * coev.len() as f64 * am * am, coverage, |i| {
        let mut acc = Accumulator::new();
        for (p, q, c) in h.comult_terms(i) {
            for (ki, u) in coev.iter() {
                let t = tensor(b.action_basis(p, ki / d), b.action_basis(q, ki % d), d);
                let cu = c * u;
                acc.add_vec(&t, Some(&cu));
            }
        }
        (acc.finish() != coev.scale(h.counit_basis(i))).then(|| basis_msg(i))
    });

    run_check(&mut report, "coev_colinear", 1, coev.len() as f64 * cm * cm * mm, coverage, |_| {
        let mut acc = Accumulator::new();
        for (ki, u) in coev.iter() {
            for (p, q, c) in h.comult_terms(ki / d) {
                for (s, t, c2) in h.comult_terms(ki % d) {
                    let k = &(u * c) * c2;
                    for (x, c3) in h.mul_basis(p, s).iter() {
                        acc.add_product((x * d + q) * d + t, &k, c3);
                    }
                }
            }
        }
        let mut expected = Accumulator::new();
        for (x, a) in h.unit().iter() {
            for (qt, u) in coev.iter() {
                expected.add_product(x * d * d + qt, a, u);
            }
        }
        (acc.finish() != expected.finish()).then(|| "ρ(U_λ) ≠ 1 ⊗ U_λ".to_string())
    });

    run_check(&mut report, "quantum_symmetry", d * d, mean_len(&b.braid), coverage, |ij| {
        (b.ev_pair(&b.braid[ij]) != b.ev[ij]).then(|| pair_msg(ij))
    });

    let bm = mean_len(&b.braid);
    run_check(&mut report, "braid_invertible", d * d, 2.0 * bm * bm, coverage, |ij| {
        let e = SparseVec::basis(ij, h.conductor());
        (b.braid(&b.braid_inv[ij]) != e || b.braid_inverse(&b.braid[ij]) != e).then(|| pair_msg(ij))
    });

    run_check(&mut report, "selfduality", d, coev.len() as f64, coverage, |a| {
        // (ev ⊗ id)(b_a ⊗ U) and (id ⊗ ev)(U ⊗ b_a)
        let mut left = Accumulator::new();
        let mut right = Accumulator::new();
        for (ki, u) in coev.iter() {
            let (k, i) = (ki / d, ki % d);
            left.add_product(i, b.ev(a, k), u);
            right.add_product(k, u, b.ev(i, a));
        }
        let e = h.basis(a);
        (left.finish() != e || right.finish() != e).then(|| basis_msg(a))
    });

    let lambda = b.lambda();
    let lam = |v: &SparseVec| {
        let mut s = h.zero();
        for (k, c) in v.iter() {
            s.add_mul(c, &lambda[*k]);
        }
        s
    };
    run_check(&mut report, "frobenius", d * d * d, 2.0 * mm * mm, coverage, |ijk| {
        let (i, j, k) = (ijk / (d * d), (ijk / d) % d, ijk % d);
        let l = lam(&h.mul(h.mul_basis(i, j), &h.basis(k)));
        let r = lam(&h.mul(&h.basis(i), h.mul_basis(j, k)));
        (l != r).then(|| triple_msg(ijk))
    });

    report
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct LambdaSymmetry {
    /// λ(z) = λ(S z) on the center.
    pub assumption15: bool,
    /// λ(ab) = λ(b S²(a)) for all basis pairs.
    pub commutator_law: bool,
}

pub fn check_lambda_symmetry(b: &QcqsBundle) -> LambdaSymmetry {
    let h = b.algebra();
    let d = h.dim();
    let lambda = b.lambda();
    let lam = |v: &SparseVec| {
        let mut s = h.zero();
        for (k, c) in v.iter() {
            s.add_mul(c, &lambda[*k]);
        }
        s
    };
    let assumption15 = center(h).iter().all(|z| lam(z) == lam(&h.antipode(z)));
    let commutator_law = (0..d).into_par_iter().all(|i| {
        let s2 = h.antipode(h.antipode_basis(i));
        (0..d).all(|j| *b.ev(i, j) == lam(&h.mul(&h.basis(j), &s2)))
    });
    LambdaSymmetry {
        assumption15,
        commutator_law,
    }
}
