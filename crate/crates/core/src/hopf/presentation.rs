use std::sync::Arc;

use super::{Accumulator, HopfError, SparseVec};
use crate::scalar::{DenseMatrix, Scalar};

/// Raw structure constants of a finite-dimensional Hopf algebra.
///
/// `mult[i * dim + j]` is the product of basis elements i and j,
/// `comult[i]` lists the (j, k, c) with Δ(b_i) = Σ c b_j ⊗ b_k, and column j
/// of `antipode` is S(b_j).
#[derive(Debug, Clone)]
pub struct HopfData {
    pub name: String,
    pub labels: Vec<String>,
    pub conductor: u32,
    pub mult: Vec<SparseVec>,
    pub unit: SparseVec,
    pub comult: Vec<Vec<(usize, usize, Scalar)>>,
    pub counit: Vec<Scalar>,
    pub antipode: DenseMatrix,
    pub antipode_inv: DenseMatrix,
}

/// A structurally well-formed Hopf algebra presentation.
///
/// Structural checks (sizes, index ranges, one scalar field) happen in
/// [`HopfPresentation::new`]; the Hopf axioms themselves are checked by
/// [`super::verify_hopf`].
#[derive(Debug, Clone)]
pub struct HopfPresentation {
    name: String,
    labels: Vec<String>,
    conductor: u32,
    mult: Vec<SparseVec>,
    unit: SparseVec,
    comult: Vec<SparseVec>,
    counit: Vec<Scalar>,
    antipode: DenseMatrix,
    antipode_inv: DenseMatrix,
    s_cols: Vec<SparseVec>,
    sinv_cols: Vec<SparseVec>,
}

impl HopfPresentation {
    pub fn new(data: HopfData) -> Result<Self, HopfError> {
        let d = data.labels.len();
        let bad = |msg: String| Err(HopfError::Malformed(msg));
        if d == 0 {
            return bad("dimension must be positive".into());
        }
        if data.mult.len() != d * d {
            return bad(format!("expected {} products, found {}", d * d, data.mult.len()));
        }
        if data.comult.len() != d || data.counit.len() != d {
            return bad("coproduct/counit length differs from dimension".into());
        }
        for (m, name) in [(&data.antipode, "antipode"), (&data.antipode_inv, "inverse antipode")] {
            if m.rows() != d || m.cols() != d {
                return bad(format!("{name} matrix must be {d}x{d}"));
            }
        }
        let n = data.conductor;
        let field_ok = |x: &Scalar| x.conductor() == n || x.conductor() == 1;
        let vec_ok = |v: &SparseVec, bound: usize| v.iter().all(|(i, c)| *i < bound && field_ok(c));
        if !data.mult.iter().all(|v| vec_ok(v, d)) || !vec_ok(&data.unit, d) {
            return bad("product or unit refers to an index out of range or another field".into());
        }
        if !data.counit.iter().all(field_ok) {
            return bad("counit value in another field".into());
        }
        let mut comult = Vec::with_capacity(d);
        for terms in &data.comult {
            if terms.iter().any(|(j, k, c)| *j >= d || *k >= d || !field_ok(c)) {
                return bad("coproduct refers to an index out of range or another field".into());
            }
            comult.push(SparseVec::from_pairs(terms.iter().map(|(j, k, c)| (j * d + k, c.clone()))));
        }
        let promote = |v: &SparseVec| SparseVec::from_pairs(v.iter().map(|(i, c)| (*i, c.promote(n).unwrap())));
        let mut mult = Vec::with_capacity(d * d);
        for v in &data.mult {
            mult.push(promote(v));
        }
        let cols = |m: &DenseMatrix| -> Result<Vec<SparseVec>, HopfError> {
            (0..d)
                .map(|j| {
                    let col = m.col(j);
                    if !col.iter().all(field_ok) {
                        return Err(HopfError::Malformed("antipode entry in another field".into()));
                    }
                    Ok(promote(&SparseVec::from_dense(&col)))
                })
                .collect()
        };
        let s_cols = cols(&data.antipode)?;
        let sinv_cols = cols(&data.antipode_inv)?;
        Ok(HopfPresentation {
            name: data.name,
            labels: data.labels,
            conductor: n,
            unit: promote(&data.unit),
            comult: comult.iter().map(promote).collect(),
            counit: data.counit.iter().map(|c| c.promote(n).unwrap()).collect(),
            mult,
            antipode: data.antipode,
            antipode_inv: data.antipode_inv,
            s_cols,
            sinv_cols,
        })
    }

    /// Back to raw structure constants.
    pub fn to_data(&self) -> HopfData {
        let d = self.dim();
        HopfData {
            name: self.name.clone(),
            labels: self.labels.clone(),
            conductor: self.conductor,
            mult: self.mult.clone(),
            unit: self.unit.clone(),
            comult: self
                .comult
                .iter()
                .map(|v| v.iter().map(|(p, c)| (p / d, p % d, c.clone())).collect())
                .collect(),
            counit: self.counit.clone(),
            antipode: self.antipode.clone(),
            antipode_inv: self.antipode_inv.clone(),
        }
    }

    pub fn into_shared(self) -> Arc<Self> {
        Arc::new(self)
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn with_name(mut self, name: impl Into<String>) -> Self {
        self.name = name.into();
        self
    }

    pub fn dim(&self) -> usize {
        self.labels.len()
    }

    pub fn conductor(&self) -> u32 {
        self.conductor
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn label(&self, i: usize) -> &str {
        &self.labels[i]
    }

    pub fn zero(&self) -> Scalar {
        Scalar::zero(self.conductor)
    }

    pub fn one_scalar(&self) -> Scalar {
        Scalar::one(self.conductor)
    }

    pub fn basis(&self, i: usize) -> SparseVec {
        SparseVec::basis(i, self.conductor)
    }

    pub fn unit(&self) -> &SparseVec {
        &self.unit
    }

    pub fn counit_basis(&self, i: usize) -> &Scalar {
        &self.counit[i]
    }

    pub fn counit_values(&self) -> &[Scalar] {
        &self.counit
    }

    pub fn antipode_matrix(&self) -> &DenseMatrix {
        &self.antipode
    }

    pub fn antipode_inv_matrix(&self) -> &DenseMatrix {
        &self.antipode_inv
    }

    /// b_i b_j.
    #[inline]
    pub fn mul_basis(&self, i: usize, j: usize) -> &SparseVec {
        &self.mult[i * self.dim() + j]
    }

    /// Δ(b_i) as a sparse vector over pair indices p·d + q.
    #[inline]
    pub fn comult_basis(&self, i: usize) -> &SparseVec {
        &self.comult[i]
    }

    /// Δ(b_i) as (p, q, c) triples.
    pub fn comult_terms(&self, i: usize) -> impl Iterator<Item = (usize, usize, &Scalar)> + '_ {
        let d = self.dim();
        self.comult[i].iter().map(move |(k, c)| (k / d, k % d, c))
    }

    #[inline]
    pub fn antipode_basis(&self, i: usize) -> &SparseVec {
        &self.s_cols[i]
    }

    #[inline]
    pub fn antipode_inv_basis(&self, i: usize) -> &SparseVec {
        &self.sinv_cols[i]
    }

    pub fn mul(&self, u: &SparseVec, v: &SparseVec) -> SparseVec {
        let mut acc = Accumulator::new();
        for (i, a) in u.iter() {
            for (j, b) in v.iter() {
                let ab = a * b;
                acc.add_vec(self.mul_basis(*i, *j), Some(&ab));
            }
        }
        acc.finish()
    }

    /// Product of several elements, left to right.
    pub fn mul_all(&self, factors: &[&SparseVec]) -> SparseVec {
        let mut acc = self.unit.clone();
        for f in factors {
            acc = self.mul(&acc, f);
        }
        acc
    }

    pub fn comult(&self, u: &SparseVec) -> SparseVec {
        let mut acc = Accumulator::new();
        for (i, a) in u.iter() {
            acc.add_vec(self.comult_basis(*i), Some(a));
        }
        acc.finish()
    }

    pub fn counit(&self, u: &SparseVec) -> Scalar {
        let mut s = self.zero();
        for (i, a) in u.iter() {
            s.add_mul(a, &self.counit[*i]);
        }
        s
    }

    pub fn antipode(&self, u: &SparseVec) -> SparseVec {
        self.apply_cols(&self.s_cols, u)
    }

    pub fn antipode_inv(&self, u: &SparseVec) -> SparseVec {
        self.apply_cols(&self.sinv_cols, u)
    }

    fn apply_cols(&self, cols: &[SparseVec], u: &SparseVec) -> SparseVec {
        let mut acc = Accumulator::new();
        for (i, a) in u.iter() {
            acc.add_vec(&cols[*i], Some(a));
        }
        acc.finish()
    }

    /// Product in A ⊗ A (componentwise), both operands over pair indices.
    pub fn mul_tensor2(&self, u: &SparseVec, v: &SparseVec) -> SparseVec {
        let d = self.dim();
        let mut acc = Accumulator::new();
        for (p, a) in u.iter() {
            let (p1, p2) = (p / d, p % d);
            for (q, b) in v.iter() {
                let (q1, q2) = (q / d, q % d);
                let ab = a * b;
                for (x, c1) in self.mul_basis(p1, q1).iter() {
                    let abc = &ab * c1;
                    for (y, c2) in self.mul_basis(p2, q2).iter() {
                        acc.add_product(x * d + y, &abc, c2);
                    }
                }
            }
        }
        acc.finish()
    }

    /// Δ²(b_i) = (Δ ⊗ id)Δ(b_i) over triple indices (p·d + q)·d + r.
    pub fn comult2_basis(&self, i: usize) -> SparseVec {
        let d = self.dim();
        let mut acc = Accumulator::new();
        for (p, r, c) in self.comult_terms(i) {
            for (pq, c2) in self.comult_basis(p).iter() {
                acc.add_product(pq * d + r, c, c2);
            }
        }
        acc.finish()
    }

    /// The Hopf algebra with the opposite product; S and S⁻¹ trade places.
    pub fn opposite(&self) -> HopfPresentation {
        let d = self.dim();
        let mut out = self.clone();
        out.name = format!("{}^op", self.name);
        for i in 0..d {
            for j in 0..d {
                out.mult[i * d + j] = self.mult[j * d + i].clone();
            }
        }
        std::mem::swap(&mut out.antipode, &mut out.antipode_inv);
        std::mem::swap(&mut out.s_cols, &mut out.sinv_cols);
        out
    }

    /// Trace of S², the value of the invariant on the trivial knot.
    pub fn trace_s2(&self) -> Scalar {
        let mut t = self.zero();
        for i in 0..self.dim() {
            // coefficient of b_i in S(S(b_i))
            for (k, c) in self.s_cols[i].iter() {
                if let Some(c2) = self.s_cols[*k].get(i) {
                    t.add_mul(c, c2);
                }
            }
        }
        t
    }

    pub fn same_structure(&self, other: &HopfPresentation) -> bool {
        self.dim() == other.dim()
            && self.mult == other.mult
            && self.unit == other.unit
            && self.comult == other.comult
            && self.counit == other.counit
            && self.s_cols == other.s_cols
            && self.sinv_cols == other.sinv_cols
    }

    pub fn format_element(&self, u: &SparseVec) -> String {
        if u.is_zero() {
            return "0".into();
        }
        u.iter()
            .map(|(i, c)| format!("({c})*{}", self.labels[*i]))
            .collect::<Vec<_>>()
            .join(" + ")
    }
}
