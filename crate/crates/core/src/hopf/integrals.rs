use serde::Serialize;

use super::{HopfError, HopfPresentation, SparseVec};
use crate::scalar::{DenseMatrix, Scalar};

/// Which side the integral Λ was taken from.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum IntegralSide {
    Left,
    Right,
}

/// How λ was scaled after solving.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub enum LambdaNormalization {
    /// λ(1) = 1 (cosemisimple case).
    UnitValue,
    /// The first nonzero coordinate of λ was set to 1.
    FirstNonzero(usize),
    /// An explicit multiple of one of the above, e.g. for the scaling check.
    Rescaled(Scalar),
}

/// Integrals of A and of its dual, normalized so that λ(Λ) = 1.
#[derive(Debug, Clone)]
pub struct IntegralData {
    pub left_integrals: Vec<SparseVec>,
    pub right_integrals: Vec<SparseVec>,
    pub unimodular: bool,
    /// Left integral in A*, as its values on the basis.
    pub lambda: Vec<Scalar>,
    /// Right integral in A*, same scaling convention as `lambda`.
    pub lambda_right: Vec<Scalar>,
    pub big_lambda: SparseVec,
    pub lambda_side: IntegralSide,
    pub cosemisimple: bool,
    pub lambda_normalized: bool,
    pub normalization: LambdaNormalization,
}

impl IntegralData {
    pub fn lambda_of(&self, u: &SparseVec) -> Scalar {
        let mut s = Scalar::zero(self.lambda.first().map_or(1, Scalar::conductor));
        for (i, c) in u.iter() {
            s.add_mul(c, &self.lambda[*i]);
        }
        s
    }

    /// Replace λ by cλ and Λ by c⁻¹Λ, keeping λ(Λ) = 1.
    pub fn rescaled(&self, c: &Scalar) -> Result<IntegralData, HopfError> {
        if c.is_zero() {
            return Err(HopfError::ZeroScale);
        }
        let inv = c.inverse().map_err(|_| HopfError::ZeroScale)?;
        let mut out = self.clone();
        out.lambda = self.lambda.iter().map(|x| x * c).collect();
        out.lambda_right = self.lambda_right.iter().map(|x| x * c).collect();
        out.big_lambda = self.big_lambda.scale(&inv);
        out.lambda_normalized = self.lambda_normalized && c.is_one();
        out.normalization = LambdaNormalization::Rescaled(c.clone());
        Ok(out)
    }
}

/// Intersection of the kernels of a family of linear operators on k^d.
///
/// `op(i, v)` is the image of the dense vector v under the i-th operator.
/// Returns a basis in reduced echelon form (rows of an RREF matrix).
pub(crate) fn common_kernel<F>(d: usize, conductor: u32, blocks: usize, op: F) -> Vec<Vec<Scalar>>
where
    F: Fn(usize, &[Scalar]) -> Vec<Scalar>,
{
    let mut basis: Vec<Vec<Scalar>> = (0..d)
        .map(|i| {
            let mut v = vec![Scalar::zero(conductor); d];
            v[i] = Scalar::one(conductor);
            v
        })
        .collect();
    for b in 0..blocks {
        if basis.is_empty() {
            break;
        }
        let images: Vec<Vec<Scalar>> = basis.iter().map(|v| op(b, v)).collect();
        let m = images[0].len();
        let mut mat = DenseMatrix::zeros(m, basis.len(), conductor);
        for (c, img) in images.iter().enumerate() {
            for (r, x) in img.iter().enumerate() {
                mat[(r, c)] = x.clone();
            }
        }
        let ns = mat.nullspace();
        if ns.len() == basis.len() {
            continue;
        }
        basis = ns
            .iter()
            .map(|coeffs| {
                let mut v = vec![Scalar::zero(conductor); d];
                for (c, k) in coeffs.iter().enumerate() {
                    if k.is_zero() {
                        continue;
                    }
                    for (x, y) in v.iter_mut().zip(&basis[c]) {
                        x.add_mul(k, y);
                    }
                }
                v
            })
            .collect();
    }
    if basis.is_empty() {
        return basis;
    }
    let mut m = DenseMatrix::from_rows(basis, conductor);
    let rank = m.rref().len();
    (0..rank).map(|r| m.row(r).to_vec()).collect()
}

fn left_mult_minus_counit(h: &HopfPresentation, i: usize, v: &[Scalar], left: bool) -> Vec<Scalar> {
    let x = SparseVec::from_dense(v);
    let prod = if left { h.mul(&h.basis(i), &x) } else { h.mul(&x, &h.basis(i)) };
    let diff = prod.sub(&x.scale(h.counit_basis(i)));
    diff.to_dense(h.dim(), h.conductor())
}

pub fn left_integrals(h: &HopfPresentation) -> Vec<SparseVec> {
    common_kernel(h.dim(), h.conductor(), h.dim(), |i, v| left_mult_minus_counit(h, i, v, true))
        .iter()
        .map(|v| SparseVec::from_dense(v))
        .collect()
}

pub fn right_integrals(h: &HopfPresentation) -> Vec<SparseVec> {
    common_kernel(h.dim(), h.conductor(), h.dim(), |i, v| left_mult_minus_counit(h, i, v, false))
        .iter()
        .map(|v| SparseVec::from_dense(v))
        .collect()
}

/// Integrals in A*: left means a₍₁₎λ(a₍₂₎) = λ(a)1, right means λ(a₍₁₎)a₍₂₎ = λ(a)1.
pub fn dual_integrals(h: &HopfPresentation, left: bool) -> Vec<Vec<Scalar>> {
    let d = h.dim();
    let n = h.conductor();
    common_kernel(d, n, d, |i, l| {
        let mut out = vec![Scalar::zero(n); d];
        for (p, q, c) in h.comult_terms(i) {
            let (slot, coord) = if left { (p, q) } else { (q, p) };
            out[slot].add_mul(c, &l[coord]);
        }
        for (k, u) in h.unit().iter() {
            out[*k] -= &(u * &l[i]);
        }
        out
    })
}

/// Exact basis of the center Z(A).
pub fn center(h: &HopfPresentation) -> Vec<SparseVec> {
    let d = h.dim();
    common_kernel(d, h.conductor(), d, |i, v| {
        let x = SparseVec::from_dense(v);
        let b = h.basis(i);
        h.mul(&b, &x).sub(&h.mul(&x, &b)).to_dense(d, h.conductor())
    })
    .iter()
    .map(|v| SparseVec::from_dense(v))
    .collect()
}

fn scale_dense(v: &[Scalar], c: &Scalar) -> Vec<Scalar> {
    v.iter().map(|x| x * c).collect()
}

/// Integrals of A and A*, with λ normalized (λ(1) = 1 when cosemisimple,
/// otherwise first nonzero coordinate 1) and Λ scaled so that λ(Λ) = 1.
pub fn compute_integrals(h: &HopfPresentation) -> Result<IntegralData, HopfError> {
    let left = left_integrals(h);
    let right = right_integrals(h);
    if left.len() != 1 || right.len() != 1 {
        return Err(HopfError::NotFiniteHopf(format!(
            "integral spaces have dimensions {} (left) and {} (right)",
            left.len(),
            right.len()
        )));
    }
    let unimodular = left[0].ratio_to(&right[0]).is_some_and(|c| !c.is_zero());

    let lam = dual_integrals(h, true);
    let lam_r = dual_integrals(h, false);
    if lam.len() != 1 || lam_r.len() != 1 {
        return Err(HopfError::NotFiniteHopf(format!(
            "dual integral spaces have dimensions {} (left) and {} (right)",
            lam.len(),
            lam_r.len()
        )));
    }
    let raw = &lam[0];
    let unit_value = |l: &[Scalar]| {
        let mut s = h.zero();
        for (k, u) in h.unit().iter() {
            s.add_mul(u, &l[*k]);
        }
        s
    };
    let at_one = unit_value(raw);
    let cosemisimple = !at_one.is_zero();
    let (lambda, normalization) = if cosemisimple {
        (scale_dense(raw, &at_one.inverse().unwrap()), LambdaNormalization::UnitValue)
    } else {
        let p = raw.iter().position(|x| !x.is_zero()).expect("nonzero integral");
        (scale_dense(raw, &raw[p].inverse().unwrap()), LambdaNormalization::FirstNonzero(p))
    };

    let pairing = |l: &[Scalar], x: &SparseVec| {
        let mut s = h.zero();
        for (i, c) in x.iter() {
            s.add_mul(c, &l[*i]);
        }
        s
    };
    let lam0 = pairing(&lambda, &left[0]);
    if lam0.is_zero() {
        return Err(HopfError::DegeneratePairing);
    }
    let big_lambda = left[0].scale(&lam0.inverse().unwrap());

    // Right dual integral, scaled to agree with λ on Λ.
    let r0 = pairing(&lam_r[0], &big_lambda);
    let lambda_right = if r0.is_zero() {
        lam_r[0].clone()
    } else {
        scale_dense(&lam_r[0], &r0.inverse().unwrap())
    };

    Ok(IntegralData {
        left_integrals: left,
        right_integrals: right,
        unimodular,
        lambda,
        lambda_right,
        big_lambda,
        lambda_side: IntegralSide::Left,
        cosemisimple,
        lambda_normalized: cosemisimple,
        normalization,
    })
}
