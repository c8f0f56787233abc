use rayon::prelude::*;

use crate::hopf::{Accumulator, SparseVec};
use crate::scalar::Scalar;

/// d^n, the number of multi-indices of length n.
pub fn radix_len(d: usize, n: usize) -> usize {
    d.checked_pow(n as u32).expect("multi-index space too large")
}

/// Splits a multi-index into its n digits, leftmost slot first.
pub fn digits(mut idx: usize, d: usize, n: usize) -> Vec<usize> {
    let mut out = vec![0; n];
    for slot in (0..n).rev() {
        out[slot] = idx % d;
        idx /= d;
    }
    out
}

/// Inverse of [`digits`].
pub fn from_digits(digits: &[usize], d: usize) -> usize {
    digits.iter().fold(0, |acc, x| acc * d + x)
}

/// Reverses the slot order of a multi-index.
pub fn reverse_index(idx: usize, d: usize, n: usize) -> usize {
    let mut ds = digits(idx, d, n);
    ds.reverse();
    from_digits(&ds, d)
}

/// A linear map A^{⊗src} → A^{⊗dst} stored column by column. Multi-indices
/// are mixed-radix integers in base d with the leftmost tensor slot most
/// significant; the column of source index s is the image of that basis tensor.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SparseMap {
    src: usize,
    dst: usize,
    d: usize,
    cols: Vec<SparseVec>,
}

impl SparseMap {
    pub fn new(src: usize, dst: usize, d: usize, cols: Vec<SparseVec>) -> Self {
        assert_eq!(cols.len(), radix_len(d, src), "one column per source multi-index");
        SparseMap { src, dst, d, cols }
    }

    pub fn identity(n: usize, d: usize, conductor: u32) -> Self {
        let cols = (0..radix_len(d, n)).map(|i| SparseVec::basis(i, conductor)).collect();
        SparseMap { src: n, dst: n, d, cols }
    }

    /// The (0,0) map with the given value.
    pub fn scalar(value: Scalar, d: usize) -> Self {
        SparseMap {
            src: 0,
            dst: 0,
            d,
            cols: vec![SparseVec::from_pairs([(0, value)])],
        }
    }

    pub fn source(&self) -> usize {
        self.src
    }

    pub fn target(&self) -> usize {
        self.dst
    }

    pub fn arity(&self) -> (usize, usize) {
        (self.src, self.dst)
    }

    pub fn dim(&self) -> usize {
        self.d
    }

    pub fn column(&self, s: usize) -> &SparseVec {
        &self.cols[s]
    }

    pub fn columns(&self) -> &[SparseVec] {
        &self.cols
    }

    pub fn nnz(&self) -> usize {
        self.cols.iter().map(SparseVec::len).sum()
    }

    /// Coefficient of target t in the column of source s.
    pub fn entry(&self, s: usize, t: usize) -> Option<&Scalar> {
        self.cols[s].get(t)
    }

    /// Value of a (0,0) map.
    pub fn as_scalar(&self, conductor: u32) -> Option<Scalar> {
        (self.src == 0 && self.dst == 0)
            .then(|| self.cols[0].get(0).cloned().unwrap_or_else(|| Scalar::zero(conductor)))
    }

    pub fn apply(&self, v: &SparseVec) -> SparseVec {
        let mut acc = Accumulator::new();
        for (s, c) in v.iter() {
            acc.add_vec(&self.cols[*s], Some(c));
        }
        acc.finish()
    }

    /// `self ∘ bottom`: apply `bottom` first.
    pub fn compose(&self, bottom: &SparseMap) -> SparseMap {
        assert_eq!(bottom.dst, self.src, "arity mismatch in composition");
        assert_eq!(bottom.d, self.d);
        let cols = bottom.cols.par_iter().map(|c| self.apply(c)).collect();
        SparseMap {
            src: bottom.src,
            dst: self.dst,
            d: self.d,
            cols,
        }
    }

    /// `self ⊗ right`, with `self` in the leftmost slots.
    pub fn tensor(&self, right: &SparseMap) -> SparseMap {
        assert_eq!(self.d, right.d);
        let rs = radix_len(self.d, right.src);
        let rt = radix_len(self.d, right.dst);
        let cols = (0..self.cols.len() * rs)
            .into_par_iter()
            .map(|s| {
                let (a, b) = (s / rs, s % rs);
                let mut acc = Accumulator::new();
                for (i, x) in self.cols[a].iter() {
                    for (j, y) in right.cols[b].iter() {
                        acc.add_product(i * rt + j, x, y);
                    }
                }
                acc.finish()
            })
            .collect();
        SparseMap {
            src: self.src + right.src,
            dst: self.dst + right.dst,
            d: self.d,
            cols,
        }
    }

    /// Reverses the slot order on both sides: τ_dst ∘ self ∘ τ_src.
    pub fn reversed(&self) -> SparseMap {
        let n = radix_len(self.d, self.src);
        let cols = (0..n)
            .map(|s| self.cols[reverse_index(s, self.d, self.src)].map_indices(|t| reverse_index(t, self.d, self.dst)))
            .collect();
        SparseMap {
            src: self.src,
            dst: self.dst,
            d: self.d,
            cols,
        }
    }
}
