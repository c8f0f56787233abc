use rayon::prelude::*;

use super::map::{digits, radix_len, SparseMap};
use crate::hopf::{Accumulator, QcqsBundle, SparseVec};
use crate::scalar::Scalar;
use crate::tangle::{nu_expansion, to_slices, Gen, SliceForm, TangleExpr};

/// Columns of the generator maps other than Nu, indexed by local source
/// multi-index.
#[derive(Debug, Clone)]
struct GenTables {
    cap: Vec<SparseVec>,
    cup: Vec<SparseVec>,
    mu: Vec<SparseVec>,
    x: Vec<SparseVec>,
    xb: Vec<SparseVec>,
}

impl GenTables {
    fn new(b: &QcqsBundle) -> Self {
        let h = b.algebra();
        let d = h.dim();
        let cap = (0..d * d)
            .map(|ij| {
                let e = b.ev(ij / d, ij % d);
                if e.is_zero() {
                    SparseVec::new()
                } else {
                    SparseVec::from_pairs([(0, e.clone())])
                }
            })
            .collect();
        GenTables {
            cap,
            cup: vec![b.coev().clone()],
            mu: (0..d * d).map(|ij| h.mul_basis(ij / d, ij % d).clone()).collect(),
            x: (0..d * d).map(|ij| b.braid_basis(ij / d, ij % d).clone()).collect(),
            xb: (0..d * d).map(|ij| b.braid_inv_basis(ij / d, ij % d).clone()).collect(),
        }
    }

    fn columns(&self, g: Gen) -> &[SparseVec] {
        match g {
            Gen::Cap => &self.cap,
            Gen::Cup => &self.cup,
            Gen::Mu => &self.mu,
            Gen::X => &self.x,
            Gen::Xb => &self.xb,
            Gen::Id | Gen::Nu => unreachable!("identity and nu have no stored table"),
        }
    }

    /// Mean number of terms per column.
    fn branching(&self, g: Gen) -> f64 {
        if g == Gen::Id {
            return 1.0;
        }
        let cols = self.columns(g);
        let total: usize = cols.iter().map(SparseVec::len).sum();
        total as f64 / cols.len() as f64
    }
}

/// A tangle in slice form with Nu expanded, ready for layer-by-layer evaluation.
#[derive(Debug, Clone)]
pub struct PreparedTangle {
    slices: SliceForm,
    /// (source, target) strand count of each layer, top first.
    arities: Vec<(usize, usize)>,
}

impl PreparedTangle {
    pub fn new(e: &TangleExpr) -> Self {
        let slices = to_slices(&e.expand_nu());
        let arities = slices
            .layers()
            .iter()
            .map(|l| l.iter().fold((0, 0), |(s, t), g| (s + g.source(), t + g.target())))
            .collect();
        PreparedTangle { slices, arities }
    }

    pub fn slices(&self) -> &SliceForm {
        &self.slices
    }

    pub fn source(&self) -> usize {
        self.slices.source()
    }

    pub fn target(&self) -> usize {
        self.slices.target()
    }
}

/// Evaluates tangle expressions in the qcqs algebra of a bundle.
#[derive(Debug, Clone)]
pub struct Evaluator<'a> {
    bundle: &'a QcqsBundle,
    tables: GenTables,
}

impl<'a> Evaluator<'a> {
    pub fn new(bundle: &'a QcqsBundle) -> Self {
        Evaluator {
            bundle,
            tables: GenTables::new(bundle),
        }
    }

    pub fn bundle(&self) -> &QcqsBundle {
        self.bundle
    }

    fn d(&self) -> usize {
        self.bundle.dim()
    }

    /// Applies one layer (a tensor product of generators) to a vector over
    /// its source multi-indices.
    fn apply_layer(&self, layer: &[Gen], src: usize, v: &SparseVec) -> SparseVec {
        let d = self.d();
        let mut acc = Accumulator::new();
        let mut cur: Vec<(usize, Scalar)> = Vec::new();
        let mut next: Vec<(usize, Scalar)> = Vec::new();
        for (idx, c) in v.iter() {
            let ds = digits(*idx, d, src);
            cur.clear();
            cur.push((0, c.clone()));
            let mut pos = 0;
            for &g in layer {
                if g == Gen::Id {
                    let x = ds[pos];
                    pos += 1;
                    for e in cur.iter_mut() {
                        e.0 = e.0 * d + x;
                    }
                    continue;
                }
                let s = g.source();
                let local = ds[pos..pos + s].iter().fold(0, |a, x| a * d + x);
                pos += s;
                let col = &self.tables.columns(g)[local];
                let shift = radix_len(d, g.target());
                next.clear();
                for (p, a) in cur.iter() {
                    for (t, b) in col.iter() {
                        next.push((p * shift + t, a * b));
                    }
                }
                std::mem::swap(&mut cur, &mut next);
                if cur.is_empty() {
                    break;
                }
            }
            for (t, x) in cur.drain(..) {
                acc.add(t, &x);
            }
        }
        acc.finish()
    }

    /// Pushes a vector over source multi-indices through every layer.
    pub fn apply(&self, t: &PreparedTangle, v: &SparseVec) -> SparseVec {
        let mut cur = v.clone();
        for (layer, (src, _)) in t.slices.layers().iter().zip(&t.arities).rev() {
            if cur.is_zero() {
                break;
            }
            cur = self.apply_layer(layer, *src, &cur);
        }
        cur
    }

    /// Image of the basis tensor with multi-index `s`.
    pub fn column(&self, t: &PreparedTangle, s: usize) -> SparseVec {
        self.apply(t, &SparseVec::basis(s, self.bundle.conductor()))
    }

    /// The full map, one column per source multi-index.
    pub fn evaluate_prepared(&self, t: &PreparedTangle) -> SparseMap {
        let n = radix_len(self.d(), t.source());
        let cols = (0..n).into_par_iter().map(|s| self.column(t, s)).collect();
        SparseMap::new(t.source(), t.target(), self.d(), cols)
    }

    pub fn evaluate(&self, e: &TangleExpr) -> SparseMap {
        self.evaluate_prepared(&PreparedTangle::new(e))
    }

    /// Estimated number of scalar multiplications to evaluate one column.
    pub fn column_cost(&self, t: &PreparedTangle) -> f64 {
        let mut terms = 1.0;
        let mut cost = 0.0;
        for layer in t.slices.layers().iter().rev() {
            let b: f64 = layer.iter().map(|g| self.tables.branching(*g)).product();
            terms *= b.max(f64::MIN_POSITIVE);
            cost += terms;
        }
        cost.max(1.0)
    }

    /// The map of a single generator (Nu through its expansion).
    pub fn generator_map(&self, g: Gen) -> SparseMap {
        if g == Gen::Nu {
            return self.evaluate(&nu_expansion());
        }
        self.evaluate(&TangleExpr::Gen(g))
    }

    /// Structural fold over the tree: composition and tensor product of maps.
    /// Materializes every intermediate map, so only suitable for small cases.
    pub fn evaluate_tree(&self, e: &TangleExpr) -> SparseMap {
        let d = self.d();
        let n = self.bundle.conductor();
        match e {
            TangleExpr::Empty => SparseMap::identity(0, d, n),
            TangleExpr::Gen(Gen::Id) => SparseMap::identity(1, d, n),
            TangleExpr::Gen(g) => self.generator_map(*g),
            TangleExpr::Compose(top, bottom) => self.evaluate_tree(top).compose(&self.evaluate_tree(bottom)),
            TangleExpr::Tensor(l, r) => self.evaluate_tree(l).tensor(&self.evaluate_tree(r)),
        }
    }
}

/// F_A(e) as a sparse map.
pub fn evaluate(b: &QcqsBundle, e: &TangleExpr) -> SparseMap {
    Evaluator::new(b).evaluate(e)
}

/// F_A(g) for a single generator.
pub fn generator_map(b: &QcqsBundle, g: Gen) -> SparseMap {
    Evaluator::new(b).generator_map(g)
}
