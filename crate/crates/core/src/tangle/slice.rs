use std::fmt;

use super::expr::{Gen, TangleExpr};

/// A composition of layers, top layer first; each layer is a tensor product
/// of generators read left to right.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct SliceForm {
    layers: Vec<Vec<Gen>>,
    source: usize,
    target: usize,
}

fn layer_arity(layer: &[Gen]) -> (usize, usize) {
    layer.iter().fold((0, 0), |(s, t), g| (s + g.source(), t + g.target()))
}

fn is_identity(layer: &[Gen]) -> bool {
    layer.iter().all(|g| *g == Gen::Id)
}

impl SliceForm {
    /// Builds a slice form from explicit layers, checking adjacent arities.
    pub fn from_layers(layers: Vec<Vec<Gen>>, source: usize, target: usize) -> Option<Self> {
        let mut up = target;
        for layer in &layers {
            let (s, t) = layer_arity(layer);
            if t != up {
                return None;
            }
            up = s;
        }
        (up == source).then_some(SliceForm { layers, source, target })
    }

    pub fn layers(&self) -> &[Vec<Gen>] {
        &self.layers
    }

    pub fn source(&self) -> usize {
        self.source
    }

    pub fn target(&self) -> usize {
        self.target
    }

    pub fn arity(&self) -> (usize, usize) {
        (self.source, self.target)
    }

    /// Largest number of strands crossing any horizontal line.
    pub fn width(&self) -> usize {
        self.layers
            .iter()
            .map(|l| {
                let (s, t) = layer_arity(l);
                s.max(t)
            })
            .max()
            .unwrap_or(0)
            .max(self.source)
            .max(self.target)
    }

    pub fn count(&self, g: Gen) -> usize {
        self.layers.iter().flatten().filter(|h| **h == g).count()
    }

    /// Interface strand count below each layer (index ℓ = below layer ℓ).
    pub fn interfaces(&self) -> Vec<usize> {
        self.layers.iter().map(|l| layer_arity(l).0).collect()
    }

    /// Reassembles a tree: layers composed top first, each layer a left-nested tensor.
    pub fn to_expr(&self) -> TangleExpr {
        if self.layers.is_empty() {
            return TangleExpr::identity(self.source);
        }
        TangleExpr::stack(
            self.layers
                .iter()
                .map(|l| TangleExpr::row(l.iter().map(|g| TangleExpr::Gen(*g)).collect()))
                .collect(),
        )
    }

    fn pad(&mut self, extra: usize) {
        // pad with identity layers at the bottom
        for _ in 0..extra {
            self.layers.push(vec![Gen::Id; self.source]);
        }
    }

    fn beside(mut self, mut other: SliceForm) -> SliceForm {
        let n = self.layers.len().max(other.layers.len());
        self.pad(n - self.layers.len());
        other.pad(n - other.layers.len());
        let layers = self
            .layers
            .into_iter()
            .zip(other.layers)
            .map(|(mut a, b)| {
                a.extend(b);
                a
            })
            .collect();
        SliceForm {
            layers,
            source: self.source + other.source,
            target: self.target + other.target,
        }
    }

    fn above(mut self, other: SliceForm) -> SliceForm {
        self.layers.extend(other.layers);
        self.source = other.source;
        self
    }

    fn strip_identities(mut self) -> SliceForm {
        self.layers.retain(|l| !is_identity(l));
        self
    }
}

/// Slice normal form. Tensor factors of different heights are aligned at
/// the top and the shorter one is padded with identities below; layers made
/// only of identities are dropped.
pub fn to_slices(e: &TangleExpr) -> SliceForm {
    fn go(e: &TangleExpr) -> SliceForm {
        match e {
            TangleExpr::Empty => SliceForm { layers: vec![], source: 0, target: 0 },
            TangleExpr::Gen(Gen::Id) => SliceForm { layers: vec![], source: 1, target: 1 },
            TangleExpr::Gen(g) => SliceForm {
                layers: vec![vec![*g]],
                source: g.source(),
                target: g.target(),
            },
            TangleExpr::Compose(top, bottom) => go(top).above(go(bottom)),
            TangleExpr::Tensor(l, r) => go(l).beside(go(r)),
        }
    }
    go(e).strip_identities()
}

impl From<&TangleExpr> for SliceForm {
    fn from(e: &TangleExpr) -> Self {
        to_slices(e)
    }
}

impl fmt::Display for SliceForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_expr())
    }
}
