use super::expr::{Gen, TangleExpr};
use super::slice::{to_slices, SliceForm};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum HornError {
    #[error("horn requires a closed tangle (got arity {0}→{1})")]
    NotClosed(usize, usize),
    #[error("cap position {position} out of range ({count} caps)")]
    OutOfRange { position: usize, count: usize },
    #[error("cap {0} is not a top cap: its output strand is enclosed by layer {1}")]
    NotTop(usize, usize),
    #[error("disk sum needs two tangles of arity 0→1, got {0:?} and {1:?}")]
    DiskSumArity((usize, usize), (usize, usize)),
}

/// Cap occurrences in slice form as (layer, index within layer), layers top
/// to bottom and left to right within a layer.
pub fn cap_occurrences(s: &SliceForm) -> Vec<(usize, usize)> {
    s.layers()
        .iter()
        .enumerate()
        .flat_map(|(l, layer)| {
            layer
                .iter()
                .enumerate()
                .filter(|(_, g)| **g == Gen::Cap)
                .map(move |(k, _)| (l, k))
        })
        .collect()
}

/// Threads a new strand from a cap up through the layers above it.
/// Returns the new layers, or the first layer that blocks the strand.
fn horn_slices(s: &SliceForm, layer: usize, k: usize) -> Result<Vec<Vec<Gen>>, usize> {
    let mut layers = s.layers().to_vec();
    layers[layer][k] = Gen::Mu;
    // strand position in the interface just above the cap's layer
    let mut pos: usize = layers[layer][..k].iter().map(|g| g.target()).sum();
    for l in (0..layer).rev() {
        let row = &layers[l];
        let mut below = 0;
        let mut above = 0;
        let mut gap = None;
        for (i, g) in row.iter().enumerate() {
            if below == pos {
                gap = Some((i, above));
                break;
            }
            if below > pos {
                break;
            }
            below += g.source();
            above += g.target();
        }
        if gap.is_none() && below == pos {
            gap = Some((row.len(), above));
        }
        let (i, up) = gap.ok_or(l)?;
        layers[l].insert(i, Gen::Id);
        pos = up;
    }
    Ok(layers)
}

/// Every cap position together with whether the horn transform applies there.
pub fn horn_positions(e: &TangleExpr) -> Vec<(usize, bool)> {
    let s = to_slices(e);
    cap_occurrences(&s)
        .into_iter()
        .enumerate()
        .map(|(n, (l, k))| (n, horn_slices(&s, l, k).is_ok()))
        .collect()
}

/// The horned tangle H^∧: the chosen cap becomes a multiplication and its
/// output strand is carried to the top, left of anything it does not enclose.
pub fn horn(e: &TangleExpr, position: usize) -> Result<TangleExpr, HornError> {
    let (src, tgt) = e.arity();
    if (src, tgt) != (0, 0) {
        return Err(HornError::NotClosed(src, tgt));
    }
    let s = to_slices(e);
    let caps = cap_occurrences(&s);
    let &(l, k) = caps.get(position).ok_or(HornError::OutOfRange {
        position,
        count: caps.len(),
    })?;
    let layers = horn_slices(&s, l, k).map_err(|blocking| HornError::NotTop(position, blocking))?;
    let out = SliceForm::from_layers(layers, 0, 1).expect("horn preserves arities");
    Ok(out.to_expr())
}

/// H₁ # H₂ = ∩ ∘ (H₁^∧ ⊗ H₂^∧) for horned inputs.
pub fn disk_sum(h1: &TangleExpr, h2: &TangleExpr) -> Result<TangleExpr, HornError> {
    let (a, b) = (h1.arity(), h2.arity());
    if a != (0, 1) || b != (0, 1) {
        return Err(HornError::DiskSumArity(a, b));
    }
    Ok(TangleExpr::Compose(
        Box::new(Gen::Cap.into()),
        Box::new(TangleExpr::tensor(h1.clone(), h2.clone())),
    ))
}
