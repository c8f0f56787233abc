use super::expr::{Gen, TangleExpr};
use super::horn::{disk_sum, horn};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum BuiltinError {
    #[error("unknown builtin tangle `{0}` (known: O, theta, genus(g), A#B)")]
    Unknown(String),
    #[error("genus must be at least 1")]
    ZeroGenus,
    #[error("{0}")]
    Horn(#[from] super::horn::HornError),
}

/// Trivial handlebody-knot of genus g: cap, then g−1 handles, then cup.
pub fn genus(g: usize) -> TangleExpr {
    assert!(g >= 1, "genus must be at least 1");
    let mu = TangleExpr::tensor(Gen::Mu.into(), Gen::Id.into());
    let nu = TangleExpr::tensor(Gen::Nu.into(), Gen::Id.into());
    let mut parts = vec![TangleExpr::Gen(Gen::Cap)];
    for _ in 1..g {
        parts.push(mu.clone());
        parts.push(nu.clone());
    }
    parts.push(Gen::Cup.into());
    TangleExpr::stack(parts)
}

pub fn trivial_knot() -> TangleExpr {
    genus(1)
}

pub fn theta() -> TangleExpr {
    genus(2)
}

/// Looks up `O`, `theta`, `genus(g)`, or a disk sum `A#B` of builtins.
pub fn builtin(name: &str) -> Result<TangleExpr, BuiltinError> {
    let name = name.trim();
    if let Some((a, b)) = name.split_once('#') {
        let h1 = horn(&builtin(a)?, 0)?;
        let h2 = horn(&builtin(b)?, 0)?;
        return Ok(disk_sum(&h1, &h2)?);
    }
    match name {
        "O" | "unknot" | "trivial" => return Ok(trivial_knot()),
        "theta" => return Ok(theta()),
        _ => {}
    }
    let inner = name
        .strip_prefix("genus(")
        .and_then(|s| s.strip_suffix(')'))
        .or_else(|| name.strip_prefix("genus"))
        .ok_or_else(|| BuiltinError::Unknown(name.to_string()))?;
    let g: usize = inner.trim().parse().map_err(|_| BuiltinError::Unknown(name.to_string()))?;
    if g == 0 {
        return Err(BuiltinError::ZeroGenus);
    }
    Ok(genus(g))
}

/// The (m, n) block transposition: m strands on the left at the bottom end
/// up on the right, each passing the n strands via X.
pub fn braid_word(m: usize, n: usize) -> TangleExpr {
    let w = m + n;
    if m == 0 || n == 0 {
        return TangleExpr::identity(w);
    }
    // bottom first
    let mut layers = Vec::new();
    for i in (0..m).rev() {
        for p in i..i + n {
            let mut row = vec![TangleExpr::Gen(Gen::Id); p];
            row.push(Gen::X.into());
            row.extend(std::iter::repeat_n(TangleExpr::Gen(Gen::Id), w - p - 2));
            layers.push(TangleExpr::row(row));
        }
    }
    layers.reverse();
    TangleExpr::stack(layers)
}
