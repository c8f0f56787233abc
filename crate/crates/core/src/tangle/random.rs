use rand::seq::SliceRandom;
use rand::Rng;

use super::expr::{Gen, TangleExpr};

/// Random well-typed expression with the given source arity, at most
/// `depth` levels deep and never wider than `max_width` strands.
pub fn random_expr<R: Rng + ?Sized>(rng: &mut R, source: usize, depth: usize, max_width: usize) -> TangleExpr {
    let max_width = max_width.max(source).max(1);
    if depth <= 1 || rng.gen_bool(0.2) {
        return random_layer(rng, source, max_width);
    }
    match rng.gen_range(0..3) {
        0 => {
            let bottom = random_expr(rng, source, depth - 1, max_width);
            let top = random_expr(rng, bottom.arity().1, depth - 1, max_width);
            TangleExpr::Compose(Box::new(top), Box::new(bottom))
        }
        1 if source >= 1 => {
            let k = rng.gen_range(0..=source);
            let l = random_expr(rng, k, depth - 1, max_width);
            let room = max_width.saturating_sub(l.arity().1).max(source - k);
            let r = random_expr(rng, source - k, depth - 1, room);
            let out = TangleExpr::tensor(l, r);
            if out.arity().1 > max_width {
                random_layer(rng, source, max_width)
            } else {
                out
            }
        }
        _ => random_layer(rng, source, max_width),
    }
}

/// A single row of generators with the given source arity.
pub fn random_layer<R: Rng + ?Sized>(rng: &mut R, source: usize, max_width: usize) -> TangleExpr {
    let mut row = Vec::new();
    let mut left = source;
    let mut width = 0;
    while left > 0 || (row.is_empty() && source == 0) {
        let candidates: Vec<Gen> = Gen::ALL
            .iter()
            .copied()
            .filter(|g| g.source() <= left && width + g.target() + (left - g.source()) <= max_width)
            .filter(|g| !(left == 0 && g.source() == 0 && width > 0))
            .collect();
        let Some(&g) = candidates.choose(rng) else {
            break;
        };
        row.push(TangleExpr::Gen(g));
        left -= g.source();
        width += g.target();
        if g.source() == 0 && left == 0 {
            break;
        }
    }
    row.extend(std::iter::repeat_n(TangleExpr::Gen(Gen::Id), left));
    if row.is_empty() {
        return TangleExpr::Empty;
    }
    row.shuffle(rng);
    let out = TangleExpr::row(row);
    debug_assert_eq!(out.arity().0, source);
    out
}

/// Random closed expression: a random (0, t) expression closed off by caps.
pub fn random_closed<R: Rng + ?Sized>(rng: &mut R, depth: usize, max_width: usize) -> TangleExpr {
    let mut e = random_expr(rng, 0, depth, max_width.max(2));
    let mut t = e.arity().1;
    if t % 2 == 1 {
        let mut row = vec![TangleExpr::Gen(Gen::Nu)];
        row.extend(std::iter::repeat_n(TangleExpr::Gen(Gen::Id), t - 1));
        e = TangleExpr::Compose(Box::new(TangleExpr::row(row)), Box::new(e));
        t += 1;
    }
    while t > 0 {
        let mut row = vec![TangleExpr::Gen(Gen::Cap)];
        row.extend(std::iter::repeat_n(TangleExpr::Gen(Gen::Id), t - 2));
        e = TangleExpr::Compose(Box::new(TangleExpr::row(row)), Box::new(e));
        t -= 2;
    }
    e
}

/// Applies one random rewrite that is valid by strictness and the interchange
/// law at a random node: identity insertion, reassociation, or splitting a
/// tensor product into two layers.
pub fn random_rewrite<R: Rng + ?Sized>(rng: &mut R, e: &TangleExpr) -> TangleExpr {
    let nodes = count_nodes(e);
    let target = rng.gen_range(0..nodes);
    let mut seen = 0;
    rewrite_at(rng, e, target, &mut seen)
}

fn count_nodes(e: &TangleExpr) -> usize {
    match e {
        TangleExpr::Empty | TangleExpr::Gen(_) => 1,
        TangleExpr::Compose(a, b) | TangleExpr::Tensor(a, b) => 1 + count_nodes(a) + count_nodes(b),
    }
}

fn rewrite_at<R: Rng + ?Sized>(rng: &mut R, e: &TangleExpr, target: usize, seen: &mut usize) -> TangleExpr {
    let here = *seen;
    *seen += 1;
    if here == target {
        return rewrite_node(rng, e);
    }
    match e {
        TangleExpr::Empty | TangleExpr::Gen(_) => e.clone(),
        TangleExpr::Compose(a, b) => {
            let a2 = rewrite_at(rng, a, target, seen);
            let b2 = rewrite_at(rng, b, target, seen);
            TangleExpr::Compose(Box::new(a2), Box::new(b2))
        }
        TangleExpr::Tensor(a, b) => {
            let a2 = rewrite_at(rng, a, target, seen);
            let b2 = rewrite_at(rng, b, target, seen);
            TangleExpr::Tensor(Box::new(a2), Box::new(b2))
        }
    }
}

fn rewrite_node<R: Rng + ?Sized>(rng: &mut R, e: &TangleExpr) -> TangleExpr {
    use TangleExpr as T;
    let (s, t) = e.arity();
    match (e, rng.gen_range(0..3)) {
        (T::Tensor(f, g), 0) => {
            // f ⊗ g = (f ⊗ id)(id ⊗ g)
            let (gs, gt) = g.arity();
            let (fs, _) = f.arity();
            let _ = gs;
            T::Compose(
                Box::new(T::tensor((**f).clone(), T::identity(gt))),
                Box::new(T::tensor(T::identity(fs), (**g).clone())),
            )
        }
        (T::Tensor(f, g), 1) => {
            // f ⊗ g = (id ⊗ g)(f ⊗ id)
            let (_, ft) = f.arity();
            let (gs, _) = g.arity();
            T::Compose(
                Box::new(T::tensor(T::identity(ft), (**g).clone())),
                Box::new(T::tensor((**f).clone(), T::identity(gs))),
            )
        }
        (T::Compose(a, b), 0) => match (&**a, &**b) {
            (T::Compose(x, y), _) => T::Compose(x.clone(), Box::new(T::Compose(y.clone(), b.clone()))),
            (_, T::Compose(x, y)) => T::Compose(Box::new(T::Compose(a.clone(), x.clone())), y.clone()),
            _ => T::Compose(Box::new(T::identity(t)), Box::new(e.clone())),
        },
        (T::Tensor(a, b), _) => match (&**a, &**b) {
            (T::Tensor(x, y), _) => T::Tensor(x.clone(), Box::new(T::Tensor(y.clone(), b.clone()))),
            (_, T::Tensor(x, y)) => T::Tensor(Box::new(T::Tensor(a.clone(), x.clone())), y.clone()),
            _ => T::Compose(Box::new(e.clone()), Box::new(T::identity(s))),
        },
        (_, 1) => T::Compose(Box::new(T::identity(t)), Box::new(e.clone())),
        _ => T::Compose(Box::new(e.clone()), Box::new(T::identity(s))),
    }
}
