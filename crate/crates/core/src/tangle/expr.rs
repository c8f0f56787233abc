use std::fmt;

use serde::Serialize;

/// Generating morphisms. Arities are (source, target) = (bottom, top).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum Gen {
    Id,
    Cap,
    Cup,
    Mu,
    Nu,
    X,
    Xb,
}

impl Gen {
    pub const ALL: [Gen; 7] = [Gen::Id, Gen::Cap, Gen::Cup, Gen::Mu, Gen::Nu, Gen::X, Gen::Xb];

    pub fn arity(self) -> (usize, usize) {
        match self {
            Gen::Id => (1, 1),
            Gen::Cap => (2, 0),
            Gen::Cup => (0, 2),
            Gen::Mu => (2, 1),
            Gen::Nu => (1, 2),
            Gen::X | Gen::Xb => (2, 2),
        }
    }

    pub fn source(self) -> usize {
        self.arity().0
    }

    pub fn target(self) -> usize {
        self.arity().1
    }

    pub fn name(self) -> &'static str {
        match self {
            Gen::Id => "id",
            Gen::Cap => "cap",
            Gen::Cup => "cup",
            Gen::Mu => "mu",
            Gen::Nu => "nu",
            Gen::X => "X",
            Gen::Xb => "Xb",
        }
    }

    pub fn mirror(self) -> Gen {
        match self {
            Gen::X => Gen::Xb,
            Gen::Xb => Gen::X,
            g => g,
        }
    }
}

impl fmt::Display for Gen {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// A tangle expression. `Compose(top, bottom)` places `top` above `bottom`;
/// `Tensor(left, right)` places them side by side. `Empty` is the identity
/// on zero strands.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum TangleExpr {
    Empty,
    Gen(Gen),
    Compose(Box<TangleExpr>, Box<TangleExpr>),
    Tensor(Box<TangleExpr>, Box<TangleExpr>),
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("arity mismatch: top `{top}` has source {top_source} but bottom `{bottom}` has target {bottom_target}")]
pub struct ArityError {
    pub top: String,
    pub top_source: usize,
    pub bottom: String,
    pub bottom_target: usize,
}

impl TangleExpr {
    pub fn gen(g: Gen) -> Self {
        TangleExpr::Gen(g)
    }

    /// Checked composition, `top` above `bottom`.
    pub fn compose(top: TangleExpr, bottom: TangleExpr) -> Result<Self, ArityError> {
        let (s, _) = top.arity();
        let (_, t) = bottom.arity();
        if s != t {
            return Err(ArityError {
                top: top.to_string(),
                top_source: s,
                bottom: bottom.to_string(),
                bottom_target: t,
            });
        }
        Ok(TangleExpr::Compose(Box::new(top), Box::new(bottom)))
    }

    pub fn tensor(left: TangleExpr, right: TangleExpr) -> Self {
        TangleExpr::Tensor(Box::new(left), Box::new(right))
    }

    /// Composes a top-first list; panics on an arity mismatch.
    pub fn stack(parts: Vec<TangleExpr>) -> Self {
        parts
            .into_iter()
            .reduce(|top, bottom| TangleExpr::compose(top, bottom).unwrap_or_else(|e| panic!("{e}")))
            .unwrap_or(TangleExpr::Empty)
    }

    /// Tensor product of a left-to-right list.
    pub fn row(parts: Vec<TangleExpr>) -> Self {
        parts
            .into_iter()
            .filter(|p| *p != TangleExpr::Empty)
            .reduce(TangleExpr::tensor)
            .unwrap_or(TangleExpr::Empty)
    }

    /// Identity on n strands.
    pub fn identity(n: usize) -> Self {
        Self::row(vec![TangleExpr::Gen(Gen::Id); n])
    }

    /// (source, target) = (bottom, top) strand counts.
    pub fn arity(&self) -> (usize, usize) {
        match self {
            TangleExpr::Empty => (0, 0),
            TangleExpr::Gen(g) => g.arity(),
            TangleExpr::Compose(top, bottom) => (bottom.arity().0, top.arity().1),
            TangleExpr::Tensor(l, r) => {
                let (a, b) = l.arity();
                let (c, d) = r.arity();
                (a + c, b + d)
            }
        }
    }

    pub fn is_closed(&self) -> bool {
        self.arity() == (0, 0)
    }

    /// Re-checks arity consistency of every composition.
    pub fn check(&self) -> Result<(), ArityError> {
        match self {
            TangleExpr::Empty | TangleExpr::Gen(_) => Ok(()),
            TangleExpr::Compose(top, bottom) => {
                top.check()?;
                bottom.check()?;
                let (s, _) = top.arity();
                let (_, t) = bottom.arity();
                if s != t {
                    return Err(ArityError {
                        top: top.to_string(),
                        top_source: s,
                        bottom: bottom.to_string(),
                        bottom_target: t,
                    });
                }
                Ok(())
            }
            TangleExpr::Tensor(l, r) => {
                l.check()?;
                r.check()
            }
        }
    }

    /// Mirror image: crossings swap, tensor order reverses.
    pub fn mirror(&self) -> TangleExpr {
        match self {
            TangleExpr::Empty => TangleExpr::Empty,
            TangleExpr::Gen(g) => TangleExpr::Gen(g.mirror()),
            TangleExpr::Compose(t, b) => TangleExpr::Compose(Box::new(t.mirror()), Box::new(b.mirror())),
            TangleExpr::Tensor(l, r) => TangleExpr::Tensor(Box::new(r.mirror()), Box::new(l.mirror())),
        }
    }

    /// Number of occurrences of a generator in the tree.
    pub fn count(&self, g: Gen) -> usize {
        match self {
            TangleExpr::Empty => 0,
            TangleExpr::Gen(h) => (*h == g) as usize,
            TangleExpr::Compose(a, b) | TangleExpr::Tensor(a, b) => a.count(g) + b.count(g),
        }
    }

    /// Depth of the tree (a leaf has depth 1).
    pub fn depth(&self) -> usize {
        match self {
            TangleExpr::Empty | TangleExpr::Gen(_) => 1,
            TangleExpr::Compose(a, b) | TangleExpr::Tensor(a, b) => 1 + a.depth().max(b.depth()),
        }
    }

    /// Replaces every Nu by its expansion (mu ⊗ id) ∘ (id ⊗ cup).
    pub fn expand_nu(&self) -> TangleExpr {
        match self {
            TangleExpr::Gen(Gen::Nu) => nu_expansion(),
            TangleExpr::Empty | TangleExpr::Gen(_) => self.clone(),
            TangleExpr::Compose(a, b) => TangleExpr::Compose(Box::new(a.expand_nu()), Box::new(b.expand_nu())),
            TangleExpr::Tensor(a, b) => TangleExpr::Tensor(Box::new(a.expand_nu()), Box::new(b.expand_nu())),
        }
    }
}

/// ∨ = (∧ ⊗ |) ∘ (| ⊗ ∪).
pub fn nu_expansion() -> TangleExpr {
    use TangleExpr as T;
    T::stack(vec![
        T::tensor(T::Gen(Gen::Mu), T::Gen(Gen::Id)),
        T::tensor(T::Gen(Gen::Id), T::Gen(Gen::Cup)),
    ])
}

impl From<Gen> for TangleExpr {
    fn from(g: Gen) -> Self {
        TangleExpr::Gen(g)
    }
}

/// Prints in the concrete syntax; `.` binds weaker than `&`.
impl fmt::Display for TangleExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            TangleExpr::Empty => f.write_str("empty"),
            TangleExpr::Gen(g) => write!(f, "{g}"),
            TangleExpr::Compose(t, b) => write!(f, "{t} . {b}"),
            TangleExpr::Tensor(l, r) => {
                let paren = |e: &TangleExpr| matches!(e, TangleExpr::Compose(..));
                if paren(l) {
                    write!(f, "({l})")?;
                } else {
                    write!(f, "{l}")?;
                }
                f.write_str(" & ")?;
                if paren(r) {
                    write!(f, "({r})")
                } else {
                    write!(f, "{r}")
                }
            }
        }
    }
}
