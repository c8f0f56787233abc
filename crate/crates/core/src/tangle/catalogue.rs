use super::expr::TangleExpr;
use super::parse::parse;

/// A relation between two or more tangle expressions, all with equal arities.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Relation {
    pub name: &'static str,
    pub sides: Vec<TangleExpr>,
}

impl Relation {
    fn new(name: &'static str, sides: &[&str]) -> Self {
        let sides = sides
            .iter()
            .map(|s| parse(s).unwrap_or_else(|e| panic!("relation {name}: {e}")))
            .collect();
        Relation { name, sides }
    }

    /// (lhs, rhs) pairs: every side against the first.
    pub fn pairs(&self) -> impl Iterator<Item = (&TangleExpr, &TangleExpr)> {
        self.sides[1..].iter().map(move |r| (&self.sides[0], r))
    }

    pub fn arity(&self) -> (usize, usize) {
        self.sides[0].arity()
    }

    pub fn is_balanced(&self) -> bool {
        self.sides.iter().all(|s| s.arity() == self.arity())
    }
}

/// The defining relations of the handlebody-tangle category.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RelationCatalogue {
    pub relations: Vec<Relation>,
}

impl RelationCatalogue {
    pub fn standard() -> Self {
        let r = Relation::new;
        let relations = vec![
            r("old1", &["(id & cap) . (cup & id)", "id", "(cap & id) . (id & cup)"]),
            r("old2", &["(id & cap) . (X & id)", "(cap & id) . (id & Xb)"]),
            r("old3", &["(id & cap) . (Xb & id)", "(cap & id) . (id & X)"]),
            r(
                "old4",
                &[
                    "(id & cap) . (((mu & id) . (id & cup)) & id)",
                    "mu",
                    "(cap & id) . (id & ((mu & id) . (id & cup)))",
                ],
            ),
            r("old5", &["(id & cap) . (X & id) . (id & cup)", "id", "(id & cap) . (Xb & id) . (id & cup)"]),
            r("old6", &["X . Xb", "id & id"]),
            r("old7", &["(X & id) . (id & X) . (X & id)", "(id & X) . (X & id) . (id & X)"]),
            r("old8", &["mu . X", "mu", "mu . Xb"]),
            r("old9", &["(mu & id) . (id & X) . (X & id)", "X . (id & mu)"]),
            r("old10", &["(id & mu) . (X & id) . (id & X)", "X . (mu & id)"]),
            r("old11", &["mu . (mu & id)", "mu . (id & mu)"]),
            r("new1", &["cap . (mu & id)", "cap . (id & mu)"]),
            r("new2", &["cap . X", "cap"]),
            r("new3", &["(cap & id) . (id & X) . (X & id)", "id & cap"]),
            r("new4", &["(id & cap) . (X & id) . (id & X)", "cap & id"]),
            r("new5", &["mu . X", "mu"]),
            r(
                "old4'",
                &["(mu & cap) . (id & cup & id)", "mu", "(cap & id) . (id & mu & id) . (id & id & cup)"],
            ),
        ];
        RelationCatalogue { relations }
    }

    pub fn len(&self) -> usize {
        self.relations.len()
    }

    pub fn is_empty(&self) -> bool {
        self.relations.is_empty()
    }

    pub fn get(&self, name: &str) -> Option<&Relation> {
        self.relations.iter().find(|r| r.name == name)
    }

    pub fn iter(&self) -> impl Iterator<Item = &Relation> {
        self.relations.iter()
    }
}

impl Default for RelationCatalogue {
    fn default() -> Self {
        Self::standard()
    }
}
