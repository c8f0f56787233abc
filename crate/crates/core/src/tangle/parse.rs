use super::expr::{ArityError, Gen, TangleExpr};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ParseError {
    #[error("unexpected character `{ch}` at position {pos}")]
    UnexpectedChar { ch: char, pos: usize },
    #[error("unknown generator `{name}` at position {pos}")]
    UnknownName { name: String, pos: usize },
    #[error("expected {expected} at position {pos}")]
    Expected { expected: &'static str, pos: usize },
    #[error("trailing input at position {pos}")]
    Trailing { pos: usize },
    #[error("{source} (at position {pos})")]
    Arity {
        #[source]
        source: ArityError,
        pos: usize,
    },
}

impl ParseError {
    pub fn position(&self) -> usize {
        match self {
            ParseError::UnexpectedChar { pos, .. }
            | ParseError::UnknownName { pos, .. }
            | ParseError::Expected { pos, .. }
            | ParseError::Trailing { pos }
            | ParseError::Arity { pos, .. } => *pos,
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
enum Tok {
    Atom(TangleExpr),
    Dot,
    Amp,
    LParen,
    RParen,
}

/// Position is a character offset into the input.
fn lex(input: &str) -> Result<Vec<(Tok, usize)>, ParseError> {
    let chars: Vec<char> = input.chars().collect();
    let mut out = Vec::new();
    let mut i = 0;
    while i < chars.len() {
        let c = chars[i];
        let pos = i;
        match c {
            '#' => {
                while i < chars.len() && chars[i] != '\n' {
                    i += 1;
                }
                continue;
            }
            c if c.is_whitespace() => {}
            '.' | '∘' => out.push((Tok::Dot, pos)),
            '&' | '⊗' => out.push((Tok::Amp, pos)),
            '(' => out.push((Tok::LParen, pos)),
            ')' => out.push((Tok::RParen, pos)),
            '|' => out.push((Tok::Atom(Gen::Id.into()), pos)),
            '∧' => out.push((Tok::Atom(Gen::Mu.into()), pos)),
            '∨' => out.push((Tok::Atom(Gen::Nu.into()), pos)),
            '∩' => out.push((Tok::Atom(Gen::Cap.into()), pos)),
            '∪' => out.push((Tok::Atom(Gen::Cup.into()), pos)),
            c if c.is_alphanumeric() || c == '_' => {
                let start = i;
                while i < chars.len() && (chars[i].is_alphanumeric() || chars[i] == '_') {
                    i += 1;
                }
                // combining macron: X̄
                let mut name: String = chars[start..i].iter().collect();
                if i < chars.len() && chars[i] == '\u{0304}' {
                    name.push('\u{0304}');
                    i += 1;
                }
                let atom = match name.as_str() {
                    "id" | "I" => TangleExpr::Gen(Gen::Id),
                    "cap" => Gen::Cap.into(),
                    "cup" => Gen::Cup.into(),
                    "mu" | "μ" => Gen::Mu.into(),
                    "nu" | "ν" => Gen::Nu.into(),
                    "X" => Gen::X.into(),
                    "Xb" | "Xbar" | "X\u{0304}" => Gen::Xb.into(),
                    "empty" => TangleExpr::Empty,
                    _ => return Err(ParseError::UnknownName { name, pos: start }),
                };
                out.push((Tok::Atom(atom), start));
                continue;
            }
            _ => return Err(ParseError::UnexpectedChar { ch: c, pos }),
        }
        i += 1;
    }
    Ok(out)
}

struct Parser {
    toks: Vec<(Tok, usize)>,
    at: usize,
    end: usize,
}

impl Parser {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.at).map(|(t, _)| t)
    }

    fn pos(&self) -> usize {
        self.toks.get(self.at).map_or(self.end, |(_, p)| *p)
    }

    // compose := tensor ('.' tensor)*
    fn compose(&mut self) -> Result<TangleExpr, ParseError> {
        let mut parts = vec![(self.pos(), self.tensor()?)];
        while self.peek() == Some(&Tok::Dot) {
            self.at += 1;
            parts.push((self.pos(), self.tensor()?));
        }
        // right-associate so that a . b . c = a . (b . c)
        let (mut pos, mut acc) = parts.pop().unwrap();
        while let Some((p, top)) = parts.pop() {
            acc = TangleExpr::compose(top, acc).map_err(|source| ParseError::Arity { source, pos })?;
            pos = p;
        }
        Ok(acc)
    }

    // tensor := atom ('&' atom)*
    fn tensor(&mut self) -> Result<TangleExpr, ParseError> {
        let mut acc = self.atom()?;
        while self.peek() == Some(&Tok::Amp) {
            self.at += 1;
            let rhs = self.atom()?;
            acc = TangleExpr::tensor(acc, rhs);
        }
        Ok(acc)
    }

    fn atom(&mut self) -> Result<TangleExpr, ParseError> {
        let pos = self.pos();
        match self.toks.get(self.at).map(|(t, _)| t.clone()) {
            Some(Tok::Atom(e)) => {
                self.at += 1;
                Ok(e)
            }
            Some(Tok::LParen) => {
                self.at += 1;
                let e = self.compose()?;
                if self.peek() != Some(&Tok::RParen) {
                    return Err(ParseError::Expected { expected: "`)`", pos: self.pos() });
                }
                self.at += 1;
                Ok(e)
            }
            _ => Err(ParseError::Expected { expected: "a generator or `(`", pos }),
        }
    }
}

/// Parses the concrete tangle syntax.
///
/// Generators: `id` (also `|`), `cap` (`∩`), `cup` (`∪`), `mu` (`∧`),
/// `nu` (`∨`), `X`, `Xb` (`X̄`), and `empty` for the empty diagram.
/// `.` (or `∘`) composes, top first; `&` (or `⊗`) tensors and binds tighter.
/// `#` starts a comment running to the end of the line.
pub fn parse(input: &str) -> Result<TangleExpr, ParseError> {
    let toks = lex(input)?;
    let end = input.chars().count();
    let mut p = Parser { toks, at: 0, end };
    let e = p.compose()?;
    if p.at != p.toks.len() {
        return Err(ParseError::Trailing { pos: p.pos() });
    }
    Ok(e)
}

impl std::str::FromStr for TangleExpr {
    type Err = ParseError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        parse(s)
    }
}
