//! Composable graph-expression syntax.
//!
//! Atoms: `K(p)`, `C(p)`, `P(m)`, `KB(r,s)`, `E(n)`, `SP(a1,...,ak)`,
//! `CSP(m)`, `g6:<string>`, `file:<path>`. Operators: `kron`, `join`,
//! `union`, `comp`, `dup` (one or two arguments), `spl(e,m)`,
//! `shadow(e,m)`. Parse errors carry the byte position and the expected
//! token set.

use std::fmt;

use gel_core::graph::{Graph, SuperpathSpec};
use gel_core::{io, ops};

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum GraphExpr {
    Complete(usize),
    Cycle(usize),
    Path(usize),
    CompleteBipartite(usize, usize),
    Empty(usize),
    Superpath(Vec<usize>),
    CanonicalSuperpath(usize),
    Graph6(String),
    File(String),
    Kron(Box<GraphExpr>, Box<GraphExpr>),
    Join(Box<GraphExpr>, Box<GraphExpr>),
    Union(Box<GraphExpr>, Box<GraphExpr>),
    Complement(Box<GraphExpr>),
    Splitting(Box<GraphExpr>, usize),
    Shadow(Box<GraphExpr>, usize),
    Duplicate(Box<GraphExpr>, usize),
}

impl fmt::Display for GraphExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GraphExpr::Complete(p) => write!(f, "K({p})"),
            GraphExpr::Cycle(p) => write!(f, "C({p})"),
            GraphExpr::Path(m) => write!(f, "P({m})"),
            GraphExpr::CompleteBipartite(r, s) => write!(f, "KB({r},{s})"),
            GraphExpr::Empty(n) => write!(f, "E({n})"),
            GraphExpr::Superpath(parts) => {
                let joined = parts
                    .iter()
                    .map(|a| a.to_string())
                    .collect::<Vec<_>>()
                    .join(",");
                write!(f, "SP({joined})")
            }
            GraphExpr::CanonicalSuperpath(m) => write!(f, "CSP({m})"),
            GraphExpr::Graph6(s) => write!(f, "g6:{s}"),
            GraphExpr::File(p) => write!(f, "file:{p}"),
            GraphExpr::Kron(a, b) => write!(f, "kron({a},{b})"),
            GraphExpr::Join(a, b) => write!(f, "join({a},{b})"),
            GraphExpr::Union(a, b) => write!(f, "union({a},{b})"),
            GraphExpr::Complement(a) => write!(f, "comp({a})"),
            GraphExpr::Splitting(a, m) => write!(f, "spl({a},{m})"),
            GraphExpr::Shadow(a, m) => write!(f, "shadow({a},{m})"),
            GraphExpr::Duplicate(a, m) => {
                if *m == 1 {
                    write!(f, "dup({a})")
                } else {
                    write!(f, "dup({a},{m})")
                }
            }
        }
    }
}

impl GraphExpr {
    /// Construct the graph this expression denotes.
    pub fn build(&self) -> gel_core::Result<Graph> {
        let g = match self {
            GraphExpr::Complete(p) => Graph::complete(*p)?,
            GraphExpr::Cycle(p) => Graph::cycle(*p)?,
            GraphExpr::Path(m) => Graph::path(*m)?,
            GraphExpr::CompleteBipartite(r, s) => Graph::complete_bipartite(*r, *s)?,
            GraphExpr::Empty(n) => Graph::empty(*n)?,
            GraphExpr::Superpath(parts) => {
                Graph::superpath(&SuperpathSpec::new(parts.clone())?)?
            }
            GraphExpr::CanonicalSuperpath(m) => Graph::canonical_superpath(*m)?,
            GraphExpr::Graph6(s) => io::from_graph6(s)?.with_label(format!("g6:{s}")),
            GraphExpr::File(path) => {
                let text = std::fs::read_to_string(path)?;
                let first = text.lines().find(|l| !l.trim().is_empty()).unwrap_or("");
                let mut toks = first.split_whitespace();
                let looks_like_edge_list = matches!(
                    (
                        toks.next().map(|t| t.parse::<usize>().is_ok()),
                        toks.next().map(|t| t.parse::<usize>().is_ok())
                    ),
                    (Some(true), Some(true))
                );
                let g = if looks_like_edge_list {
                    io::from_edge_list(&text)?
                } else {
                    io::from_graph6(&text)?
                };
                g.with_label(format!("file:{path}"))
            }
            GraphExpr::Kron(a, b) => ops::kronecker(&a.build()?, &b.build()?)?,
            GraphExpr::Join(a, b) => ops::join(&a.build()?, &b.build()?)?,
            GraphExpr::Union(a, b) => a.build()?.disjoint_union(&b.build()?)?,
            GraphExpr::Complement(a) => a.build()?.complement(),
            GraphExpr::Splitting(a, m) => ops::splitting(&a.build()?, *m)?,
            GraphExpr::Shadow(a, m) => ops::shadow(&a.build()?, *m)?,
            GraphExpr::Duplicate(a, m) => ops::duplicate_iter(&a.build()?, *m)?,
        };
        Ok(g.with_label(self.to_string()))
    }
}

/// Parse failure with the byte position and what was expected there.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParseError {
    pub pos: usize,
    pub expected: String,
    pub found: String,
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "parse error at byte {}: expected {}, found {}",
            self.pos, self.expected, self.found
        )
    }
}

impl std::error::Error for ParseError {}

struct Parser<'a> {
    src: &'a str,
    pos: usize,
}

impl<'a> Parser<'a> {
    fn new(src: &'a str) -> Self {
        Parser { src, pos: 0 }
    }

    fn rest(&self) -> &'a str {
        &self.src[self.pos..]
    }

    fn skip_ws(&mut self) {
        let trimmed = self.rest().trim_start();
        self.pos = self.src.len() - trimmed.len();
    }

    fn error(&self, expected: &str) -> ParseError {
        let found = match self.rest().chars().next() {
            Some(c) => format!("{c:?}"),
            None => "end of input".to_string(),
        };
        ParseError {
            pos: self.pos,
            expected: expected.to_string(),
            found,
        }
    }

    fn eat(&mut self, c: char) -> Result<(), ParseError> {
        self.skip_ws();
        if self.rest().starts_with(c) {
            self.pos += c.len_utf8();
            Ok(())
        } else {
            Err(self.error(&format!("{c:?}")))
        }
    }

    fn number(&mut self) -> Result<usize, ParseError> {
        self.skip_ws();
        let digits: String = self.rest().chars().take_while(|c| c.is_ascii_digit()).collect();
        if digits.is_empty() {
            return Err(self.error("a number"));
        }
        self.pos += digits.len();
        digits
            .parse()
            .map_err(|_| self.error("a representable number"))
    }

    fn ident(&mut self) -> Result<&'a str, ParseError> {
        self.skip_ws();
        let len = self
            .rest()
            .chars()
            .take_while(|c| c.is_ascii_alphanumeric())
            .map(|c| c.len_utf8())
            .sum();
        if len == 0 {
            return Err(self.error("an atom or operator name"));
        }
        let word = &self.rest()[..len];
        self.pos += len;
        Ok(word)
    }

    fn numbers_paren(&mut self, arity: usize) -> Result<Vec<usize>, ParseError> {
        self.eat('(')?;
        let mut out = vec![self.number()?];
        loop {
            self.skip_ws();
            if self.rest().starts_with(',') {
                self.pos += 1;
                out.push(self.number()?);
            } else {
                break;
            }
        }
        self.eat(')')?;
        if arity != 0 && out.len() != arity {
            return Err(ParseError {
                pos: self.pos,
                expected: format!("{arity} numeric argument(s)"),
                found: format!("{}", out.len()),
            });
        }
        Ok(out)
    }

    /// Raw token for `g6:` / `file:` payloads: everything up to a delimiter.
    fn raw_token(&mut self) -> Result<&'a str, ParseError> {
        let len = self
            .rest()
            .chars()
            .take_while(|&c| !c.is_whitespace() && c != ',' && c != ')' && c != '(')
            .map(|c| c.len_utf8())
            .sum();
        if len == 0 {
            return Err(self.error("a nonempty token"));
        }
        let tok = &self.rest()[..len];
        self.pos += len;
        Ok(tok)
    }

    fn expr(&mut self) -> Result<GraphExpr, ParseError> {
        self.skip_ws();
        if self.rest().starts_with("g6:") {
            self.pos += 3;
            return Ok(GraphExpr::Graph6(self.raw_token()?.to_string()));
        }
        if self.rest().starts_with("file:") {
            self.pos += 5;
            return Ok(GraphExpr::File(self.raw_token()?.to_string()));
        }
        let at = self.pos;
        let head = self.ident()?;
        match head {
            "K" => Ok(GraphExpr::Complete(self.numbers_paren(1)?[0])),
            "C" => Ok(GraphExpr::Cycle(self.numbers_paren(1)?[0])),
            "P" => Ok(GraphExpr::Path(self.numbers_paren(1)?[0])),
            "E" => Ok(GraphExpr::Empty(self.numbers_paren(1)?[0])),
            "CSP" => Ok(GraphExpr::CanonicalSuperpath(self.numbers_paren(1)?[0])),
            "KB" => {
                let v = self.numbers_paren(2)?;
                Ok(GraphExpr::CompleteBipartite(v[0], v[1]))
            }
            "SP" => Ok(GraphExpr::Superpath(self.numbers_paren(0)?)),
            "kron" | "join" | "union" => {
                self.eat('(')?;
                let a = self.expr()?;
                self.eat(',')?;
                let b = self.expr()?;
                self.eat(')')?;
                Ok(match head {
                    "kron" => GraphExpr::Kron(Box::new(a), Box::new(b)),
                    "join" => GraphExpr::Join(Box::new(a), Box::new(b)),
                    _ => GraphExpr::Union(Box::new(a), Box::new(b)),
                })
            }
            "comp" => {
                self.eat('(')?;
                let a = self.expr()?;
                self.eat(')')?;
                Ok(GraphExpr::Complement(Box::new(a)))
            }
            "spl" | "shadow" => {
                self.eat('(')?;
                let a = self.expr()?;
                self.eat(',')?;
                let m = self.number()?;
                self.eat(')')?;
                Ok(if head == "spl" {
                    GraphExpr::Splitting(Box::new(a), m)
                } else {
                    GraphExpr::Shadow(Box::new(a), m)
                })
            }
            "dup" => {
                self.eat('(')?;
                let a = self.expr()?;
                self.skip_ws();
                let m = if self.rest().starts_with(',') {
                    self.pos += 1;
                    self.number()?
                } else {
                    1
                };
                self.eat(')')?;
                Ok(GraphExpr::Duplicate(Box::new(a), m))
            }
            other => Err(ParseError {
                pos: at,
                expected: "one of K, C, P, KB, E, SP, CSP, g6:, file:, kron, join, union, comp, dup, spl, shadow".into(),
                found: format!("{other:?}"),
            }),
        }
    }
}

/// Parse a complete expression; trailing garbage is an error.
pub fn parse_expr(text: &str) -> Result<GraphExpr, ParseError> {
    let mut p = Parser::new(text);
    let e = p.expr()?;
    p.skip_ws();
    if !p.rest().is_empty() {
        return Err(p.error("end of input"));
    }
    Ok(e)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_the_worked_examples() {
        let e = parse_expr("join(C(4), E(12))").unwrap();
        assert_eq!(e.to_string(), "join(C(4),E(12))");
        let g = e.build().unwrap();
        assert_eq!(g.order(), 16);

        let e = parse_expr("kron(KB(2,2), KB(1,3))").unwrap();
        assert_eq!(e.build().unwrap().order(), 16);

        let e = parse_expr("shadow(dup(K(2)), 2)").unwrap();
        let g = e.build().unwrap();
        assert_eq!(g.order(), 8);
    }

    #[test]
    fn atoms_and_operators() {
        assert_eq!(
            parse_expr("SP(2,1,1,2)").unwrap(),
            GraphExpr::Superpath(vec![2, 1, 1, 2])
        );
        assert_eq!(parse_expr("CSP(3)").unwrap().build().unwrap().order(), 12);
        assert_eq!(
            parse_expr("comp(E(4))").unwrap().build().unwrap().size(),
            6
        );
        assert_eq!(
            parse_expr("union(K(2), K(2))").unwrap().build().unwrap().size(),
            2
        );
        assert_eq!(
            parse_expr("dup(K(2), 3)").unwrap().build().unwrap().order(),
            16
        );
        let g = parse_expr("g6:C~").unwrap().build().unwrap();
        assert_eq!((g.order(), g.size()), (4, 6));
    }

    #[test]
    fn roundtrips_through_display() {
        for text in [
            "join(C(4),E(12))",
            "spl(SP(2,1,1,2),2)",
            "shadow(dup(K(2)),2)",
            "kron(KB(1,3),CSP(2))",
            "union(comp(C(5)),P(3))",
            "dup(K(2),3)",
        ] {
            let e = parse_expr(text).unwrap();
            assert_eq!(parse_expr(&e.to_string()).unwrap(), e);
        }
    }

    #[test]
    fn error_positions_and_expectations() {
        let err = parse_expr("walk(C(4))").unwrap_err();
        assert_eq!(err.pos, 0);
        assert!(err.expected.contains("kron"));

        let err = parse_expr("join(C(4)").unwrap_err();
        assert!(err.expected.contains("','"));

        let err = parse_expr("K()").unwrap_err();
        assert!(err.expected.contains("number"));

        let err = parse_expr("KB(2)").unwrap_err();
        assert!(err.expected.contains("2 numeric"));

        let err = parse_expr("C(4) extra").unwrap_err();
        assert!(err.expected.contains("end of input"));
    }

    #[test]
    fn build_surfaces_construction_errors() {
        assert!(parse_expr("C(2)").unwrap().build().is_err());
        assert!(parse_expr("K(0)").unwrap().build().is_err());
        assert!(parse_expr("g6:!!").unwrap().build().is_err());
    }

    #[test]
    fn labels_match_the_canonical_form() {
        let g = parse_expr("join( C(4) , E(12) )").unwrap().build().unwrap();
        assert_eq!(g.label(), Some("join(C(4),E(12))"));
    }
}
