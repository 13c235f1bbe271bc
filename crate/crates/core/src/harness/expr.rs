//! Graph expressions such as `cart(path:3,complete:3)`,
//! `lex(cycle:5,empty:2)`, `corona(complete:3,path:2)`,
//! `join(path:4,complete:1)` or `multi:1,2,2`.

use std::fmt;

use crate::error::{Error, Result};
use crate::family::Family;
use crate::graph::UndirectedGraph;
use crate::products;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum GraphExpr {
    Family(Family),
    Cartesian(Box<GraphExpr>, Box<GraphExpr>),
    Lexicographic(Box<GraphExpr>, Box<GraphExpr>),
    Corona(Box<GraphExpr>, Box<GraphExpr>),
    Join(Box<GraphExpr>, Box<GraphExpr>),
}

impl GraphExpr {
    pub fn parse(text: &str) -> Result<Self> {
        let mut p = Parser { s: text.as_bytes(), pos: 0, text };
        let e = p.expr()?;
        p.skip_ws();
        if p.pos != p.s.len() {
            return Err(p.error("trailing input"));
        }
        Ok(e)
    }

    pub fn build(&self) -> Result<UndirectedGraph> {
        Ok(match self {
            GraphExpr::Family(f) => f.build()?,
            GraphExpr::Cartesian(a, b) => products::try_cartesian(&a.build()?, &b.build()?)?.0,
            GraphExpr::Lexicographic(a, b) => products::try_lexicographic(&a.build()?, &b.build()?)?.0,
            GraphExpr::Corona(a, b) => products::try_corona(&a.build()?, &b.build()?)?.0,
            GraphExpr::Join(a, b) => products::try_join(&a.build()?, &b.build()?)?,
        })
    }
}

impl fmt::Display for GraphExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GraphExpr::Family(x) => write!(f, "{x}"),
            GraphExpr::Cartesian(a, b) => write!(f, "cart({a},{b})"),
            GraphExpr::Lexicographic(a, b) => write!(f, "lex({a},{b})"),
            GraphExpr::Corona(a, b) => write!(f, "corona({a},{b})"),
            GraphExpr::Join(a, b) => write!(f, "join({a},{b})"),
        }
    }
}

/// Parses and builds in one step.
pub fn build_expr(text: &str) -> Result<UndirectedGraph> {
    GraphExpr::parse(text)?.build()
}

struct Parser<'a> {
    s: &'a [u8],
    pos: usize,
    text: &'a str,
}

impl Parser<'_> {
    fn error(&self, what: &str) -> Error {
        Error::InvalidFamily(format!("{what} at offset {} in `{}`", self.pos, self.text))
    }

    fn skip_ws(&mut self) {
        while self.pos < self.s.len() && self.s[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.s.get(self.pos).copied()
    }

    fn expect(&mut self, c: u8) -> Result<()> {
        if self.peek() == Some(c) {
            self.pos += 1;
            Ok(())
        } else {
            Err(self.error(&format!("expected `{}`", c as char)))
        }
    }

    fn ident(&mut self) -> Result<&str> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.s.len() && (self.s[self.pos].is_ascii_alphabetic() || self.s[self.pos] == b'_') {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(self.error("expected a name"));
        }
        Ok(std::str::from_utf8(&self.s[start..self.pos]).unwrap())
    }

    fn number(&mut self) -> Result<usize> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.s.len() && self.s[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        std::str::from_utf8(&self.s[start..self.pos]).unwrap().parse().map_err(|_| self.error("expected a number"))
    }

    fn expr(&mut self) -> Result<GraphExpr> {
        let name = self.ident()?.to_ascii_lowercase();
        match self.peek() {
            Some(b'(') => {
                self.pos += 1;
                let a = self.expr()?;
                self.expect(b',')?;
                let b = self.expr()?;
                self.expect(b')')?;
                let (a, b) = (Box::new(a), Box::new(b));
                Ok(match name.as_str() {
                    "cart" | "cartesian" => GraphExpr::Cartesian(a, b),
                    "lex" | "lexicographic" => GraphExpr::Lexicographic(a, b),
                    "corona" => GraphExpr::Corona(a, b),
                    "join" => GraphExpr::Join(a, b),
                    other => return Err(self.error(&format!("unknown operation `{other}`"))),
                })
            }
            Some(b':') => {
                self.pos += 1;
                let first = self.number()?;
                let family = match name.as_str() {
                    "path" => Family::Path(first),
                    "cycle" => Family::Cycle(first),
                    "complete" => Family::Complete(first),
                    "empty" => Family::Empty(first),
                    "multi" | "multipartite" => {
                        let mut sizes = vec![first];
                        // Part sizes continue while a comma is followed by a digit.
                        loop {
                            let save = self.pos;
                            if self.peek() == Some(b',') {
                                self.pos += 1;
                                if self.peek().is_some_and(|c| c.is_ascii_digit()) {
                                    sizes.push(self.number()?);
                                    continue;
                                }
                            }
                            self.pos = save;
                            break;
                        }
                        Family::Multipartite(sizes)
                    }
                    other => return Err(self.error(&format!("unknown family `{other}`"))),
                };
                Ok(GraphExpr::Family(family))
            }
            _ => Err(self.error("expected `(` or `:`")),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::family::*;

    #[test]
    fn parses_spec_examples() {
        assert_eq!(build_expr("cart(path:3,complete:3)").unwrap().edge_count(), 15);
        assert_eq!(build_expr("lex(cycle:5,empty:2)").unwrap().edge_count(), 20);
        assert_eq!(build_expr("corona(complete:3,path:2)").unwrap().edge_count(), 12);
        assert_eq!(build_expr("join(path:4,complete:1)").unwrap().edge_count(), 7);
        assert_eq!(build_expr("multi:1,2,2").unwrap(), multipartite(&[1, 2, 2]));
    }

    #[test]
    fn multipartite_inside_product() {
        let e = GraphExpr::parse("cart( multi:1,2 , path:2 )").unwrap();
        assert_eq!(e.to_string(), "cart(multi:1,2,path:2)");
        assert_eq!(e.build().unwrap().n(), 6);
        let e = GraphExpr::parse("join(path:2,multi:2,2)").unwrap();
        assert_eq!(e.build().unwrap().n(), 6);
    }

    #[test]
    fn rejects_bad_expressions() {
        for bad in ["", "path", "path:", "cart(path:2)", "foo:3", "bar(path:1,path:1)", "path:3 x", "cycle:2"] {
            assert!(build_expr(bad).is_err(), "{bad}");
        }
    }
}
