//! Recursive descent parser for knot expressions:
//!
//! ```text
//! expr := "U" | "T(" int "," int ")" | "C(" int "," int ";" expr ")"
//! ```
//!
//! Whitespace is ignored everywhere. Positions in errors are byte offsets
//! into the input.

use crate::error::{Error, Result};
use crate::knots::KnotExpr;

struct Parser<'a> {
    src: &'a str,
    pos: usize,
}

impl<'a> Parser<'a> {
    fn skip_ws(&mut self) {
        while let Some(c) = self.src[self.pos..].chars().next() {
            if !c.is_whitespace() {
                break;
            }
            self.pos += c.len_utf8();
        }
    }

    fn peek(&mut self) -> Option<char> {
        self.skip_ws();
        self.src[self.pos..].chars().next()
    }

    fn error(&self, msg: impl Into<String>) -> Error {
        Error::Parse {
            pos: self.pos,
            msg: msg.into(),
        }
    }

    fn expect(&mut self, want: char) -> Result<()> {
        match self.peek() {
            Some(c) if c == want => {
                self.pos += c.len_utf8();
                Ok(())
            }
            Some(c) => Err(self.error(format!("expected '{want}', found '{c}'"))),
            None => Err(self.error(format!("expected '{want}', found end of input"))),
        }
    }

    fn int(&mut self) -> Result<i64> {
        self.peek();
        let start = self.pos;
        let rest = &self.src[start..];
        let sign = usize::from(rest.starts_with(['-', '+']));
        let digits = rest[sign..].bytes().take_while(u8::is_ascii_digit).count();
        if digits == 0 {
            return Err(self.error("expected an integer"));
        }
        let end = start + sign + digits;
        let value = self.src[start..end]
            .parse()
            .map_err(|_| self.error("integer out of range"))?;
        self.pos = end;
        Ok(value)
    }

    fn expr(&mut self) -> Result<KnotExpr> {
        match self.peek() {
            Some('U') => {
                self.pos += 1;
                Ok(KnotExpr::Unknot)
            }
            Some('T') => {
                self.pos += 1;
                self.expect('(')?;
                let p = self.int()?;
                self.expect(',')?;
                let q = self.int()?;
                self.expect(')')?;
                Ok(KnotExpr::Torus(p, q))
            }
            Some('C') => {
                self.pos += 1;
                self.expect('(')?;
                let p = self.int()?;
                self.expect(',')?;
                let q = self.int()?;
                self.expect(';')?;
                let inner = self.expr()?;
                self.expect(')')?;
                Ok(KnotExpr::cable(p, q, inner))
            }
            Some(c) => Err(self.error(format!("expected 'U', 'T' or 'C', found '{c}'"))),
            None => Err(self.error("expected an expression, found end of input")),
        }
    }
}

/// Parses and validates a knot expression. The result is in canonical form.
pub fn parse_expression(text: &str) -> Result<KnotExpr> {
    let mut parser = Parser { src: text, pos: 0 };
    let expr = parser.expr()?;
    if let Some(c) = parser.peek() {
        return Err(parser.error(format!("unexpected trailing '{c}'")));
    }
    expr.validate()
}
