//! Text forms of polynomials.
//!
//! Two forms are accepted: a coefficient list `"c0,c1,...,cn"` (low degree
//! first) and a human form such as `"x^5+3*x^2+1"` or `"x^2*(x^3+x+1)"`.
//! Coefficients are integers (reduced into the prime subfield) or coordinate
//! vectors `[c0;c1;...]` in the field's polynomial basis.

use crate::error::{Error, Result};
use crate::field::Field;

use super::Poly;

pub fn parse_poly(field: &Field, text: &str) -> Result<Poly> {
    let text = text.trim();
    if text.is_empty() {
        return Err(Error::Parse("empty polynomial".into()));
    }
    if looks_like_list(text) {
        let coeffs = split_top_level(text)
            .into_iter()
            .map(|c| field.parse_element(c))
            .collect::<Result<Vec<_>>>()?;
        return Ok(Poly::new(field, coeffs));
    }
    let mut parser = Parser { field, src: text.as_bytes(), pos: 0 };
    let poly = parser.expr()?;
    parser.skip_ws();
    if parser.pos != parser.src.len() {
        return Err(Error::Parse(format!("unexpected input at byte {} of {text:?}", parser.pos)));
    }
    Ok(poly)
}

fn looks_like_list(text: &str) -> bool {
    !text.chars().any(|c| matches!(c, 'x' | 'X' | 't' | '^' | '*' | '(' | '+'))
        && split_top_level(text).len() > 1
        || text.trim().parse::<i64>().is_ok()
}

/// Splits on commas outside brackets.
fn split_top_level(text: &str) -> Vec<&str> {
    let mut out = Vec::new();
    let mut depth = 0usize;
    let mut start = 0;
    for (i, c) in text.char_indices() {
        match c {
            '[' => depth += 1,
            ']' => depth = depth.saturating_sub(1),
            ',' if depth == 0 => {
                out.push(text[start..i].trim());
                start = i + 1;
            }
            _ => {}
        }
    }
    out.push(text[start..].trim());
    out
}

struct Parser<'a> {
    field: &'a Field,
    src: &'a [u8],
    pos: usize,
}

impl Parser<'_> {
    fn skip_ws(&mut self) {
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.src.get(self.pos).copied()
    }

    fn err<T>(&self, what: &str) -> Result<T> {
        Err(Error::Parse(format!("{what} at byte {}", self.pos)))
    }

    // expr := ['-'] term (('+' | '-') term)*
    fn expr(&mut self) -> Result<Poly> {
        let mut acc = if self.peek() == Some(b'-') {
            self.pos += 1;
            self.term()?.neg()
        } else {
            self.term()?
        };
        loop {
            match self.peek() {
                Some(b'+') => {
                    self.pos += 1;
                    acc = acc.add(&self.term()?);
                }
                Some(b'-') => {
                    self.pos += 1;
                    acc = acc.sub(&self.term()?);
                }
                _ => return Ok(acc),
            }
        }
    }

    // term := factor (['*'] factor)*
    fn term(&mut self) -> Result<Poly> {
        let mut acc = self.factor()?;
        loop {
            match self.peek() {
                Some(b'*') => {
                    self.pos += 1;
                    acc = acc.mul(&self.factor()?);
                }
                Some(c) if c == b'(' || c == b'[' || c.is_ascii_alphanumeric() => {
                    acc = acc.mul(&self.factor()?);
                }
                _ => return Ok(acc),
            }
        }
    }

    // factor := atom ['^' integer]
    fn factor(&mut self) -> Result<Poly> {
        let base = self.atom()?;
        if self.peek() == Some(b'^') {
            self.pos += 1;
            self.skip_ws();
            let e = self.integer()?;
            let e = u32::try_from(e).map_err(|_| Error::Parse("exponent out of range".into()))?;
            return Ok(base.pow(e));
        }
        Ok(base)
    }

    fn atom(&mut self) -> Result<Poly> {
        match self.peek() {
            Some(b'(') => {
                self.pos += 1;
                let inner = self.expr()?;
                if self.peek() != Some(b')') {
                    return self.err("expected ')'");
                }
                self.pos += 1;
                Ok(inner)
            }
            Some(b'[') => {
                let start = self.pos;
                while self.pos < self.src.len() && self.src[self.pos] != b']' {
                    self.pos += 1;
                }
                if self.pos == self.src.len() {
                    return self.err("unterminated '['");
                }
                self.pos += 1;
                let text = std::str::from_utf8(&self.src[start..self.pos]).expect("ascii slice");
                Ok(Poly::constant(self.field, self.field.parse_element(text)?))
            }
            Some(b'x' | b'X' | b't') => {
                self.pos += 1;
                Ok(Poly::x(self.field))
            }
            Some(c) if c.is_ascii_digit() => {
                let n = self.integer()?;
                let n = i64::try_from(n).map_err(|_| Error::Parse("integer out of range".into()))?;
                Ok(Poly::constant(self.field, self.field.from_int(n)))
            }
            _ => self.err("expected a term"),
        }
    }

    fn integer(&mut self) -> Result<u64> {
        let start = self.pos;
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if start == self.pos {
            return self.err("expected an integer");
        }
        std::str::from_utf8(&self.src[start..self.pos])
            .expect("ascii digits")
            .parse()
            .map_err(|_| Error::Parse("integer out of range".into()))
    }
}
