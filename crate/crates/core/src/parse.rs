//! Recursive-descent parser for polynomial expressions.
//!
//! ```text
//! expr   := term (('+' | '-') term)*
//! term   := factor ('*' factor)*
//! factor := '-' factor | base ('^' natural)?
//! base   := integer | variable | 't' | name | '(' expr ')'
//! ```
//!
//! Variables are `x0 .. x{n-1}`; for `n <= 3` the aliases `x`, `y`, `z` are
//! accepted as well. `t` denotes the extension generator and is rejected
//! over prime fields. Integers are reduced modulo the characteristic.
//! Whitespace is insignificant; positions are byte offsets into the source.

use std::collections::HashMap;

use thiserror::Error;

use crate::error::Error;
use crate::gf::Field;
use crate::poly::Polynomial;

/// A located parse failure.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("{message} at position {position}")]
pub struct ParseError {
    pub position: usize,
    pub message: String,
}

/// Non-fatal remark attached to a successful parse.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Diagnostic {
    pub position: usize,
    pub message: String,
}

#[derive(Debug, Clone)]
pub struct ParsedExpression {
    pub source: String,
    pub polynomial: Polynomial,
    pub diagnostics: Vec<Diagnostic>,
}

pub fn parse_polynomial(
    text: &str,
    field: &Field,
    nvars: usize,
) -> Result<ParsedExpression, ParseError> {
    parse_polynomial_with(text, field, nvars, &HashMap::new())
}

/// Like [`parse_polynomial`], additionally resolving identifiers found in
/// `names` to previously defined polynomials.
pub fn parse_polynomial_with(
    text: &str,
    field: &Field,
    nvars: usize,
    names: &HashMap<String, Polynomial>,
) -> Result<ParsedExpression, ParseError> {
    let mut parser = Parser {
        src: text,
        bytes: text.as_bytes(),
        pos: 0,
        field,
        nvars,
        names,
        diagnostics: Vec::new(),
    };
    parser.skip_ws();
    if parser.pos == parser.bytes.len() {
        return Err(parser.error("expected an expression"));
    }
    let polynomial = parser.expr()?;
    parser.skip_ws();
    if parser.pos < parser.bytes.len() {
        return Err(parser.error(&format!(
            "unexpected '{}'",
            parser.src[parser.pos..].chars().next().unwrap()
        )));
    }
    Ok(ParsedExpression {
        source: text.to_string(),
        polynomial,
        diagnostics: parser.diagnostics,
    })
}

struct Parser<'a> {
    src: &'a str,
    bytes: &'a [u8],
    pos: usize,
    field: &'a Field,
    nvars: usize,
    names: &'a HashMap<String, Polynomial>,
    diagnostics: Vec<Diagnostic>,
}

impl Parser<'_> {
    fn error(&self, message: &str) -> ParseError {
        ParseError {
            position: self.pos,
            message: message.to_string(),
        }
    }

    fn arith(&self, at: usize, e: Error) -> ParseError {
        ParseError {
            position: at,
            message: e.to_string(),
        }
    }

    fn skip_ws(&mut self) {
        while self.pos < self.bytes.len() && self.bytes[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.bytes.get(self.pos).copied()
    }

    fn expr(&mut self) -> Result<Polynomial, ParseError> {
        let mut acc = self.term()?;
        while let Some(op @ (b'+' | b'-')) = self.peek() {
            let at = self.pos;
            self.pos += 1;
            let rhs = self.term()?;
            acc = if op == b'+' {
                acc.add(&rhs)
            } else {
                acc.sub(&rhs)
            }
            .map_err(|e| self.arith(at, e))?;
        }
        Ok(acc)
    }

    fn term(&mut self) -> Result<Polynomial, ParseError> {
        let mut acc = self.factor()?;
        while self.peek() == Some(b'*') {
            let at = self.pos;
            self.pos += 1;
            let rhs = self.factor()?;
            acc = acc.mul(&rhs).map_err(|e| self.arith(at, e))?;
        }
        Ok(acc)
    }

    fn factor(&mut self) -> Result<Polynomial, ParseError> {
        if self.peek() == Some(b'-') {
            self.pos += 1;
            return Ok(self.factor()?.neg());
        }
        let base = self.base()?;
        if self.peek() == Some(b'^') {
            let at = self.pos;
            self.pos += 1;
            self.skip_ws();
            let (e, _) = self.natural()?;
            return base.pow(e).map_err(|err| self.arith(at, err));
        }
        Ok(base)
    }

    fn natural(&mut self) -> Result<(u64, usize), ParseError> {
        let start = self.pos;
        while self.pos < self.bytes.len() && self.bytes[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(self.error("expected a natural number"));
        }
        self.src[start..self.pos]
            .parse::<u64>()
            .map(|v| (v, start))
            .map_err(|_| ParseError {
                position: start,
                message: "number too large".into(),
            })
    }

    fn base(&mut self) -> Result<Polynomial, ParseError> {
        let Some(c) = self.peek() else {
            return Err(self.error("unexpected end of input"));
        };
        match c {
            b'(' => {
                self.pos += 1;
                let inner = self.expr()?;
                if self.peek() != Some(b')') {
                    return Err(self.error("expected ')'"));
                }
                self.pos += 1;
                Ok(inner)
            }
            b'0'..=b'9' => {
                let start = self.pos;
                let digits_end = self.bytes[start..]
                    .iter()
                    .position(|b| !b.is_ascii_digit())
                    .map_or(self.bytes.len(), |i| start + i);
                let p = self.field.characteristic() as u64;
                let value = self.src[start..digits_end]
                    .bytes()
                    .fold(0u64, |acc, d| (acc * 10 + (d - b'0') as u64) % p);
                self.pos = digits_end;
                if self.src[start..digits_end]
                    .parse::<u64>()
                    .map_or(true, |v| v >= p)
                {
                    self.diagnostics.push(Diagnostic {
                        position: start,
                        message: format!(
                            "integer {} reduced modulo {p} to {value}",
                            &self.src[start..digits_end]
                        ),
                    });
                }
                Ok(Polynomial::constant(
                    self.field,
                    self.nvars,
                    self.field.from_int(value as i64),
                ))
            }
            c if c.is_ascii_alphabetic() || c == b'_' => {
                let start = self.pos;
                while self.pos < self.bytes.len()
                    && (self.bytes[self.pos].is_ascii_alphanumeric()
                        || self.bytes[self.pos] == b'_')
                {
                    self.pos += 1;
                }
                let ident = &self.src[start..self.pos];
                self.identifier(ident, start)
            }
            _ => Err(self.error(&format!(
                "unexpected '{}'",
                self.src[self.pos..].chars().next().unwrap()
            ))),
        }
    }

    fn identifier(&mut self, ident: &str, start: usize) -> Result<Polynomial, ParseError> {
        if let Some(p) = self.names.get(ident) {
            if p.field() != self.field || p.nvars() != self.nvars {
                return Err(ParseError {
                    position: start,
                    message: format!("'{ident}' is defined over a different ring"),
                });
            }
            return Ok(p.clone());
        }
        let var_index = match ident {
            "x" if self.nvars <= 3 => Some(0),
            "y" if (2..=3).contains(&self.nvars) => Some(1),
            "z" if self.nvars == 3 => Some(2),
            _ => ident
                .strip_prefix('x')
                .filter(|d| !d.is_empty() && d.bytes().all(|b| b.is_ascii_digit()))
                .and_then(|d| d.parse::<usize>().ok())
                .filter(|&i| i < self.nvars),
        };
        if let Some(i) = var_index {
            return Ok(Polynomial::var(self.field, self.nvars, i).expect("index checked"));
        }
        if ident == "t" {
            if self.field.degree() == 1 {
                return Err(ParseError {
                    position: start,
                    message: format!(
                        "coefficient 't' is not valid in the prime field {}",
                        self.field
                    ),
                });
            }
            return Ok(Polynomial::constant(
                self.field,
                self.nvars,
                self.field.generator(),
            ));
        }
        Err(ParseError {
            position: start,
            message: format!("unknown variable '{ident}'"),
        })
    }
}
