//! Recursive-descent parser for polynomial text.
//!
//! Grammar: sums and differences of products, `^` with a nonnegative integer
//! exponent, parentheses, implicit multiplication (`2x`, `x y`) and division
//! by nonzero constants.

use std::sync::Arc;

use num_bigint::BigInt;
use num_rational::BigRational;

use super::poly::{PolyRing, Polynomial};
use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq)]
enum Tok {
    Num(BigInt),
    Ident(String),
    Plus,
    Minus,
    Star,
    Slash,
    Caret,
    LParen,
    RParen,
}

fn err(column: usize, message: impl Into<String>) -> Error {
    Error::Parse {
        line: 1,
        column,
        message: message.into(),
    }
}

fn lex(text: &str) -> Result<Vec<(Tok, usize)>> {
    let chars: Vec<char> = text.chars().collect();
    let mut out = Vec::new();
    let mut i = 0;
    while i < chars.len() {
        let c = chars[i];
        let col = i + 1;
        if c.is_whitespace() {
            i += 1;
            continue;
        }
        if c.is_ascii_digit() {
            let start = i;
            while i < chars.len() && chars[i].is_ascii_digit() {
                i += 1;
            }
            let s: String = chars[start..i].iter().collect();
            out.push((Tok::Num(s.parse().unwrap()), col));
            continue;
        }
        if c.is_ascii_alphabetic() || c == '_' {
            let start = i;
            while i < chars.len() && (chars[i].is_ascii_alphanumeric() || chars[i] == '_') {
                i += 1;
            }
            out.push((Tok::Ident(chars[start..i].iter().collect()), col));
            continue;
        }
        let t = match c {
            '+' => Tok::Plus,
            '-' => Tok::Minus,
            '*' => Tok::Star,
            '/' => Tok::Slash,
            '^' => Tok::Caret,
            '(' => Tok::LParen,
            ')' => Tok::RParen,
            other => return Err(err(col, format!("unexpected character `{other}`"))),
        };
        out.push((t, col));
        i += 1;
    }
    Ok(out)
}

struct Parser<'a> {
    ring: &'a Arc<PolyRing>,
    toks: Vec<(Tok, usize)>,
    pos: usize,
    end_col: usize,
}

impl Parser<'_> {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos).map(|(t, _)| t)
    }

    fn col(&self) -> usize {
        self.toks.get(self.pos).map(|(_, c)| *c).unwrap_or(self.end_col)
    }

    fn bump(&mut self) -> Option<Tok> {
        let t = self.toks.get(self.pos).map(|(t, _)| t.clone());
        self.pos += 1;
        t
    }

    fn expr(&mut self) -> Result<Polynomial> {
        let mut acc = match self.peek() {
            Some(Tok::Minus) => {
                self.bump();
                self.term()?.neg()
            }
            Some(Tok::Plus) => {
                self.bump();
                self.term()?
            }
            _ => self.term()?,
        };
        loop {
            match self.peek() {
                Some(Tok::Plus) => {
                    self.bump();
                    acc = acc.add(&self.term()?);
                }
                Some(Tok::Minus) => {
                    self.bump();
                    acc = acc.sub(&self.term()?);
                }
                _ => return Ok(acc),
            }
        }
    }

    fn term(&mut self) -> Result<Polynomial> {
        let mut acc = self.power()?;
        loop {
            match self.peek() {
                Some(Tok::Star) => {
                    self.bump();
                    acc = acc.mul(&self.power()?);
                }
                Some(Tok::Slash) => {
                    self.bump();
                    let col = self.col();
                    let d = self.power()?;
                    if !d.is_unit() {
                        return Err(err(col, "division by a non-constant or zero"));
                    }
                    let f = self.ring.field();
                    acc = acc.scale(&f.inv(d.leading_coeff().unwrap()));
                }
                Some(Tok::Num(_)) | Some(Tok::Ident(_)) | Some(Tok::LParen) => {
                    acc = acc.mul(&self.power()?);
                }
                _ => return Ok(acc),
            }
        }
    }

    fn power(&mut self) -> Result<Polynomial> {
        let base = self.atom()?;
        if self.peek() == Some(&Tok::Caret) {
            self.bump();
            let col = self.col();
            match self.bump() {
                Some(Tok::Num(n)) => {
                    let e: u32 = n
                        .try_into()
                        .map_err(|_| err(col, "exponent too large"))?;
                    if e > u16::MAX as u32 {
                        return Err(err(col, "exponent too large"));
                    }
                    Ok(base.pow(e))
                }
                _ => Err(err(col, "expected a nonnegative integer exponent")),
            }
        } else {
            Ok(base)
        }
    }

    fn atom(&mut self) -> Result<Polynomial> {
        let col = self.col();
        match self.bump() {
            Some(Tok::Num(n)) => {
                let c = self
                    .ring
                    .field()
                    .from_rational(&BigRational::from_integer(n))
                    .map_err(|e| err(col, e.to_string()))?;
                Ok(Polynomial::constant(self.ring, c))
            }
            Some(Tok::Ident(name)) => Polynomial::var_named(self.ring, &name)
                .map_err(|_| err(col, format!("unknown variable `{name}`"))),
            Some(Tok::LParen) => {
                let inner = self.expr()?;
                let c = self.col();
                match self.bump() {
                    Some(Tok::RParen) => Ok(inner),
                    _ => Err(err(c, "expected `)`")),
                }
            }
            Some(Tok::Minus) => Ok(self.power()?.neg()),
            Some(t) => Err(err(col, format!("unexpected token {t:?}"))),
            None => Err(err(col, "unexpected end of input")),
        }
    }
}

pub(crate) fn parse_polynomial(ring: &Arc<PolyRing>, text: &str) -> Result<Polynomial> {
    let toks = lex(text)?;
    if toks.is_empty() {
        return Err(err(1, "empty polynomial"));
    }
    let mut p = Parser {
        ring,
        toks,
        pos: 0,
        end_col: text.chars().count() + 1,
    };
    let out = p.expr()?;
    if p.pos < p.toks.len() {
        return Err(err(p.col(), "trailing input"));
    }
    Ok(out)
}
