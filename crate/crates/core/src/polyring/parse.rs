use std::sync::Arc;

use num_bigint::BigInt;

use super::monomial::Monomial;
use super::poly::Polynomial;
use super::universe::VarUniverse;
use crate::error::{Error, Result};

type Poly = Polynomial<BigInt>;

struct Parser<'a> {
    src: &'a [u8],
    pos: usize,
    universe: &'a Arc<VarUniverse>,
}

impl<'a> Parser<'a> {
    fn err<T>(&self, msg: impl Into<String>) -> Result<T> {
        Err(Error::Parse { pos: self.pos, msg: msg.into() })
    }

    fn skip_ws(&mut self) {
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.src.get(self.pos).copied()
    }

    fn expr(&mut self) -> Result<Poly> {
        let mut acc = Polynomial::zero(self.universe);
        let mut sign = match self.peek() {
            Some(b'-') => {
                self.pos += 1;
                -1
            }
            Some(b'+') => {
                self.pos += 1;
                1
            }
            _ => 1,
        };
        loop {
            let t = self.term()?;
            acc = if sign < 0 { &acc - &t } else { &acc + &t };
            match self.peek() {
                Some(b'+') => sign = 1,
                Some(b'-') => sign = -1,
                _ => return Ok(acc),
            }
            self.pos += 1;
        }
    }

    fn term(&mut self) -> Result<Poly> {
        let mut acc = self.factor()?;
        while self.peek() == Some(b'*') {
            self.pos += 1;
            let f = self.factor()?;
            acc = &acc * &f;
        }
        Ok(acc)
    }

    fn integer(&mut self) -> Result<BigInt> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if start == self.pos {
            return self.err("expected an integer");
        }
        let s = std::str::from_utf8(&self.src[start..self.pos]).unwrap();
        Ok(s.parse().unwrap())
    }

    fn factor(&mut self) -> Result<Poly> {
        let base = match self.peek() {
            Some(b'(') => {
                self.pos += 1;
                let e = self.expr()?;
                if self.peek() != Some(b')') {
                    return self.err("expected `)`");
                }
                self.pos += 1;
                e
            }
            Some(c) if c.is_ascii_digit() => Polynomial::constant(self.universe, self.integer()?),
            Some(c) if c.is_ascii_alphabetic() || c == b'_' => {
                let start = self.pos;
                while self.pos < self.src.len()
                    && (self.src[self.pos].is_ascii_alphanumeric() || self.src[self.pos] == b'_')
                {
                    self.pos += 1;
                }
                let name = std::str::from_utf8(&self.src[start..self.pos]).unwrap();
                match self.universe.var(name) {
                    Some(v) => Polynomial::monomial(
                        self.universe,
                        Monomial::var(self.universe.len(), v, 1),
                        BigInt::from(1),
                    ),
                    None => {
                        self.pos = start;
                        return self.err(format!("unknown variable `{name}`"));
                    }
                }
            }
            Some(_) => return self.err("unexpected character"),
            None => return self.err("unexpected end of input"),
        };
        if self.peek() == Some(b'^') {
            self.pos += 1;
            let e = self.integer()?;
            let e: u32 = e.try_into().map_err(|_| Error::Parse { pos: self.pos, msg: "exponent too large".into() })?;
            return Ok(base.pow(e));
        }
        Ok(base)
    }
}

impl Polynomial<BigInt> {
    /// Parses expressions like `3*c0^2*x1 - (x1 + x2)^2` over `universe`.
    pub fn parse(universe: &Arc<VarUniverse>, src: &str) -> Result<Self> {
        let mut p = Parser { src: src.as_bytes(), pos: 0, universe };
        let out = p.expr()?;
        if p.peek().is_some() {
            return p.err("trailing input");
        }
        Ok(out)
    }
}

/// Parses a comma-separated list of monomials such as `x1^2*x2, x2^3`.
/// Returns each monomial with the byte offset at which it starts.
pub fn parse_monomial_list(universe: &Arc<VarUniverse>, src: &str) -> Result<Vec<(usize, Monomial)>> {
    let mut out = Vec::new();
    let mut offset = 0;
    for piece in src.split(',') {
        let lead = piece.len() - piece.trim_start().len();
        let start = offset + lead;
        let trimmed = piece.trim();
        if trimmed.is_empty() {
            return Err(Error::Parse { pos: start, msg: "empty monomial".into() });
        }
        let p = Polynomial::parse(universe, trimmed).map_err(|e| match e {
            Error::Parse { pos, msg } => Error::Parse { pos: start + pos, msg },
            other => other,
        })?;
        match p.terms() {
            [(m, c)] if *c == BigInt::from(1) => out.push((start, m.clone())),
            _ => return Err(Error::Parse { pos: start, msg: format!("`{trimmed}` is not a monomial") }),
        }
        offset += piece.len() + 1;
    }
    Ok(out)
}
