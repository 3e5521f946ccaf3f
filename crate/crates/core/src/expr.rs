//! Infix expressions over named generators, e.g. `2*X3*X1 - (X1 + 1/2)^2`.
//!
//! Grammar (whitespace ignored):
//!
//! ```text
//! expr   := ['+' | '-'] term (('+' | '-') term)*
//! term   := factor ('*' factor)*
//! factor := atom ('^' integer)?
//! atom   := integer ['/' integer] | name | '(' expr ')'
//! ```

use crate::error::{Error, Result};
use crate::freealg::{FreePoly, WeightedOrder};
use crate::scalar::Scalar;

pub fn parse(input: &str, order: &WeightedOrder) -> Result<FreePoly> {
    let mut p = Parser { src: input.as_bytes(), pos: 0, order };
    let poly = p.expr()?;
    p.skip_ws();
    if p.pos < p.src.len() {
        return Err(p.error("unexpected trailing input"));
    }
    Ok(poly)
}

struct Parser<'a> {
    src: &'a [u8],
    pos: usize,
    order: &'a WeightedOrder,
}

impl Parser<'_> {
    fn error(&self, msg: &str) -> Error {
        Error::input(format!("{msg} at column {}", self.pos + 1))
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

    fn eat(&mut self, c: u8) -> bool {
        if self.peek() == Some(c) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn expr(&mut self) -> Result<FreePoly> {
        let mut acc = if self.eat(b'-') {
            -&self.term()?
        } else {
            self.eat(b'+');
            self.term()?
        };
        loop {
            if self.eat(b'+') {
                acc = &acc + &self.term()?;
            } else if self.eat(b'-') {
                acc = &acc - &self.term()?;
            } else {
                return Ok(acc);
            }
        }
    }

    fn term(&mut self) -> Result<FreePoly> {
        let mut acc = self.factor()?;
        while self.eat(b'*') {
            acc = &acc * &self.factor()?;
        }
        Ok(acc)
    }

    fn factor(&mut self) -> Result<FreePoly> {
        let base = self.atom()?;
        if self.eat(b'^') {
            self.skip_ws();
            let digits = self.digits();
            if digits.is_empty() {
                return Err(self.error("expected exponent"));
            }
            let exp: u32 = digits.parse().map_err(|_| self.error("exponent too large"))?;
            let mut acc = FreePoly::one();
            for _ in 0..exp {
                acc = &acc * &base;
            }
            return Ok(acc);
        }
        Ok(base)
    }

    fn digits(&mut self) -> String {
        let start = self.pos;
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        String::from_utf8_lossy(&self.src[start..self.pos]).into_owned()
    }

    fn atom(&mut self) -> Result<FreePoly> {
        match self.peek() {
            Some(b'(') => {
                self.pos += 1;
                let inner = self.expr()?;
                if !self.eat(b')') {
                    return Err(self.error("expected ')'"));
                }
                Ok(inner)
            }
            Some(c) if c.is_ascii_digit() => {
                let num = self.digits();
                let save = self.pos;
                let lit = if self.eat(b'/') {
                    self.skip_ws();
                    let den = self.digits();
                    if den.is_empty() {
                        self.pos = save;
                        return Err(self.error("expected denominator"));
                    }
                    format!("{num}/{den}")
                } else {
                    num
                };
                let value: Scalar = lit.parse().map_err(|e: Error| self.error(&e.to_string()))?;
                Ok(FreePoly::constant(value))
            }
            Some(c) if c.is_ascii_alphabetic() || c == b'_' => {
                let start = self.pos;
                while self.pos < self.src.len() && (self.src[self.pos].is_ascii_alphanumeric() || self.src[self.pos] == b'_') {
                    self.pos += 1;
                }
                let name = std::str::from_utf8(&self.src[start..self.pos]).expect("ascii");
                match self.order.index_of(name) {
                    Some(i) => Ok(FreePoly::letter(i)),
                    None => {
                        self.pos = start;
                        Err(self.error(&format!("unknown generator '{name}'")))
                    }
                }
            }
            Some(_) => Err(self.error("unexpected character")),
            None => Err(self.error("unexpected end of input")),
        }
    }
}
