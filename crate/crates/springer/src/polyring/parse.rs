//! Recursive-descent parser for the polynomial text grammar.
//!
//! Grammar (whitespace insensitive):
//! ```text
//! expr   := ['-'] term (('+' | '-') term)*
//! term   := factor ('*' factor)*
//! factor := atom ['^' integer]
//! atom   := integer | variable | '(' expr ')'
//! ```
//! Variables are `y<k>`, `u<k>`, `t<k>` with `k ≥ 1`; integer literals are
//! arbitrary precision; exponents are nonnegative.

use num_bigint::BigInt;

use super::{Family, Poly, Var};
use crate::error::Error;
use crate::Result;

pub(super) fn parse_poly(input: &str) -> Result<Poly> {
    let mut p = Parser {
        bytes: input.as_bytes(),
        pos: 0,
    };
    p.skip_ws();
    let poly = p.expr()?;
    p.skip_ws();
    if p.pos != p.bytes.len() {
        return Err(p.err("unexpected trailing input"));
    }
    Ok(poly)
}

struct Parser<'a> {
    bytes: &'a [u8],
    pos: usize,
}

impl<'a> Parser<'a> {
    fn err(&self, msg: &str) -> Error {
        Error::Parse {
            pos: self.pos,
            msg: msg.to_string(),
        }
    }

    fn peek(&self) -> Option<u8> {
        self.bytes.get(self.pos).copied()
    }

    fn skip_ws(&mut self) {
        while matches!(self.peek(), Some(b) if b.is_ascii_whitespace()) {
            self.pos += 1;
        }
    }

    fn eat(&mut self, b: u8) -> bool {
        if self.peek() == Some(b) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn expr(&mut self) -> Result<Poly> {
        self.skip_ws();
        let negate = self.eat(b'-');
        let mut acc = self.term()?;
        if negate {
            acc = -acc;
        }
        loop {
            self.skip_ws();
            if self.eat(b'+') {
                let t = self.term()?;
                acc = &acc + &t;
            } else if self.eat(b'-') {
                let t = self.term()?;
                acc = &acc - &t;
            } else {
                break;
            }
        }
        Ok(acc)
    }

    fn term(&mut self) -> Result<Poly> {
        let mut acc = self.factor()?;
        loop {
            self.skip_ws();
            if self.eat(b'*') {
                let f = self.factor()?;
                acc = &acc * &f;
            } else {
                break;
            }
        }
        Ok(acc)
    }

    fn factor(&mut self) -> Result<Poly> {
        let base = self.atom()?;
        self.skip_ws();
        if self.eat(b'^') {
            self.skip_ws();
            let e = self.unsigned_integer()?;
            let e: u32 = e
                .parse()
                .map_err(|_| self.err("exponent too large"))?;
            Ok(base.pow(e))
        } else {
            Ok(base)
        }
    }

    fn atom(&mut self) -> Result<Poly> {
        self.skip_ws();
        match self.peek() {
            Some(b'(') => {
                self.pos += 1;
                let inner = self.expr()?;
                self.skip_ws();
                if !self.eat(b')') {
                    return Err(self.err("expected ')'"));
                }
                Ok(inner)
            }
            Some(b) if b.is_ascii_digit() => {
                let digits = self.unsigned_integer()?;
                let value: BigInt = digits.parse().expect("digits form an integer");
                Ok(Poly::constant(value))
            }
            Some(b) if b.is_ascii_alphabetic() => {
                let fam = Family::from_letter(b as char)
                    .ok_or_else(|| self.err("unknown variable family (expected y, u, or t)"))?;
                self.pos += 1;
                let digits = self.unsigned_integer()?;
                let index: u32 = digits
                    .parse()
                    .map_err(|_| self.err("variable index too large"))?;
                if index == 0 {
                    return Err(self.err("variable indices start at 1"));
                }
                Ok(Poly::var(Var::new(fam, index)))
            }
            _ => Err(self.err("expected integer, variable, or '('")),
        }
    }

    fn unsigned_integer(&mut self) -> Result<String> {
        let start = self.pos;
        while matches!(self.peek(), Some(b) if b.is_ascii_digit()) {
            self.pos += 1;
        }
        if self.pos == start {
            return Err(self.err("expected an integer"));
        }
        Ok(std::str::from_utf8(&self.bytes[start..self.pos])
            .expect("digits are ascii")
            .to_string())
    }
}
