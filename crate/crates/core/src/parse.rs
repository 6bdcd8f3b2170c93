//! Text syntax for polynomials and scalars.
//!
//! Sums, differences, products, quotients by nonzero constants, integer
//! powers with `^` and parentheses, with the usual precedence. Integers are
//! the only literals; rationals are written as quotients. The name `w`
//! denotes the distinguished root of unity of the field unless the ring has a
//! variable of that name. This is the syntax polynomials are printed in, so
//! printing and parsing round-trip.

use std::sync::Arc;

use num_bigint::BigInt;
use num_rational::BigRational;

use crate::error::{Error, Result};
use crate::field::Field;
use crate::poly::{Polynomial, Ring};

/// Largest exponent accepted after `^`.
pub const MAX_EXPONENT: u32 = 4096;

pub fn parse_polynomial<F: Field>(ring: &Arc<Ring<F>>, text: &str) -> Result<Polynomial<F>> {
    let mut p = Parser { ring, text: text.as_bytes(), pos: 0 };
    p.skip_ws();
    if p.at_end() {
        return Err(p.syntax("empty expression"));
    }
    let out = p.expr()?;
    p.skip_ws();
    if !p.at_end() {
        return Err(p.syntax("unexpected character"));
    }
    Ok(out)
}

/// A field element, written in the same syntax without variables.
pub fn parse_scalar<F: Field>(field: &F, text: &str) -> Result<F::Elem> {
    let ring = Ring::new(field.clone(), &[])?;
    Ok(parse_polynomial(&ring, text)?.constant_term())
}

struct Parser<'a, F: Field> {
    ring: &'a Arc<Ring<F>>,
    text: &'a [u8],
    pos: usize,
}

impl<F: Field> Parser<'_, F> {
    fn at_end(&self) -> bool {
        self.pos >= self.text.len()
    }

    fn peek(&self) -> Option<u8> {
        self.text.get(self.pos).copied()
    }

    fn skip_ws(&mut self) {
        while self.peek().is_some_and(|c| c.is_ascii_whitespace()) {
            self.pos += 1;
        }
    }

    /// Consume `c` after optional whitespace.
    fn eat(&mut self, c: u8) -> bool {
        self.skip_ws();
        if self.peek() == Some(c) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn syntax(&self, msg: &str) -> Error {
        Error::Syntax {
            pos: self.pos,
            msg: msg.to_string(),
        }
    }

    fn expr(&mut self) -> Result<Polynomial<F>> {
        let mut acc = self.term()?;
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

    fn term(&mut self) -> Result<Polynomial<F>> {
        let mut acc = self.unary()?;
        loop {
            if self.eat(b'*') {
                acc = &acc * &self.unary()?;
            } else if self.eat(b'/') {
                self.skip_ws();
                let at = self.pos;
                let d = self.unary()?;
                if !d.is_constant() {
                    return Err(Error::Syntax {
                        pos: at,
                        msg: "division by a non-constant".into(),
                    });
                }
                let inv = self.ring.field().inv(&d.constant_term())?;
                acc = acc.scale(&inv);
            } else {
                return Ok(acc);
            }
        }
    }

    fn unary(&mut self) -> Result<Polynomial<F>> {
        if self.eat(b'-') {
            return Ok(self.unary()?.neg());
        }
        if self.eat(b'+') {
            return self.unary();
        }
        self.power()
    }

    fn power(&mut self) -> Result<Polynomial<F>> {
        let base = self.atom()?;
        if !self.eat(b'^') {
            return Ok(base);
        }
        self.skip_ws();
        let at = self.pos;
        let digits = self.digits();
        if digits.is_empty() {
            return Err(self.syntax("expected an exponent"));
        }
        let e = digits
            .parse::<u32>()
            .ok()
            .filter(|&e| e <= MAX_EXPONENT)
            .ok_or_else(|| Error::Syntax {
                pos: at,
                msg: format!("exponent above {MAX_EXPONENT}"),
            })?;
        Ok(base.pow(e))
    }

    fn digits(&mut self) -> String {
        let start = self.pos;
        while self.peek().is_some_and(|c| c.is_ascii_digit()) {
            self.pos += 1;
        }
        String::from_utf8_lossy(&self.text[start..self.pos]).into_owned()
    }

    fn atom(&mut self) -> Result<Polynomial<F>> {
        self.skip_ws();
        let start = self.pos;
        match self.peek() {
            Some(b'(') => {
                self.pos += 1;
                let inner = self.expr()?;
                if !self.eat(b')') {
                    return Err(self.syntax("expected ')'"));
                }
                Ok(inner)
            }
            Some(c) if c.is_ascii_digit() => {
                let digits = self.digits();
                let n: BigInt = digits.parse().expect("ascii digits");
                let c = self.ring.field().from_rational(&BigRational::from_integer(n))?;
                Ok(Polynomial::constant(self.ring, c))
            }
            Some(c) if c.is_ascii_alphabetic() || c == b'_' => {
                while self.peek().is_some_and(|c| c.is_ascii_alphanumeric() || c == b'_') {
                    self.pos += 1;
                }
                let name = std::str::from_utf8(&self.text[start..self.pos]).expect("ascii");
                if let Some(i) = self.ring.var_index(name) {
                    return Ok(Polynomial::var(self.ring, i));
                }
                match (name, self.ring.field().generator()) {
                    ("w", Some(w)) => Ok(Polynomial::constant(self.ring, w)),
                    _ => Err(Error::UnknownSymbol {
                        pos: start,
                        name: name.to_string(),
                    }),
                }
            }
            _ => Err(self.syntax("expected a number, a name or '('")),
        }
    }
}
