//! Recursive-descent parser for polynomial expressions.
//!
//! ```text
//! expr   := term (('+' | '-') term)*
//! term   := unary (('*' | '/') unary)*
//! unary  := ('+' | '-') unary | power
//! power  := atom ('^' integer)?
//! atom   := integer | name | '(' expr ')'
//! ```
//!
//! Division is only allowed by expressions free of main variables.
//! Whitespace is ignored.

use alloc::string::String;
use alloc::sync::Arc;

use num_bigint::BigInt;

use super::{ExpVec, Poly, Ring};
use crate::error::{Error, Result};
use crate::field::{Field, ParamRatio, Rational};

/// Largest exponent accepted by the parser.
const MAX_EXPONENT: u32 = 4096;

/// Parses `text` as a polynomial of `ring`.
pub fn parse_poly(text: &str, ring: &Arc<Ring>) -> Result<Poly> {
    let mut p = Parser {
        src: text.as_bytes(),
        pos: 0,
        ring,
    };
    let v = p.expr()?;
    p.skip_ws();
    if p.pos < p.src.len() {
        return Err(p.syntax("unexpected trailing input"));
    }
    Ok(v)
}

struct Parser<'a> {
    src: &'a [u8],
    pos: usize,
    ring: &'a Arc<Ring>,
}

impl Parser<'_> {
    fn syntax(&self, msg: &str) -> Error {
        Error::Syntax {
            pos: self.pos,
            msg: msg.into(),
        }
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
        let mut acc = self.term()?;
        while let Some(c @ (b'+' | b'-')) = self.peek() {
            self.pos += 1;
            let rhs = self.term()?;
            acc = if c == b'+' { &acc + &rhs } else { &acc - &rhs };
        }
        Ok(acc)
    }

    fn term(&mut self) -> Result<Poly> {
        let mut acc = self.unary()?;
        while let Some(c @ (b'*' | b'/')) = self.peek() {
            self.pos += 1;
            let at = self.pos;
            let rhs = self.unary()?;
            if c == b'*' {
                acc = &acc * &rhs;
            } else {
                let d = scalar_of(&rhs).ok_or(Error::Syntax {
                    pos: at,
                    msg: "division by a non-constant expression".into(),
                })?;
                let inv = d.inv().ok_or(Error::DivisionByZero)?;
                acc = acc.scale(&inv);
            }
        }
        Ok(acc)
    }

    fn unary(&mut self) -> Result<Poly> {
        match self.peek() {
            Some(b'-') => {
                self.pos += 1;
                Ok(-&self.unary()?)
            }
            Some(b'+') => {
                self.pos += 1;
                self.unary()
            }
            _ => self.power(),
        }
    }

    fn power(&mut self) -> Result<Poly> {
        let base = self.atom()?;
        if self.peek() != Some(b'^') {
            return Ok(base);
        }
        self.pos += 1;
        let at = {
            self.skip_ws();
            self.pos
        };
        if self.peek() == Some(b'-') {
            return Err(Error::NegativeExponent { pos: at });
        }
        let (paren, e) = if self.peek() == Some(b'(') {
            self.pos += 1;
            if self.peek() == Some(b'-') {
                return Err(Error::NegativeExponent { pos: self.pos });
            }
            (true, self.integer()?)
        } else {
            (false, self.integer()?)
        };
        if paren {
            if self.peek() != Some(b')') {
                return Err(self.syntax("expected `)`"));
            }
            self.pos += 1;
        }
        let e: u32 = u32::try_from(&e)
            .ok()
            .filter(|&e| e <= MAX_EXPONENT)
            .ok_or(Error::Syntax {
                pos: at,
                msg: "exponent too large".into(),
            })?;
        Ok(base.pow(e))
    }

    fn integer(&mut self) -> Result<BigInt> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(self.syntax("expected an integer"));
        }
        let digits = core::str::from_utf8(&self.src[start..self.pos]).expect("ascii");
        Ok(digits.parse::<BigInt>().expect("digits"))
    }

    fn atom(&mut self) -> Result<Poly> {
        match self.peek() {
            Some(b'(') => {
                self.pos += 1;
                let v = self.expr()?;
                if self.peek() != Some(b')') {
                    return Err(self.syntax("expected `)`"));
                }
                self.pos += 1;
                Ok(v)
            }
            Some(c) if c.is_ascii_digit() => {
                let n = self.integer()?;
                Ok(Poly::constant(
                    self.ring,
                    ParamRatio::from_rational(Rational::from_bigint(n)),
                ))
            }
            Some(c) if c.is_ascii_alphabetic() || c == b'_' => {
                let start = self.pos;
                while self.pos < self.src.len()
                    && (self.src[self.pos].is_ascii_alphanumeric() || self.src[self.pos] == b'_')
                {
                    self.pos += 1;
                }
                let name = core::str::from_utf8(&self.src[start..self.pos]).expect("ascii");
                if let Some(i) = self.ring.var_index(name) {
                    Ok(Poly::monomial(self.ring, ExpVec::unit(i), ParamRatio::from_int(1)))
                } else if let Some(i) = self.ring.param_index(name) {
                    Ok(Poly::param(self.ring, i))
                } else {
                    Err(Error::UnknownSymbol {
                        name: String::from(name),
                    })
                }
            }
            Some(_) => Err(self.syntax("unexpected character")),
            None => Err(self.syntax("unexpected end of input")),
        }
    }
}

fn scalar_of(p: &Poly) -> Option<ParamRatio> {
    match p.len() {
        0 => Some(ParamRatio::from_int(0)),
        1 => {
            let (e, c) = p.terms().next()?;
            (*e == ExpVec::ZERO).then(|| c.clone())
        }
        _ => None,
    }
}
