//! Recursive-descent parser for the expression syntax used by golden files
//! and the command line.
//!
//! Grammar: sums and differences of products and quotients of powers; atoms
//! are integers, registered symbol names, parenthesised expressions, and
//! optional `name[i,j,…]` calls resolved by the caller. Exponents are
//! (possibly negative) integers. Division is allowed by constants in the
//! coefficient field and by monomials in the Laurent variables.

use super::laurent::LaurentPoly;
use super::ratfunc::RatFunc;
use super::sym::Sym;
use crate::error::{Error, Result};
use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;
use num_bigint::BigInt;

/// Resolves `name[args]` atoms.
pub type CallHook<'a> = &'a dyn Fn(&str, &[i64]) -> Option<LaurentPoly>;

struct Parser<'a> {
    src: &'a [u8],
    pos: usize,
    vars: &'a [Sym],
    hook: Option<CallHook<'a>>,
}

/// Parses `src` into a Laurent polynomial over `vars`; other symbols become
/// coefficient-field indeterminates.
pub fn parse_laurent(src: &str, vars: &[Sym]) -> Result<LaurentPoly> {
    parse_laurent_with(src, vars, None)
}

pub fn parse_laurent_with(src: &str, vars: &[Sym], hook: Option<CallHook<'_>>) -> Result<LaurentPoly> {
    let mut p = Parser { src: src.as_bytes(), pos: 0, vars, hook };
    let v = p.expr()?;
    p.ws();
    if p.pos != p.src.len() {
        return Err(p.err("trailing input"));
    }
    v.with_vars(vars)
}

/// Parses a coefficient-field element.
pub fn parse_ratfunc(src: &str) -> Result<RatFunc> {
    let p = parse_laurent(src, &[])?;
    p.as_constant().ok_or_else(|| Error::Parse { pos: 0, msg: String::from("not a constant") })
}

impl<'a> Parser<'a> {
    fn err(&self, msg: &str) -> Error {
        Error::Parse { pos: self.pos, msg: String::from(msg) }
    }

    fn ws(&mut self) {
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.ws();
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

    fn expr(&mut self) -> Result<LaurentPoly> {
        let mut acc = if self.eat(b'-') {
            -self.term()?
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

    fn term(&mut self) -> Result<LaurentPoly> {
        let mut acc = self.power()?;
        loop {
            if self.eat(b'*') {
                acc = &acc * &self.power()?;
            } else if self.eat(b'/') {
                let d = self.power()?;
                acc = self.divide(acc, d)?;
            } else {
                return Ok(acc);
            }
        }
    }

    fn divide(&self, a: LaurentPoly, d: LaurentPoly) -> Result<LaurentPoly> {
        if let Some(c) = d.as_constant() {
            let inv = c.inv().map_err(|_| self.err("division by zero"))?;
            return Ok(a.scale(&inv));
        }
        match d.inv_monomial() {
            Some(inv) => Ok(&a * &inv),
            None => a.div_exact(&d).ok_or_else(|| self.err("division by a non-unit Laurent polynomial")),
        }
    }

    fn power(&mut self) -> Result<LaurentPoly> {
        let base = self.atom()?;
        if self.eat(b'^') {
            let neg = self.eat(b'-');
            let k = self.integer()?;
            let k: i32 = k.try_into().map_err(|_| self.err("exponent too large"))?;
            let k = if neg { -k } else { k };
            if let Some(c) = base.as_constant() {
                if k < 0 && c.is_zero() {
                    return Err(self.err("zero to a negative power"));
                }
                return Ok(LaurentPoly::constant(c.pow(k as i64)));
            }
            return base.pow(k).map_err(|_| self.err("negative power of a non-monomial"));
        }
        Ok(base)
    }

    fn integer(&mut self) -> Result<BigInt> {
        self.ws();
        let start = self.pos;
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(self.err("expected integer"));
        }
        let s = core::str::from_utf8(&self.src[start..self.pos]).unwrap();
        s.parse::<BigInt>().map_err(|_| self.err("bad integer"))
    }

    fn int_list(&mut self) -> Result<Vec<i64>> {
        let mut v = Vec::new();
        if self.eat(b']') {
            return Ok(v);
        }
        loop {
            let neg = self.eat(b'-');
            let k = self.integer()?;
            let k: i64 = k.try_into().map_err(|_| self.err("integer too large"))?;
            v.push(if neg { -k } else { k });
            if self.eat(b']') {
                return Ok(v);
            }
            if !self.eat(b',') {
                return Err(self.err("expected ',' or ']'"));
            }
        }
    }

    fn atom(&mut self) -> Result<LaurentPoly> {
        match self.peek() {
            Some(b'(') => {
                self.pos += 1;
                let v = self.expr()?;
                if !self.eat(b')') {
                    return Err(self.err("expected ')'"));
                }
                Ok(v)
            }
            Some(c) if c.is_ascii_digit() => {
                let k = self.integer()?;
                Ok(LaurentPoly::constant(RatFunc::from_poly(super::IntPoly::from_bigint(k))))
            }
            Some(c) if c.is_ascii_alphabetic() => {
                let start = self.pos;
                while self.pos < self.src.len() && self.src[self.pos].is_ascii_alphanumeric() {
                    self.pos += 1;
                }
                let name = core::str::from_utf8(&self.src[start..self.pos]).unwrap();
                if self.src.get(self.pos) == Some(&b'[') {
                    self.pos += 1;
                    let args = self.int_list()?;
                    let hook = self.hook.ok_or_else(|| self.err("calls are not enabled"))?;
                    return hook(name, &args).ok_or_else(|| Error::Parse {
                        pos: start,
                        msg: format!("unknown call {}", name),
                    });
                }
                let s = Sym::from_name(name)
                    .ok_or_else(|| Error::Parse { pos: start, msg: format!("unknown symbol {}", name) })?;
                if self.vars.contains(&s) {
                    Ok(LaurentPoly::var_in(&[s], s))
                } else {
                    Ok(LaurentPoly::constant(RatFunc::var(s)))
                }
            }
            _ => Err(self.err("unexpected character")),
        }
    }
}
