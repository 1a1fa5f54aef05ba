//! Text grammar for polynomials.
//!
//! ```text
//! poly     := ['+'|'-'] term (('+'|'-') term)*
//! term     := coeff | coeff '*' monomial | monomial
//! coeff    := integer | integer '/' integer
//! monomial := factor ('*' factor)*
//! factor   := var | var '^' integer
//! ```
//! Whitespace is ignored everywhere.

use num_bigint::BigInt;

use super::poly::{Monomial, MultiPoly};
use super::rational::Rational;
use crate::error::{Error, Result};

/// Parses `text` into a polynomial over the given variables.
pub fn parse_poly(text: &str, variables: &[&str]) -> Result<MultiPoly> {
    let mut parser = Parser {
        src: text.as_bytes(),
        pos: 0,
        vars: variables,
    };
    parser.poly()
}

struct Parser<'a> {
    src: &'a [u8],
    pos: usize,
    vars: &'a [&'a str],
}

impl Parser<'_> {
    fn err<T>(&self, msg: impl Into<String>) -> Result<T> {
        Err(Error::Syntax {
            pos: self.pos,
            msg: msg.into(),
        })
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

    fn eat(&mut self, ch: u8) -> bool {
        if self.peek() == Some(ch) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn poly(&mut self) -> Result<MultiPoly> {
        let mut acc = MultiPoly::zero(self.vars);
        if self.peek().is_none() {
            return self.err("empty input");
        }
        let mut sign = if self.eat(b'-') {
            -Rational::one()
        } else {
            self.eat(b'+');
            Rational::one()
        };
        loop {
            let (mono, coeff) = self.term()?;
            acc = &acc + &acc.monomial_like(mono, &sign * &coeff);
            match self.peek() {
                None => return Ok(acc),
                Some(b'+') => {
                    self.pos += 1;
                    sign = Rational::one();
                }
                Some(b'-') => {
                    self.pos += 1;
                    sign = -Rational::one();
                }
                Some(c) => return self.err(format!("unexpected `{}`", c as char)),
            }
        }
    }

    fn term(&mut self) -> Result<(Monomial, Rational)> {
        let mut exps = vec![0u32; self.vars.len()];
        let coeff = match self.peek() {
            Some(c) if c.is_ascii_digit() => {
                let c = self.coeff()?;
                if !self.eat(b'*') {
                    return Ok((Monomial(exps), c));
                }
                c
            }
            Some(c) if c.is_ascii_alphabetic() || c == b'_' => Rational::one(),
            Some(c) => return self.err(format!("expected a term, found `{}`", c as char)),
            None => return self.err("expected a term, found end of input"),
        };
        loop {
            let (var, power) = self.factor()?;
            exps[var] += power;
            if !self.eat(b'*') {
                break;
            }
        }
        Ok((Monomial(exps), coeff))
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
        let digits = std::str::from_utf8(&self.src[start..self.pos]).expect("ascii digits");
        Ok(digits.parse().expect("digits parse"))
    }

    fn coeff(&mut self) -> Result<Rational> {
        let numer = self.integer()?;
        if self.eat(b'/') {
            let denom = self.integer()?;
            return Rational::new(numer, denom).or_else(|_| self.err("zero denominator"));
        }
        Ok(Rational::from_integer(numer))
    }

    fn factor(&mut self) -> Result<(usize, u32)> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.src.len()
            && (self.src[self.pos].is_ascii_alphanumeric() || self.src[self.pos] == b'_')
        {
            self.pos += 1;
        }
        if start == self.pos {
            return self.err("expected a variable");
        }
        let name = std::str::from_utf8(&self.src[start..self.pos]).expect("ascii name");
        if name.as_bytes()[0].is_ascii_digit() {
            self.pos = start;
            return self.err("coefficient must come first in a term");
        }
        let var = self
            .vars
            .iter()
            .position(|v| *v == name)
            .ok_or_else(|| Error::UnknownVariable(name.to_string()))?;
        let power = if self.eat(b'^') {
            let k = self.integer()?;
            match u32::try_from(k) {
                Ok(k) => k,
                Err(_) => return self.err("exponent too large"),
            }
        } else {
            1
        };
        Ok((var, power))
    }
}
