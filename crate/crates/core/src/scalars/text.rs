//! Text grammar for scalars.
//!
//! Laurent polynomials print as signed sums in descending exponent order,
//! e.g. `-a^2 - a^-2` or `1/2*a^3 + 2`. Rational functions print as
//! `num / (den)`, with the numerator parenthesized when it has several terms.
//! The parser accepts any arithmetic expression in `a` built from rational
//! literals, `+ - * /`, integer powers and parentheses.

use std::fmt;

use num::{BigInt, One, Signed, Zero};

use super::laurent::{LaurentPoly, Q};
use super::ratfunc::RatFunc;
use crate::error::{Error, Result};

fn write_term(f: &mut fmt::Formatter<'_>, c: &Q, e: i64) -> fmt::Result {
    let c = c.abs();
    let unit = c.is_one();
    if e == 0 {
        return write!(f, "{c}");
    }
    if !unit {
        write!(f, "{c}*")?;
    }
    if e == 1 {
        write!(f, "a")
    } else {
        write!(f, "a^{e}")
    }
}

impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (i, (e, c)) in self.terms().rev().enumerate() {
            match (i, c.is_negative()) {
                (0, true) => write!(f, "-")?,
                (0, false) => {}
                (_, true) => write!(f, " - ")?,
                (_, false) => write!(f, " + ")?,
            }
            write_term(f, c, e)?;
        }
        Ok(())
    }
}

impl fmt::Display for RatFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if let Some(p) = self.as_laurent() {
            return write!(f, "{p}");
        }
        if self.numerator().num_terms() > 1 {
            write!(f, "({})", self.numerator())?;
        } else {
            write!(f, "{}", self.numerator())?;
        }
        write!(f, " / ({})", self.denominator())
    }
}

#[derive(Debug, Clone, PartialEq)]
enum Tok {
    Num(Q),
    A,
    Plus,
    Minus,
    Star,
    Slash,
    Caret,
    LParen,
    RParen,
}

fn lex(s: &str) -> Result<Vec<Tok>> {
    let err = |m: String| Error::parse(1, m);
    let chars: Vec<char> = s.chars().collect();
    let mut out = Vec::new();
    let mut i = 0;
    let digits = |i: &mut usize| -> String {
        let start = *i;
        while *i < chars.len() && chars[*i].is_ascii_digit() {
            *i += 1;
        }
        chars[start..*i].iter().collect()
    };
    while i < chars.len() {
        let c = chars[i];
        match c {
            ' ' | '\t' => i += 1,
            '0'..='9' => {
                let n: BigInt = digits(&mut i).parse().unwrap();
                // `p/q` with no spaces is a single rational literal.
                if i + 1 < chars.len() && chars[i] == '/' && chars[i + 1].is_ascii_digit() {
                    i += 1;
                    let d: BigInt = digits(&mut i).parse().unwrap();
                    if d.is_zero() {
                        return Err(Error::DivisionByZero);
                    }
                    out.push(Tok::Num(Q::new(n, d)));
                } else {
                    out.push(Tok::Num(Q::from_integer(n)));
                }
            }
            'a' => {
                out.push(Tok::A);
                i += 1;
            }
            _ => {
                out.push(match c {
                    '+' => Tok::Plus,
                    '-' => Tok::Minus,
                    '*' => Tok::Star,
                    '/' => Tok::Slash,
                    '^' => Tok::Caret,
                    '(' => Tok::LParen,
                    ')' => Tok::RParen,
                    _ => return Err(err(format!("unexpected character '{c}' in scalar"))),
                });
                i += 1;
            }
        }
    }
    Ok(out)
}

struct Parser {
    toks: Vec<Tok>,
    pos: usize,
}

impl Parser {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos)
    }

    fn eat(&mut self, t: &Tok) -> bool {
        if self.peek() == Some(t) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn fail<T>(&self, msg: &str) -> Result<T> {
        Err(Error::parse(1, format!("{msg} at token {}", self.pos + 1)))
    }

    fn expr(&mut self) -> Result<RatFunc> {
        let mut acc = self.term()?;
        loop {
            if self.eat(&Tok::Plus) {
                acc = acc.add(&self.term()?);
            } else if self.eat(&Tok::Minus) {
                acc = acc.sub(&self.term()?);
            } else {
                return Ok(acc);
            }
        }
    }

    fn term(&mut self) -> Result<RatFunc> {
        let mut acc = self.unary()?;
        loop {
            if self.eat(&Tok::Star) {
                acc = acc.mul(&self.unary()?);
            } else if self.eat(&Tok::Slash) {
                acc = acc.div(&self.unary()?)?;
            } else {
                return Ok(acc);
            }
        }
    }

    fn unary(&mut self) -> Result<RatFunc> {
        if self.eat(&Tok::Minus) {
            return Ok(self.unary()?.neg());
        }
        if self.eat(&Tok::Plus) {
            return self.unary();
        }
        self.power()
    }

    fn power(&mut self) -> Result<RatFunc> {
        let base = self.atom()?;
        if !self.eat(&Tok::Caret) {
            return Ok(base);
        }
        let neg = self.eat(&Tok::Minus);
        let Some(Tok::Num(n)) = self.peek().cloned() else {
            return self.fail("expected integer exponent");
        };
        self.pos += 1;
        if !n.is_integer() {
            return self.fail("exponent must be an integer");
        }
        let e: i64 = match i64::try_from(n.to_integer()) {
            Ok(e) => e,
            Err(_) => return self.fail("exponent too large"),
        };
        if let Some(p) = base.as_laurent().filter(|p| p.is_monomial()) {
            let (k, c) = p.terms().next().unwrap();
            let c = if neg { c.recip() } else { c.clone() };
            let e = if neg { -e } else { e };
            return Ok(RatFunc::from_laurent(LaurentPoly::monomial(
                num::pow::Pow::pow(&c, e.unsigned_abs() as u32),
                k * e,
            )));
        }
        let mut acc = RatFunc::one();
        for _ in 0..e {
            acc = acc.mul(&base);
        }
        if neg {
            acc = acc.inv()?;
        }
        Ok(acc)
    }

    fn atom(&mut self) -> Result<RatFunc> {
        match self.peek().cloned() {
            Some(Tok::Num(n)) => {
                self.pos += 1;
                Ok(RatFunc::from_laurent(LaurentPoly::constant(n)))
            }
            Some(Tok::A) => {
                self.pos += 1;
                Ok(RatFunc::from_laurent(LaurentPoly::a_pow(1)))
            }
            Some(Tok::LParen) => {
                self.pos += 1;
                let v = self.expr()?;
                if !self.eat(&Tok::RParen) {
                    return self.fail("expected ')'");
                }
                Ok(v)
            }
            _ => self.fail("expected a number, 'a' or '('"),
        }
    }
}

/// Parses a scalar expression in `a` into `Q(a)`.
pub fn parse_ratfunc(s: &str) -> Result<RatFunc> {
    let toks = lex(s)?;
    if toks.is_empty() {
        return Err(Error::parse(1, "empty scalar"));
    }
    let mut p = Parser { toks, pos: 0 };
    let v = p.expr()?;
    if p.pos != p.toks.len() {
        return p.fail("trailing input");
    }
    Ok(v)
}

impl std::str::FromStr for RatFunc {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        parse_ratfunc(s)
    }
}

impl std::str::FromStr for LaurentPoly {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match parse_ratfunc(s)?.as_laurent() {
            Some(p) => Ok(p.clone()),
            None => Err(Error::parse(
                1,
                format!("'{s}' is not a Laurent polynomial"),
            )),
        }
    }
}
