//! Text grammar for polynomials and vector fields.
//!
//! ```text
//! expr  := term (('+' | '-') term)*
//! term  := unary ('*' unary)*
//! unary := ('-' | '+') unary | power
//! power := atom ('^' INT)?
//! atom  := INT ('/' INT)? | VAR | 'd/d' VAR | '(' expr ')'
//! ```
//!
//! `d/d<var>` stands for the coordinate field of `<var>` and may only occur
//! linearly.

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::poly::{Poly, Rational};
use crate::ring::Ring;

#[derive(Clone, Debug, PartialEq)]
enum Token {
    Num(BigInt),
    Ident(String),
    Deriv(String),
    Plus,
    Minus,
    Star,
    Caret,
    Slash,
    LParen,
    RParen,
}

fn syntax(pos: usize, msg: impl Into<String>) -> Error {
    Error::Syntax { pos, msg: msg.into() }
}

fn tokenize(text: &str) -> Result<Vec<(usize, Token)>> {
    let bytes = text.as_bytes();
    let mut out = Vec::new();
    let mut i = 0;
    while i < bytes.len() {
        let c = bytes[i];
        let start = i;
        match c {
            b' ' | b'\t' | b'\n' | b'\r' => {
                i += 1;
                continue;
            }
            b'0'..=b'9' => {
                while i < bytes.len() && bytes[i].is_ascii_digit() {
                    i += 1;
                }
                let n: BigInt = text[start..i].parse().map_err(|_| syntax(start, "bad number"))?;
                out.push((start, Token::Num(n)));
                continue;
            }
            b'a'..=b'z' | b'A'..=b'Z' => {
                while i < bytes.len() && (bytes[i].is_ascii_alphanumeric() || bytes[i] == b'_') {
                    i += 1;
                }
                let word = &text[start..i];
                // `d/d<var>`
                if word == "d" && bytes.get(i) == Some(&b'/') && bytes.get(i + 1) == Some(&b'd') {
                    let mut j = i + 2;
                    let vstart = j;
                    if j < bytes.len() && bytes[j].is_ascii_alphabetic() {
                        while j < bytes.len() && (bytes[j].is_ascii_alphanumeric() || bytes[j] == b'_')
                        {
                            j += 1;
                        }
                        out.push((start, Token::Deriv(text[vstart..j].to_string())));
                        i = j;
                        continue;
                    }
                    return Err(syntax(vstart, "expected variable name after `d/d`"));
                }
                out.push((start, Token::Ident(word.to_string())));
                continue;
            }
            b'+' => out.push((start, Token::Plus)),
            b'-' => out.push((start, Token::Minus)),
            b'*' => out.push((start, Token::Star)),
            b'^' => out.push((start, Token::Caret)),
            b'/' => out.push((start, Token::Slash)),
            b'(' => out.push((start, Token::LParen)),
            b')' => out.push((start, Token::RParen)),
            _ => return Err(syntax(start, format!("unexpected character `{}`", c as char))),
        }
        i += 1;
    }
    Ok(out)
}

/// A parsed value: a scalar polynomial or the coefficient vector of a field.
#[derive(Clone, Debug)]
pub(crate) enum Value {
    Scalar(Poly),
    Field(Vec<Poly>),
}

struct Parser<'a> {
    ring: &'a Ring,
    tokens: Vec<(usize, Token)>,
    pos: usize,
    end: usize,
}

impl<'a> Parser<'a> {
    fn peek(&self) -> Option<&Token> {
        self.tokens.get(self.pos).map(|(_, t)| t)
    }

    fn offset(&self) -> usize {
        self.tokens.get(self.pos).map(|(p, _)| *p).unwrap_or(self.end)
    }

    fn bump(&mut self) -> Option<Token> {
        let t = self.tokens.get(self.pos).map(|(_, t)| t.clone());
        self.pos += 1;
        t
    }

    fn add(&self, a: Value, b: Value, negate: bool, at: usize) -> Result<Value> {
        match (a, b) {
            (Value::Scalar(x), Value::Scalar(y)) => {
                Ok(Value::Scalar(if negate { &x - &y } else { &x + &y }))
            }
            (Value::Field(x), Value::Field(y)) => Ok(Value::Field(
                x.iter()
                    .zip(&y)
                    .map(|(p, q)| if negate { p - q } else { p + q })
                    .collect(),
            )),
            (Value::Field(v), Value::Scalar(s)) if s.is_zero() => Ok(Value::Field(v)),
            (Value::Scalar(s), Value::Field(v)) if s.is_zero() => {
                Ok(Value::Field(if negate { v.iter().map(|p| -p).collect() } else { v }))
            }
            _ => Err(syntax(at, "cannot add a scalar and a vector field")),
        }
    }

    fn mul(&self, a: Value, b: Value, at: usize) -> Result<Value> {
        match (a, b) {
            (Value::Scalar(x), Value::Scalar(y)) => Ok(Value::Scalar(&x * &y)),
            (Value::Scalar(s), Value::Field(v)) | (Value::Field(v), Value::Scalar(s)) => {
                Ok(Value::Field(v.iter().map(|p| &s * p).collect()))
            }
            _ => Err(syntax(at, "cannot multiply two vector fields")),
        }
    }

    fn expr(&mut self) -> Result<Value> {
        let mut acc = self.term()?;
        loop {
            let at = self.offset();
            match self.peek() {
                Some(Token::Plus) => {
                    self.bump();
                    let rhs = self.term()?;
                    acc = self.add(acc, rhs, false, at)?;
                }
                Some(Token::Minus) => {
                    self.bump();
                    let rhs = self.term()?;
                    acc = self.add(acc, rhs, true, at)?;
                }
                _ => return Ok(acc),
            }
        }
    }

    fn term(&mut self) -> Result<Value> {
        let mut acc = self.unary()?;
        while let Some(Token::Star) = self.peek() {
            let at = self.offset();
            self.bump();
            let rhs = self.unary()?;
            acc = self.mul(acc, rhs, at)?;
        }
        Ok(acc)
    }

    fn unary(&mut self) -> Result<Value> {
        match self.peek() {
            Some(Token::Minus) => {
                self.bump();
                let v = self.unary()?;
                Ok(match v {
                    Value::Scalar(p) => Value::Scalar(-&p),
                    Value::Field(f) => Value::Field(f.iter().map(|p| -p).collect()),
                })
            }
            Some(Token::Plus) => {
                self.bump();
                self.unary()
            }
            _ => self.power(),
        }
    }

    fn power(&mut self) -> Result<Value> {
        let base = self.atom()?;
        if let Some(Token::Caret) = self.peek() {
            let at = self.offset();
            self.bump();
            let exp_at = self.offset();
            let e = match self.bump() {
                Some(Token::Num(n)) => u32::try_from(n)
                    .map_err(|_| syntax(exp_at, "exponent too large"))?,
                _ => return Err(syntax(exp_at, "expected a nonnegative integer exponent")),
            };
            return match base {
                Value::Scalar(p) => Ok(Value::Scalar(p.pow(e))),
                Value::Field(_) => Err(syntax(at, "cannot raise a vector field to a power")),
            };
        }
        Ok(base)
    }

    fn atom(&mut self) -> Result<Value> {
        let at = self.offset();
        match self.bump() {
            Some(Token::Num(n)) => {
                let mut c = Rational::from_integer(n);
                if let Some(Token::Slash) = self.peek() {
                    self.bump();
                    let dat = self.offset();
                    match self.bump() {
                        Some(Token::Num(d)) if !d.is_zero() => c /= Rational::from_integer(d),
                        Some(Token::Num(_)) => return Err(syntax(dat, "zero denominator")),
                        _ => return Err(syntax(dat, "expected an integer denominator")),
                    }
                }
                Ok(Value::Scalar(Poly::constant(self.ring, c)))
            }
            Some(Token::Ident(name)) => match self.ring.var_index(&name) {
                Some(i) => Ok(Value::Scalar(Poly::var(self.ring, i)?)),
                None => Err(Error::UnknownVariable { name, pos: at }),
            },
            Some(Token::Deriv(name)) => match self.ring.var_index(&name) {
                Some(i) => {
                    let mut coeffs = vec![Poly::zero(self.ring); self.ring.nvars()];
                    coeffs[i] = Poly::constant(self.ring, Rational::one());
                    Ok(Value::Field(coeffs))
                }
                None => Err(Error::UnknownVariable { name, pos: at + 3 }),
            },
            Some(Token::LParen) => {
                let v = self.expr()?;
                let close = self.offset();
                match self.bump() {
                    Some(Token::RParen) => Ok(v),
                    _ => Err(syntax(close, "expected `)`")),
                }
            }
            Some(t) => Err(syntax(at, format!("unexpected token {t:?}"))),
            None => Err(syntax(at, "unexpected end of input")),
        }
    }
}

pub(crate) fn parse_value(text: &str, ring: &Ring) -> Result<Value> {
    let tokens = tokenize(text)?;
    let mut parser = Parser { ring, tokens, pos: 0, end: text.len() };
    let v = parser.expr()?;
    if parser.pos < parser.tokens.len() {
        return Err(syntax(parser.offset(), "trailing input"));
    }
    Ok(v)
}

/// Parses a polynomial over `ring`.
pub fn parse_poly(text: &str, ring: &Ring) -> Result<Poly> {
    match parse_value(text, ring)? {
        Value::Scalar(p) => Ok(p),
        Value::Field(_) => Err(syntax(0, "expected a polynomial, found a vector field")),
    }
}

/// Parses a vector field expression into its coefficient vector.
/// A bare `0` is accepted as the zero field.
pub(crate) fn parse_field_coeffs(text: &str, ring: &Ring) -> Result<Vec<Poly>> {
    match parse_value(text, ring)? {
        Value::Field(v) => Ok(v),
        Value::Scalar(p) if p.is_zero() => Ok(vec![Poly::zero(ring); ring.nvars()]),
        Value::Scalar(_) => Err(syntax(0, "expected a vector field with d/d<var> terms")),
    }
}

/// Parses a comma separated list of polynomials.
pub fn parse_poly_list(text: &str, ring: &Ring) -> Result<Vec<Poly>> {
    text.split(',')
        .map(str::trim)
        .filter(|s| !s.is_empty())
        .map(|s| parse_poly(s, ring))
        .collect()
}
