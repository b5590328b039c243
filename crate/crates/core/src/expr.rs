//! Integer expressions in one variable `n`, as used by catalog rows:
//! `2n+3`, `n^2`, `2+(n-1)(n-2)/2`.
//!
//! Juxtaposition multiplies. Division must be exact.

use std::fmt;

use crate::notation::ParseError;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Expr {
    Const(i64),
    N,
    Neg(Box<Expr>),
    Add(Box<Expr>, Box<Expr>),
    Sub(Box<Expr>, Box<Expr>),
    Mul(Box<Expr>, Box<Expr>),
    Div(Box<Expr>, Box<Expr>),
    Pow(Box<Expr>, u32),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum EvalError {
    Inexact { num: i64, den: i64 },
    Overflow,
}

impl fmt::Display for EvalError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            EvalError::Inexact { num, den } => write!(f, "{num}/{den} is not an integer"),
            EvalError::Overflow => f.write_str("arithmetic overflow"),
        }
    }
}

impl std::error::Error for EvalError {}

struct Parser<'a> {
    src: &'a str,
    chars: Vec<(usize, char)>,
    pos: usize,
}

impl<'a> Parser<'a> {
    fn peek(&mut self) -> Option<char> {
        while let Some(&(_, c)) = self.chars.get(self.pos) {
            if c.is_whitespace() {
                self.pos += 1;
            } else {
                return Some(c);
            }
        }
        None
    }

    fn column(&self) -> usize {
        self.chars.get(self.pos).map_or(self.src.len(), |&(i, _)| i)
    }

    fn err(&self, message: impl Into<String>) -> ParseError {
        ParseError::new(self.src, self.column(), message)
    }

    fn expr(&mut self) -> Result<Expr, ParseError> {
        let mut lhs = self.term()?;
        loop {
            match self.peek() {
                Some('+') => {
                    self.pos += 1;
                    lhs = Expr::Add(Box::new(lhs), Box::new(self.term()?));
                }
                Some('-') => {
                    self.pos += 1;
                    lhs = Expr::Sub(Box::new(lhs), Box::new(self.term()?));
                }
                _ => return Ok(lhs),
            }
        }
    }

    fn term(&mut self) -> Result<Expr, ParseError> {
        let mut lhs = self.power()?;
        loop {
            match self.peek() {
                Some('*') => {
                    self.pos += 1;
                    lhs = Expr::Mul(Box::new(lhs), Box::new(self.power()?));
                }
                Some('/') => {
                    self.pos += 1;
                    lhs = Expr::Div(Box::new(lhs), Box::new(self.power()?));
                }
                Some(c) if c == 'n' || c == '(' || c.is_ascii_digit() => {
                    lhs = Expr::Mul(Box::new(lhs), Box::new(self.power()?));
                }
                _ => return Ok(lhs),
            }
        }
    }

    fn power(&mut self) -> Result<Expr, ParseError> {
        let base = self.atom()?;
        if self.peek() == Some('^') {
            self.pos += 1;
            self.peek();
            let start = self.pos;
            let mut e: u32 = 0;
            while let Some(&(_, c)) = self.chars.get(self.pos) {
                let Some(d) = c.to_digit(10) else { break };
                e = e * 10 + d;
                self.pos += 1;
            }
            if self.pos == start {
                return Err(self.err("expected an exponent"));
            }
            return Ok(Expr::Pow(Box::new(base), e));
        }
        Ok(base)
    }

    fn atom(&mut self) -> Result<Expr, ParseError> {
        match self.peek() {
            Some('n') => {
                self.pos += 1;
                Ok(Expr::N)
            }
            Some('-') => {
                self.pos += 1;
                Ok(Expr::Neg(Box::new(self.power()?)))
            }
            Some('(') => {
                self.pos += 1;
                let inner = self.expr()?;
                if self.peek() != Some(')') {
                    return Err(self.err("expected `)`"));
                }
                self.pos += 1;
                Ok(inner)
            }
            Some(c) if c.is_ascii_digit() => {
                let mut v: i64 = 0;
                while let Some(&(_, c)) = self.chars.get(self.pos) {
                    let Some(d) = c.to_digit(10) else { break };
                    v = v
                        .checked_mul(10)
                        .and_then(|v| v.checked_add(d as i64))
                        .ok_or_else(|| self.err("integer too large"))?;
                    self.pos += 1;
                }
                Ok(Expr::Const(v))
            }
            Some(_) => Err(self.err("expected a number, `n` or `(`")),
            None => Err(self.err("unexpected end of expression")),
        }
    }
}

impl Expr {
    pub fn parse(src: &str) -> Result<Expr, ParseError> {
        let mut p = Parser {
            src,
            chars: src.char_indices().collect(),
            pos: 0,
        };
        let e = p.expr()?;
        if p.peek().is_some() {
            return Err(p.err("unexpected character"));
        }
        Ok(e)
    }

    pub fn eval(&self, n: i64) -> Result<i64, EvalError> {
        use Expr::*;
        let bin =
            |a: &Expr, b: &Expr| -> Result<(i64, i64), EvalError> { Ok((a.eval(n)?, b.eval(n)?)) };
        match self {
            Const(c) => Ok(*c),
            N => Ok(n),
            Neg(a) => a.eval(n)?.checked_neg().ok_or(EvalError::Overflow),
            Add(a, b) => {
                let (x, y) = bin(a, b)?;
                x.checked_add(y).ok_or(EvalError::Overflow)
            }
            Sub(a, b) => {
                let (x, y) = bin(a, b)?;
                x.checked_sub(y).ok_or(EvalError::Overflow)
            }
            Mul(a, b) => {
                let (x, y) = bin(a, b)?;
                x.checked_mul(y).ok_or(EvalError::Overflow)
            }
            Div(a, b) => {
                let (x, y) = bin(a, b)?;
                if y == 0 || x % y != 0 {
                    return Err(EvalError::Inexact { num: x, den: y });
                }
                Ok(x / y)
            }
            Pow(a, e) => a.eval(n)?.checked_pow(*e).ok_or(EvalError::Overflow),
        }
    }
}
