//! Arithmetic expression literals such as `(t^2+1)/(t-1)` or `x^2 + (1/2)x + 3`.
//!
//! Parsing produces an [`Expr`] tree which is then evaluated in any
//! [`Algebra`]. Juxtaposition multiplies, so `2x`, `(t+1)x^2` and `xt` all work.

use num_bigint::BigInt;
use num_traits::One;

use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Expr {
    Int(BigInt),
    Var(char),
    Neg(Box<Expr>),
    Add(Box<Expr>, Box<Expr>),
    Sub(Box<Expr>, Box<Expr>),
    Mul(Box<Expr>, Box<Expr>),
    Div(Box<Expr>, Box<Expr>),
    /// Algebras only accept constant integer exponents; see [`Expr::const_int`].
    Pow(Box<Expr>, Box<Expr>),
}

pub const MAX_EXPONENT: i64 = 1 << 20;

pub trait Algebra {
    type Val: Clone;

    fn int(&self, n: &BigInt) -> Result<Self::Val>;
    fn var(&self, name: char) -> Result<Self::Val>;
    fn add(&self, a: &Self::Val, b: &Self::Val) -> Result<Self::Val>;
    fn neg(&self, a: &Self::Val) -> Result<Self::Val>;
    fn mul(&self, a: &Self::Val, b: &Self::Val) -> Result<Self::Val>;
    fn div(&self, a: &Self::Val, b: &Self::Val) -> Result<Self::Val>;

    fn sub(&self, a: &Self::Val, b: &Self::Val) -> Result<Self::Val> {
        self.add(a, &self.neg(b)?)
    }

    fn pow(&self, a: &Self::Val, e: i64) -> Result<Self::Val> {
        let mut acc = self.int(&BigInt::one())?;
        let mut base = a.clone();
        let mut k = e.unsigned_abs();
        while k > 0 {
            if k & 1 == 1 {
                acc = self.mul(&acc, &base)?;
            }
            k >>= 1;
            if k > 0 {
                base = self.mul(&base, &base)?;
            }
        }
        if e < 0 {
            self.div(&self.int(&BigInt::one())?, &acc)
        } else {
            Ok(acc)
        }
    }
}

impl Expr {
    pub fn eval<A: Algebra>(&self, alg: &A) -> Result<A::Val> {
        match self {
            Expr::Int(n) => alg.int(n),
            Expr::Var(c) => alg.var(*c),
            Expr::Neg(a) => alg.neg(&a.eval(alg)?),
            Expr::Add(a, b) => alg.add(&a.eval(alg)?, &b.eval(alg)?),
            Expr::Sub(a, b) => alg.sub(&a.eval(alg)?, &b.eval(alg)?),
            Expr::Mul(a, b) => alg.mul(&a.eval(alg)?, &b.eval(alg)?),
            Expr::Div(a, b) => alg.div(&a.eval(alg)?, &b.eval(alg)?),
            Expr::Pow(a, e) => {
                let k = e
                    .const_int()
                    .and_then(|k| i64::try_from(k).ok())
                    .filter(|k| k.abs() <= MAX_EXPONENT)
                    .ok_or_else(|| Error::Parse("exponent must be a small integer constant".into()))?;
                alg.pow(&a.eval(alg)?, k)
            }
        }
    }

    /// Value of a variable-free integer expression built from `+ - *` and literals.
    pub fn const_int(&self) -> Option<BigInt> {
        match self {
            Expr::Int(n) => Some(n.clone()),
            Expr::Neg(a) => Some(-a.const_int()?),
            Expr::Add(a, b) => Some(a.const_int()? + b.const_int()?),
            Expr::Sub(a, b) => Some(a.const_int()? - b.const_int()?),
            Expr::Mul(a, b) => Some(a.const_int()? * b.const_int()?),
            _ => None,
        }
    }

    pub fn variables(&self, out: &mut Vec<char>) {
        match self {
            Expr::Int(_) => {}
            Expr::Var(c) => {
                if !out.contains(c) {
                    out.push(*c)
                }
            }
            Expr::Neg(a) => a.variables(out),
            Expr::Add(a, b) | Expr::Sub(a, b) | Expr::Mul(a, b) | Expr::Div(a, b) | Expr::Pow(a, b) => {
                a.variables(out);
                b.variables(out);
            }
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
enum Tok {
    Num(BigInt),
    Ident(char),
    Op(char),
}

fn tokenize(s: &str) -> Result<Vec<Tok>> {
    let mut out = Vec::new();
    let chars: Vec<char> = s.chars().collect();
    let mut i = 0;
    while i < chars.len() {
        let c = chars[i];
        if c.is_whitespace() {
            i += 1;
        } else if c.is_ascii_digit() {
            let start = i;
            while i < chars.len() && chars[i].is_ascii_digit() {
                i += 1;
            }
            let digits: String = chars[start..i].iter().collect();
            out.push(Tok::Num(digits.parse().unwrap()));
        } else if c.is_ascii_alphabetic() {
            out.push(Tok::Ident(c));
            i += 1;
        } else if "+-*/^()".contains(c) {
            out.push(Tok::Op(c));
            i += 1;
        } else if c == '\u{2212}' {
            out.push(Tok::Op('-'));
            i += 1;
        } else {
            return Err(Error::Parse(format!("unexpected character {c:?} in {s:?}")));
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

    fn eat(&mut self, op: char) -> bool {
        if self.peek() == Some(&Tok::Op(op)) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn expr(&mut self) -> Result<Expr> {
        let mut acc = self.term()?;
        loop {
            if self.eat('+') {
                acc = Expr::Add(Box::new(acc), Box::new(self.term()?));
            } else if self.eat('-') {
                acc = Expr::Sub(Box::new(acc), Box::new(self.term()?));
            } else {
                return Ok(acc);
            }
        }
    }

    fn term(&mut self) -> Result<Expr> {
        let mut acc = self.factor()?;
        loop {
            if self.eat('*') {
                acc = Expr::Mul(Box::new(acc), Box::new(self.factor()?));
            } else if self.eat('/') {
                acc = Expr::Div(Box::new(acc), Box::new(self.factor()?));
            } else if matches!(self.peek(), Some(Tok::Num(_) | Tok::Ident(_) | Tok::Op('('))) {
                acc = Expr::Mul(Box::new(acc), Box::new(self.factor()?));
            } else {
                return Ok(acc);
            }
        }
    }

    fn factor(&mut self) -> Result<Expr> {
        if self.eat('-') {
            return Ok(Expr::Neg(Box::new(self.factor()?)));
        }
        if self.eat('+') {
            return self.factor();
        }
        let base = self.atom()?;
        if self.eat('^') {
            let e = self.exponent()?;
            return Ok(Expr::Pow(Box::new(base), Box::new(e)));
        }
        Ok(base)
    }

    /// A signed atom: `x^-1`, `2^i`, `t^(n+1)`.
    fn exponent(&mut self) -> Result<Expr> {
        if self.eat('-') {
            return Ok(Expr::Neg(Box::new(self.exponent()?)));
        }
        self.atom()
    }

    fn atom(&mut self) -> Result<Expr> {
        match self.peek().cloned() {
            Some(Tok::Num(n)) => {
                self.pos += 1;
                Ok(Expr::Int(n))
            }
            Some(Tok::Ident(c)) => {
                self.pos += 1;
                Ok(Expr::Var(c))
            }
            Some(Tok::Op('(')) => {
                self.pos += 1;
                let e = self.expr()?;
                if !self.eat(')') {
                    return Err(Error::Parse("missing closing parenthesis".into()));
                }
                Ok(e)
            }
            other => Err(Error::Parse(format!("unexpected token {other:?}"))),
        }
    }
}

pub fn parse(s: &str) -> Result<Expr> {
    let toks = tokenize(s)?;
    if toks.is_empty() {
        return Err(Error::Parse("empty expression".into()));
    }
    let mut p = Parser { toks, pos: 0 };
    let e = p.expr()?;
    if p.pos != p.toks.len() {
        return Err(Error::Parse(format!("trailing input in {s:?}")));
    }
    Ok(e)
}

/// Parses and evaluates, rejecting variables the algebra does not know.
pub fn parse_in<A: Algebra>(s: &str, alg: &A) -> Result<A::Val> {
    parse(s)?.eval(alg)
}
