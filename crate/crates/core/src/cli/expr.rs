//! Expression syntax.
//!
//! ```text
//! expr   := term (('+' | '-') term)*
//! term   := factor (('*' | '/') factor)*
//! factor := '-' factor | base ('^' exp)?
//! exp    := '-'? int | '(' '-'? int ')'
//! base   := int | 'i' | var | '(' expr ')'
//! ```

use std::fmt;

use num_bigint::BigInt;

use crate::error::{Error, Result};
use crate::exactnum::{GaussianRational, Rational};
use crate::polyalg::RatFuncQi;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Expr {
    /// Nonnegative integer literal.
    Int(BigInt),
    I,
    Var(String),
    Neg(Box<Expr>),
    Add(Box<Expr>, Box<Expr>),
    Sub(Box<Expr>, Box<Expr>),
    Mul(Box<Expr>, Box<Expr>),
    Div(Box<Expr>, Box<Expr>),
    Pow(Box<Expr>, i64),
}

#[derive(Debug, Clone, PartialEq, Eq)]
enum Tok {
    Int(BigInt),
    Ident(String),
    Op(char),
}

fn syntax(pos: usize, msg: impl Into<String>) -> Error {
    Error::Syntax { pos, msg: msg.into() }
}

fn lex(src: &str) -> Result<Vec<(usize, Tok)>> {
    let chars: Vec<char> = src.chars().collect();
    let mut out = Vec::new();
    let mut k = 0;
    while k < chars.len() {
        let ch = chars[k];
        if ch.is_whitespace() {
            k += 1;
        } else if ch.is_ascii_digit() {
            let start = k;
            while k < chars.len() && chars[k].is_ascii_digit() {
                k += 1;
            }
            let s: String = chars[start..k].iter().collect();
            out.push((start, Tok::Int(s.parse().expect("digits"))));
        } else if ch.is_ascii_alphabetic() {
            let start = k;
            while k < chars.len() && chars[k].is_ascii_alphanumeric() {
                k += 1;
            }
            out.push((start, Tok::Ident(chars[start..k].iter().collect())));
        } else if "+-*/^()".contains(ch) {
            out.push((k, Tok::Op(ch)));
            k += 1;
        } else {
            return Err(syntax(k, format!("unexpected character '{}'", ch)));
        }
    }
    Ok(out)
}

struct Parser {
    toks: Vec<(usize, Tok)>,
    k: usize,
    end: usize,
}

impl Parser {
    fn pos(&self) -> usize {
        self.toks.get(self.k).map_or(self.end, |t| t.0)
    }

    fn peek_op(&self, c: char) -> bool {
        matches!(self.toks.get(self.k), Some((_, Tok::Op(o))) if *o == c)
    }

    fn eat_op(&mut self, c: char) -> bool {
        let hit = self.peek_op(c);
        if hit {
            self.k += 1;
        }
        hit
    }

    fn expr(&mut self) -> Result<Expr> {
        let mut lhs = self.term()?;
        loop {
            if self.eat_op('+') {
                lhs = Expr::Add(Box::new(lhs), Box::new(self.term()?));
            } else if self.eat_op('-') {
                lhs = Expr::Sub(Box::new(lhs), Box::new(self.term()?));
            } else {
                return Ok(lhs);
            }
        }
    }

    fn term(&mut self) -> Result<Expr> {
        let mut lhs = self.factor()?;
        loop {
            if self.eat_op('*') {
                lhs = Expr::Mul(Box::new(lhs), Box::new(self.factor()?));
            } else if self.eat_op('/') {
                lhs = Expr::Div(Box::new(lhs), Box::new(self.factor()?));
            } else {
                return Ok(lhs);
            }
        }
    }

    fn factor(&mut self) -> Result<Expr> {
        if self.eat_op('-') {
            return Ok(Expr::Neg(Box::new(self.factor()?)));
        }
        let base = self.base()?;
        if self.eat_op('^') {
            let e = self.exponent()?;
            return Ok(Expr::Pow(Box::new(base), e));
        }
        Ok(base)
    }

    fn signed_int(&mut self) -> Result<i64> {
        let neg = self.eat_op('-');
        let pos = self.pos();
        match self.toks.get(self.k) {
            Some((_, Tok::Int(n))) => {
                self.k += 1;
                let v: i64 = n.try_into().map_err(|_| syntax(pos, "exponent out of range"))?;
                Ok(if neg { -v } else { v })
            }
            _ => Err(syntax(pos, "expected an integer exponent")),
        }
    }

    fn exponent(&mut self) -> Result<i64> {
        if self.eat_op('(') {
            let e = self.signed_int()?;
            if !self.eat_op(')') {
                return Err(syntax(self.pos(), "non-integer exponent"));
            }
            return Ok(e);
        }
        self.signed_int()
    }

    fn base(&mut self) -> Result<Expr> {
        let pos = self.pos();
        match self.toks.get(self.k).cloned() {
            Some((_, Tok::Int(n))) => {
                self.k += 1;
                Ok(Expr::Int(n))
            }
            Some((_, Tok::Ident(s))) => {
                self.k += 1;
                match s.as_str() {
                    "i" => Ok(Expr::I),
                    "x" | "t" => Ok(Expr::Var(s)),
                    _ => Err(syntax(pos, format!("unknown symbol '{}'", s))),
                }
            }
            Some((_, Tok::Op('('))) => {
                self.k += 1;
                let e = self.expr()?;
                if !self.eat_op(')') {
                    return Err(syntax(self.pos(), "expected ')'"));
                }
                Ok(e)
            }
            Some((_, Tok::Op(c))) => Err(syntax(pos, format!("unexpected '{}'", c))),
            None => Err(syntax(pos, "unexpected end of input")),
        }
    }
}

/// Parses an expression; positions in errors are character offsets.
pub fn parse(src: &str) -> Result<Expr> {
    let toks = lex(src)?;
    let mut p = Parser { toks, k: 0, end: src.chars().count() };
    let e = p.expr()?;
    if p.k < p.toks.len() {
        return Err(syntax(p.pos(), "unexpected trailing input"));
    }
    Ok(e)
}

impl Expr {
    fn prec(&self) -> u8 {
        match self {
            Expr::Add(..) | Expr::Sub(..) => 1,
            Expr::Mul(..) | Expr::Div(..) => 2,
            Expr::Neg(..) => 3,
            Expr::Pow(..) => 4,
            Expr::Int(_) | Expr::I | Expr::Var(_) => 5,
        }
    }

    fn write(&self, out: &mut String, min: u8) {
        let paren = self.prec() < min;
        if paren {
            out.push('(');
        }
        match self {
            Expr::Int(n) => out.push_str(&n.to_string()),
            Expr::I => out.push('i'),
            Expr::Var(v) => out.push_str(v),
            Expr::Neg(a) => {
                out.push('-');
                a.write(out, 3);
            }
            Expr::Add(a, b) | Expr::Sub(a, b) => {
                a.write(out, 1);
                out.push(if matches!(self, Expr::Add(..)) { '+' } else { '-' });
                b.write(out, 2);
            }
            Expr::Mul(a, b) | Expr::Div(a, b) => {
                a.write(out, 2);
                out.push(if matches!(self, Expr::Mul(..)) { '*' } else { '/' });
                b.write(out, 3);
            }
            Expr::Pow(a, e) => {
                a.write(out, 5);
                out.push('^');
                out.push_str(&e.to_string());
            }
        }
        if paren {
            out.push(')');
        }
    }

    /// Variable names occurring in the expression.
    pub fn vars(&self) -> Vec<String> {
        let mut out = Vec::new();
        self.collect_vars(&mut out);
        out.sort();
        out.dedup();
        out
    }

    fn collect_vars(&self, out: &mut Vec<String>) {
        match self {
            Expr::Var(v) => out.push(v.clone()),
            Expr::Int(_) | Expr::I => {}
            Expr::Neg(a) | Expr::Pow(a, _) => a.collect_vars(out),
            Expr::Add(a, b) | Expr::Sub(a, b) | Expr::Mul(a, b) | Expr::Div(a, b) => {
                a.collect_vars(out);
                b.collect_vars(out);
            }
        }
    }

    /// Evaluates with `var` as the only admissible variable. Negative powers
    /// are accepted only on the bare variable, and only when `laurent` is set.
    pub fn eval(&self, var: &str, laurent: bool) -> Result<RatFuncQi> {
        match self {
            Expr::Int(n) => Ok(RatFuncQi::constant(GaussianRational::real(Rational::from_integer(n.clone())))),
            Expr::I => Ok(RatFuncQi::constant(GaussianRational::i())),
            Expr::Var(v) if v == var => Ok(RatFuncQi::var()),
            Expr::Var(v) => Err(Error::Domain(format!("variable '{}' is not valid here; use '{}'", v, var))),
            Expr::Neg(a) => Ok(-&a.eval(var, laurent)?),
            Expr::Add(a, b) => Ok(&a.eval(var, laurent)? + &b.eval(var, laurent)?),
            Expr::Sub(a, b) => Ok(&a.eval(var, laurent)? - &b.eval(var, laurent)?),
            Expr::Mul(a, b) => Ok(&a.eval(var, laurent)? * &b.eval(var, laurent)?),
            Expr::Div(a, b) => a.eval(var, laurent)?.checked_div(&b.eval(var, laurent)?),
            Expr::Pow(a, e) => {
                if *e < 0 && !(laurent && matches!(**a, Expr::Var(_))) {
                    return Err(Error::Domain(format!(
                        "negative power only allowed on the variable of a Laurent ring; write 1/(...)^{}",
                        -e
                    )));
                }
                a.eval(var, laurent)?.pow(*e)
            }
        }
    }

    /// Evaluates an expression free of variables to a scalar.
    pub fn eval_scalar(&self) -> Result<GaussianRational> {
        if !self.vars().is_empty() {
            return Err(Error::Domain("expected a scalar".into()));
        }
        let v = self.eval("x", false)?;
        if v.is_zero() {
            return Ok(GaussianRational::zero());
        }
        Ok(v.as_constant().expect("no variables"))
    }
}

impl fmt::Display for Expr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut s = String::new();
        self.write(&mut s, 0);
        f.write_str(&s)
    }
}

/// Parses and evaluates to a nonzero value in the given variable.
pub fn parse_value(src: &str, var: &str, laurent: bool) -> Result<RatFuncQi> {
    let v = parse(src)?.eval(var, laurent)?;
    if v.is_zero() {
        return Err(Error::Domain(format!("expression '{}' is zero", src.trim())));
    }
    Ok(v)
}
