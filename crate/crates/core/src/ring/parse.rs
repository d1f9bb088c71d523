//! Parser for the expression mini-language: integers, symbols, `+ - * / ^`
//! and parentheses. Exponents are integers, optionally signed or given as a
//! parenthesized integer expression. Canonical output parses back to the
//! same value.

use super::int::Int;
use super::ratfunc::RatFunc;
use super::symbols::Symbol;
use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq)]
enum Tok {
    Num(Int),
    Ident(String),
    Op(char),
}

fn lex(src: &str) -> Result<Vec<Tok>> {
    let chars: Vec<char> = src.chars().collect();
    let mut out = Vec::new();
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
            let s: String = chars[start..i].iter().collect();
            out.push(Tok::Num(s.parse().map_err(|_| Error::Parse(format!("bad integer `{s}`")))?));
        } else if c.is_ascii_alphabetic() {
            let start = i;
            while i < chars.len() && (chars[i].is_ascii_alphanumeric() || chars[i] == '_') {
                i += 1;
            }
            out.push(Tok::Ident(chars[start..i].iter().collect()));
        } else if "+-*/^()".contains(c) {
            out.push(Tok::Op(c));
            i += 1;
        } else {
            return Err(Error::Parse(format!("unexpected character `{c}` at offset {i}")));
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

    fn expr(&mut self) -> Result<RatFunc> {
        let mut acc = self.term()?;
        loop {
            if self.eat('+') {
                acc = acc.add(&self.term()?);
            } else if self.eat('-') {
                acc = acc.sub(&self.term()?);
            } else {
                return Ok(acc);
            }
        }
    }

    fn term(&mut self) -> Result<RatFunc> {
        let mut acc = self.unary()?;
        loop {
            if self.eat('*') {
                acc = acc.mul(&self.unary()?);
            } else if self.eat('/') {
                let d = self.unary()?;
                acc = acc.div(&d)?;
            } else {
                return Ok(acc);
            }
        }
    }

    fn unary(&mut self) -> Result<RatFunc> {
        if self.eat('-') {
            return Ok(self.unary()?.neg());
        }
        if self.eat('+') {
            return self.unary();
        }
        self.power()
    }

    fn power(&mut self) -> Result<RatFunc> {
        let base = self.atom()?;
        if self.eat('^') {
            let e = self.exponent()?;
            return base.pow(e);
        }
        Ok(base)
    }

    fn exponent(&mut self) -> Result<i32> {
        let neg = self.eat('-');
        let v = match self.peek().cloned() {
            Some(Tok::Num(n)) => {
                self.pos += 1;
                n
            }
            Some(Tok::Op('(')) => {
                self.pos += 1;
                let inner = self.expr()?;
                if !self.eat(')') {
                    return Err(Error::Parse("missing `)` in exponent".into()));
                }
                match inner.as_rational() {
                    Some((n, d)) if d.is_one() => n,
                    _ => return Err(Error::Parse("exponent must be an integer".into())),
                }
            }
            _ => return Err(Error::Parse("expected integer exponent".into())),
        };
        let v = v
            .to_i64()
            .and_then(|x| i32::try_from(x).ok())
            .filter(|x| x.abs() <= 10_000)
            .ok_or_else(|| Error::Bound("exponent too large".into()))?;
        Ok(if neg { -v } else { v })
    }

    fn atom(&mut self) -> Result<RatFunc> {
        match self.peek().cloned() {
            Some(Tok::Num(n)) => {
                self.pos += 1;
                Ok(RatFunc::from_int(n))
            }
            Some(Tok::Ident(name)) => {
                self.pos += 1;
                Ok(RatFunc::var(Symbol::named(&name)?))
            }
            Some(Tok::Op('(')) => {
                self.pos += 1;
                let inner = self.expr()?;
                if !self.eat(')') {
                    return Err(Error::Parse("missing `)`".into()));
                }
                Ok(inner)
            }
            Some(t) => Err(Error::Parse(format!("unexpected token {t:?}"))),
            None => Err(Error::Parse("unexpected end of input".into())),
        }
    }
}

/// Parses an expression into a rational function.
pub fn parse_ratfunc(src: &str) -> Result<RatFunc> {
    let toks = lex(src)?;
    if toks.is_empty() {
        return Err(Error::Parse("empty expression".into()));
    }
    let mut p = Parser { toks, pos: 0 };
    let v = p.expr()?;
    if p.pos != p.toks.len() {
        return Err(Error::Parse(format!("trailing input at token {}", p.pos)));
    }
    Ok(v)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn round_trip() {
        for src in ["(1-q^2)/(1-q)", "q^-1+t^(1-3)", "-(a*b-c)/(1-b*z)^2", "0", "7/21"] {
            let v = parse_ratfunc(src).unwrap();
            let text = v.to_canonical();
            let back = parse_ratfunc(&text).unwrap();
            assert_eq!(back.to_canonical(), text, "{src}");
            assert_eq!(back, v);
        }
    }

    #[test]
    fn errors() {
        assert!(parse_ratfunc("1/(q-q)").is_err());
        assert!(parse_ratfunc("q^a").is_err());
        assert!(parse_ratfunc("(q").is_err());
        assert!(parse_ratfunc("q $ t").is_err());
    }
}
