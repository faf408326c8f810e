//! Infix polynomial expressions: `+ - * ^`, parentheses, integer literals,
//! variables, and named ring constants (e.g. `a` for a field generator).
//! Juxtaposition multiplies, so `(T+1)^3 X*Y` and `2 x` both parse.

use std::collections::HashMap;

use num_bigint::BigInt;

use super::ring::{ring_int, Ring};
use super::sparse::SparsePoly;
use super::PolyError;

#[derive(Clone, Debug, PartialEq)]
enum Tok {
    Num(BigInt),
    Ident(String),
    Plus,
    Minus,
    Star,
    Caret,
    LParen,
    RParen,
}

fn lex(s: &str) -> Result<Vec<Tok>, PolyError> {
    let mut out = Vec::new();
    let cs: Vec<char> = s.chars().collect();
    let mut i = 0;
    while i < cs.len() {
        let c = cs[i];
        match c {
            ' ' | '\t' | '\n' | '\r' => i += 1,
            '+' => (out.push(Tok::Plus), i += 1).1,
            '-' => (out.push(Tok::Minus), i += 1).1,
            '*' | '·' => (out.push(Tok::Star), i += 1).1,
            '^' => (out.push(Tok::Caret), i += 1).1,
            '(' => (out.push(Tok::LParen), i += 1).1,
            ')' => (out.push(Tok::RParen), i += 1).1,
            d if d.is_ascii_digit() => {
                let st = i;
                while i < cs.len() && cs[i].is_ascii_digit() {
                    i += 1;
                }
                let txt: String = cs[st..i].iter().collect();
                out.push(Tok::Num(txt.parse().unwrap()));
            }
            a if a.is_alphabetic() || a == '_' => {
                let st = i;
                while i < cs.len() && (cs[i].is_alphanumeric() || cs[i] == '_') {
                    i += 1;
                }
                out.push(Tok::Ident(cs[st..i].iter().collect()));
            }
            other => return Err(PolyError::Parse(format!("unexpected character {other:?}"))),
        }
    }
    Ok(out)
}

struct Parser<'a, R: Ring> {
    toks: Vec<Tok>,
    pos: usize,
    ring: &'a R,
    vars: Vec<&'a str>,
    consts: &'a HashMap<String, R::Elem>,
}

impl<'a, R: Ring> Parser<'a, R> {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos)
    }

    fn next(&mut self) -> Option<Tok> {
        let t = self.toks.get(self.pos).cloned();
        self.pos += 1;
        t
    }

    fn expr(&mut self) -> Result<SparsePoly<R>, PolyError> {
        let mut acc = SparsePoly::zero(self.ring, &self.vars);
        let mut first = true;
        loop {
            let sign = match self.peek() {
                Some(Tok::Plus) => {
                    self.pos += 1;
                    1
                }
                Some(Tok::Minus) => {
                    self.pos += 1;
                    -1
                }
                _ if first => 1,
                _ => break,
            };
            first = false;
            let t = self.term()?;
            acc = if sign > 0 { &acc + &t } else { &acc - &t };
        }
        Ok(acc)
    }

    fn term(&mut self) -> Result<SparsePoly<R>, PolyError> {
        let mut acc = self.factor()?;
        loop {
            match self.peek() {
                Some(Tok::Star) => {
                    self.pos += 1;
                    acc = &acc * &self.factor()?;
                }
                Some(Tok::Num(_)) | Some(Tok::Ident(_)) | Some(Tok::LParen) => {
                    acc = &acc * &self.factor()?;
                }
                _ => return Ok(acc),
            }
        }
    }

    fn factor(&mut self) -> Result<SparsePoly<R>, PolyError> {
        let base = self.atom()?;
        if self.peek() == Some(&Tok::Caret) {
            self.pos += 1;
            match self.next() {
                Some(Tok::Num(n)) => {
                    let e: u64 = n.try_into().map_err(|_| PolyError::Parse("exponent too large".into()))?;
                    return Ok(base.pow(e));
                }
                other => return Err(PolyError::Parse(format!("expected exponent, found {other:?}"))),
            }
        }
        Ok(base)
    }

    fn atom(&mut self) -> Result<SparsePoly<R>, PolyError> {
        match self.next() {
            Some(Tok::Num(n)) => Ok(SparsePoly::constant(self.ring, &self.vars, ring_int(self.ring, &n))),
            Some(Tok::Ident(name)) => {
                if self.vars.contains(&name.as_str()) {
                    SparsePoly::var(self.ring, &self.vars, &name)
                } else if let Some(c) = self.consts.get(&name) {
                    Ok(SparsePoly::constant(self.ring, &self.vars, c.clone()))
                } else {
                    Err(PolyError::UnknownVariable(name))
                }
            }
            Some(Tok::LParen) => {
                let e = self.expr()?;
                match self.next() {
                    Some(Tok::RParen) => Ok(e),
                    other => Err(PolyError::Parse(format!("expected ')', found {other:?}"))),
                }
            }
            other => Err(PolyError::Parse(format!("unexpected token {other:?}"))),
        }
    }
}

/// Parses `text` as a polynomial in `vars` over `ring`, with `consts` naming
/// ring elements.
pub fn parse_poly<R: Ring>(
    ring: &R,
    vars: &[&str],
    consts: &HashMap<String, R::Elem>,
    text: &str,
) -> Result<SparsePoly<R>, PolyError> {
    let toks = lex(text)?;
    if toks.is_empty() {
        return Err(PolyError::Parse("empty expression".into()));
    }
    let mut p = Parser { toks, pos: 0, ring, vars: vars.to_vec(), consts };
    let e = p.expr()?;
    if p.pos < p.toks.len() {
        return Err(PolyError::Parse(format!("trailing input at token {}", p.pos)));
    }
    Ok(e)
}

/// Shorthand without named constants.
pub fn parse<R: Ring>(ring: &R, vars: &[&str], text: &str) -> Result<SparsePoly<R>, PolyError> {
    parse_poly(ring, vars, &HashMap::new(), text)
}
