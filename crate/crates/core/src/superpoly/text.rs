//! Textual and JSON encodings of polynomials.
//!
//! Text: `3*x^2*a - 1/2*y*a*b + 7`. Even variables may carry `^k`; odd
//! variables listed in increasing index order. The parser also accepts
//! parentheses and arbitrary products, and normalizes through ring arithmetic.

use std::fmt;

use num_bigint::BigInt;
use serde::{Deserialize, Serialize};

use super::field::FieldElem;
use super::monomial::SuperMonomial;
use super::poly::SuperPoly;
use super::ring::Ring;
use crate::error::{Error, Result};

fn write_monomial(f: &mut fmt::Formatter<'_>, ring: &Ring, m: &SuperMonomial) -> fmt::Result {
    let mut first = true;
    for (i, &e) in m.even_exp().iter().enumerate() {
        if e == 0 {
            continue;
        }
        if !first {
            f.write_str("*")?;
        }
        first = false;
        f.write_str(&ring.even_vars[i])?;
        if e > 1 {
            write!(f, "^{e}")?;
        }
    }
    for j in m.odd_set() {
        if !first {
            f.write_str("*")?;
        }
        first = false;
        f.write_str(&ring.odd_vars[j])?;
    }
    Ok(())
}

impl fmt::Display for SuperPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        for (k, (m, c)) in self.terms().iter().enumerate() {
            let neg = c.is_negative();
            let abs = c.negate_sign(neg);
            match (k == 0, neg) {
                (true, true) => f.write_str("-")?,
                (true, false) => {}
                (false, true) => f.write_str(" - ")?,
                (false, false) => f.write_str(" + ")?,
            }
            if m.is_one() {
                write!(f, "{abs}")?;
            } else {
                if !abs.is_one() {
                    write!(f, "{abs}*")?;
                }
                write_monomial(f, self.ring(), m)?;
            }
        }
        Ok(())
    }
}

#[derive(Debug, Clone, PartialEq)]
enum Tok {
    Num(BigInt, BigInt),
    Ident(String),
    Plus,
    Minus,
    Star,
    Caret,
    LParen,
    RParen,
}

fn tokenize(s: &str) -> Result<Vec<(usize, Tok)>> {
    let bytes = s.as_bytes();
    let mut out = Vec::new();
    let mut i = 0;
    let digits = |mut j: usize| {
        while j < bytes.len() && bytes[j].is_ascii_digit() {
            j += 1;
        }
        j
    };
    while i < bytes.len() {
        let c = bytes[i] as char;
        let start = i;
        if c.is_whitespace() {
            i += 1;
            continue;
        }
        let tok = match c {
            '+' => Tok::Plus,
            '-' => Tok::Minus,
            '*' => Tok::Star,
            '^' => Tok::Caret,
            '(' => Tok::LParen,
            ')' => Tok::RParen,
            '0'..='9' => {
                let j = digits(i);
                let num: BigInt = s[i..j].parse().unwrap();
                i = j;
                let mut den = BigInt::from(1);
                if i < bytes.len() && bytes[i] == b'/' {
                    let k = digits(i + 1);
                    if k == i + 1 {
                        return Err(Error::Parse { pos: i, msg: "expected denominator after `/`".into() });
                    }
                    den = s[i + 1..k].parse().unwrap();
                    i = k;
                }
                out.push((start, Tok::Num(num, den)));
                continue;
            }
            c if c.is_ascii_alphabetic() || c == '_' => {
                let mut j = i + 1;
                while j < bytes.len() && (bytes[j].is_ascii_alphanumeric() || bytes[j] == b'_') {
                    j += 1;
                }
                out.push((start, Tok::Ident(s[i..j].to_string())));
                i = j;
                continue;
            }
            _ => return Err(Error::Parse { pos: i, msg: format!("unexpected character `{c}`") }),
        };
        out.push((start, tok));
        i += 1;
    }
    Ok(out)
}

struct Parser<'a> {
    ring: &'a Ring,
    toks: Vec<(usize, Tok)>,
    pos: usize,
    len: usize,
}

impl Parser<'_> {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos).map(|(_, t)| t)
    }

    fn offset(&self) -> usize {
        self.toks.get(self.pos).map(|(p, _)| *p).unwrap_or(self.len)
    }

    fn err<T>(&self, msg: &str) -> Result<T> {
        Err(Error::Parse { pos: self.offset(), msg: msg.into() })
    }

    fn expr(&mut self) -> Result<SuperPoly> {
        let mut acc = SuperPoly::zero(self.ring);
        let mut first = true;
        loop {
            let neg = match self.peek() {
                Some(Tok::Plus) => {
                    self.pos += 1;
                    false
                }
                Some(Tok::Minus) => {
                    self.pos += 1;
                    true
                }
                _ if first => false,
                _ => break,
            };
            first = false;
            let t = self.term()?;
            acc = if neg { &acc - &t } else { &acc + &t };
        }
        Ok(acc)
    }

    fn term(&mut self) -> Result<SuperPoly> {
        let mut acc = self.factor()?;
        while self.peek() == Some(&Tok::Star) {
            self.pos += 1;
            let f = self.factor()?;
            acc = &acc * &f;
        }
        Ok(acc)
    }

    fn factor(&mut self) -> Result<SuperPoly> {
        let base = self.atom()?;
        if self.peek() == Some(&Tok::Caret) {
            self.pos += 1;
            match self.toks.get(self.pos) {
                Some((_, Tok::Num(n, d))) if *d == BigInt::from(1) => {
                    let k: u32 = n.try_into().map_err(|_| Error::Parse { pos: self.offset(), msg: "exponent too large".into() })?;
                    self.pos += 1;
                    return Ok(base.pow(k));
                }
                _ => return self.err("expected a nonnegative integer exponent"),
            }
        }
        Ok(base)
    }

    fn atom(&mut self) -> Result<SuperPoly> {
        let here = self.offset();
        match self.toks.get(self.pos).cloned() {
            Some((_, Tok::Num(n, d))) => {
                self.pos += 1;
                let c = FieldElem::from_ratio(&n, &d, self.ring.characteristic)
                    .map_err(|e| Error::Parse { pos: here, msg: e.to_string() })?;
                Ok(SuperPoly::constant(self.ring, c))
            }
            Some((_, Tok::Ident(name))) => {
                self.pos += 1;
                let v = self.ring.lookup(&name).ok_or(Error::UnknownVariable(name))?;
                Ok(SuperPoly::var(self.ring, v))
            }
            Some((_, Tok::LParen)) => {
                self.pos += 1;
                let inner = self.expr()?;
                if self.peek() != Some(&Tok::RParen) {
                    return self.err("expected `)`");
                }
                self.pos += 1;
                Ok(inner)
            }
            Some((_, Tok::Minus)) => {
                self.pos += 1;
                Ok(-&self.factor()?)
            }
            _ => self.err("expected a number, variable or `(`"),
        }
    }
}

impl SuperPoly {
    pub fn parse(ring: &Ring, s: &str) -> Result<SuperPoly> {
        let toks = tokenize(s)?;
        if toks.is_empty() {
            return Err(Error::Parse { pos: 0, msg: "empty polynomial".into() });
        }
        let mut p = Parser { ring, toks, pos: 0, len: s.len() };
        let out = p.expr()?;
        if p.pos != p.toks.len() {
            return p.err("trailing input");
        }
        Ok(out)
    }
}

/// One term of the JSON encoding.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TermJson {
    pub coeff: String,
    pub even_exp: Vec<u16>,
    pub odd_set: Vec<usize>,
}

impl SuperPoly {
    pub fn to_json_terms(&self) -> Vec<TermJson> {
        self.terms()
            .iter()
            .map(|(m, c)| TermJson { coeff: c.to_string(), even_exp: m.even_exp().to_vec(), odd_set: m.odd_set() })
            .collect()
    }

    /// Rebuilds a polynomial from its term list; odd sets may be unsorted, in
    /// which case the reordering sign is applied.
    pub fn from_json_terms(ring: &Ring, terms: &[TermJson]) -> Result<SuperPoly> {
        let mut acc = Vec::with_capacity(terms.len());
        for t in terms {
            if t.even_exp.len() != ring.n_even() || t.odd_set.iter().any(|&j| j >= ring.n_odd()) {
                return Err(Error::Json("term does not fit the ring".into()));
            }
            let c = FieldElem::parse(&t.coeff, ring.characteristic)?;
            let mut m = SuperMonomial::from_parts(&t.even_exp, 0);
            let mut neg = false;
            let mut dead = false;
            for &j in &t.odd_set {
                match m.mul(&SuperMonomial::odd_var(ring.n_even(), j)) {
                    Some((s, p)) => {
                        neg ^= s;
                        m = p;
                    }
                    None => dead = true,
                }
            }
            if !dead {
                acc.push((m, c.negate_sign(neg)));
            }
        }
        Ok(SuperPoly::from_terms(ring, acc))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::superpoly::RingSpec;

    fn ring(ch: u64) -> Ring {
        RingSpec::new(vec!["x".into(), "y".into()], vec!["a".into(), "b".into()], ch).unwrap()
    }

    #[test]
    fn print_parse_roundtrip() {
        let r = ring(0);
        for s in ["0", "1", "-3/2", "x^2", "x*y - a*b", "-2*x*a + 1/3*y*b", "x^3*y*a*b + 5"] {
            let p = SuperPoly::parse(&r, s).unwrap();
            assert_eq!(p.to_string(), s);
            assert_eq!(SuperPoly::parse(&r, &p.to_string()).unwrap(), p);
        }
    }

    #[test]
    fn parser_normalizes_signs() {
        let r = ring(0);
        let p = SuperPoly::parse(&r, "b*a + a*b").unwrap();
        assert!(p.is_zero());
        let q = SuperPoly::parse(&r, "(x + a)*(x - a)").unwrap();
        assert_eq!(q.to_string(), "x^2");
        assert_eq!(SuperPoly::parse(&r, "a^2").unwrap().to_string(), "0");
        assert!(SuperPoly::parse(&r, "x + z").is_err());
        assert!(SuperPoly::parse(&r, "x +").is_err());
    }

    #[test]
    fn modular_printing() {
        let r = ring(3);
        let p = SuperPoly::parse(&r, "x - y").unwrap();
        assert_eq!(p.to_string(), "x + 2*y");
    }

    #[test]
    fn json_roundtrip() {
        let r = ring(0);
        let p = SuperPoly::parse(&r, "-2*x*a*b + 1/3*y^2").unwrap();
        let j = serde_json::to_string(&p.to_json_terms()).unwrap();
        let back: Vec<TermJson> = serde_json::from_str(&j).unwrap();
        assert_eq!(SuperPoly::from_json_terms(&r, &back).unwrap(), p);
        let swapped = vec![TermJson { coeff: "1".into(), even_exp: vec![0, 0], odd_set: vec![1, 0] }];
        assert_eq!(SuperPoly::from_json_terms(&r, &swapped).unwrap().to_string(), "-a*b");
    }
}
