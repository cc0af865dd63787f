//! Text grammar for scalars.
//!
//! ```text
//! rational    := int [ "/" int ]                      e.g.  -3/4
//! prime field := expr "mod" int                       e.g.  3 mod 7
//! cyclotomic  := expr "(order" int ")"                e.g.  1/2 - z^7 (order 12)
//! rat. func.  := expr in t (or t1, t2, ...)           e.g.  (1 - t)/(1 + t^-1)
//! expr        := sum of products of atoms, atoms may carry "^" int;
//!                atoms are integers, "z", "t", "t<k>", or "(" expr ")"
//! ```
//! `z` is the primitive root of unity of the declared order; exponents may
//! be negative. Parse errors carry the byte position of the offending token.

use super::{FieldDescriptor, FieldKind, Scalar};
use crate::{Error, Result};
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use std::fmt;

#[derive(Debug, Clone, PartialEq)]
enum Tok {
    Int(BigInt),
    Ident(String),
    Plus,
    Minus,
    Star,
    Slash,
    Caret,
    LParen,
    RParen,
}

fn lex(s: &str) -> Result<Vec<(usize, Tok)>> {
    let mut out = vec![];
    let b = s.as_bytes();
    let mut i = 0;
    while i < b.len() {
        let c = b[i] as char;
        match c {
            ' ' | '\t' | '\n' => i += 1,
            '+' => {
                out.push((i, Tok::Plus));
                i += 1;
            }
            '-' => {
                out.push((i, Tok::Minus));
                i += 1;
            }
            '*' => {
                out.push((i, Tok::Star));
                i += 1;
            }
            '/' => {
                out.push((i, Tok::Slash));
                i += 1;
            }
            '^' => {
                out.push((i, Tok::Caret));
                i += 1;
            }
            '(' => {
                out.push((i, Tok::LParen));
                i += 1;
            }
            ')' => {
                out.push((i, Tok::RParen));
                i += 1;
            }
            '0'..='9' => {
                let start = i;
                while i < b.len() && b[i].is_ascii_digit() {
                    i += 1;
                }
                let n: BigInt = s[start..i].parse().unwrap();
                out.push((start, Tok::Int(n)));
            }
            'a'..='z' | 'A'..='Z' | '_' => {
                let start = i;
                while i < b.len() && (b[i].is_ascii_alphanumeric() || b[i] == b'_') {
                    i += 1;
                }
                out.push((start, Tok::Ident(s[start..i].to_string())));
            }
            _ => return Err(Error::parse(i, format!("unexpected character '{c}'"))),
        }
    }
    Ok(out)
}

struct Parser<'a> {
    toks: &'a [(usize, Tok)],
    pos: usize,
    field: FieldDescriptor,
}

impl<'a> Parser<'a> {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos).map(|(_, t)| t)
    }

    fn at(&self) -> usize {
        self.toks
            .get(self.pos)
            .map(|(p, _)| *p)
            .unwrap_or(usize::MAX)
    }

    fn bump(&mut self) -> Option<&Tok> {
        let t = self.toks.get(self.pos).map(|(_, t)| t);
        self.pos += 1;
        t
    }

    fn expr(&mut self) -> Result<Scalar> {
        let mut acc = self.term()?;
        loop {
            match self.peek() {
                Some(Tok::Plus) => {
                    self.bump();
                    let t = self.term()?;
                    acc = acc.add(&t);
                }
                Some(Tok::Minus) => {
                    self.bump();
                    let t = self.term()?;
                    acc = acc.sub(&t);
                }
                _ => return Ok(acc),
            }
        }
    }

    fn term(&mut self) -> Result<Scalar> {
        let mut acc = self.signed_factor()?;
        loop {
            match self.peek() {
                Some(Tok::Star) => {
                    self.bump();
                    let f = self.signed_factor()?;
                    acc = acc.mul(&f);
                }
                Some(Tok::Slash) => {
                    self.bump();
                    let at = self.at();
                    let f = self.signed_factor()?;
                    acc = acc
                        .div(&f)
                        .ok_or_else(|| Error::parse(at, "division by zero"))?;
                }
                // juxtaposition: "3 z^2", "2 t1 t2"
                Some(Tok::Ident(_)) | Some(Tok::LParen) | Some(Tok::Int(_)) => {
                    let f = self.factor()?;
                    acc = acc.mul(&f);
                }
                _ => return Ok(acc),
            }
        }
    }

    fn signed_factor(&mut self) -> Result<Scalar> {
        match self.peek() {
            Some(Tok::Minus) => {
                self.bump();
                Ok(self.signed_factor()?.neg())
            }
            Some(Tok::Plus) => {
                self.bump();
                self.signed_factor()
            }
            _ => self.factor(),
        }
    }

    fn factor(&mut self) -> Result<Scalar> {
        let at = self.at();
        let base = match self.bump().cloned() {
            Some(Tok::Int(n)) => {
                Scalar::from_rational(self.field, BigRational::from(n)).map_err(|e| match e {
                    Error::Validation(m) => Error::parse(at, m),
                    other => other,
                })?
            }
            Some(Tok::Ident(name)) => self.variable(at, &name)?,
            Some(Tok::LParen) => {
                let inner = self.expr()?;
                match self.bump() {
                    Some(Tok::RParen) => inner,
                    _ => return Err(Error::parse(at, "unclosed parenthesis")),
                }
            }
            other => {
                return Err(Error::parse(
                    at,
                    format!("expected a value, found {other:?}"),
                ))
            }
        };
        if self.peek() == Some(&Tok::Caret) {
            self.bump();
            let neg = if self.peek() == Some(&Tok::Minus) {
                self.bump();
                true
            } else {
                false
            };
            let at2 = self.at();
            match self.bump().cloned() {
                Some(Tok::Int(n)) => {
                    let mut e: i64 = n
                        .try_into()
                        .map_err(|_| Error::parse(at2, "exponent too large"))?;
                    if neg {
                        e = -e;
                    }
                    base.pow(e)
                        .ok_or_else(|| Error::parse(at2, "inverse of zero"))
                }
                _ => Err(Error::parse(at2, "expected integer exponent")),
            }
        } else {
            Ok(base)
        }
    }

    fn variable(&mut self, at: usize, name: &str) -> Result<Scalar> {
        match self.field.kind {
            FieldKind::Cyclotomic(d) if name == "z" => Ok(Scalar::root_of_unity(d, 1)),
            FieldKind::RationalFunctions(v) => {
                if name == "t" && v == 1 {
                    Ok(Scalar::variable(1, 0, 1))
                } else if let Some(idx) = name.strip_prefix('t').and_then(|s| s.parse::<usize>().ok())
                {
                    if idx >= 1 && idx <= v as usize {
                        Ok(Scalar::variable(v, idx - 1, 1))
                    } else {
                        Err(Error::parse(at, format!("variable {name} out of range")))
                    }
                } else {
                    Err(Error::parse(at, format!("unknown variable {name}")))
                }
            }
            _ => Err(Error::parse(
                at,
                format!("variable {name} not valid in this field"),
            )),
        }
    }
}

/// Parse a scalar. The field is inferred from the trailing markers
/// ("... mod p", "... (order d)"), from variables mentioned, or defaults to Q;
/// pass `expect` to force and validate a specific field.
pub fn parse_scalar(input: &str, expect: Option<FieldDescriptor>) -> Result<Scalar> {
    let toks = lex(input)?;
    // trailing "mod p"
    let mut field = None;
    let mut end = toks.len();
    if toks.len() >= 2 {
        if let (Tok::Ident(m), Tok::Int(p)) = (&toks[toks.len() - 2].1, &toks[toks.len() - 1].1) {
            if m == "mod" {
                let p: u64 = p.try_into().map_err(|_| {
                    Error::parse(toks[toks.len() - 1].0, "modulus too large")
                })?;
                field = Some(FieldDescriptor::prime_field(p)?);
                end = toks.len() - 2;
            }
        }
    }
    // trailing "(order d)"
    if field.is_none() && toks.len() >= 4 {
        let n = toks.len();
        if let (Tok::LParen, Tok::Ident(o), Tok::Int(d), Tok::RParen) =
            (&toks[n - 4].1, &toks[n - 3].1, &toks[n - 2].1, &toks[n - 1].1)
        {
            if o == "order" {
                let d: u32 = d
                    .try_into()
                    .map_err(|_| Error::parse(toks[n - 2].0, "order too large"))?;
                field = Some(FieldDescriptor::cyclotomic(d)?);
                end = n - 4;
            }
        }
    }
    // variables t / t<k> present?
    if field.is_none() {
        let mut max_var = 0usize;
        let mut saw_t = false;
        for (_, t) in &toks {
            if let Tok::Ident(name) = t {
                if name == "t" {
                    saw_t = true;
                } else if let Some(k) = name.strip_prefix('t').and_then(|s| s.parse::<usize>().ok())
                {
                    max_var = max_var.max(k);
                }
            }
        }
        if saw_t || max_var > 0 {
            field = Some(FieldDescriptor::rational_functions(
                max_var.max(1) as u8,
            )?);
        }
    }
    let field = match (field, expect) {
        (Some(f), Some(e)) => {
            // widen a plain-t parse to the expected variable count
            let f = match (f.kind, e.kind) {
                (FieldKind::RationalFunctions(a), FieldKind::RationalFunctions(b)) if b >= a => e,
                _ => f,
            };
            if f != e {
                return Err(Error::validation(format!(
                    "scalar text is in {f:?} but {e:?} was expected"
                )));
            }
            f
        }
        (Some(f), None) => f,
        (None, Some(e)) => e,
        (None, None) => FieldDescriptor::rationals(),
    };
    let mut p = Parser {
        toks: &toks[..end],
        pos: 0,
        field,
    };
    if p.toks.is_empty() {
        return Err(Error::parse(0, "empty scalar"));
    }
    let v = p.expr()?;
    if p.pos != p.toks.len() {
        return Err(Error::parse(p.at(), "trailing input"));
    }
    Ok(v)
}

fn fmt_rat(r: &BigRational) -> String {
    if r.denom().is_one() {
        format!("{}", r.numer())
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Scalar::Rational(r) => write!(f, "{}", fmt_rat(r)),
            Scalar::PrimeField { p, value } => write!(f, "{value} mod {p}"),
            Scalar::Cyclotomic(c) => {
                let mut parts = vec![];
                for (k, coef) in c.coords.iter().enumerate() {
                    if coef.is_zero() {
                        continue;
                    }
                    let body = if k == 0 {
                        fmt_rat(coef)
                    } else if coef.is_one() {
                        format!("z^{k}")
                    } else if (-coef).is_one() {
                        format!("-z^{k}")
                    } else {
                        format!("{} z^{k}", fmt_rat(coef))
                    };
                    parts.push(body);
                }
                if parts.is_empty() {
                    parts.push("0".into());
                }
                write!(f, "{} (order {})", join_signed(&parts), c.order)
            }
            Scalar::RationalFunction(rf) => {
                let num = fmt_laurent(&rf.num);
                if rf.den == super::Laurent::one(rf.vars) {
                    write!(f, "{num}")
                } else {
                    write!(f, "({})/({})", num, fmt_laurent(&rf.den))
                }
            }
        }
    }
}

fn fmt_laurent(p: &super::Laurent) -> String {
    if p.is_zero() {
        return "0".into();
    }
    let uni = p.vars == 1;
    let mut parts = vec![];
    for (e, c) in p.terms.iter().rev() {
        let mut vars = String::new();
        for (i, &ei) in e.iter().enumerate() {
            if ei == 0 {
                continue;
            }
            let name = if uni {
                "t".to_string()
            } else {
                format!("t{}", i + 1)
            };
            if ei == 1 {
                vars.push_str(&format!(" {name}"));
            } else if ei < 0 {
                vars.push_str(&format!(" {name}^-{}", -ei));
            } else {
                vars.push_str(&format!(" {name}^{ei}"));
            }
        }
        let body = if vars.is_empty() {
            fmt_rat(c)
        } else if c.is_one() {
            vars.trim_start().to_string()
        } else if (-c).is_one() {
            format!("-{}", vars.trim_start())
        } else {
            format!("{}{}", fmt_rat(c), vars)
        };
        parts.push(body);
    }
    join_signed(&parts)
}

fn join_signed(parts: &[String]) -> String {
    let mut out = String::new();
    for (i, p) in parts.iter().enumerate() {
        if i == 0 {
            out.push_str(p);
        } else if let Some(rest) = p.strip_prefix('-') {
            out.push_str(" - ");
            out.push_str(rest);
        } else {
            out.push_str(" + ");
            out.push_str(p);
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_rationals() {
        assert_eq!(
            parse_scalar("-3/4", None).unwrap(),
            Scalar::Rational(BigRational::new(BigInt::from(-3), BigInt::from(4)))
        );
    }

    #[test]
    fn parses_prime_field() {
        let s = parse_scalar("10 mod 7", None).unwrap();
        assert_eq!(s, Scalar::PrimeField { p: 7, value: 3 });
    }

    #[test]
    fn parses_cyclotomic() {
        let s = parse_scalar("1/2 - z^7 (order 12)", None).unwrap();
        let want = Scalar::from_rational(
            FieldDescriptor::cyclotomic(12).unwrap(),
            BigRational::new(BigInt::from(1), BigInt::from(2)),
        )
        .unwrap()
        .sub(&Scalar::root_of_unity(12, 7));
        assert_eq!(s, want);
    }

    #[test]
    fn parses_rational_function() {
        let s = parse_scalar("(1 - t)/(1 + t^-1)", None).unwrap();
        let one = Scalar::one(FieldDescriptor::rational_functions(1).unwrap());
        let t = Scalar::variable(1, 0, 1);
        let want = one
            .sub(&t)
            .div(&one.add(&t.pow(-1).unwrap()))
            .unwrap();
        assert_eq!(s, want);
    }

    #[test]
    fn display_round_trip() {
        for text in [
            "-3/4",
            "3 mod 7",
            "1/2 - z^7 (order 12)",
            "(1 - t)/(1 + t^-1)",
            "2 t1 t2^-3 + 1",
        ] {
            let s = parse_scalar(text, None).unwrap();
            let again = parse_scalar(&s.to_string(), Some(s.field())).unwrap();
            assert_eq!(s, again, "round trip failed for {text}");
        }
    }

    #[test]
    fn error_positions() {
        match parse_scalar("1 + ?", None) {
            Err(Error::Parse { pos, .. }) => assert_eq!(pos, 4),
            other => panic!("expected parse error, got {other:?}"),
        }
    }
}
