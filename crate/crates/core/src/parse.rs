//! Recursive-descent parser for polynomial and scalar expressions.
//!
//! ```text
//! expr   = term (('+' | '-') term)*
//! term   = factor (('*' | '/') factor)*
//! factor = '-' factor | '+' factor | power
//! power  = atom ('^' '-'? integer)?
//! atom   = integer | identifier | '(' expr ')'
//! ```
//!
//! `q`, `zeta` and (for N = 4) `i` denote scalars; every other identifier
//! must be a declared generator. Division and negative powers are only
//! allowed for unit scalars.

use num_bigint::BigInt;
use num_rational::BigRational;

use crate::error::{Error, Result};
use crate::group::GradingGroup;
use crate::ncpoly::{GenSet, NcPoly, Word};
use crate::scalar::Scalar;

#[derive(Clone, Debug, PartialEq)]
enum Tok {
    Int(BigInt),
    Ident(String),
    Op(char),
}

fn tokenize(text: &str) -> Result<Vec<(usize, Tok)>> {
    let bytes = text.as_bytes();
    let mut out = Vec::new();
    let mut k = 0;
    while k < bytes.len() {
        let c = bytes[k] as char;
        if c.is_ascii_whitespace() {
            k += 1;
        } else if c.is_ascii_digit() {
            let start = k;
            while k < bytes.len() && bytes[k].is_ascii_digit() {
                k += 1;
            }
            let n: BigInt = text[start..k].parse().expect("digits");
            out.push((start, Tok::Int(n)));
        } else if c.is_ascii_alphabetic() || c == '_' {
            let start = k;
            while k < bytes.len() && (bytes[k].is_ascii_alphanumeric() || bytes[k] == b'_') {
                k += 1;
            }
            while k < bytes.len() && bytes[k] == b'\'' {
                k += 1;
            }
            out.push((start, Tok::Ident(text[start..k].to_string())));
        } else if "+-*/^()".contains(c) {
            out.push((k, Tok::Op(c)));
            k += 1;
        } else {
            let ch = text[k..].chars().next().expect("char");
            return Err(Error::Parse { pos: k, msg: format!("unexpected character {ch:?}") });
        }
    }
    Ok(out)
}

struct Parser<'a> {
    toks: Vec<(usize, Tok)>,
    pos: usize,
    end: usize,
    gens: &'a GenSet,
}

impl Parser<'_> {
    fn order(&self) -> u32 {
        self.gens.order()
    }

    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos).map(|(_, t)| t)
    }

    fn here(&self) -> usize {
        self.toks.get(self.pos).map_or(self.end, |(p, _)| *p)
    }

    fn eat(&mut self, op: char) -> bool {
        if self.peek() == Some(&Tok::Op(op)) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn err<T>(&self, msg: impl Into<String>) -> Result<T> {
        Err(Error::Parse { pos: self.here(), msg: msg.into() })
    }

    fn expr(&mut self) -> Result<NcPoly> {
        let mut acc = self.term()?;
        loop {
            if self.eat('+') {
                acc = acc.checked_add(&self.term()?)?;
            } else if self.eat('-') {
                acc = acc.checked_sub(&self.term()?)?;
            } else {
                return Ok(acc);
            }
        }
    }

    fn term(&mut self) -> Result<NcPoly> {
        let mut acc = self.factor()?;
        loop {
            if self.eat('*') {
                acc = acc.checked_mul(&self.factor()?)?;
            } else if self.peek() == Some(&Tok::Op('/')) {
                let at = self.here();
                self.pos += 1;
                let d = self.factor()?;
                let inv = as_scalar(&d)
                    .and_then(|s| s.unit_inverse().ok())
                    .ok_or_else(|| Error::Parse { pos: at, msg: "division by a non-unit".into() })?;
                acc = acc.scale(&inv)?;
            } else {
                return Ok(acc);
            }
        }
    }

    fn factor(&mut self) -> Result<NcPoly> {
        if self.eat('-') {
            return Ok(-self.factor()?);
        }
        if self.eat('+') {
            return self.factor();
        }
        self.power()
    }

    fn power(&mut self) -> Result<NcPoly> {
        let base = self.atom()?;
        if !self.eat('^') {
            return Ok(base);
        }
        let at = self.here();
        let neg = self.eat('-');
        let e = match self.peek() {
            Some(Tok::Int(n)) => {
                let e = u32::try_from(n.clone()).map_err(|_| Error::Parse { pos: at, msg: "exponent too large".into() })?;
                self.pos += 1;
                e
            }
            _ => return self.err("expected an integer exponent"),
        };
        if !neg {
            return base.pow(e);
        }
        match as_scalar(&base).and_then(|s| s.unit_inverse().ok()) {
            Some(inv) => Ok(NcPoly::constant(inv.pow(i64::from(e))?)),
            None => Err(Error::Parse { pos: at, msg: "negative exponent on a non-unit".into() }),
        }
    }

    fn atom(&mut self) -> Result<NcPoly> {
        let order = self.order();
        match self.peek().cloned() {
            Some(Tok::Int(n)) => {
                self.pos += 1;
                Ok(NcPoly::constant(Scalar::from_rational(order, BigRational::from_integer(n))?))
            }
            Some(Tok::Ident(name)) => {
                self.pos += 1;
                match name.as_str() {
                    "q" => Ok(NcPoly::constant(Scalar::q_pow(order, 1)?)),
                    "zeta" => Ok(NcPoly::constant(Scalar::zeta(order)?)),
                    "i" if order == 4 => Ok(NcPoly::constant(Scalar::zeta(order)?)),
                    _ => match self.gens.index_of(&name) {
                        Some(k) => NcPoly::generator(order, k),
                        None => Err(Error::UnknownIdentifier(name)),
                    },
                }
            }
            Some(Tok::Op('(')) => {
                self.pos += 1;
                let inner = self.expr()?;
                if !self.eat(')') {
                    return self.err("expected ')'");
                }
                Ok(inner)
            }
            Some(Tok::Op(c)) => self.err(format!("unexpected {c:?}")),
            None => self.err("unexpected end of input"),
        }
    }
}

fn as_scalar(p: &NcPoly) -> Option<Scalar> {
    if p.is_zero() {
        return Scalar::zero(p.order()).ok();
    }
    if p.len() == 1 {
        if let Some(c) = p.coefficient(&Word::empty()) {
            return Some(c.clone());
        }
    }
    None
}

/// Parses a polynomial over the generators of `gens`.
pub fn parse_expression(text: &str, gens: &GenSet) -> Result<NcPoly> {
    let toks = tokenize(text)?;
    if toks.is_empty() {
        return Err(Error::Parse { pos: 0, msg: "empty expression".into() });
    }
    let mut p = Parser { toks, pos: 0, end: text.len(), gens };
    let out = p.expr()?;
    if p.pos != p.toks.len() {
        return p.err("trailing input");
    }
    Ok(out)
}

/// Parses a scalar expression such as `-i*q^-3` or `(1 + zeta)/2`.
pub fn parse_scalar(text: &str, order: u32) -> Result<Scalar> {
    let gens = GenSet::new(order, GradingGroup::free(0), Vec::new())?;
    let p = parse_expression(text, &gens)?;
    as_scalar(&p).ok_or_else(|| Error::Parse { pos: 0, msg: "not a scalar".into() })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn gens(names: &[&str]) -> GenSet {
        GenSet::ungraded(4, GradingGroup::free(0), names).unwrap()
    }

    #[test]
    fn commutator() {
        let g = gens(&["x", "y"]);
        let p = parse_expression("x*y - y*x", &g).unwrap();
        assert_eq!(p.len(), 2);
        assert_eq!(p.render(&g), "-y*x + x*y");
    }

    #[test]
    fn sl2_relation() {
        let g = gens(&["a", "b", "h"]);
        let p = parse_expression("a*b - b*a + 2*h", &g).unwrap();
        assert_eq!(p.render(&g), "-b*a + a*b + 2*h");
        let g = gens(&["x", "y", "z", "t"]);
        let p = parse_expression("x^2 - y^2 - z^2 + t^2 - 1", &g).unwrap();
        assert_eq!(p.len(), 5);
        assert_eq!(p.render(&g), "t^2 - z^2 - y^2 + x^2 - 1");
    }

    #[test]
    fn unary_minus_binds_tighter_than_plus() {
        let g = gens(&["x"]);
        let a = parse_expression("-x^2 + 1", &g).unwrap();
        let b = parse_expression("1 - x*x", &g).unwrap();
        assert_eq!(a, b);
    }

    #[test]
    fn scalars() {
        assert_eq!(parse_scalar("i*i", 4).unwrap(), Scalar::from_int(4, -1).unwrap());
        assert_eq!(parse_scalar("q^-2*q^2", 4).unwrap(), Scalar::one(4).unwrap());
        assert_eq!(
            parse_scalar("-i*q^-3", 4).unwrap(),
            -&(&Scalar::zeta(4).unwrap() * &Scalar::q_pow(4, -3).unwrap())
        );
        let half = parse_scalar("1/2", 4).unwrap();
        assert_eq!(&half + &half, Scalar::one(4).unwrap());
        assert_eq!(parse_scalar("zeta^8", 8).unwrap(), Scalar::one(8).unwrap());
    }

    #[test]
    fn errors() {
        let g = gens(&["x"]);
        assert!(matches!(parse_expression("x + w", &g), Err(Error::UnknownIdentifier(n)) if n == "w"));
        assert!(matches!(parse_expression("x +", &g), Err(Error::Parse { pos: 3, .. })));
        assert!(matches!(parse_expression("x $ 2", &g), Err(Error::Parse { pos: 2, .. })));
        assert!(matches!(parse_expression("(x", &g), Err(Error::Parse { .. })));
        assert!(matches!(parse_expression("x^-1", &g), Err(Error::Parse { .. })));
        assert!(matches!(parse_expression("x/(1+q)", &g), Err(Error::Parse { .. })));
        assert!(matches!(parse_expression("", &g), Err(Error::Parse { pos: 0, .. })));
    }

    #[test]
    fn print_parse_round_trip() {
        let g = gens(&["A", "B", "H", "X'"]);
        for text in ["-A*B - 2*H", "(1 + i)*q^2*A^3*B + 1/2*H - i", "(1 - q)*X'*A", "-1", "0"] {
            let p = parse_expression(text, &g).unwrap();
            assert_eq!(parse_expression(&p.render(&g), &g).unwrap(), p, "{text}");
        }
    }
}
