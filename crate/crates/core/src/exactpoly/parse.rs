//! Text syntax for polynomials and rational functions.
//!
//! Variables are `x0`..`x9` (multivariate) or `z` (univariate); literals are
//! integers, with `3/2` read as a quotient. Operators are `+ - * / ^` and
//! parentheses; juxtaposition multiplies (`2x1`, `(z+1)(z-1)`). Division is
//! only allowed by nonzero constants in multivariate input.

use num_bigint::BigInt;
use num_traits::Zero;

use super::{MultiPoly, Rational, RationalFunction, UniPoly};
use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq)]
enum Tok {
    Num(BigInt),
    Var(usize),
    Z,
    Plus,
    Minus,
    Star,
    Slash,
    Caret,
    LParen,
    RParen,
}

fn lex(s: &str) -> Result<Vec<(usize, Tok)>> {
    let bytes = s.as_bytes();
    let mut out = Vec::new();
    let mut i = 0;
    while i < bytes.len() {
        let c = bytes[i];
        let start = i;
        let tok = match c {
            b' ' | b'\t' | b'\n' | b'\r' => {
                i += 1;
                continue;
            }
            b'0'..=b'9' => {
                while i < bytes.len() && bytes[i].is_ascii_digit() {
                    i += 1;
                }
                let n: BigInt = s[start..i].parse().map_err(|_| Error::parse(start, "bad integer"))?;
                out.push((start, Tok::Num(n)));
                continue;
            }
            b'x' => {
                i += 1;
                let ds = i;
                while i < bytes.len() && bytes[i].is_ascii_digit() {
                    i += 1;
                }
                if ds == i {
                    return Err(Error::parse(start, "variable x needs an index 0..9"));
                }
                let idx: usize = s[ds..i].parse().map_err(|_| Error::parse(ds, "bad index"))?;
                if idx > 9 || i - ds > 1 {
                    return Err(Error::parse(start, format!("variable index {idx} outside 0..9")));
                }
                out.push((start, Tok::Var(idx)));
                continue;
            }
            b'z' => Tok::Z,
            b'+' => Tok::Plus,
            b'-' => Tok::Minus,
            b'*' => Tok::Star,
            b'/' => Tok::Slash,
            b'^' => Tok::Caret,
            b'(' => Tok::LParen,
            b')' => Tok::RParen,
            _ => return Err(Error::parse(start, format!("unexpected character {:?}", c as char))),
        };
        out.push((start, tok));
        i += 1;
    }
    Ok(out)
}

#[derive(Clone, Debug)]
enum Expr {
    Num(BigInt),
    Var(usize),
    Z,
    Neg(Box<Expr>),
    Add(Box<Expr>, Box<Expr>),
    Sub(Box<Expr>, Box<Expr>),
    Mul(Box<Expr>, Box<Expr>),
    Div(Box<Expr>, Box<Expr>, usize),
    Pow(Box<Expr>, i64),
}

struct Parser {
    toks: Vec<(usize, Tok)>,
    pos: usize,
    len: usize,
}

impl Parser {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos).map(|(_, t)| t)
    }

    fn offset(&self) -> usize {
        self.toks.get(self.pos).map(|(o, _)| *o).unwrap_or(self.len)
    }

    fn next(&mut self) -> Option<Tok> {
        let t = self.toks.get(self.pos).map(|(_, t)| t.clone());
        self.pos += 1;
        t
    }

    fn expr(&mut self) -> Result<Expr> {
        let mut lhs = self.term()?;
        loop {
            match self.peek() {
                Some(Tok::Plus) => {
                    self.pos += 1;
                    lhs = Expr::Add(Box::new(lhs), Box::new(self.term()?));
                }
                Some(Tok::Minus) => {
                    self.pos += 1;
                    lhs = Expr::Sub(Box::new(lhs), Box::new(self.term()?));
                }
                _ => return Ok(lhs),
            }
        }
    }

    fn term(&mut self) -> Result<Expr> {
        let mut lhs = self.unary()?;
        loop {
            match self.peek() {
                Some(Tok::Star) => {
                    self.pos += 1;
                    lhs = Expr::Mul(Box::new(lhs), Box::new(self.unary()?));
                }
                Some(Tok::Slash) => {
                    self.pos += 1;
                    let at = self.offset();
                    lhs = Expr::Div(Box::new(lhs), Box::new(self.unary()?), at);
                }
                Some(Tok::Num(_) | Tok::Var(_) | Tok::Z | Tok::LParen) => {
                    lhs = Expr::Mul(Box::new(lhs), Box::new(self.power()?));
                }
                _ => return Ok(lhs),
            }
        }
    }

    fn unary(&mut self) -> Result<Expr> {
        match self.peek() {
            Some(Tok::Minus) => {
                self.pos += 1;
                Ok(Expr::Neg(Box::new(self.unary()?)))
            }
            Some(Tok::Plus) => {
                self.pos += 1;
                self.unary()
            }
            _ => self.power(),
        }
    }

    fn power(&mut self) -> Result<Expr> {
        let base = self.primary()?;
        if self.peek() != Some(&Tok::Caret) {
            return Ok(base);
        }
        self.pos += 1;
        let at = self.offset();
        let neg = if self.peek() == Some(&Tok::Minus) {
            self.pos += 1;
            true
        } else {
            false
        };
        match self.next() {
            Some(Tok::Num(n)) => {
                let e: i64 = i64::try_from(n).map_err(|_| Error::parse(at, "exponent too large"))?;
                Ok(Expr::Pow(Box::new(base), if neg { -e } else { e }))
            }
            _ => Err(Error::parse(at, "expected an integer exponent")),
        }
    }

    fn primary(&mut self) -> Result<Expr> {
        let at = self.offset();
        match self.next() {
            Some(Tok::Num(n)) => Ok(Expr::Num(n)),
            Some(Tok::Var(i)) => Ok(Expr::Var(i)),
            Some(Tok::Z) => Ok(Expr::Z),
            Some(Tok::LParen) => {
                let e = self.expr()?;
                match self.next() {
                    Some(Tok::RParen) => Ok(e),
                    _ => Err(Error::parse(self.offset(), "expected ')'")),
                }
            }
            Some(t) => Err(Error::parse(at, format!("unexpected token {t:?}"))),
            None => Err(Error::parse(at, "unexpected end of input")),
        }
    }
}

fn parse_expr(s: &str) -> Result<Expr> {
    let toks = lex(s)?;
    if toks.is_empty() {
        return Err(Error::parse(0, "empty expression"));
    }
    let mut p = Parser {
        toks,
        pos: 0,
        len: s.len(),
    };
    let e = p.expr()?;
    if p.pos < p.toks.len() {
        return Err(Error::parse(p.offset(), "trailing input"));
    }
    Ok(e)
}

fn max_var(e: &Expr) -> Option<usize> {
    match e {
        Expr::Var(i) => Some(*i),
        Expr::Num(_) | Expr::Z => None,
        Expr::Neg(a) | Expr::Pow(a, _) => max_var(a),
        Expr::Add(a, b) | Expr::Sub(a, b) | Expr::Mul(a, b) | Expr::Div(a, b, _) => max_var(a).max(max_var(b)),
    }
}

fn eval_multi(e: &Expr, n: usize) -> Result<MultiPoly> {
    Ok(match e {
        Expr::Num(v) => MultiPoly::constant(n, Rational::from_integer(v.clone())),
        Expr::Var(i) => {
            if *i >= n {
                return Err(Error::parse(0, format!("x{i} outside a ring of {n} variables")));
            }
            MultiPoly::var(n, *i)
        }
        Expr::Z => return Err(Error::parse(0, "z is not allowed in a multivariate polynomial")),
        Expr::Neg(a) => -&eval_multi(a, n)?,
        Expr::Add(a, b) => &eval_multi(a, n)? + &eval_multi(b, n)?,
        Expr::Sub(a, b) => &eval_multi(a, n)? - &eval_multi(b, n)?,
        Expr::Mul(a, b) => &eval_multi(a, n)? * &eval_multi(b, n)?,
        Expr::Div(a, b, at) => {
            let d = eval_multi(b, n)?;
            if !d.is_constant() || d.is_zero() {
                return Err(Error::parse(*at, "division by a non-constant or zero"));
            }
            eval_multi(a, n)?.scale(&d.constant_term().recip())
        }
        Expr::Pow(a, k) => {
            let k = u32::try_from(*k).map_err(|_| Error::parse(0, "negative exponent in a polynomial"))?;
            eval_multi(a, n)?.pow(k)
        }
    })
}

fn eval_rf(e: &Expr) -> Result<RationalFunction> {
    Ok(match e {
        Expr::Num(v) => RationalFunction::constant(Rational::from_integer(v.clone())),
        Expr::Z => RationalFunction::z(),
        Expr::Var(i) => return Err(Error::parse(0, format!("x{i} is not allowed in a function of z"))),
        Expr::Neg(a) => eval_rf(a)?.neg(),
        Expr::Add(a, b) => eval_rf(a)?.add(&eval_rf(b)?),
        Expr::Sub(a, b) => eval_rf(a)?.sub(&eval_rf(b)?),
        Expr::Mul(a, b) => eval_rf(a)?.mul(&eval_rf(b)?),
        Expr::Div(a, b, at) => eval_rf(a)?.div(&eval_rf(b)?).map_err(|_| Error::parse(*at, "division by zero"))?,
        Expr::Pow(a, k) => eval_rf(a)?.pow(*k).map_err(|err| Error::parse(0, err.to_string()))?,
    })
}

/// Parses a polynomial in `x0..x9`. With `nvars = None` the ring is sized to
/// the largest index used (at least one variable).
pub fn parse_multi(s: &str, nvars: Option<usize>) -> Result<MultiPoly> {
    let e = parse_expr(s)?;
    let n = nvars.unwrap_or_else(|| max_var(&e).map_or(1, |i| i + 1));
    eval_multi(&e, n)
}

/// Largest variable index mentioned in `s`.
pub fn max_var_index(s: &str) -> Result<Option<usize>> {
    Ok(max_var(&parse_expr(s)?))
}

pub fn parse_rf(s: &str) -> Result<RationalFunction> {
    eval_rf(&parse_expr(s)?)
}

pub fn parse_uni(s: &str) -> Result<UniPoly> {
    let f = parse_rf(s)?;
    if !f.is_polynomial() {
        return Err(Error::NotPolynomial(s.to_string()));
    }
    Ok(f.num().clone())
}

/// A rational literal: `3`, `-3/2`.
pub fn parse_rational(s: &str) -> Result<Rational> {
    let t = s.trim();
    let (neg, body) = match t.strip_prefix('-') {
        Some(rest) => (true, rest),
        None => (false, t),
    };
    let (n, d) = match body.split_once('/') {
        Some((a, b)) => (a.trim(), b.trim()),
        None => (body, "1"),
    };
    let n: BigInt = n.parse().map_err(|_| Error::parse(0, format!("bad rational {s:?}")))?;
    let d: BigInt = d.parse().map_err(|_| Error::parse(0, format!("bad rational {s:?}")))?;
    if d.is_zero() {
        return Err(Error::ZeroDenominator);
    }
    let r = Rational::new(n, d);
    Ok(if neg { -r } else { r })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_multivariate() {
        let p = parse_multi("x0^2 + 2x0x1 - 3/2", None).unwrap();
        assert_eq!(p.nvars(), 2);
        assert_eq!(p.to_string(), "x0^2 + 2*x0*x1 - 3/2");
        let q = parse_multi("(x1 - 1)*(x1 + 1)", Some(3)).unwrap();
        assert_eq!(q, parse_multi("x1^2 - 1", Some(3)).unwrap());
    }

    #[test]
    fn parses_rational_functions() {
        let f = parse_rf("(z^2 - 1)/(z - 1)").unwrap();
        assert_eq!(f, RationalFunction::from_poly(UniPoly::from_ints(&[1, 1])));
        let g = parse_rf("1/z").unwrap();
        assert_eq!(g, RationalFunction::z().recip().unwrap());
        assert_eq!(parse_rf("z^-2").unwrap(), RationalFunction::z().pow(-2).unwrap());
        assert_eq!(parse_uni("3/2z").unwrap(), UniPoly::z().scale(&parse_rational("3/2").unwrap()));
    }

    #[test]
    fn rejects_bad_input() {
        assert!(parse_multi("x1 +", None).is_err());
        assert!(parse_multi("x12", None).is_err());
        assert!(parse_multi("x1/x2", None).is_err());
        assert!(parse_multi("z", None).is_err());
        assert!(parse_rf("x1").is_err());
        assert!(parse_rf("1/0").is_err());
        assert!(parse_uni("1/z").is_err());
        assert!(parse_rf("").is_err());
        assert!(parse_rf("(z").is_err());
    }

    #[test]
    fn display_round_trips() {
        for s in ["x0^3 - 7/3*x1*x2 + 2", "x1", "-x2^2 + x0"] {
            let p = parse_multi(s, Some(3)).unwrap();
            assert_eq!(parse_multi(&p.to_string(), Some(3)).unwrap(), p);
        }
        for s in ["(z^3 - 1)/(2z^2 + 1)", "z/(z^2+1)", "-5/7"] {
            let f = parse_rf(s).unwrap();
            assert_eq!(parse_rf(&f.to_string()).unwrap(), f);
        }
    }

    #[test]
    fn rational_literals() {
        assert_eq!(parse_rational("-3/2").unwrap(), Rational::new((-3).into(), 2.into()));
        assert_eq!(parse_rational("4").unwrap(), Rational::from_integer(4.into()));
        assert!(parse_rational("1/0").is_err());
        assert!(parse_rational("abc").is_err());
    }
}
