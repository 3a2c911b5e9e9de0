//! Lexicographic and weight monomial orders, and trailing monomials.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigUint;

use crate::error::{Error, Result};
use crate::exactpoly::{ExponentVector, MultiPoly};

/// `x^i >_lex x^j` when the left-most nonzero entry of `i - j` is positive;
/// `Weight(u)` compares `u·i` against `u·j` first and falls back to lex.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Default)]
pub enum MonomialOrder {
    #[default]
    Lex,
    Weight(Vec<BigUint>),
}

impl MonomialOrder {
    pub fn weight<I: IntoIterator<Item = u64>>(u: I) -> Self {
        MonomialOrder::Weight(u.into_iter().map(BigUint::from).collect())
    }

    /// Arity required of compared exponent vectors, if the order fixes one.
    pub fn arity(&self) -> Option<usize> {
        match self {
            MonomialOrder::Lex => None,
            MonomialOrder::Weight(u) => Some(u.len()),
        }
    }

    pub fn weight_of(&self, e: &ExponentVector) -> BigUint {
        match self {
            MonomialOrder::Lex => BigUint::default(),
            MonomialOrder::Weight(u) => u.iter().zip(e.as_slice()).map(|(w, &k)| w * k).sum(),
        }
    }

    /// Comparison without arity checks; callers guarantee matching lengths.
    pub(crate) fn cmp_unchecked(&self, a: &ExponentVector, b: &ExponentVector) -> Ordering {
        match self {
            MonomialOrder::Lex => a.cmp(b),
            MonomialOrder::Weight(_) => self.weight_of(a).cmp(&self.weight_of(b)).then_with(|| a.cmp(b)),
        }
    }

    pub fn compare(&self, a: &ExponentVector, b: &ExponentVector) -> Result<Ordering> {
        if a.len() != b.len() {
            return Err(Error::ArityMismatch(a.len(), b.len()));
        }
        if let Some(n) = self.arity() {
            if n != a.len() {
                return Err(Error::ArityMismatch(n, a.len()));
            }
        }
        Ok(self.cmp_unchecked(a, b))
    }
}

impl fmt::Display for MonomialOrder {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            MonomialOrder::Lex => write!(f, "lex"),
            MonomialOrder::Weight(u) => {
                let parts: Vec<String> = u.iter().map(ToString::to_string).collect();
                write!(f, "weight:{}", parts.join(","))
            }
        }
    }
}

impl FromStr for MonomialOrder {
    type Err = Error;

    /// `lex` or `weight:3,2,1`.
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s == "lex" {
            return Ok(MonomialOrder::Lex);
        }
        let body = s
            .strip_prefix("weight:")
            .ok_or_else(|| Error::parse(0, format!("unknown order {s:?}; expected lex or weight:u0,u1,...")))?;
        let u = body
            .split(',')
            .map(|w| w.trim().parse::<BigUint>())
            .collect::<std::result::Result<Vec<_>, _>>()
            .map_err(|_| Error::parse(7, format!("bad weight vector {body:?}")))?;
        if u.is_empty() {
            return Err(Error::parse(7, "empty weight vector"));
        }
        Ok(MonomialOrder::Weight(u))
    }
}

pub fn compare(a: &ExponentVector, b: &ExponentVector, ord: &MonomialOrder) -> Result<Ordering> {
    ord.compare(a, b)
}

/// The smallest monomial of `f` with nonzero coefficient under `ord`.
pub fn trailing_monomial(f: &MultiPoly, ord: &MonomialOrder) -> Result<ExponentVector> {
    if let Some(n) = ord.arity() {
        if n != f.nvars() {
            return Err(Error::ArityMismatch(n, f.nvars()));
        }
    }
    f.terms()
        .map(|(e, _)| e)
        .min_by(|a, b| ord.cmp_unchecked(a, b))
        .cloned()
        .ok_or(Error::ZeroInput("trailing monomial of the zero polynomial"))
}
