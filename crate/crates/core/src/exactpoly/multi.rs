//! Sparse multivariate polynomials over the rationals.
//!
//! An affine polynomial in `x1..xn` lives in the ring `Q[x0..xn]` and simply
//! never mentions `x0`; homogenization then fills in `x0` without reindexing.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Signed, Zero};

use super::{Rational, RationalFunction, UniPoly};
use crate::error::{Error, Result};

/// Exponents of `x0^{i0}·…·xn^{in}`.
///
/// The derived ordering is the lexicographic order on monomials.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct ExponentVector(pub Vec<u32>);

impl ExponentVector {
    pub fn zero(n: usize) -> Self {
        ExponentVector(vec![0; n])
    }

    pub fn unit(n: usize, i: usize) -> Self {
        let mut e = vec![0; n];
        e[i] = 1;
        ExponentVector(e)
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn total_degree(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn add(&self, other: &Self) -> Self {
        ExponentVector(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    /// `self - other` when every entry stays nonnegative.
    pub fn checked_sub(&self, other: &Self) -> Option<Self> {
        self.0
            .iter()
            .zip(&other.0)
            .map(|(a, b)| a.checked_sub(*b))
            .collect::<Option<Vec<_>>>()
            .map(ExponentVector)
    }

    pub fn divides(&self, other: &Self) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| a <= b)
    }

    pub fn scale(&self, k: u32) -> Self {
        ExponentVector(self.0.iter().map(|e| e * k).collect())
    }

    pub fn as_slice(&self) -> &[u32] {
        &self.0
    }
}

impl From<Vec<u32>> for ExponentVector {
    fn from(v: Vec<u32>) -> Self {
        ExponentVector(v)
    }
}

/// All exponent vectors of total degree `delta` in `nvars` variables, in
/// descending lexicographic order.
pub fn monomials_of_degree(nvars: usize, delta: u32) -> Vec<ExponentVector> {
    fn rec(nvars: usize, left: u32, cur: &mut Vec<u32>, out: &mut Vec<ExponentVector>) {
        if cur.len() + 1 == nvars {
            cur.push(left);
            out.push(ExponentVector(cur.clone()));
            cur.pop();
            return;
        }
        for e in (0..=left).rev() {
            cur.push(e);
            rec(nvars, left - e, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    if nvars == 0 {
        if delta == 0 {
            out.push(ExponentVector(Vec::new()));
        }
        return out;
    }
    rec(nvars, delta, &mut Vec::with_capacity(nvars), &mut out);
    out
}

/// A polynomial in `nvars` variables stored as a map from exponent vector to
/// nonzero coefficient.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct MultiPoly {
    nvars: usize,
    terms: BTreeMap<ExponentVector, Rational>,
}

impl MultiPoly {
    pub fn zero(nvars: usize) -> Self {
        MultiPoly {
            nvars,
            terms: BTreeMap::new(),
        }
    }

    pub fn one(nvars: usize) -> Self {
        Self::constant(nvars, Rational::one())
    }

    pub fn constant(nvars: usize, c: Rational) -> Self {
        Self::monomial(ExponentVector::zero(nvars), c)
    }

    /// The variable `x_i`.
    pub fn var(nvars: usize, i: usize) -> Self {
        assert!(i < nvars, "variable x{i} outside a ring of {nvars} variables");
        Self::monomial(ExponentVector::unit(nvars, i), Rational::one())
    }

    pub fn monomial(exps: ExponentVector, c: Rational) -> Self {
        let nvars = exps.len();
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(exps, c);
        }
        MultiPoly { nvars, terms }
    }

    /// Builds from `(exponents, coefficient)` pairs, merging repeats.
    pub fn from_terms(nvars: usize, terms: impl IntoIterator<Item = (ExponentVector, Rational)>) -> Result<Self> {
        let mut p = Self::zero(nvars);
        for (e, c) in terms {
            if e.len() != nvars {
                return Err(Error::ArityMismatch(nvars, e.len()));
            }
            p.add_term(e, c);
        }
        Ok(p)
    }

    /// Integer-coefficient convenience constructor.
    pub fn from_int_terms(nvars: usize, terms: &[(&[u32], i64)]) -> Self {
        Self::from_terms(
            nvars,
            terms
                .iter()
                .map(|(e, c)| (ExponentVector(e.to_vec()), Rational::from_integer((*c).into()))),
        )
        .expect("consistent arity")
    }

    fn add_term(&mut self, e: ExponentVector, c: Rational) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(e) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&ExponentVector, &Rational)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn coeff(&self, e: &ExponentVector) -> Rational {
        self.terms.get(e).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.keys().all(|e| e.total_degree() == 0)
    }

    pub fn constant_term(&self) -> Rational {
        self.coeff(&ExponentVector::zero(self.nvars))
    }

    /// `None` for the zero polynomial.
    pub fn total_degree(&self) -> Option<u32> {
        self.terms.keys().map(ExponentVector::total_degree).max()
    }

    pub fn degree_in(&self, var: usize) -> u32 {
        self.terms.keys().map(|e| e.0[var]).max().unwrap_or(0)
    }

    pub fn uses_var(&self, var: usize) -> bool {
        self.terms.keys().any(|e| e.0[var] > 0)
    }

    /// Every stored monomial has the same total degree. Zero counts as homogeneous.
    pub fn is_homogeneous(&self) -> bool {
        let mut degs = self.terms.keys().map(ExponentVector::total_degree);
        match degs.next() {
            None => true,
            Some(d) => degs.all(|e| e == d),
        }
    }

    /// Leading term under lex, i.e. the largest key.
    pub fn lex_leading(&self) -> Option<(&ExponentVector, &Rational)> {
        self.terms.iter().next_back()
    }

    pub fn scale(&self, c: &Rational) -> Self {
        if c.is_zero() {
            return Self::zero(self.nvars);
        }
        MultiPoly {
            nvars: self.nvars,
            terms: self.terms.iter().map(|(e, a)| (e.clone(), a * c)).collect(),
        }
    }

    pub fn mul_monomial(&self, m: &ExponentVector, c: &Rational) -> Self {
        if c.is_zero() {
            return Self::zero(self.nvars);
        }
        MultiPoly {
            nvars: self.nvars,
            terms: self.terms.iter().map(|(e, a)| (e.add(m), a * c)).collect(),
        }
    }

    pub fn checked_add(&self, other: &Self) -> Result<Self> {
        self.check_arity(other)?;
        let mut out = self.clone();
        for (e, c) in &other.terms {
            out.add_term(e.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn checked_mul(&self, other: &Self) -> Result<Self> {
        self.check_arity(other)?;
        let mut out = Self::zero(self.nvars);
        for (ea, ca) in &self.terms {
            for (eb, cb) in &other.terms {
                out.add_term(ea.add(eb), ca * cb);
            }
        }
        Ok(out)
    }

    fn check_arity(&self, other: &Self) -> Result<()> {
        if self.nvars == other.nvars {
            Ok(())
        } else {
            Err(Error::ArityMismatch(self.nvars, other.nvars))
        }
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut acc = Self::one(self.nvars);
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }

    /// Replaces every `x_i` by `x_i^k`.
    pub fn inflate(&self, k: u32) -> Self {
        MultiPoly {
            nvars: self.nvars,
            terms: self.terms.iter().map(|(e, c)| (e.scale(k), c.clone())).collect(),
        }
    }

    /// Sets `x0 = 1`.
    pub fn dehomogenize(&self) -> Self {
        let mut out = Self::zero(self.nvars);
        for (e, c) in &self.terms {
            let mut e = e.clone();
            e.0[0] = 0;
            out.add_term(e, c.clone());
        }
        out
    }

    /// Divides by the lex-leading coefficient.
    pub fn monic_lex(&self) -> Self {
        match self.lex_leading() {
            None => self.clone(),
            Some((_, c)) => self.scale(&c.recip()),
        }
    }

    /// Exact division: `Some(q)` with `q·d = self`, or `None` when `d` does
    /// not divide. Multivariate division by the lex leading term.
    pub fn div_exact(&self, d: &MultiPoly) -> Option<MultiPoly> {
        if d.is_zero() || self.nvars != d.nvars {
            return None;
        }
        let (de, dc) = d.lex_leading().map(|(e, c)| (e.clone(), c.clone()))?;
        let mut rem = self.clone();
        let mut quot = Self::zero(self.nvars);
        while let Some((re, rc)) = rem.lex_leading().map(|(e, c)| (e.clone(), c.clone())) {
            let qe = re.checked_sub(&de)?;
            let qc = rc / &dc;
            rem = &rem - &d.mul_monomial(&qe, &qc);
            quot.add_term(qe, qc);
        }
        Some(quot)
    }

    /// Evaluates at polynomials: `x_i ↦ gs[i]`.
    pub fn eval_uni(&self, gs: &[UniPoly]) -> Result<UniPoly> {
        if gs.len() != self.nvars {
            return Err(Error::ArityMismatch(self.nvars, gs.len()));
        }
        let mut cache = PowerCache::new(gs.to_vec());
        let mut acc = UniPoly::zero();
        for (e, c) in &self.terms {
            let mut t = UniPoly::constant(c.clone());
            for (i, &k) in e.0.iter().enumerate() {
                if k > 0 {
                    t = &t * cache.get(i, k);
                }
            }
            acc = &acc + &t;
        }
        Ok(acc)
    }
}

/// Memoised powers `base[i]^k`.
pub(crate) struct PowerCache {
    bases: Vec<UniPoly>,
    powers: Vec<BTreeMap<u32, UniPoly>>,
}

impl PowerCache {
    pub(crate) fn new(bases: Vec<UniPoly>) -> Self {
        let n = bases.len();
        PowerCache {
            bases,
            powers: vec![BTreeMap::new(); n],
        }
    }

    pub(crate) fn get(&mut self, i: usize, k: u32) -> &UniPoly {
        if !self.powers[i].contains_key(&k) {
            let v = self.bases[i].pow(k);
            self.powers[i].insert(k, v);
        }
        &self.powers[i][&k]
    }
}

impl Add for &MultiPoly {
    type Output = MultiPoly;
    /// Panics on mismatched arity; see [`mp_add`] for the checked form.
    fn add(self, rhs: &MultiPoly) -> MultiPoly {
        self.checked_add(rhs).expect("mismatched variable counts")
    }
}

impl Sub for &MultiPoly {
    type Output = MultiPoly;
    fn sub(self, rhs: &MultiPoly) -> MultiPoly {
        self.checked_add(&-rhs).expect("mismatched variable counts")
    }
}

impl Mul for &MultiPoly {
    type Output = MultiPoly;
    fn mul(self, rhs: &MultiPoly) -> MultiPoly {
        self.checked_mul(rhs).expect("mismatched variable counts")
    }
}

impl Neg for &MultiPoly {
    type Output = MultiPoly;
    fn neg(self) -> MultiPoly {
        MultiPoly {
            nvars: self.nvars,
            terms: self.terms.iter().map(|(e, c)| (e.clone(), -c)).collect(),
        }
    }
}

impl fmt::Display for MultiPoly {
    /// Terms in descending lex order, e.g. `x0^2 + 2*x0*x1 - 3/2`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (n, (e, c)) in self.terms.iter().rev().enumerate() {
            let mag = c.abs();
            match (n, c.is_negative()) {
                (0, true) => write!(f, "-")?,
                (0, false) => {}
                (_, true) => write!(f, " - ")?,
                (_, false) => write!(f, " + ")?,
            }
            let vars: Vec<String> =
                e.0.iter()
                    .enumerate()
                    .filter(|(_, &k)| k > 0)
                    .map(|(i, &k)| if k == 1 { format!("x{i}") } else { format!("x{i}^{k}") })
                    .collect();
            if vars.is_empty() {
                write!(f, "{mag}")?;
            } else if mag.is_one() {
                write!(f, "{}", vars.join("*"))?;
            } else {
                write!(f, "{mag}*{}", vars.join("*"))?;
            }
        }
        Ok(())
    }
}

pub fn mp_add(a: &MultiPoly, b: &MultiPoly) -> Result<MultiPoly> {
    a.checked_add(b)
}

pub fn mp_mul(a: &MultiPoly, b: &MultiPoly) -> Result<MultiPoly> {
    a.checked_mul(b)
}

/// `x0^d · F(x1/x0, …, xn/x0)` for `F` free of `x0`.
pub fn homogenize(f: &MultiPoly, d: u32) -> Result<MultiPoly> {
    if f.nvars() == 0 {
        return Err(Error::Invalid("homogenization needs a slot for x0".into()));
    }
    if f.uses_var(0) {
        return Err(Error::Invalid(format!("{f} already involves x0")));
    }
    let deg = f.total_degree().unwrap_or(0);
    if d < deg {
        return Err(Error::DegreeTooLow { bound: d, degree: deg });
    }
    let terms = f.terms().map(|(e, c)| {
        let mut e = e.clone();
        e.0[0] = d - e.total_degree();
        (e, c.clone())
    });
    MultiPoly::from_terms(f.nvars(), terms)
}

/// `(F^e, G^h)` with `e = deg G`, `h = deg F`; both results have total
/// degree `deg F · deg G`.
pub fn equalize_degrees(f: &MultiPoly, g: &MultiPoly) -> Result<(MultiPoly, MultiPoly)> {
    if f.nvars() != g.nvars() {
        return Err(Error::ArityMismatch(f.nvars(), g.nvars()));
    }
    let df = f.total_degree().filter(|&d| d > 0).ok_or(Error::ConstantInput("F"))?;
    let dg = g.total_degree().filter(|&d| d > 0).ok_or(Error::ConstantInput("G"))?;
    Ok((f.pow(dg), g.pow(df)))
}

/// `F(g1^k, …, gn^k)` in reduced form, for `F` in `x1..xn` (slot `x0` unused).
///
/// All terms are put over the common denominator `Π den_i^{k·deg_i F}` so a
/// single gcd reduces the result.
pub fn substitute(f: &MultiPoly, gs: &[RationalFunction], k: u32) -> Result<RationalFunction> {
    if f.nvars() != gs.len() + 1 {
        return Err(Error::ArityMismatch(f.nvars(), gs.len() + 1));
    }
    if f.uses_var(0) {
        return Err(Error::Invalid(format!("{f} involves x0; substitute expects x1..xn")));
    }
    let n = gs.len();
    let max_exp: Vec<u32> = (0..n).map(|i| f.degree_in(i + 1)).collect();
    let mut nums = PowerCache::new(gs.iter().map(|g| g.num().clone()).collect());
    let mut dens = PowerCache::new(gs.iter().map(|g| g.den().clone()).collect());
    let mut acc = UniPoly::zero();
    for (e, c) in f.terms() {
        let mut t = UniPoly::constant(c.clone());
        for i in 0..n {
            let ei = e.0[i + 1];
            if ei > 0 {
                t = &t * nums.get(i, k * ei);
            }
            let pad = max_exp[i] - ei;
            if pad > 0 && !gs[i].den().is_one() {
                t = &t * dens.get(i, k * pad);
            }
        }
        acc = &acc + &t;
    }
    let mut den = UniPoly::one();
    for i in 0..n {
        if max_exp[i] > 0 && !gs[i].den().is_one() {
            den = &den * dens.get(i, k * max_exp[i]);
        }
    }
    RationalFunction::new(acc, den)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn x(n: usize, i: usize) -> MultiPoly {
        MultiPoly::var(n, i)
    }

    fn c(n: usize, v: i64) -> MultiPoly {
        MultiPoly::constant(n, Rational::from_integer(v.into()))
    }

    fn r(a: i64, b: i64) -> Rational {
        Rational::new(a.into(), b.into())
    }

    #[test]
    fn add_examples() {
        let n = 2;
        assert!(mp_add(&x(n, 1), &-&x(n, 1)).unwrap().is_zero());
        let lhs = &x(n, 0).pow(2) + &x(n, 1);
        let expect = &x(n, 0).pow(2) + &x(n, 1).scale(&r(2, 1));
        assert_eq!(mp_add(&lhs, &x(n, 1)).unwrap(), expect);
        let a = (&x(n, 0) * &x(n, 1)).scale(&r(3, 2));
        let b = (&x(n, 0) * &x(n, 1)).scale(&r(1, 2));
        assert_eq!(mp_add(&a, &b).unwrap(), (&x(n, 0) * &x(n, 1)).scale(&r(2, 1)));
    }

    #[test]
    fn mul_examples() {
        let n = 2;
        assert_eq!(mp_mul(&x(n, 0), &x(n, 1)).unwrap(), MultiPoly::from_int_terms(2, &[(&[1, 1], 1)]));
        let s = &x(n, 0) + &x(n, 1);
        let sq = MultiPoly::from_int_terms(2, &[(&[2, 0], 1), (&[1, 1], 2), (&[0, 2], 1)]);
        assert_eq!(mp_mul(&s, &s).unwrap(), sq);
        assert!(mp_mul(&MultiPoly::zero(2), &sq).unwrap().is_zero());
        assert_eq!(mp_mul(&x(2, 0), &x(3, 0)), Err(Error::ArityMismatch(2, 3)));
    }

    #[test]
    fn homogenize_examples() {
        let n = 2;
        let f = &x(n, 1) - &c(n, 1);
        assert_eq!(homogenize(&f, 1).unwrap(), &x(n, 1) - &x(n, 0));
        let n = 3;
        let f = &(&(&x(n, 1) * &x(n, 2)) + &x(n, 1)) + &c(n, 1);
        let expect = &(&(&x(n, 1) * &x(n, 2)) + &(&x(n, 0) * &x(n, 1))) + &x(n, 0).pow(2);
        assert_eq!(homogenize(&f, 2).unwrap(), expect);
        assert_eq!(homogenize(&c(2, 1), 3).unwrap(), x(2, 0).pow(3));
        assert_eq!(homogenize(&f, 1), Err(Error::DegreeTooLow { bound: 1, degree: 2 }));
    }

    #[test]
    fn equalize_examples() {
        let n = 3;
        let f = &x(n, 1) - &c(n, 1);
        let g = &x(n, 2).pow(2) - &c(n, 2);
        let (fe, gh) = equalize_degrees(&f, &g).unwrap();
        assert_eq!(fe, f.pow(2));
        assert_eq!(gh, g);
        assert_eq!(fe.total_degree(), gh.total_degree());
        let (a, b) = equalize_degrees(&x(n, 1), &x(n, 1)).unwrap();
        assert_eq!((a, b), (x(n, 1), x(n, 1)));
        assert_eq!(equalize_degrees(&c(n, 3), &x(n, 1)), Err(Error::ConstantInput("F")));
    }

    #[test]
    fn substitute_examples() {
        let z = RationalFunction::z();
        let f = &x(2, 1) - &c(2, 1);
        let out = substitute(&f, std::slice::from_ref(&z), 3).unwrap();
        assert_eq!(out, RationalFunction::from_poly(UniPoly::from_ints(&[-1, 0, 0, 1])));

        let inv = z.recip().unwrap();
        let f = &x(3, 1) * &x(3, 2);
        assert_eq!(substitute(&f, &[z.clone(), inv], 2).unwrap(), RationalFunction::one());

        let f = &x(3, 1) + &x(3, 2);
        let zp1 = RationalFunction::from_poly(UniPoly::from_ints(&[1, 1]));
        assert_eq!(
            substitute(&f, &[z.clone(), zp1], 1).unwrap(),
            RationalFunction::from_poly(UniPoly::from_ints(&[1, 2]))
        );
        assert!(substitute(&f, &[z], 1).is_err());
    }

    #[test]
    fn div_exact_detects_divisibility() {
        let n = 3;
        let a = &x(n, 1) - &c(n, 1);
        let b = &x(n, 2) + &x(n, 0);
        let prod = &a * &b;
        assert_eq!(prod.div_exact(&a), Some(b.clone()));
        assert_eq!(prod.div_exact(&(&x(n, 1) + &c(n, 1))), None);
    }

    #[test]
    fn monomials_of_degree_counts() {
        assert_eq!(monomials_of_degree(3, 2).len(), 6);
        assert_eq!(monomials_of_degree(4, 0).len(), 1);
        let m = monomials_of_degree(2, 2);
        assert_eq!(m[0].0, vec![2, 0]);
        assert_eq!(m[2].0, vec![0, 2]);
    }

    #[test]
    fn display_round_readable() {
        let p = MultiPoly::from_int_terms(2, &[(&[2, 0], 1), (&[1, 1], -2), (&[0, 0], 3)]);
        assert_eq!(p.to_string(), "x0^2 - 2*x0*x1 + 3");
    }
}
