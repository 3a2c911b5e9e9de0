//! Dense univariate polynomials over the rationals.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::Rational;
use crate::error::{Error, Result};

/// A univariate polynomial in `z`, coefficients stored in ascending degree.
///
/// The vector is empty for the zero polynomial and its last entry is nonzero
/// otherwise.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Default)]
pub struct UniPoly {
    coeffs: Vec<Rational>,
}

impl UniPoly {
    fn normalize(mut self) -> Self {
        while self.coeffs.last().is_some_and(Zero::is_zero) {
            self.coeffs.pop();
        }
        self
    }

    pub fn zero() -> Self {
        UniPoly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(Rational::one())
    }

    pub fn constant(c: Rational) -> Self {
        UniPoly { coeffs: vec![c] }.normalize()
    }

    /// The indeterminate `z`.
    pub fn z() -> Self {
        Self::monomial(Rational::one(), 1)
    }

    /// `c·z^deg`.
    pub fn monomial(c: Rational, deg: usize) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        let mut coeffs = vec![Rational::zero(); deg + 1];
        coeffs[deg] = c;
        UniPoly { coeffs }
    }

    pub fn from_coeffs(coeffs: Vec<Rational>) -> Self {
        UniPoly { coeffs }.normalize()
    }

    /// Ascending integer coefficients, e.g. `[-1, 0, 1]` is `z^2 - 1`.
    pub fn from_ints(coeffs: &[i64]) -> Self {
        Self::from_coeffs(coeffs.iter().map(|&c| Rational::from_integer(c.into())).collect())
    }

    /// `(z - r)` for an integer root `r`.
    pub fn linear_root(r: i64) -> Self {
        Self::from_ints(&[-r, 1])
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize) -> Rational {
        self.coeffs.get(i).cloned().unwrap_or_else(Rational::zero)
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    /// Degree with the zero polynomial mapped to 0; used where slopes are taken.
    pub fn degree_or_zero(&self) -> usize {
        self.degree().unwrap_or(0)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.coeffs.len() == 1 && self.coeffs[0].is_one()
    }

    /// True for the zero polynomial and nonzero constants.
    pub fn is_constant(&self) -> bool {
        self.coeffs.len() <= 1
    }

    pub fn leading_coeff(&self) -> Option<&Rational> {
        self.coeffs.last()
    }

    pub fn is_monic(&self) -> bool {
        self.leading_coeff().is_some_and(One::is_one)
    }

    pub fn scale(&self, c: &Rational) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        UniPoly {
            coeffs: self.coeffs.iter().map(|a| a * c).collect(),
        }
    }

    /// Divides by the leading coefficient. The zero polynomial is returned as is.
    pub fn monic(&self) -> Self {
        match self.leading_coeff() {
            None => Self::zero(),
            Some(lc) if lc.is_one() => self.clone(),
            Some(lc) => self.scale(&lc.recip()),
        }
    }

    pub fn shift(&self, k: usize) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let mut coeffs = vec![Rational::zero(); k];
        coeffs.extend(self.coeffs.iter().cloned());
        UniPoly { coeffs }
    }

    pub fn derivative(&self) -> Self {
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .skip(1)
            .map(|(i, c)| c * Rational::from_integer(BigInt::from(i)))
            .collect();
        UniPoly { coeffs }.normalize()
    }

    pub fn pow(&self, mut e: u32) -> Self {
        let mut base = self.clone();
        let mut acc = Self::one();
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    pub fn eval(&self, x: &Rational) -> Rational {
        self.coeffs.iter().rev().fold(Rational::zero(), |acc, c| acc * x + c)
    }

    /// Quotient and remainder over the rationals.
    pub fn div_rem(&self, d: &UniPoly) -> Result<(UniPoly, UniPoly)> {
        let dd = d.degree().ok_or(Error::ZeroInput("divisor"))?;
        let lc_inv = d.coeffs[dd].recip();
        let mut rem = self.coeffs.clone();
        if rem.len() <= dd {
            return Ok((Self::zero(), self.clone()));
        }
        let mut quot = vec![Rational::zero(); rem.len() - dd];
        for i in (dd..rem.len()).rev() {
            if rem[i].is_zero() {
                continue;
            }
            let q = &rem[i] * &lc_inv;
            for (j, dc) in d.coeffs.iter().enumerate() {
                let t = &q * dc;
                rem[i - dd + j] -= t;
            }
            quot[i - dd] = q;
        }
        rem.truncate(dd);
        Ok((Self::from_coeffs(quot), Self::from_coeffs(rem)))
    }

    /// `Some(q)` when `d` divides `self` exactly.
    pub fn div_exact(&self, d: &UniPoly) -> Option<UniPoly> {
        let (q, r) = self.div_rem(d).ok()?;
        r.is_zero().then_some(q)
    }

    /// Monic greatest common divisor.
    ///
    /// Runs a primitive pseudo-remainder sequence over the integers after
    /// clearing denominators. A gcd computed modulo a large prime is tried
    /// first: when it is constant the inputs are coprime and the sequence is
    /// skipped.
    pub fn gcd(&self, other: &UniPoly) -> Result<UniPoly> {
        match (self.is_zero(), other.is_zero()) {
            (true, true) => return Err(Error::ZeroInput("gcd of two zero polynomials")),
            (true, false) => return Ok(other.monic()),
            (false, true) => return Ok(self.monic()),
            _ => {}
        }
        if self.is_constant() || other.is_constant() {
            return Ok(Self::one());
        }
        let a = IntPoly::primitive_of(self);
        let b = IntPoly::primitive_of(other);
        if modular::coprime_mod_prime(&a.0, &b.0) {
            return Ok(Self::one());
        }
        Ok(prs_gcd(a, b).to_rational().monic())
    }

    /// `gcd(self, self') == 1`.
    pub fn is_squarefree(&self) -> bool {
        if self.is_constant() {
            return true;
        }
        self.gcd(&self.derivative()).map(|g| g.is_one()).unwrap_or(false)
    }

    /// Multiplicity of `p` in `self`, by repeated exact division.
    pub fn multiplicity(&self, p: &UniPoly) -> Result<(u32, UniPoly)> {
        if p.is_constant() {
            return Err(Error::InvalidPlace(p.to_string()));
        }
        if self.is_zero() {
            return Err(Error::ZeroInput("multiplicity of the zero polynomial"));
        }
        let mut k = 0;
        let mut rest = self.clone();
        while let Some(q) = rest.div_exact(p) {
            rest = q;
            k += 1;
        }
        Ok((k, rest))
    }

    /// Total order used for canonical output: degree first, then the
    /// ascending coefficient sequence.
    pub fn canonical_cmp(&self, other: &UniPoly) -> Ordering {
        self.coeffs
            .len()
            .cmp(&other.coeffs.len())
            .then_with(|| self.coeffs.cmp(&other.coeffs))
    }
}

/// Integer polynomial, ascending, used only inside the gcd machinery.
#[derive(Clone, Debug)]
struct IntPoly(Vec<BigInt>);

impl IntPoly {
    /// Clears denominators, strips the content and makes the leading
    /// coefficient positive.
    fn primitive_of(p: &UniPoly) -> IntPoly {
        let lcm = p.coeffs.iter().fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
        let ints = p.coeffs.iter().map(|c| c.numer() * (&lcm / c.denom())).collect();
        IntPoly(ints).primitive()
    }

    fn degree(&self) -> usize {
        self.0.len() - 1
    }

    fn primitive(mut self) -> IntPoly {
        while self.0.last().is_some_and(Zero::is_zero) {
            self.0.pop();
        }
        let mut content = BigInt::zero();
        for c in &self.0 {
            content = content.gcd(c);
            if content.is_one() {
                break;
            }
        }
        if content.is_zero() {
            return self;
        }
        if self.0.last().is_some_and(Signed::is_negative) {
            content = -content;
        }
        if !content.is_one() {
            for c in &mut self.0 {
                *c /= &content;
            }
        }
        self
    }

    /// A constant multiple of the pseudo-remainder of `self` by `d`.
    fn prem(&self, d: &IntPoly) -> IntPoly {
        let dd = d.degree();
        let lc_d = &d.0[dd];
        let mut r = self.0.clone();
        while r.len() > dd && !r.is_empty() {
            let dr = r.len() - 1;
            let lc_r = r[dr].clone();
            if lc_r.is_zero() {
                r.pop();
                continue;
            }
            let g = lc_r.gcd(lc_d);
            let mul_r = lc_d / &g;
            let mul_d = &lc_r / &g;
            if !mul_r.is_one() {
                for c in r.iter_mut() {
                    *c *= &mul_r;
                }
            }
            let off = dr - dd;
            for (j, dc) in d.0.iter().enumerate() {
                r[off + j] -= &mul_d * dc;
            }
            r.pop();
        }
        IntPoly(r).primitive()
    }

    fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    fn to_rational(&self) -> UniPoly {
        UniPoly::from_coeffs(self.0.iter().cloned().map(Rational::from_integer).collect())
    }
}

fn prs_gcd(a: IntPoly, b: IntPoly) -> IntPoly {
    let (mut a, mut b) = if a.degree() >= b.degree() { (a, b) } else { (b, a) };
    while !b.is_zero() {
        if b.degree() == 0 {
            return IntPoly(vec![BigInt::one()]);
        }
        let r = a.prem(&b);
        a = b;
        b = r;
    }
    a
}

mod modular {
    use num_bigint::BigInt;
    use num_traits::{ToPrimitive, Zero};

    const PRIME: u64 = 0x1fff_ffff_ffff_ffff; // 2^61 - 1

    fn reduce(c: &BigInt) -> u64 {
        let m = BigInt::from(PRIME);
        let mut r = c % &m;
        if r < BigInt::zero() {
            r += &m;
        }
        r.to_u64().expect("residue fits")
    }

    fn mul(a: u64, b: u64) -> u64 {
        ((a as u128 * b as u128) % PRIME as u128) as u64
    }

    fn pow(mut b: u64, mut e: u64) -> u64 {
        let mut acc = 1;
        while e > 0 {
            if e & 1 == 1 {
                acc = mul(acc, b);
            }
            b = mul(b, b);
            e >>= 1;
        }
        acc
    }

    fn inv(a: u64) -> u64 {
        pow(a, PRIME - 2)
    }

    fn trim(v: &mut Vec<u64>) {
        while v.last() == Some(&0) {
            v.pop();
        }
    }

    /// Sound coprimality test: returns true only when the gcd over the
    /// rationals is certainly constant. Requires the prime not to divide the
    /// leading coefficients, so degrees survive reduction.
    pub(super) fn coprime_mod_prime(a: &[BigInt], b: &[BigInt]) -> bool {
        let mut x: Vec<u64> = a.iter().map(reduce).collect();
        let mut y: Vec<u64> = b.iter().map(reduce).collect();
        if x.last() == Some(&0) || y.last() == Some(&0) {
            return false;
        }
        trim(&mut x);
        trim(&mut y);
        while !y.is_empty() {
            if y.len() == 1 {
                return true;
            }
            let inv_lc = inv(*y.last().unwrap());
            while x.len() >= y.len() {
                let q = mul(*x.last().unwrap(), inv_lc);
                let off = x.len() - y.len();
                for (j, &c) in y.iter().enumerate() {
                    let t = mul(q, c);
                    x[off + j] = (x[off + j] + PRIME - t) % PRIME;
                }
                trim(&mut x);
            }
            std::mem::swap(&mut x, &mut y);
        }
        x.len() == 1
    }
}

impl Add for &UniPoly {
    type Output = UniPoly;
    fn add(self, rhs: &UniPoly) -> UniPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let coeffs = (0..n).map(|i| self.coeff(i) + rhs.coeff(i)).collect();
        UniPoly::from_coeffs(coeffs)
    }
}

impl Sub for &UniPoly {
    type Output = UniPoly;
    fn sub(self, rhs: &UniPoly) -> UniPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let coeffs = (0..n).map(|i| self.coeff(i) - rhs.coeff(i)).collect();
        UniPoly::from_coeffs(coeffs)
    }
}

impl Mul for &UniPoly {
    type Output = UniPoly;
    fn mul(self, rhs: &UniPoly) -> UniPoly {
        if self.is_zero() || rhs.is_zero() {
            return UniPoly::zero();
        }
        let mut coeffs = vec![Rational::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                coeffs[i + j] += a * b;
            }
        }
        UniPoly::from_coeffs(coeffs)
    }
}

impl Neg for &UniPoly {
    type Output = UniPoly;
    fn neg(self) -> UniPoly {
        UniPoly {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr for UniPoly {
            type Output = UniPoly;
            fn $m(self, rhs: UniPoly) -> UniPoly {
                (&self).$m(&rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl fmt::Display for UniPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let mag = c.abs();
            if first {
                if c.is_negative() {
                    write!(f, "-")?;
                }
            } else if c.is_negative() {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            first = false;
            match (i, mag.is_one()) {
                (0, _) => write!(f, "{mag}")?,
                (_, true) => {}
                (_, false) => write!(f, "{mag}*")?,
            }
            match i {
                0 => {}
                1 => write!(f, "z")?,
                _ => write!(f, "z^{i}")?,
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(c: &[i64]) -> UniPoly {
        UniPoly::from_ints(c)
    }

    #[test]
    fn gcd_basic() {
        assert_eq!(p(&[-1, 0, 1]).gcd(&p(&[-1, 1])).unwrap(), p(&[-1, 1]));
    }

    #[test]
    fn gcd_with_zero_is_monic_input() {
        let a = p(&[2, 4]);
        assert_eq!(a.gcd(&UniPoly::zero()).unwrap(), p(&[1, 2]).monic());
        assert_eq!(UniPoly::zero().gcd(&a).unwrap(), a.monic());
        assert!(UniPoly::zero().gcd(&UniPoly::zero()).is_err());
    }

    #[test]
    fn gcd_of_shifted_sixth_powers() {
        let a = &p(&[1, 1]).pow(6) - &UniPoly::one();
        let b = &UniPoly::z().pow(6) - &UniPoly::one();
        assert_eq!(b.gcd(&a).unwrap(), p(&[1, 1, 1]));
    }

    #[test]
    fn gcd_with_rational_coefficients() {
        let half = Rational::new(1.into(), 2.into());
        let a = p(&[-1, 1]).scale(&half) * p(&[3, 1]);
        let b = p(&[-1, 1]) * p(&[5, 0, 1]);
        assert_eq!(a.gcd(&b).unwrap(), p(&[-1, 1]));
    }

    #[test]
    fn div_rem_reconstructs() {
        let a = p(&[5, -3, 0, 2, 1]);
        let d = p(&[1, 2]);
        let (q, r) = a.div_rem(&d).unwrap();
        assert_eq!(&(&q * &d) + &r, a);
        assert!(r.degree().unwrap_or(0) < 1);
    }

    #[test]
    fn multiplicity_counts_repeated_factor() {
        let q = p(&[1, 1, 1]);
        let (k, rest) = q.pow(2).multiplicity(&q).unwrap();
        assert_eq!(k, 2);
        assert!(rest.is_one());
    }

    #[test]
    fn derivative_and_squarefree() {
        assert_eq!(p(&[1, 0, 3]).derivative(), p(&[0, 6]));
        assert!(p(&[-1, 0, 1]).is_squarefree());
        assert!(!p(&[1, 2, 1]).is_squarefree());
    }

    #[test]
    fn display_is_readable() {
        assert_eq!(p(&[-1, 0, 1]).to_string(), "z^2 - 1");
        assert_eq!(p(&[0, -2]).to_string(), "-2*z");
        assert_eq!(UniPoly::zero().to_string(), "0");
    }
}
