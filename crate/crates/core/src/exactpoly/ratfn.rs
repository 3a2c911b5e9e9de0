use std::fmt;

use num_traits::{One, Zero};

use super::{Rational, UniPoly};
use crate::error::{Error, Result};

/// A reduced quotient `num/den` of univariate polynomials.
///
/// `den` is monic and coprime to `num`; zero is `0/1`.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct RationalFunction {
    num: UniPoly,
    den: UniPoly,
}

impl RationalFunction {
    /// Reduces `num/den`, stripping the gcd and making the denominator monic.
    pub fn new(num: UniPoly, den: UniPoly) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::ZeroDenominator);
        }
        if num.is_zero() {
            return Ok(Self::zero());
        }
        let g = num.gcd(&den)?;
        let (num, den) = if g.is_one() {
            (num, den)
        } else {
            (
                num.div_exact(&g).expect("gcd divides numerator"),
                den.div_exact(&g).expect("gcd divides denominator"),
            )
        };
        let lc = den.leading_coeff().expect("nonzero").clone();
        if lc.is_one() {
            Ok(RationalFunction { num, den })
        } else {
            let inv = lc.recip();
            Ok(RationalFunction {
                num: num.scale(&inv),
                den: den.scale(&inv),
            })
        }
    }

    pub fn zero() -> Self {
        RationalFunction {
            num: UniPoly::zero(),
            den: UniPoly::one(),
        }
    }

    pub fn one() -> Self {
        Self::from_poly(UniPoly::one())
    }

    pub fn constant(c: Rational) -> Self {
        Self::from_poly(UniPoly::constant(c))
    }

    pub fn from_poly(p: UniPoly) -> Self {
        RationalFunction {
            num: p,
            den: UniPoly::one(),
        }
    }

    pub fn z() -> Self {
        Self::from_poly(UniPoly::z())
    }

    pub fn num(&self) -> &UniPoly {
        &self.num
    }

    pub fn den(&self) -> &UniPoly {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_constant(&self) -> bool {
        self.num.is_constant() && self.den.is_constant()
    }

    pub fn is_polynomial(&self) -> bool {
        self.den.is_one()
    }

    /// The value of a constant function.
    pub fn constant_value(&self) -> Option<Rational> {
        self.is_constant().then(|| self.num.coeff(0) / self.den.coeff(0))
    }

    pub fn add(&self, other: &Self) -> Self {
        if self.den == other.den {
            return Self::new(&self.num + &other.num, self.den.clone()).expect("nonzero den");
        }
        let num = &(&self.num * &other.den) + &(&other.num * &self.den);
        Self::new(num, &self.den * &other.den).expect("nonzero den")
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Self {
        RationalFunction {
            num: -&self.num,
            den: self.den.clone(),
        }
    }

    pub fn mul(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::zero();
        }
        Self::new(&self.num * &other.num, &self.den * &other.den).expect("nonzero den")
    }

    pub fn scale(&self, c: &Rational) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        RationalFunction {
            num: self.num.scale(c),
            den: self.den.clone(),
        }
    }

    pub fn recip(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::ZeroDenominator);
        }
        Self::new(self.den.clone(), self.num.clone())
    }

    pub fn div(&self, other: &Self) -> Result<Self> {
        Ok(self.mul(&other.recip()?))
    }

    /// Integer power; negative exponents invert.
    pub fn pow(&self, e: i64) -> Result<Self> {
        let base = if e < 0 { self.recip()? } else { self.clone() };
        let k = u32::try_from(e.unsigned_abs()).map_err(|_| Error::Invalid(format!("exponent {e} too large")))?;
        // num and den stay coprime under powers, so no reduction is needed
        Ok(RationalFunction {
            num: base.num.pow(k),
            den: base.den.pow(k),
        })
    }

    pub fn derivative(&self) -> Self {
        let num = &(&self.num.derivative() * &self.den) - &(&self.num * &self.den.derivative());
        Self::new(num, self.den.pow(2)).expect("nonzero den")
    }
}

impl fmt::Display for RationalFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_one() {
            write!(f, "{}", self.num)
        } else {
            write!(f, "({}) / ({})", self.num, self.den)
        }
    }
}

impl From<UniPoly> for RationalFunction {
    fn from(p: UniPoly) -> Self {
        Self::from_poly(p)
    }
}

/// `rf_reduce` of the operation list.
pub fn rf_reduce(num: UniPoly, den: UniPoly) -> Result<RationalFunction> {
    RationalFunction::new(num, den)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(c: &[i64]) -> UniPoly {
        UniPoly::from_ints(c)
    }

    #[test]
    fn reduce_examples() {
        let f = rf_reduce(p(&[-1, 0, 1]), p(&[-1, 1])).unwrap();
        assert_eq!(f, RationalFunction::from_poly(p(&[1, 1])));
        let f = rf_reduce(p(&[0, 2]), p(&[2])).unwrap();
        assert_eq!(f, RationalFunction::z());
        let f = rf_reduce(p(&[0, 1]), p(&[0, 1])).unwrap();
        assert_eq!(f, RationalFunction::one());
        assert_eq!(rf_reduce(p(&[1]), UniPoly::zero()), Err(Error::ZeroDenominator));
    }

    #[test]
    fn denominator_is_monic() {
        let f = rf_reduce(p(&[1]), p(&[4, 2])).unwrap();
        assert!(f.den().is_monic());
        assert_eq!(f.num(), &UniPoly::constant(Rational::new(1.into(), 2.into())));
    }

    #[test]
    fn pow_and_derivative() {
        let f = rf_reduce(p(&[0, 1]), p(&[1, 1])).unwrap();
        let inv = f.pow(-2).unwrap();
        assert_eq!(inv.mul(&f.pow(2).unwrap()), RationalFunction::one());
        // (z/(z+1))' = 1/(z+1)^2
        assert_eq!(f.derivative(), rf_reduce(p(&[1]), p(&[1, 2, 1])).unwrap());
    }
}
