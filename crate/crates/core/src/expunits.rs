//! Exponential units `c·e^{az}` with coefficients and frequencies in a real
//! quadratic field `Q(√D)`.
//!
//! For `f = e^{az}` the characteristic grows like `|a|·r/π`, and every slope
//! here is reported as the exact coefficient of `r/π`.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::exactpoly::{parse_rational, Rational};
use crate::report;

/// `a + b·√d`. Rational values have `b = 0`; their `d` is ignored.
#[derive(Clone, Debug)]
pub struct QuadExt {
    a: Rational,
    b: Rational,
    d: u64,
}

fn is_squarefree(d: u64) -> bool {
    let mut p = 2u64;
    while p * p <= d {
        if d.is_multiple_of(p * p) {
            return false;
        }
        p += 1;
    }
    true
}

impl QuadExt {
    pub fn new(a: Rational, b: Rational, d: u64) -> Result<Self> {
        if !b.is_zero() && (d < 2 || !is_squarefree(d)) {
            return Err(Error::Invalid(format!("sqrt{d}: D must be a squarefree integer > 1")));
        }
        Ok(Self::build(a, b, d))
    }

    pub fn rational(a: Rational) -> Self {
        QuadExt {
            a,
            b: Rational::zero(),
            d: 1,
        }
    }

    pub fn int(v: i64) -> Self {
        Self::rational(Rational::from_integer(v.into()))
    }

    /// `√d`.
    pub fn sqrt(d: u64) -> Result<Self> {
        Self::new(Rational::zero(), Rational::one(), d)
    }

    pub fn rational_part(&self) -> &Rational {
        &self.a
    }

    pub fn irrational_part(&self) -> &Rational {
        &self.b
    }

    /// The radicand, or `None` for a rational value.
    pub fn radicand(&self) -> Option<u64> {
        (!self.b.is_zero()).then_some(self.d)
    }

    pub fn is_zero(&self) -> bool {
        self.a.is_zero() && self.b.is_zero()
    }

    pub fn as_rational(&self) -> Option<&Rational> {
        self.b.is_zero().then_some(&self.a)
    }

    fn field(&self, o: &Self) -> Result<u64> {
        match (self.radicand(), o.radicand()) {
            (Some(x), Some(y)) if x != y => Err(Error::FieldMismatch(x, y)),
            (Some(x), _) | (_, Some(x)) => Ok(x),
            (None, None) => Ok(1),
        }
    }

    fn build(a: Rational, b: Rational, d: u64) -> Self {
        let d = if b.is_zero() { 1 } else { d };
        QuadExt { a, b, d }
    }

    pub fn add(&self, o: &Self) -> Result<Self> {
        let d = self.field(o)?;
        Ok(Self::build(&self.a + &o.a, &self.b + &o.b, d))
    }

    pub fn sub(&self, o: &Self) -> Result<Self> {
        self.add(&o.neg())
    }

    pub fn neg(&self) -> Self {
        Self::build(-&self.a, -&self.b, self.d)
    }

    pub fn mul(&self, o: &Self) -> Result<Self> {
        let d = self.field(o)?;
        let dq = Rational::from_integer(d.into());
        let a = &self.a * &o.a + &self.b * &o.b * &dq;
        let b = &self.a * &o.b + &self.b * &o.a;
        Ok(Self::build(a, b, d))
    }

    pub fn scale(&self, c: &Rational) -> Self {
        Self::build(&self.a * c, &self.b * c, self.d)
    }

    /// `(a - b√d) / (a² - d·b²)`; the norm is nonzero because `√d` is irrational.
    pub fn recip(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::ZeroInput("reciprocal of zero"));
        }
        let norm = &self.a * &self.a - &self.b * &self.b * Rational::from_integer(self.d.into());
        Ok(Self::build(&self.a / &norm, -&self.b / &norm, self.d))
    }

    pub fn div(&self, o: &Self) -> Result<Self> {
        self.mul(&o.recip()?)
    }

    pub fn pow(&self, e: u32) -> Result<Self> {
        let mut acc = Self::int(1);
        for _ in 0..e {
            acc = acc.mul(self)?;
        }
        Ok(acc)
    }

    /// Exact sign, decided by comparing `a²` with `d·b²` when the parts
    /// disagree in sign.
    pub fn signum(&self) -> Ordering {
        let sa = self.a.cmp(&Rational::zero());
        let sb = self.b.cmp(&Rational::zero());
        match (sa, sb) {
            (x, Ordering::Equal) => x,
            (Ordering::Equal, y) => y,
            (x, y) if x == y => x,
            (x, _) => {
                let a2 = &self.a * &self.a;
                let db2 = &self.b * &self.b * Rational::from_integer(self.d.into());
                match a2.cmp(&db2) {
                    Ordering::Greater => x,
                    Ordering::Less => x.reverse(),
                    Ordering::Equal => unreachable!("sqrt of a squarefree d > 1 is irrational"),
                }
            }
        }
    }

    pub fn abs(&self) -> Self {
        if self.signum() == Ordering::Less {
            self.neg()
        } else {
            self.clone()
        }
    }

    pub fn try_cmp(&self, o: &Self) -> Result<Ordering> {
        Ok(self.sub(o)?.signum())
    }

    pub fn max(&self, o: &Self) -> Result<Self> {
        Ok(if self.try_cmp(o)? == Ordering::Less {
            o.clone()
        } else {
            self.clone()
        })
    }

    pub fn min(&self, o: &Self) -> Result<Self> {
        Ok(if self.try_cmp(o)? == Ordering::Greater {
            o.clone()
        } else {
            self.clone()
        })
    }
}

impl PartialEq for QuadExt {
    fn eq(&self, o: &Self) -> bool {
        self.a == o.a && self.b == o.b && (self.b.is_zero() || self.d == o.d)
    }
}

impl Eq for QuadExt {}

impl fmt::Display for QuadExt {
    /// `p/q`, `r/s*sqrtD` or `p/q+r/s*sqrtD`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.b.is_zero() {
            return write!(f, "{}", report::rational_string(&self.a));
        }
        if !self.a.is_zero() {
            write!(f, "{}", report::rational_string(&self.a))?;
            if self.b.is_positive() {
                write!(f, "+")?;
            }
        }
        if self.b == -Rational::one() {
            write!(f, "-")?;
        } else if !self.b.is_one() {
            write!(f, "{}*", report::rational_string(&self.b))?;
        }
        write!(f, "sqrt{}", self.d)
    }
}

impl FromStr for QuadExt {
    type Err = Error;

    /// `3/2`, `sqrt2`, `-sqrt3`, `1+2*sqrt5`, `1/2-3/4*sqrt7`.
    fn from_str(s: &str) -> Result<Self> {
        let s: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        let Some(pos) = s.find("sqrt") else {
            return Ok(Self::rational(parse_rational(&s)?));
        };
        let d: u64 = s[pos + 4..]
            .parse()
            .map_err(|_| Error::parse(pos + 4, format!("bad radicand in {s:?}")))?;
        let head = &s[..pos];
        let split = head
            .char_indices()
            .skip(1)
            .filter(|&(_, c)| c == '+' || c == '-')
            .map(|(i, _)| i)
            .last()
            .unwrap_or(0);
        let (rat, coef) = head.split_at(split);
        let a = if rat.is_empty() { Rational::zero() } else { parse_rational(rat)? };
        let coef = coef.strip_suffix('*').unwrap_or(coef);
        let b = match coef {
            "" | "+" => Rational::one(),
            "-" => -Rational::one(),
            c => parse_rational(c.strip_prefix('+').unwrap_or(c))?,
        };
        if b.is_zero() {
            return Err(Error::parse(pos, "zero coefficient on the square root"));
        }
        QuadExt::new(a, b, d)
    }
}

/// `c·e^{freq·z}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExpUnit {
    pub coeff: QuadExt,
    pub freq: QuadExt,
}

impl ExpUnit {
    pub fn new(coeff: QuadExt, freq: QuadExt) -> Result<Self> {
        if coeff.is_zero() {
            return Err(Error::ZeroInput("exponential unit coefficient"));
        }
        Ok(ExpUnit { coeff, freq })
    }

    /// `(c·e^{az})^k = c^k·e^{kaz}`.
    pub fn power(&self, k: u32) -> Result<Self> {
        Ok(ExpUnit {
            coeff: self.coeff.pow(k)?,
            freq: self.freq.scale(&Rational::from_integer(k.into())),
        })
    }
}

impl fmt::Display for ExpUnit {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({})*e^(({})*z)", self.coeff, self.freq)
    }
}

/// `T` slope of `e^{az}`: `|a|`.
pub fn exp_char_slope(a: &QuadExt) -> QuadExt {
    a.abs()
}

fn nonzero_freq(a: &QuadExt) -> Result<()> {
    if a.is_zero() {
        Err(Error::ZeroInput("frequency"))
    } else {
        Ok(())
    }
}

/// Common zeros of `e^{kaz} - 1` and `e^{kbz} - 1`. They are the
/// intersection of the lattices `(2πi/ka)ℤ` and `(2πi/kb)ℤ`, which is
/// trivial unless `b/a = p/q` is rational, and then is `(2πi·q/ka)ℤ`.
pub fn exp_ngcd_slope(a: &QuadExt, b: &QuadExt, k: u32) -> Result<QuadExt> {
    nonzero_freq(a)?;
    nonzero_freq(b)?;
    let ratio = b.div(a)?;
    let Some(pq) = ratio.as_rational() else {
        return Ok(QuadExt::int(0));
    };
    let q = Rational::from_integer(pq.denom().clone());
    Ok(a.abs().scale(&(Rational::from_integer(k.into()) / q)))
}

/// `ngcd / (k·max(|a|, |b|))`.
pub fn exp_asym_ratio(a: &QuadExt, b: &QuadExt, k: u32) -> Result<QuadExt> {
    let n = exp_ngcd_slope(a, b, k)?;
    let t = exp_max_t_slope(a, b, k)?;
    n.div(&t)
}

/// `max(T_{f^k}, T_{g^k})` slope: `k·max(|a|, |b|)`.
pub fn exp_max_t_slope(a: &QuadExt, b: &QuadExt, k: u32) -> Result<QuadExt> {
    Ok(a.abs().max(&b.abs())?.scale(&Rational::from_integer(k.into())))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ExpSlopeRow {
    pub k: u32,
    #[serde(serialize_with = "report::display")]
    pub ngcd_slope: QuadExt,
    #[serde(rename = "maxT_slope", serialize_with = "report::display")]
    pub max_t_slope: QuadExt,
    #[serde(serialize_with = "report::display")]
    pub ratio: QuadExt,
}

pub fn exp_slope_table(a: &QuadExt, b: &QuadExt, k_max: u32) -> Result<Vec<ExpSlopeRow>> {
    (1..=k_max)
        .map(|k| {
            Ok(ExpSlopeRow {
                k,
                ngcd_slope: exp_ngcd_slope(a, b, k)?,
                max_t_slope: exp_max_t_slope(a, b, k)?,
                ratio: exp_asym_ratio(a, b, k)?,
            })
        })
        .collect()
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BorelClass {
    #[serde(serialize_with = "report::display")]
    pub freq: QuadExt,
    /// Indices into the input, ascending.
    pub members: Vec<usize>,
    #[serde(serialize_with = "report::display")]
    pub coeff_sum: QuadExt,
    pub vanishes: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BorelReport {
    /// Classes in order of first appearance.
    pub classes: Vec<BorelClass>,
    /// The whole sum is identically zero.
    pub total_vanishes: bool,
}

/// Groups units whose ratios are constant (equal frequencies). Distinct
/// exponentials are linearly independent, so the sum vanishes iff every
/// class sum does.
pub fn borel_partition(units: &[ExpUnit]) -> Result<BorelReport> {
    if units.is_empty() {
        return Err(Error::Empty("unit list"));
    }
    let mut classes: Vec<BorelClass> = Vec::new();
    for (i, u) in units.iter().enumerate() {
        match classes.iter_mut().find(|c| c.freq == u.freq) {
            Some(c) => {
                c.members.push(i);
                c.coeff_sum = c.coeff_sum.add(&u.coeff)?;
            }
            None => classes.push(BorelClass {
                freq: u.freq.clone(),
                members: vec![i],
                coeff_sum: u.coeff.clone(),
                vanishes: false,
            }),
        }
    }
    for c in &mut classes {
        c.vanishes = c.coeff_sum.is_zero();
    }
    let total_vanishes = classes.iter().all(|c| c.vanishes);
    Ok(BorelReport { classes, total_vanishes })
}

/// The same partition for the `k`-th powers of the units.
pub fn green_partition(units: &[ExpUnit], k: u32) -> Result<BorelReport> {
    let powered = units.iter().map(|u| u.power(k)).collect::<Result<Vec<_>>>()?;
    borel_partition(&powered)
}

/// Reduced `p/q` with `q > 0` as a pair, for callers that want the lattice
/// data behind [`exp_ngcd_slope`].
pub fn frequency_ratio(a: &QuadExt, b: &QuadExt) -> Result<Option<(BigInt, BigInt)>> {
    nonzero_freq(a)?;
    let r = b.div(a)?;
    Ok(r.as_rational().map(|q| {
        let g = q.numer().gcd(q.denom());
        (q.numer() / &g, q.denom() / &g)
    }))
}
