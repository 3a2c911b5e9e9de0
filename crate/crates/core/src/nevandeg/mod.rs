//! Degree-level Nevanlinna theory for rational functions.
//!
//! For a reduced rational function every Nevanlinna quantity grows like an
//! integer multiple of `log r`; the multiple (the *slope*) is what this
//! module computes. On top of the slopes sit the multiplicative-independence
//! certificate and the gcd sweeps over `k`.

mod sweep;

pub use sweep::{gcd_sweep, tgcd_sweep, SweepConfig, SweepReport, SweepRow, Track};

use num_bigint::BigInt;
use num_traits::ToPrimitive;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::exactpoly::{coprime_basis, valuation, Place, Rational, RationalFunction, UniPoly};
use crate::linalg::{left_kernel, primitive_integer_vector, rank_fraction_free, rref};
use crate::report;

/// `max(deg num, deg den)`; zero has slope 0.
pub fn char_slope(f: &RationalFunction) -> u64 {
    f.num().degree_or_zero().max(f.den().degree_or_zero()) as u64
}

/// Slope of the point `[f_0 : … : f_k]` of projective space: clear
/// denominators, strip the common gcd, take the largest degree. Zero
/// entries are allowed; an all-zero tuple has slope 0.
fn projective_slope(fs: &[&RationalFunction]) -> Result<u64> {
    let mut l = UniPoly::one();
    for f in fs {
        let g = l.gcd(f.den())?;
        l = &l * &f.den().div_exact(&g).expect("gcd divides");
    }
    let polys: Vec<UniPoly> = fs
        .iter()
        .filter(|f| !f.is_zero())
        .map(|f| f.num() * &l.div_exact(f.den()).expect("den divides lcm"))
        .collect();
    let Some(first) = polys.first() else {
        return Ok(0);
    };
    let mut g = first.clone();
    for p in &polys[1..] {
        g = g.gcd(p)?;
    }
    let d = polys.iter().map(|p| p.degree_or_zero()).max().unwrap_or(0);
    Ok((d - g.degree_or_zero()) as u64)
}

/// Slope of the map `[1 : g_1 : … : g_n]`.
pub fn map_char_slope(gs: &[RationalFunction]) -> Result<u64> {
    let one = RationalFunction::one();
    let mut v: Vec<&RationalFunction> = vec![&one];
    v.extend(gs.iter());
    projective_slope(&v)
}

fn nonzero(f: &RationalFunction, what: &'static str) -> Result<()> {
    if f.is_zero() {
        Err(Error::ZeroInput(what))
    } else {
        Ok(())
    }
}

/// Degree of the gcd of the numerators: common zeros counted with the
/// smaller multiplicity.
pub fn ngcd_slope(f: &RationalFunction, g: &RationalFunction) -> Result<u64> {
    nonzero(f, "ngcd_slope")?;
    nonzero(g, "ngcd_slope")?;
    Ok(f.num().gcd(g.num())?.degree_or_zero() as u64)
}

/// Only the place at infinity contributes: `max(0, min(v_∞ f, v_∞ g))`.
pub fn mgcd_slope(f: &RationalFunction, g: &RationalFunction) -> Result<u64> {
    nonzero(f, "mgcd_slope")?;
    nonzero(g, "mgcd_slope")?;
    let v = valuation(f, &Place::Infinity)?.min(valuation(g, &Place::Infinity)?);
    Ok(v.max(0) as u64)
}

/// Slope of `[1 : f : g]` minus slope of `[f : g]`.
pub fn tgcd_slope(f: &RationalFunction, g: &RationalFunction) -> Result<u64> {
    if f.is_zero() && g.is_zero() {
        return Err(Error::ZeroInput("tgcd_slope of two zero functions"));
    }
    let one = RationalFunction::one();
    let full = projective_slope(&[&one, f, g])?;
    let pair = projective_slope(&[f, g])?;
    Ok(full - pair)
}

/// `(N, m)` slopes of the first main theorem at the value `a`: `N` counts
/// finite `a`-points, `m` is the remainder up to `T`.
pub fn fmt_decomposition(f: &RationalFunction, a: &Rational) -> Result<(u64, u64)> {
    if f.is_constant() {
        return Err(Error::ConstantInput("first main theorem needs a nonconstant function"));
    }
    let shifted = f.num() - &f.den().scale(a);
    let n = shifted.degree_or_zero() as u64;
    Ok((n, char_slope(f) - n))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SlopeReport {
    #[serde(rename = "T_f")]
    pub t_f: u64,
    #[serde(rename = "T_g")]
    pub t_g: u64,
    #[serde(rename = "N_gcd")]
    pub n_gcd: u64,
    #[serde(rename = "m_gcd")]
    pub m_gcd: u64,
    #[serde(rename = "T_gcd")]
    pub t_gcd: u64,
    pub label: String,
}

impl SlopeReport {
    pub fn consistent(&self) -> bool {
        self.t_gcd == self.n_gcd + self.m_gcd
    }
}

pub fn slope_report(f: &RationalFunction, g: &RationalFunction, label: impl Into<String>) -> Result<SlopeReport> {
    Ok(SlopeReport {
        t_f: char_slope(f),
        t_g: char_slope(g),
        n_gcd: ngcd_slope(f, g)?,
        m_gcd: mgcd_slope(f, g)?,
        t_gcd: tgcd_slope(f, g)?,
        label: label.into(),
    })
}

/// Exponents of several functions over one shared gcd-free basis; the last
/// place is always infinity.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DivisorVector {
    #[serde(serialize_with = "report::displays")]
    pub places: Vec<Place>,
    pub exponents: Vec<i64>,
}

impl DivisorVector {
    /// `Σ v·deg(place)`, zero for every principal divisor.
    pub fn degree(&self) -> i64 {
        self.places.iter().zip(&self.exponents).map(|(p, v)| v * p.degree() as i64).sum()
    }

    pub fn is_zero(&self) -> bool {
        self.exponents.iter().all(|&v| v == 0)
    }
}

/// Gcd-free basis of every numerator and denominator, plus infinity.
pub fn joint_places(fs: &[RationalFunction]) -> Result<Vec<Place>> {
    let polys: Vec<UniPoly> = fs
        .iter()
        .flat_map(|f| [f.num().clone(), f.den().clone()])
        .filter(|p| !p.is_zero())
        .collect();
    let mut places: Vec<Place> = coprime_basis(&polys)?.into_iter().map(Place::Finite).collect();
    places.push(Place::Infinity);
    Ok(places)
}

pub fn divisor_vectors(fs: &[RationalFunction]) -> Result<Vec<DivisorVector>> {
    if fs.iter().any(RationalFunction::is_zero) {
        return Err(Error::ZeroInput("divisor of the zero function"));
    }
    let places = joint_places(fs)?;
    fs.iter()
        .map(|f| {
            let exponents = places.iter().map(|p| valuation(f, p)).collect::<Result<Vec<_>>>()?;
            Ok(DivisorVector {
                places: places.clone(),
                exponents,
            })
        })
        .collect()
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct IndependenceCertificate {
    pub independent: bool,
    #[serde(serialize_with = "report::displays")]
    pub places: Vec<Place>,
    /// One row per function, one column per place.
    #[serde(serialize_with = "report::bigint_matrix")]
    pub matrix: Vec<Vec<BigInt>>,
    pub rank: usize,
    /// Pivot columns of the reduced echelon form.
    pub pivots: Vec<usize>,
    /// Primitive `(i_1, …, i_n)` with `Π g_i^{i_k}` constant, first nonzero
    /// entry positive.
    #[serde(serialize_with = "report::opt_bigints")]
    pub witness: Option<Vec<BigInt>>,
    /// The constant `Π g_i^{i_k}`, when a witness exists.
    #[serde(serialize_with = "opt_rational")]
    pub witness_value: Option<Rational>,
}

fn opt_rational<S: serde::Serializer>(v: &Option<Rational>, s: S) -> std::result::Result<S::Ok, S::Error> {
    match v {
        Some(q) => report::rational(q, s),
        None => s.serialize_none(),
    }
}

/// `Π g_i^{w_i}`.
pub fn power_product(gs: &[RationalFunction], w: &[BigInt]) -> Result<RationalFunction> {
    let mut acc = RationalFunction::one();
    for (g, e) in gs.iter().zip(w) {
        let e = e.to_i64().ok_or_else(|| Error::Invalid(format!("exponent {e} out of range")))?;
        acc = acc.mul(&g.pow(e)?);
    }
    Ok(acc)
}

/// Decides whether no nontrivial power product of `gs` is constant.
///
/// A power product is constant iff its divisor vanishes, so the question is
/// the rank of the exponent matrix over a shared gcd-free basis. Dependent
/// inputs get a kernel vector, which is checked by multiplying out.
pub fn mult_independent(gs: &[RationalFunction]) -> Result<IndependenceCertificate> {
    if gs.is_empty() {
        return Err(Error::Empty("function list"));
    }
    let dvs = divisor_vectors(gs)?;
    let places = dvs[0].places.clone();
    let matrix: Vec<Vec<BigInt>> = dvs.iter().map(|d| d.exponents.iter().map(|&v| BigInt::from(v)).collect()).collect();
    let qm: Vec<Vec<Rational>> = matrix
        .iter()
        .map(|r| r.iter().map(|v| Rational::from_integer(v.clone())).collect())
        .collect();
    let rank = rank_fraction_free(&qm);
    let (_, pivots) = rref(qm.clone());
    let independent = rank == gs.len();
    let (witness, witness_value) = if independent {
        (None, None)
    } else {
        let kernel = left_kernel(&qm);
        let v = kernel.first().expect("rank deficiency leaves a kernel");
        let w = primitive_integer_vector(v);
        let prod = power_product(gs, &w)?;
        let value = prod
            .constant_value()
            .ok_or_else(|| Error::Invalid(format!("witness product {prod} is not constant")))?;
        (Some(w), Some(value))
    };
    Ok(IndependenceCertificate {
        independent,
        places,
        matrix,
        rank,
        pivots,
        witness,
        witness_value,
    })
}

/// Brute-force `Σ_pl min(v⁺ f, v⁺ g)·deg pl` over a joint gcd-free basis; an
/// independent route to [`ngcd_slope`].
pub fn ngcd_by_places(f: &RationalFunction, g: &RationalFunction) -> Result<u64> {
    let places = joint_places(&[f.clone(), g.clone()])?;
    let mut acc = 0i64;
    for p in places.iter().filter(|p| **p != Place::Infinity) {
        let v = valuation(f, p)?.max(0).min(valuation(g, p)?.max(0));
        acc += v * p.degree() as i64;
    }
    Ok(acc as u64)
}
