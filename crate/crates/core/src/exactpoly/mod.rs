//! Exact-rational polynomial arithmetic.

mod basis;
mod mgcd;
mod multi;
pub mod parse;
mod ratfn;
mod uni;

pub use basis::{coprime_basis, valuation, Place};
pub use mgcd::{coprime_multivariate, mp_gcd};
pub use multi::{equalize_degrees, homogenize, monomials_of_degree, mp_add, mp_mul, substitute, ExponentVector, MultiPoly};
pub use parse::{parse_multi, parse_rational, parse_rf, parse_uni};
pub use ratfn::{rf_reduce, RationalFunction};
pub use uni::UniPoly;

/// Reduced arbitrary-precision rational with positive denominator.
pub type Rational = num_rational::BigRational;

/// Monic gcd of two univariate polynomials; errors when both are zero.
pub fn uni_gcd(p: &UniPoly, q: &UniPoly) -> crate::Result<UniPoly> {
    p.gcd(q)
}
