//! Exact computations around greatest common divisors of compositions over
//! algebraic tori.
//!
//! The crate is organised bottom-up:
//!
//! * [`exactpoly`]: rationals, sparse multivariate and dense univariate
//!   polynomials, rational functions, gcd-free bases and valuations.
//! * [`ordering`]: lexicographic and weight monomial orders, trailing monomials.
//! * [`idealslice`]: the degree-`m` slice of a two-generator ideal, its explicit
//!   basis, the combinatorial constants attached to it and their asymptotics.
//! * [`nevandeg`]: degree-level ("slope") Nevanlinna quantities for rational
//!   functions, multiplicative-independence certificates and gcd sweeps.
//! * [`wronskian`]: Wronskians of rational functions and the two local
//!   vanishing-order inequalities used with them.
//! * [`expunits`]: closed-form slopes for exponential units `c·e^{az}` with
//!   frequencies in a real quadratic field.
//!
//! Every value is immutable once built and every operation is a pure
//! function, so grids, sweeps and random suites fan out over [`par`].

pub mod error;
pub mod exactpoly;
pub mod expunits;
pub mod idealslice;
pub mod linalg;
pub mod nevandeg;
pub mod ordering;
pub mod par;
pub mod random;
pub mod report;
pub mod suites;
pub mod wronskian;

pub use error::{Error, Result};
pub use exactpoly::{ExponentVector, MultiPoly, Place, Rational, RationalFunction, UniPoly};
pub use ordering::MonomialOrder;
