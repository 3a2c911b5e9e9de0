//! Seeded generators for the randomized suites. Every generator takes the
//! caller's RNG, so a suite is reproducible from its seed alone.

use num_traits::Zero;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::exactpoly::{coprime_multivariate, monomials_of_degree, ExponentVector, MultiPoly, Rational};
use crate::exactpoly::{RationalFunction, UniPoly};
use crate::ordering::MonomialOrder;

pub type SuiteRng = ChaCha8Rng;

pub fn rng(seed: u64) -> SuiteRng {
    ChaCha8Rng::seed_from_u64(seed)
}

fn nonzero_small<R: Rng>(rng: &mut R, bound: i64) -> i64 {
    loop {
        let v = rng.gen_range(-bound..=bound);
        if v != 0 {
            return v;
        }
    }
}

fn q(v: i64) -> Rational {
    Rational::from_integer(v.into())
}

/// Sparse homogeneous form of degree `d` in `nvars` variables, coefficients
/// in `{-3..3} \ {0}`, between one and `max_terms` terms.
pub fn homogeneous_form<R: Rng>(rng: &mut R, nvars: usize, d: u32, max_terms: usize) -> MultiPoly {
    let mons = monomials_of_degree(nvars, d);
    let count = rng.gen_range(1..=max_terms.min(mons.len()).max(1));
    let picked: Vec<&ExponentVector> = mons.choose_multiple(rng, count).collect();
    let mut f = MultiPoly::zero(nvars);
    for e in picked {
        f = &f + &MultiPoly::monomial(e.clone(), q(nonzero_small(rng, 3)));
    }
    f
}

/// Rejection-sampled pair of coprime forms of equal degree `d`.
pub fn coprime_form_pair<R: Rng>(rng: &mut R, nvars: usize, d: u32) -> (MultiPoly, MultiPoly) {
    let max_terms = (nvars + 1).max(3);
    loop {
        let f = homogeneous_form(rng, nvars, d, max_terms);
        let g = homogeneous_form(rng, nvars, d, max_terms);
        if coprime_multivariate(&f, &g).unwrap_or(false) {
            return (f, g);
        }
    }
}

/// Arbitrary nonzero polynomial with up to `max_terms` terms of degree at most
/// `max_deg`.
pub fn multipoly<R: Rng>(rng: &mut R, nvars: usize, max_deg: u32, max_terms: usize) -> MultiPoly {
    loop {
        let mut f = MultiPoly::zero(nvars);
        for _ in 0..rng.gen_range(1..=max_terms) {
            let e: Vec<u32> = (0..nvars).map(|_| rng.gen_range(0..=max_deg)).collect();
            f = &f + &MultiPoly::monomial(ExponentVector(e), q(nonzero_small(rng, 5)));
        }
        if !f.is_zero() {
            return f;
        }
    }
}

pub fn weight_vector<R: Rng>(rng: &mut R, nvars: usize) -> Vec<u64> {
    (0..nvars).map(|_| rng.gen_range(0..=6)).collect()
}

/// Lex with probability 1/4, otherwise a random weight order.
pub fn monomial_order<R: Rng>(rng: &mut R, nvars: usize) -> MonomialOrder {
    if rng.gen_bool(0.25) {
        MonomialOrder::Lex
    } else {
        MonomialOrder::weight(weight_vector(rng, nvars))
    }
}

/// Polynomial of exact degree `deg` with integer coefficients in `[-b, b]`.
pub fn uni_poly<R: Rng>(rng: &mut R, deg: usize, b: i64) -> UniPoly {
    let mut c: Vec<i64> = (0..deg).map(|_| rng.gen_range(-b..=b)).collect();
    c.push(nonzero_small(rng, b));
    UniPoly::from_ints(&c)
}

/// Product of `count` linear factors `z - r` with small integer roots, times
/// a nonzero constant. Repeated roots are allowed.
pub fn linear_product<R: Rng>(rng: &mut R, count: usize, root_bound: i64) -> UniPoly {
    let mut p = UniPoly::constant(q(nonzero_small(rng, 3)));
    for _ in 0..count {
        p = &p * &UniPoly::linear_root(rng.gen_range(-root_bound..=root_bound));
    }
    p
}

/// Reduced rational function with numerator and denominator degrees at most
/// `max_deg`, built from linear factors so that zeros and poles collide often.
pub fn rational_function<R: Rng>(rng: &mut R, max_deg: usize) -> RationalFunction {
    let a = rng.gen_range(0..=max_deg);
    let b = rng.gen_range(0..=max_deg);
    let num = if rng.gen_bool(0.5) {
        linear_product(rng, a, 3)
    } else {
        uni_poly(rng, a, 3)
    };
    let den = linear_product(rng, b, 3);
    RationalFunction::new(num, den).expect("nonzero denominator")
}

pub fn nonconstant_rational_function<R: Rng>(rng: &mut R, max_deg: usize) -> RationalFunction {
    loop {
        let f = rational_function(rng, max_deg.max(1));
        if !f.is_constant() {
            return f;
        }
    }
}

pub fn small_rational<R: Rng>(rng: &mut R) -> Rational {
    Rational::new(rng.gen_range(-4..=4).into(), rng.gen_range(1..=3).into())
}

pub fn nonzero_rational<R: Rng>(rng: &mut R) -> Rational {
    loop {
        let v = small_rational(rng);
        if !v.is_zero() {
            return v;
        }
    }
}
