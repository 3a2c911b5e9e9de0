//! Randomized invariants. Proptest drives seeds into the crate's own
//! generators and, for orders and exponent vectors, supplies values directly.

use std::cmp::Ordering;

use num_bigint::BigInt;
use num_traits::Zero;
use proptest::prelude::*;
use rand::Rng;

use nevgcd::exactpoly::{coprime_basis, homogenize, substitute, valuation, Place};
use nevgcd::expunits::{exp_ngcd_slope, QuadExt};
use nevgcd::idealslice::{build_basis_slice, coefficient_matrix};
use nevgcd::linalg::rank_fraction_free;
use nevgcd::nevandeg::{mult_independent, ngcd_by_places, ngcd_slope};
use nevgcd::ordering::{compare, trailing_monomial};
use nevgcd::random::{self, SuiteRng};
use nevgcd::wronskian::wronskian;
use nevgcd::{ExponentVector, MonomialOrder, MultiPoly, Rational, RationalFunction, UniPoly};

fn rng(seed: u64) -> SuiteRng {
    random::rng(seed)
}

fn nonzero_multi(r: &mut SuiteRng, nvars: usize, max_deg: u32) -> MultiPoly {
    loop {
        let f = random::multipoly(r, nvars, max_deg, 5);
        if !f.is_zero() {
            return f;
        }
    }
}

fn nonzero_rf(r: &mut SuiteRng) -> RationalFunction {
    loop {
        let f = random::rational_function(r, 4);
        if !f.is_zero() {
            return f;
        }
    }
}

fn exps(n: usize) -> impl Strategy<Value = ExponentVector> {
    prop::collection::vec(0u32..6, n).prop_map(ExponentVector)
}

fn order(n: usize) -> impl Strategy<Value = MonomialOrder> {
    prop_oneof![
        Just(MonomialOrder::Lex),
        prop::collection::vec(0u64..7, n).prop_map(MonomialOrder::weight),
    ]
}

fn add(a: &ExponentVector, b: &ExponentVector) -> ExponentVector {
    ExponentVector(a.0.iter().zip(&b.0).map(|(x, y)| x + y).collect())
}

fn q(n: i64) -> Rational {
    Rational::from_integer(n.into())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn ring_laws(seed: u64) {
        let mut r = rng(seed);
        let [a, b, c] = [0; 3].map(|_| random::multipoly(&mut r, 3, 3, 4));
        prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a + &b, &b + &a);
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
    }

    #[test]
    fn homogenize_then_dehomogenize(seed: u64, extra in 0u32..3) {
        let mut r = rng(seed);
        let f = random::multipoly(&mut r, 3, 3, 5).dehomogenize();
        let d = f.total_degree().unwrap_or(0) + extra;
        let h = homogenize(&f, d).unwrap();
        prop_assert!(h.is_zero() || h.is_homogeneous());
        prop_assert_eq!(h.dehomogenize(), f);
    }

    #[test]
    fn gcd_of_common_multiples(seed: u64, dp in 0usize..4, dq in 0usize..4, dw in 0usize..3) {
        let mut r = rng(seed);
        let p = random::linear_product(&mut r, dp, 3);
        let q = random::linear_product(&mut r, dq, 3);
        let w = random::uni_poly(&mut r, dw, 3);
        let lhs = (&p * &w).gcd(&(&q * &w)).unwrap();
        let rhs = (&w * &p.gcd(&q).unwrap()).monic();
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn substitute_two_paths(seed: u64, k in 1u32..4) {
        let mut r = rng(seed);
        let f = random::multipoly(&mut r, 3, 3, 4).dehomogenize();
        let gs = vec![nonzero_rf(&mut r), nonzero_rf(&mut r)];
        let direct = substitute(&f, &gs, k).unwrap();
        let inflated = substitute(&f.inflate(k), &gs, 1).unwrap();
        prop_assert_eq!(direct, inflated);
    }

    #[test]
    fn principal_divisor_has_degree_zero(seed: u64) {
        let mut r = rng(seed);
        let f = nonzero_rf(&mut r);
        let mut places: Vec<Place> = coprime_basis(&[f.num().clone(), f.den().clone()])
            .unwrap()
            .into_iter()
            .map(|p| Place::finite(p).unwrap())
            .collect();
        places.push(Place::Infinity);
        let total: i64 = places.iter().map(|pl| valuation(&f, pl).unwrap() * pl.degree() as i64).sum();
        prop_assert_eq!(total, 0);
    }

    #[test]
    fn coprime_basis_reconstructs(seed: u64) {
        let mut r = rng(seed);
        let inputs: Vec<UniPoly> = (0..3)
            .map(|_| {
                let c = r.gen_range(1..5);
                random::linear_product(&mut r, c, 3)
            })
            .collect();
        let basis = coprime_basis(&inputs).unwrap();
        for (i, a) in basis.iter().enumerate() {
            for b in &basis[i + 1..] {
                prop_assert!(a.gcd(b).unwrap().is_constant());
            }
        }
        for p in &inputs {
            let mut rest = p.clone();
            let mut product = UniPoly::one();
            for b in &basis {
                let (e, quot) = rest.multiplicity(b).unwrap();
                rest = quot;
                product = &product * &b.pow(e);
            }
            prop_assert!(rest.is_constant());
            prop_assert_eq!(&product * &rest, p.clone());
        }
    }

    #[test]
    fn order_is_total_and_antisymmetric(a in exps(4), b in exps(4), c in exps(4), ord in order(4)) {
        let ab = compare(&a, &b, &ord).unwrap();
        prop_assert_eq!(ab, compare(&b, &a, &ord).unwrap().reverse());
        prop_assert_eq!(ab == Ordering::Equal, a == b);
        let bc = compare(&b, &c, &ord).unwrap();
        if ab != Ordering::Greater && bc != Ordering::Greater {
            prop_assert_ne!(compare(&a, &c, &ord).unwrap(), Ordering::Greater);
        }
    }

    #[test]
    fn order_is_monomial(a in exps(4), b in exps(4), c in exps(4), ord in order(4)) {
        prop_assert_eq!(compare(&a, &b, &ord).unwrap(), compare(&add(&a, &c), &add(&b, &c), &ord).unwrap());
        if a.0.iter().any(|&x| x > 0) {
            prop_assert_eq!(compare(&a, &ExponentVector(vec![0; 4]), &ord).unwrap(), Ordering::Greater);
        }
    }

    #[test]
    fn zero_weight_is_lex(a in exps(4), b in exps(4)) {
        let w = MonomialOrder::weight([0, 0, 0, 0]);
        prop_assert_eq!(compare(&a, &b, &w).unwrap(), compare(&a, &b, &MonomialOrder::Lex).unwrap());
    }

    #[test]
    fn trailing_monomial_is_multiplicative(seed: u64, ord in order(3)) {
        let mut r = rng(seed);
        let f = nonzero_multi(&mut r, 3, 3);
        let g = nonzero_multi(&mut r, 3, 3);
        let tm = trailing_monomial(&(&f * &g), &ord).unwrap();
        let sum = add(&trailing_monomial(&f, &ord).unwrap(), &trailing_monomial(&g, &ord).unwrap());
        prop_assert_eq!(tm, sum);
    }

    #[test]
    fn ngcd_symmetric_monotone_and_matches_places(seed: u64, k in 1i64..5) {
        let mut r = rng(seed);
        let f = nonzero_rf(&mut r);
        let g = nonzero_rf(&mut r);
        let n = ngcd_slope(&f, &g).unwrap();
        prop_assert_eq!(n, ngcd_slope(&g, &f).unwrap());
        prop_assert_eq!(n, ngcd_by_places(&f, &g).unwrap());
        prop_assert!(ngcd_slope(&f.pow(k).unwrap(), &g.pow(k).unwrap()).unwrap() >= n);
    }

    #[test]
    fn independence_ignores_order_and_scaling(seed: u64, c in 1i64..6) {
        let mut r = rng(seed);
        let gs: Vec<RationalFunction> = (0..3).map(|_| random::nonconstant_rational_function(&mut r, 2)).collect();
        let base = mult_independent(&gs).unwrap().independent;
        let mut perm = gs.clone();
        perm.rotate_left(1);
        prop_assert_eq!(mult_independent(&perm).unwrap().independent, base);
        let mut scaled = gs.clone();
        scaled[1] = scaled[1].scale(&q(-c));
        prop_assert_eq!(mult_independent(&scaled).unwrap().independent, base);
    }

    #[test]
    fn independence_witness_is_constant(seed: u64) {
        let mut r = rng(seed);
        let a = random::nonconstant_rational_function(&mut r, 2);
        let b = random::nonconstant_rational_function(&mut r, 2);
        let gs = vec![a.clone(), b.clone(), a.pow(2).unwrap().mul(&b.pow(-3).unwrap()).scale(&q(5))];
        let cert = mult_independent(&gs).unwrap();
        prop_assert!(!cert.independent);
        let w = cert.witness.unwrap();
        prop_assert!(w.iter().any(|x| !x.is_zero()));
        prop_assert!(nevgcd::nevandeg::power_product(&gs, &w).unwrap().is_constant());
    }

    #[test]
    fn wronskian_alternates_and_scales(seed: u64, c in 1i64..9) {
        let mut r = rng(seed);
        let fs: Vec<RationalFunction> = (0..3).map(|_| nonzero_rf(&mut r)).collect();
        let w = wronskian(&fs).unwrap();
        let mut swapped = fs.clone();
        swapped.swap(0, 2);
        prop_assert_eq!(wronskian(&swapped).unwrap(), w.neg());
        let mut scaled = fs.clone();
        scaled[1] = scaled[1].scale(&q(c));
        prop_assert_eq!(wronskian(&scaled).unwrap(), w.scale(&q(c)));
    }

    #[test]
    fn exp_ngcd_slope_laws(an in 1i64..12, ad in 1i64..6, bn in -12i64..12, bd in 1i64..6, k in 1u32..8, root in prop::bool::ANY) {
        prop_assume!(bn != 0);
        let a = QuadExt::rational(Rational::new(an.into(), ad.into()));
        let b = if root {
            QuadExt::new(Rational::zero(), Rational::new(bn.into(), bd.into()), 2).unwrap()
        } else {
            QuadExt::rational(Rational::new(bn.into(), bd.into()))
        };
        let s = exp_ngcd_slope(&a, &b, k).unwrap();
        prop_assert_eq!(&s, &exp_ngcd_slope(&b, &a, k).unwrap());
        let one = exp_ngcd_slope(&a, &b, 1).unwrap();
        prop_assert_eq!(&s, &one.scale(&q(i64::from(k))));
        let bound = a.abs().min(&b.abs()).unwrap().scale(&q(i64::from(k)));
        prop_assert_ne!(s.try_cmp(&bound).unwrap(), Ordering::Greater);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(16))]

    #[test]
    fn basis_exchange_keeps_span(seed: u64, m in 2u32..5) {
        let mut r = rng(seed);
        let (f, g) = random::coprime_form_pair(&mut r, 3, 2);
        let ord = random::monomial_order(&mut r, 3);
        let s = build_basis_slice(&f, &g, m, &ord).unwrap();
        let t = build_basis_slice(&g, &f, m, &ord).unwrap();
        prop_assert_eq!(s.basis.len(), t.basis.len());
        let a = coefficient_matrix(&s.basis, 3, m);
        let both: Vec<_> = a.iter().cloned().chain(coefficient_matrix(&t.basis, 3, m)).collect();
        prop_assert_eq!(rank_fraction_free(&a), s.basis.len());
        prop_assert_eq!(rank_fraction_free(&both), s.basis.len());
    }

    #[test]
    fn rational_serialization_round_trips(n: i64, d in 1i64..i64::MAX) {
        let v = Rational::new(BigInt::from(n), BigInt::from(d));
        let parsed = nevgcd::exactpoly::parse_rational(&v.to_string()).unwrap();
        prop_assert_eq!(parsed, v);
    }
}
