//! The degree-`m` slice `(F1, F2)_m` of the ideal generated by two coprime
//! forms of equal degree `d` in `x0..xn`.
//!
//! With `B1 = {F1·x^i}`, `B2 = {F2·x^i}` (`|i| = m - d`) and
//! `B1' = {F1·TM(F2)·x^i}` (`|i| = m - 2d`), the set `(B1 \ B1') ∪ B2` is a
//! basis of the slice. Its size is
//! `M = 2·C(m+n-d, n) - C(m+n-2d, n)`, and the multiplier exponents satisfy
//! two closed-form column sums. This module builds the basis, checks both
//! facts exactly, and evaluates the constants `c`, `M`, `M'`, `L`.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::exactpoly::{coprime_multivariate, monomials_of_degree, ExponentVector, MultiPoly, Rational};
use crate::linalg::rank_fraction_free;
use crate::ordering::{trailing_monomial, MonomialOrder};
use crate::report;

/// `C(a, b)`, zero whenever `a < 0`, `b < 0` or `b > a`.
pub fn binom(a: i64, b: i64) -> BigInt {
    if a < 0 || b < 0 || b > a {
        return BigInt::zero();
    }
    let b = b.min(a - b);
    let mut acc = BigInt::one();
    for i in 0..b {
        acc = acc * BigInt::from(a - i) / BigInt::from(i + 1);
    }
    acc
}

/// Number of monomials of degree `delta` in `n + 1` variables.
pub fn monomial_count(delta: i64, n: i64) -> BigInt {
    if delta < 0 || n < 0 {
        return BigInt::zero();
    }
    binom(n + delta, n)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SliceConstants {
    #[serde(serialize_with = "report::bigint")]
    pub c: BigInt,
    #[serde(rename = "M", serialize_with = "report::bigint")]
    pub big_m: BigInt,
    #[serde(rename = "Mprime", serialize_with = "report::bigint")]
    pub m_prime: BigInt,
    /// `ceil(M(M-1) / 2c)`; absent when `c = 0` (the case `m = d`).
    #[serde(rename = "L", serialize_with = "report::opt_bigint")]
    pub l: Option<BigInt>,
}

pub fn slice_constants(m: i64, n: i64, d: i64) -> Result<SliceConstants> {
    if d < 1 || n < 1 {
        return Err(Error::Invalid(format!("need n >= 1 and d >= 1, got n = {n}, d = {d}")));
    }
    if m < d {
        return Err(Error::Invalid(format!("slice degree m = {m} is below d = {d}")));
    }
    let c = BigInt::from(2) * binom(m + n - d, n + 1) - binom(m + n - 2 * d, n + 1);
    let big_m = BigInt::from(2) * binom(m + n - d, n) - binom(m + n - 2 * d, n);
    let m_prime = binom(m + n, n) - &big_m;
    let l = (c.is_positive()).then(|| {
        let num: BigInt = &big_m * (&big_m - 1u32);
        let den = BigInt::from(2) * &c;
        num.div_ceil(&den)
    });
    Ok(SliceConstants { c, big_m, m_prime, l })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BasisSlice {
    pub m: u32,
    pub n: u32,
    pub d: u32,
    #[serde(serialize_with = "report::display")]
    pub order: MonomialOrder,
    #[serde(rename = "F1", serialize_with = "report::display")]
    pub f1: MultiPoly,
    #[serde(rename = "F2", serialize_with = "report::display")]
    pub f2: MultiPoly,
    /// The caller's pair was exchanged so that `TM(F2) <= TM(F1)`.
    pub swapped: bool,
    /// `TM(F1) = TM(F2)`; the pair was kept in the given order.
    pub tm_tie: bool,
    #[serde(serialize_with = "report::exps")]
    pub tm_f2: ExponentVector,
    #[serde(rename = "B1", serialize_with = "report::displays")]
    pub b1: Vec<MultiPoly>,
    #[serde(rename = "B2", serialize_with = "report::displays")]
    pub b2: Vec<MultiPoly>,
    #[serde(rename = "B1prime", serialize_with = "report::displays")]
    pub b1_prime: Vec<MultiPoly>,
    #[serde(rename = "B", serialize_with = "report::displays")]
    pub basis: Vec<MultiPoly>,
}

impl BasisSlice {
    pub fn nvars(&self) -> usize {
        self.n as usize + 1
    }

    pub fn constants(&self) -> SliceConstants {
        slice_constants(self.m.into(), self.n.into(), self.d.into()).expect("validated at construction")
    }
}

fn homogeneous_degree(f: &MultiPoly, name: &'static str) -> Result<u32> {
    if f.is_zero() {
        return Err(Error::ZeroInput(name));
    }
    if !f.is_homogeneous() {
        return Err(Error::NotHomogeneous(f.to_string()));
    }
    let d = f.total_degree().expect("nonzero");
    if d == 0 {
        return Err(Error::ConstantInput(name));
    }
    Ok(d)
}

/// Checks the hypotheses shared by the slice constructions: equal-degree,
/// nonconstant, coprime forms in the same ring.
pub fn check_form_pair(f1: &MultiPoly, f2: &MultiPoly) -> Result<u32> {
    if f1.nvars() != f2.nvars() {
        return Err(Error::ArityMismatch(f1.nvars(), f2.nvars()));
    }
    if f1.nvars() < 2 {
        return Err(Error::Invalid("forms need at least two variables".into()));
    }
    let d1 = homogeneous_degree(f1, "F1")?;
    let d2 = homogeneous_degree(f2, "F2")?;
    if d1 != d2 {
        return Err(Error::UnequalDegrees(d1, d2));
    }
    if !coprime_multivariate(f1, f2)? {
        let g = crate::exactpoly::mp_gcd(f1, f2)?;
        return Err(Error::NotCoprime(g.to_string()));
    }
    Ok(d1)
}

/// Builds `B = (B1 \ B1') ∪ B2` for the pair, ordered so that
/// `TM(F2) <= TM(F1)`. Ties keep the caller's order.
pub fn build_basis_slice(f1: &MultiPoly, f2: &MultiPoly, m: u32, ord: &MonomialOrder) -> Result<BasisSlice> {
    let d = check_form_pair(f1, f2)?;
    if m < d {
        return Err(Error::Invalid(format!("slice degree m = {m} is below d = {d}")));
    }
    let nvars = f1.nvars();
    let tm1 = trailing_monomial(f1, ord)?;
    let tm2 = trailing_monomial(f2, ord)?;
    let cmp = ord.cmp_unchecked(&tm2, &tm1);
    let swapped = cmp == std::cmp::Ordering::Greater;
    let (f1, f2, tm_f2) = if swapped {
        (f2.clone(), f1.clone(), tm1)
    } else {
        (f1.clone(), f2.clone(), tm2)
    };
    let one = Rational::one();
    let shifts = monomials_of_degree(nvars, m - d);
    let b1: Vec<MultiPoly> = shifts.iter().map(|e| f1.mul_monomial(e, &one)).collect();
    let b2: Vec<MultiPoly> = shifts.iter().map(|e| f2.mul_monomial(e, &one)).collect();
    let b1_prime: Vec<MultiPoly> = match m.checked_sub(2 * d) {
        Some(delta) => monomials_of_degree(nvars, delta)
            .iter()
            .map(|e| f1.mul_monomial(&e.add(&tm_f2), &one))
            .collect(),
        None => Vec::new(),
    };
    // B1' ⊂ B1 as polynomials: F1·x^j with TM(F2) | x^j
    let basis: Vec<MultiPoly> = shifts
        .iter()
        .zip(&b1)
        .filter(|(e, _)| !tm_f2.divides(e))
        .map(|(_, p)| p.clone())
        .chain(b2.iter().cloned())
        .collect();
    Ok(BasisSlice {
        m,
        n: (nvars - 1) as u32,
        d,
        order: ord.clone(),
        f1,
        f2,
        swapped,
        tm_tie: cmp == std::cmp::Ordering::Equal,
        tm_f2,
        b1,
        b2,
        b1_prime,
        basis,
    })
}

/// Coefficient matrix of degree-`m` forms: one row per polynomial, one
/// column per monomial in descending lex order.
pub fn coefficient_matrix(polys: &[MultiPoly], nvars: usize, m: u32) -> Vec<Vec<Rational>> {
    let cols = monomials_of_degree(nvars, m);
    polys.iter().map(|p| cols.iter().map(|e| p.coeff(e)).collect()).collect()
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BasisReport {
    pub size: usize,
    #[serde(rename = "M", serialize_with = "report::bigint")]
    pub expected_m: BigInt,
    pub rank: usize,
    pub span_dim: usize,
    /// `C(m+n, n) - rank`, the dimension of the quotient.
    #[serde(serialize_with = "report::bigint")]
    pub codim: BigInt,
    pub pass: bool,
}

/// Rank of the basis, and the dimension of the span of all of `B1 ∪ B2`,
/// both by exact elimination; passes iff both equal `|B|`.
pub fn verify_basis(s: &BasisSlice) -> BasisReport {
    let nvars = s.nvars();
    let rank = rank_fraction_free(&coefficient_matrix(&s.basis, nvars, s.m));
    let all: Vec<MultiPoly> = s.b1.iter().chain(&s.b2).cloned().collect();
    let span_dim = rank_fraction_free(&coefficient_matrix(&all, nvars, s.m));
    let size = s.basis.len();
    let expected_m = s.constants().big_m;
    let codim = monomial_count(s.m.into(), s.n.into()) - BigInt::from(rank);
    BasisReport {
        size,
        expected_m,
        rank,
        span_dim,
        codim,
        pass: rank == size && span_dim == size,
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SumCheck {
    /// `"B1"`, `"B2"` or `"B1prime"`.
    pub set: &'static str,
    pub var: usize,
    #[serde(serialize_with = "report::bigint")]
    pub computed: BigInt,
    #[serde(serialize_with = "report::bigint")]
    pub expected: BigInt,
    pub pass: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SumReport {
    pub checks: Vec<SumCheck>,
    pub pass: bool,
}

/// Exponent of `s / f`, which must be a monomial.
fn quotient_monomial(s: &MultiPoly, f: &MultiPoly) -> Option<ExponentVector> {
    let q = s.div_exact(f)?;
    if q.num_terms() != 1 {
        return None;
    }
    let e = q.terms().next().map(|(e, _)| e.clone());
    e
}

/// Column sums of `ord_{x_i}(s / F_j)` over `B1`, `B2` and `B1'`, compared
/// against `C(m+n-d, n+1)` and `C(m+n-2d, n+1) + C(m+n-2d, n)·ord_{x_i} TM(F2)`.
/// The quotients are recomputed by exact division.
pub fn verify_sum_formulas(s: &BasisSlice) -> SumReport {
    let (m, n, d) = (i64::from(s.m), i64::from(s.n), i64::from(s.d));
    let nvars = s.nvars();
    let sums = |set: &[MultiPoly], f: &MultiPoly| -> Option<Vec<BigInt>> {
        let mut acc = vec![BigInt::zero(); nvars];
        for p in set {
            let e = quotient_monomial(p, f)?;
            for (a, k) in acc.iter_mut().zip(e.as_slice()) {
                *a += *k;
            }
        }
        Some(acc)
    };
    let full = binom(m + n - d, n + 1);
    let inner = binom(m + n - 2 * d, n + 1);
    let inner_count = binom(m + n - 2 * d, n);
    let mut checks = Vec::new();
    let sides: [(&'static str, &[MultiPoly], &MultiPoly); 3] =
        [("B1", &s.b1, &s.f1), ("B2", &s.b2, &s.f2), ("B1prime", &s.b1_prime, &s.f1)];
    for (name, set, f) in sides {
        let computed = sums(set, f);
        for i in 0..nvars {
            let expected = if name == "B1prime" {
                &inner + &inner_count * BigInt::from(s.tm_f2.as_slice()[i])
            } else {
                full.clone()
            };
            let (computed, pass) = match &computed {
                Some(v) => (v[i].clone(), v[i] == expected),
                None => (BigInt::from(-1), false),
            };
            checks.push(SumCheck {
                set: name,
                var: i,
                computed,
                expected,
                pass,
            });
        }
    }
    let pass = checks.iter().all(|c| c.pass);
    SumReport { checks, pass }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct AsymptoticRow {
    pub m: u32,
    #[serde(serialize_with = "report::bigint")]
    pub c: BigInt,
    #[serde(rename = "M", serialize_with = "report::bigint")]
    pub big_m: BigInt,
    #[serde(rename = "Mprime", serialize_with = "report::bigint")]
    pub m_prime: BigInt,
    /// `|c - m^{n+1}/(n+1)! - m^n/(2(n-1)!)| / m^{n-1}`
    #[serde(serialize_with = "report::rational")]
    pub c_residual: BigRational,
    /// `|M - m^n/n!| / m^{n-1}`
    #[serde(serialize_with = "report::rational")]
    pub m_residual: BigRational,
    /// `M' / m^{n-2}`
    #[serde(serialize_with = "report::rational")]
    pub m_prime_scaled: BigRational,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SequenceSummary {
    pub name: &'static str,
    #[serde(serialize_with = "report::rational")]
    pub max: BigRational,
    pub argmax: u32,
    /// Non-increasing from the argmax onward.
    pub monotone_tail: bool,
    /// Every value at `m >= reference_m` is at most the value at `reference_m`.
    pub bounded_by_reference: bool,
    /// Exact limit as `m -> ∞` of the scaled sequence.
    #[serde(serialize_with = "report::rational")]
    pub limit: BigRational,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct AsymptoticReport {
    pub n: u32,
    pub d: u32,
    pub m_max: u32,
    pub reference_m: u32,
    pub rows: Vec<AsymptoticRow>,
    pub sequences: Vec<SequenceSummary>,
    pub pass: bool,
}

fn factorial(k: i64) -> BigInt {
    (1..=k).fold(BigInt::one(), |acc, i| acc * i)
}

fn pow_rat(m: u32, e: i64) -> BigRational {
    if e >= 0 {
        BigRational::from_integer(BigInt::from(m).pow(e as u32))
    } else {
        BigRational::new(BigInt::one(), BigInt::from(m).pow((-e) as u32))
    }
}

/// Signed residual numerators as exact polynomials' values: for m >= 2d all
/// binomials above agree with their polynomial continuations, so the limit of
/// `p(m)/m^k` for a degree-`k` polynomial `p` is its `k`-th finite difference
/// over `k!`.
fn leading_coefficient(values: &[(u32, BigRational)], k: i64) -> BigRational {
    let k = k.max(0) as usize;
    if values.len() <= k {
        return BigRational::zero();
    }
    let mut diffs: Vec<BigRational> = values[..=k].iter().map(|(_, v)| v.clone()).collect();
    for _ in 0..k {
        diffs = diffs.windows(2).map(|w| &w[1] - &w[0]).collect();
    }
    diffs[0].clone() / BigRational::from_integer(factorial(k as i64))
}

/// Scaled residuals of `c`, `M`, `M'` against their leading asymptotics for
/// `m = 2d..=m_max`, with per-sequence boundedness evidence. Requires `n >= 2`
/// (for `n = 1`, `M'` is the constant sequence tested separately).
pub fn asymptotic_check(n: u32, d: u32, m_max: u32) -> Result<AsymptoticReport> {
    asymptotic_check_with_reference(n, d, m_max, 10)
}

pub fn asymptotic_check_with_reference(n: u32, d: u32, m_max: u32, reference_m: u32) -> Result<AsymptoticReport> {
    if n < 1 || d < 1 {
        return Err(Error::Invalid("need n >= 1 and d >= 1".into()));
    }
    if m_max < 2 * d {
        return Err(Error::Invalid(format!("m_max = {m_max} is below 2d = {}", 2 * d)));
    }
    let (ni, di) = (i64::from(n), i64::from(d));
    let lead_c = BigRational::new(BigInt::one(), factorial(ni + 1));
    let second_c = BigRational::new(BigInt::one(), BigInt::from(2) * factorial(ni - 1));
    let lead_m = BigRational::new(BigInt::one(), factorial(ni));
    let mut rows = Vec::new();
    let mut signed_c = Vec::new();
    let mut signed_m = Vec::new();
    let mut mprime_vals = Vec::new();
    for m in (2 * d)..=m_max {
        let k = slice_constants(m.into(), ni, di)?;
        let mr = |e: i64| pow_rat(m, e);
        let rc = BigRational::from_integer(k.c.clone()) - &lead_c * mr(ni + 1) - &second_c * mr(ni);
        let rm = BigRational::from_integer(k.big_m.clone()) - &lead_m * mr(ni);
        let mp = BigRational::from_integer(k.m_prime.clone());
        signed_c.push((m, rc.clone()));
        signed_m.push((m, rm.clone()));
        mprime_vals.push((m, mp.clone()));
        rows.push(AsymptoticRow {
            m,
            c: k.c,
            big_m: k.big_m,
            m_prime: k.m_prime,
            c_residual: rc.abs() / mr(ni - 1),
            m_residual: rm.abs() / mr(ni - 1),
            m_prime_scaled: mp / mr(ni - 2),
        });
    }
    let limits = [
        leading_coefficient(&signed_c, ni - 1).abs(),
        leading_coefficient(&signed_m, ni - 1).abs(),
        leading_coefficient(&mprime_vals, ni - 2),
    ];
    let names = ["c_residual", "m_residual", "m_prime_scaled"];
    let mut sequences = Vec::new();
    for (idx, name) in names.into_iter().enumerate() {
        let seq: Vec<(u32, &BigRational)> = rows
            .iter()
            .map(|r| {
                let v = match idx {
                    0 => &r.c_residual,
                    1 => &r.m_residual,
                    _ => &r.m_prime_scaled,
                };
                (r.m, v)
            })
            .collect();
        let (argmax, max) = seq
            .iter()
            .fold(None::<(u32, &BigRational)>, |best, &(m, v)| match best {
                Some((_, b)) if b >= v => best,
                _ => Some((m, v)),
            })
            .expect("at least one row");
        let from = seq.iter().position(|(m, _)| *m == argmax).expect("argmax present");
        let monotone_tail = seq[from..].windows(2).all(|w| w[1].1 <= w[0].1);
        let bounded_by_reference = match seq.iter().find(|(m, _)| *m == reference_m) {
            Some((_, r)) => seq.iter().filter(|(m, _)| *m >= reference_m).all(|(_, v)| v <= r),
            None => false,
        };
        sequences.push(SequenceSummary {
            name,
            max: max.clone(),
            argmax,
            monotone_tail,
            bounded_by_reference,
            limit: limits[idx].clone(),
        });
    }
    let pass = sequences.iter().all(|s| s.monotone_tail && s.bounded_by_reference);
    Ok(AsymptoticReport {
        n,
        d,
        m_max,
        reference_m,
        rows,
        sequences,
        pass,
    })
}

/// Parses `n` for a ring of forms: the number of variables minus one.
pub fn ring_n(nvars: usize) -> i64 {
    nvars.to_i64().unwrap_or(i64::MAX) - 1
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactpoly::parse_multi;

    fn bi(v: i64) -> BigInt {
        BigInt::from(v)
    }

    fn mp(s: &str, n: usize) -> MultiPoly {
        parse_multi(s, Some(n)).unwrap()
    }

    #[test]
    fn monomial_count_examples() {
        assert_eq!(monomial_count(2, 2), bi(6));
        assert_eq!(monomial_count(0, 5), bi(1));
        assert_eq!(monomial_count(-1, 3), bi(0));
    }

    #[test]
    fn constants_examples() {
        let k = slice_constants(2, 2, 1).unwrap();
        assert_eq!((k.c.clone(), k.big_m.clone(), k.m_prime.clone()), (bi(2), bi(5), bi(1)));
        assert_eq!(k.l, Some(bi(5)));
        assert_eq!(slice_constants(1, 1, 1).unwrap().big_m, bi(2));
        for n in 1..4 {
            for d in 1..4 {
                let k = slice_constants(d, n, d).unwrap();
                assert_eq!(k.big_m, bi(2));
                assert_eq!(k.c, bi(0));
                assert_eq!(k.l, None);
            }
        }
        assert!(slice_constants(1, 2, 2).is_err());
    }

    #[test]
    fn basis_of_coordinate_pair() {
        let s = build_basis_slice(&mp("x0", 2), &mp("x1", 2), 2, &MonomialOrder::Lex).unwrap();
        assert_eq!(s.b1, vec![mp("x0^2", 2), mp("x0*x1", 2)]);
        assert_eq!(s.b2, vec![mp("x0*x1", 2), mp("x1^2", 2)]);
        assert_eq!(s.b1_prime, vec![mp("x0*x1", 2)]);
        assert_eq!(s.basis, vec![mp("x0^2", 2), mp("x0*x1", 2), mp("x1^2", 2)]);
        let r = verify_basis(&s);
        assert_eq!((r.rank, r.span_dim, r.size), (3, 3, 3));
        assert!(r.pass);
        assert_eq!(r.codim, s.constants().m_prime);
    }

    #[test]
    fn basis_at_m_equal_d() {
        let s = build_basis_slice(&mp("x0^2+x1x2", 3), &mp("x1^2-x0x2", 3), 2, &MonomialOrder::Lex).unwrap();
        assert!(s.b1_prime.is_empty());
        assert_eq!(s.basis.len(), 2);
        assert!(verify_basis(&s).pass);
    }

    #[test]
    fn basis_of_quadric_pair() {
        let s = build_basis_slice(&mp("x0^2+x1x2", 3), &mp("x1^2-x0x2", 3), 3, &MonomialOrder::Lex).unwrap();
        assert_eq!(s.basis.len(), 6);
        let r = verify_basis(&s);
        assert!(r.pass);
        assert_eq!(r.rank, 6);
    }

    #[test]
    fn corrupted_basis_fails() {
        let mut s = build_basis_slice(&mp("x0", 2), &mp("x1", 2), 2, &MonomialOrder::Lex).unwrap();
        let dup = s.basis[0].clone();
        s.basis[1] = dup;
        let r = verify_basis(&s);
        assert!(r.rank < r.size);
        assert!(!r.pass);
    }

    #[test]
    fn swap_is_recorded() {
        // lex: TM(x1) < TM(x0), so (x1, x0) must be exchanged
        let s = build_basis_slice(&mp("x1", 2), &mp("x0", 2), 2, &MonomialOrder::Lex).unwrap();
        assert!(s.swapped);
        assert_eq!(s.f1, mp("x0", 2));
    }

    #[test]
    fn hypothesis_errors() {
        let lex = MonomialOrder::Lex;
        assert!(matches!(
            build_basis_slice(&mp("x0^2+x1", 2), &mp("x1", 2), 2, &lex),
            Err(Error::NotHomogeneous(_))
        ));
        assert!(matches!(
            build_basis_slice(&mp("x0^2", 2), &mp("x1", 2), 2, &lex),
            Err(Error::UnequalDegrees(2, 1))
        ));
        assert!(matches!(
            build_basis_slice(&mp("x0*x1", 2), &mp("x1^2", 2), 2, &lex),
            Err(Error::NotCoprime(_))
        ));
        assert!(build_basis_slice(&mp("x0^2", 2), &mp("x1^2", 2), 1, &lex).is_err());
    }

    #[test]
    fn sum_formula_examples() {
        let s = build_basis_slice(&mp("x0", 2), &mp("x1", 2), 2, &MonomialOrder::Lex).unwrap();
        let r = verify_sum_formulas(&s);
        assert!(r.pass);
        let b1_x0 = r.checks.iter().find(|c| c.set == "B1" && c.var == 0).unwrap();
        assert_eq!(b1_x0.computed, bi(1));
        let bp_x1 = r.checks.iter().find(|c| c.set == "B1prime" && c.var == 1).unwrap();
        assert_eq!((bp_x1.computed.clone(), bp_x1.expected.clone()), (bi(1), bi(1)));
    }

    #[test]
    fn sum_formulas_vanish_at_m_equal_d() {
        let s = build_basis_slice(&mp("x0+x2", 3), &mp("x1", 3), 1, &MonomialOrder::Lex).unwrap();
        let r = verify_sum_formulas(&s);
        assert!(r.pass);
        assert!(r.checks.iter().all(|c| c.computed.is_zero()));
    }

    #[test]
    fn asymptotics_bounded_for_linear_forms() {
        let r = asymptotic_check(2, 1, 100).unwrap();
        assert!(r.pass, "{:?}", r.sequences);
        // n = 2, d = 1: all three scaled sequences are constant
        assert_eq!(r.sequences[2].limit, BigRational::one());
    }

    #[test]
    fn mprime_constant_for_one_dimensional_forms() {
        for d in 1..4 {
            let vals: Vec<BigInt> = (2 * d..40).map(|m| slice_constants(m, 1, d).unwrap().m_prime).collect();
            assert!(vals.windows(2).all(|w| w[0] == w[1]), "d = {d}: {vals:?}");
        }
    }

    #[test]
    fn asymptotics_boundary_row() {
        let r = asymptotic_check(3, 2, 16).unwrap();
        let first = &r.rows[0];
        assert_eq!(first.m, 4);
        // C(m+n-2d, n+1) = C(3, 4) = 0 at m = 2d
        assert_eq!(binom(3, 4), bi(0));
        assert_eq!(first.c, bi(2) * binom(5, 4));
    }
}
