//! Seeded randomized verification suites. Each case draws from its own RNG,
//! derived from the suite seed and the case index, so results do not depend
//! on scheduling.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::exactpoly::{MultiPoly, RationalFunction};
use crate::idealslice::{asymptotic_check, build_basis_slice, verify_basis, verify_sum_formulas};
use crate::nevandeg::{char_slope, fmt_decomposition, joint_places, mgcd_slope, ngcd_slope, tgcd_slope};
use crate::ordering::{trailing_monomial, MonomialOrder};
use crate::par::{self, Execution};
use crate::random::{self, SuiteRng};
use crate::wronskian::{bs_check, bs_places, ordw_check_all, wronskian};

pub const SUITE_NAMES: &[&str] = &["basis", "sums", "tm", "asymptotic", "fmt", "tgcd", "ordw", "bs"];

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SuiteReport {
    pub name: String,
    pub seed: u64,
    pub cases: usize,
    pub failures: Vec<String>,
    pub pass: bool,
}

/// SplitMix64 step: decorrelates neighbouring case indices.
fn case_seed(seed: u64, idx: u64) -> u64 {
    let mut z = seed.wrapping_add(idx.wrapping_add(1).wrapping_mul(0x9E37_79B9_7F4A_7C15));
    z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
    z ^ (z >> 31)
}

pub fn case_rng(seed: u64, idx: u64) -> SuiteRng {
    random::rng(case_seed(seed, idx))
}

fn collect(name: &str, seed: u64, outcomes: Vec<Result<Option<String>>>) -> SuiteReport {
    let cases = outcomes.len();
    let failures: Vec<String> = outcomes
        .into_iter()
        .enumerate()
        .filter_map(|(i, r)| match r {
            Ok(None) => None,
            Ok(Some(msg)) => Some(format!("case {i}: {msg}")),
            Err(e) => Some(format!("case {i}: error: {e}")),
        })
        .collect();
    SuiteReport {
        name: name.to_string(),
        seed,
        cases,
        pass: failures.is_empty(),
        failures,
    }
}

/// `(n, d, m)` with `n ∈ {1,2,3}`, `d ∈ {1,2}`, `d <= m <= 2d+3`.
pub fn slice_grid() -> Vec<(u32, u32, u32)> {
    let mut out = Vec::new();
    for n in 1..=3 {
        for d in 1..=2 {
            for m in d..=2 * d + 3 {
                out.push((n, d, m));
            }
        }
    }
    out
}

/// Cell-major list of `(n, d, m, trial)` cases.
fn grid_cases(trials: u32) -> Vec<(u32, u32, u32, u32)> {
    slice_grid()
        .into_iter()
        .flat_map(|(n, d, m)| (0..trials).map(move |t| (n, d, m, t)))
        .collect()
}

/// Basis size, rank, span dimension and quotient codimension on the grid.
pub fn basis_suite(seed: u64, trials: u32, exec: Execution) -> SuiteReport {
    let cases: Vec<(usize, (u32, u32, u32, u32))> = grid_cases(trials).into_iter().enumerate().collect();
    let out = par::map(exec, cases, |(i, (n, d, m, _))| {
        let mut rng = case_rng(seed, i as u64);
        let (f, g) = random::coprime_form_pair(&mut rng, n as usize + 1, d);
        let s = build_basis_slice(&f, &g, m, &MonomialOrder::Lex)?;
        let r = verify_basis(&s);
        let k = s.constants();
        let ok = r.pass && num_bigint::BigInt::from(r.size) == k.big_m && r.codim == k.m_prime;
        Ok((!ok).then(|| format!("n={n} d={d} m={m} F1={} F2={}: {r:?}", s.f1, s.f2)))
    });
    collect("basis", seed, out)
}

/// Both column-sum identities on the grid, under lex and three random
/// weight orders per case.
pub fn sums_suite(seed: u64, trials: u32, exec: Execution) -> SuiteReport {
    let cases: Vec<(usize, (u32, u32, u32, u32))> = grid_cases(trials).into_iter().enumerate().collect();
    let out = par::map(exec, cases, |(i, (n, d, m, _))| {
        let mut rng = case_rng(seed, i as u64);
        let nvars = n as usize + 1;
        let (f, g) = random::coprime_form_pair(&mut rng, nvars, d);
        let mut orders = vec![MonomialOrder::Lex];
        for _ in 0..3 {
            orders.push(MonomialOrder::weight(random::weight_vector(&mut rng, nvars)));
        }
        for ord in orders {
            let s = build_basis_slice(&f, &g, m, &ord)?;
            let r = verify_sum_formulas(&s);
            if !r.pass {
                return Ok(Some(format!("n={n} d={d} m={m} order={ord} F={f} G={g}")));
            }
        }
        Ok(None)
    });
    collect("sums", seed, out)
}

/// `TM(FG) = TM(F) + TM(G)` on random pairs and orders.
pub fn tm_suite(seed: u64, cases: usize, exec: Execution) -> SuiteReport {
    let out = par::map(exec, (0..cases).collect(), |i| {
        let mut rng = case_rng(seed, i as u64);
        let nvars = 1 + (i % 4);
        let f = random::multipoly(&mut rng, nvars, 4, 5);
        let g = random::multipoly(&mut rng, nvars, 4, 5);
        let ord = random::monomial_order(&mut rng, nvars);
        let lhs = trailing_monomial(&(&f * &g), &ord)?;
        let rhs = trailing_monomial(&f, &ord)?.add(&trailing_monomial(&g, &ord)?);
        Ok((lhs != rhs).then(|| format!("F={f} G={g} order={ord}")))
    });
    collect("tm", seed, out)
}

/// Boundedness of the scaled residuals for `n ∈ {2,3}`, `d ∈ {1,2}`.
pub fn asymptotic_suite(seed: u64, m_max: u32) -> SuiteReport {
    let mut out = Vec::new();
    for n in 2..=3 {
        for d in 1..=2 {
            out.push(asymptotic_check(n, d, m_max).map(|r| {
                let bad: Vec<&str> = r.sequences.iter().filter(|s| !s.bounded_by_reference).map(|s| s.name).collect();
                (!r.pass).then(|| format!("n={n} d={d}: not bounded by the m={} value: {bad:?}", r.reference_m))
            }));
        }
    }
    collect("asymptotic", seed, out)
}

/// `N + m = T` at a random value for random nonconstant functions.
pub fn fmt_suite(seed: u64, cases: usize, exec: Execution) -> SuiteReport {
    let out = par::map(exec, (0..cases).collect(), |i| {
        let mut rng = case_rng(seed, i as u64);
        let f = random::nonconstant_rational_function(&mut rng, 5);
        let a = random::small_rational(&mut rng);
        let (n, m) = fmt_decomposition(&f, &a)?;
        Ok((n + m != char_slope(&f)).then(|| format!("f={f} a={a}: N={n} m={m}")))
    });
    collect("fmt", seed, out)
}

fn nonzero_rf(rng: &mut SuiteRng) -> RationalFunction {
    loop {
        let f = random::rational_function(rng, 5);
        if !f.is_zero() {
            return f;
        }
    }
}

/// `T_gcd = N_gcd + m_gcd` on random pairs.
pub fn tgcd_suite(seed: u64, cases: usize, exec: Execution) -> SuiteReport {
    let out = par::map(exec, (0..cases).collect(), |i| {
        let mut rng = case_rng(seed, i as u64);
        let f = nonzero_rf(&mut rng);
        let g = nonzero_rf(&mut rng);
        let t = tgcd_slope(&f, &g)?;
        let s = ngcd_slope(&f, &g)? + mgcd_slope(&f, &g)?;
        Ok((t != s).then(|| format!("f={f} g={g}: T_gcd={t} N+m={s}")))
    });
    collect("tgcd", seed, out)
}

/// A random tuple of `1..=5` polynomials with nonzero Wronskian. Entries
/// are products of linear factors with roots in `-2..=2`, so zeros collide.
pub fn independent_tuple(rng: &mut SuiteRng) -> Vec<RationalFunction> {
    use rand::Rng;
    let m = rng.gen_range(1..=5);
    loop {
        let etas: Vec<RationalFunction> = (0..m)
            .map(|_| {
                let deg = rng.gen_range(0..=4);
                RationalFunction::from_poly(random::linear_product(rng, deg, 2))
            })
            .collect();
        if wronskian(&etas).map(|w| !w.is_zero()).unwrap_or(false) {
            return etas;
        }
    }
}

/// The Wronskian bound at every place of a joint gcd-free basis.
pub fn ordw_suite(seed: u64, cases: usize, exec: Execution) -> SuiteReport {
    let out = par::map(exec, (0..cases).collect(), |i| {
        let mut rng = case_rng(seed, i as u64);
        let etas = independent_tuple(&mut rng);
        let w = wronskian(&etas)?;
        let mut all = etas.clone();
        all.push(w);
        let places = joint_places(&all)?;
        for r in ordw_check_all(&etas, &places)? {
            if !r.pass {
                let s: Vec<String> = etas.iter().map(ToString::to_string).collect();
                return Ok(Some(format!("etas={s:?}: {r:?}")));
            }
        }
        Ok(None)
    });
    collect("ordw", seed, out)
}

/// A random admissible (BS) instance: coprime forms with `n <= 2`,
/// `d <= 2`, `m <= 2d+2`, and coordinates without a common zero.
pub fn bs_instance(rng: &mut SuiteRng) -> (MultiPoly, MultiPoly, u32, Vec<crate::exactpoly::UniPoly>) {
    use rand::Rng;
    let n = rng.gen_range(1..=2usize);
    let d = rng.gen_range(1..=2u32);
    let m = rng.gen_range(d..=2 * d + 2);
    loop {
        let (f, g) = random::coprime_form_pair(rng, n + 1, d);
        let gs: Vec<_> = (0..=n)
            .map(|_| {
                let k = rng.gen_range(0..=3);
                random::linear_product(rng, k, 2)
            })
            .collect();
        let mut c = gs[0].clone();
        for p in &gs[1..] {
            c = c.gcd(p).expect("nonzero");
        }
        if !c.is_constant() {
            continue;
        }
        let (fg, gg) = (f.eval_uni(&gs).expect("arity"), g.eval_uni(&gs).expect("arity"));
        if fg.is_zero() || gg.is_zero() {
            continue;
        }
        return (f, g, m, gs);
    }
}

/// (BS) at every finite place where a coordinate or a composition vanishes.
pub fn bs_suite(seed: u64, cases: usize, exec: Execution) -> SuiteReport {
    let out = par::map(exec, (0..cases).collect(), |i| {
        let mut rng = case_rng(seed, i as u64);
        let (f, g, m, gs) = bs_instance(&mut rng);
        for pl in bs_places(&f, &g, &gs)? {
            let r = bs_check(&f, &g, m, &gs, &pl)?;
            if !r.check.pass {
                return Ok(Some(format!("F={f} G={g} m={m} place={pl}: {r:?}")));
            }
        }
        Ok(None)
    });
    collect("bs", seed, out)
}

/// Runs a suite by name with its default size.
pub fn run_suite(name: &str, seed: u64, exec: Execution) -> Result<SuiteReport> {
    Ok(match name {
        "basis" => basis_suite(seed, 10, exec),
        "sums" => sums_suite(seed, 10, exec),
        "tm" => tm_suite(seed, 1000, exec),
        "asymptotic" => asymptotic_suite(seed, 100),
        "fmt" => fmt_suite(seed, 100, exec),
        "tgcd" => tgcd_suite(seed, 100, exec),
        "ordw" => ordw_suite(seed, 200, exec),
        "bs" => bs_suite(seed, 50, exec),
        other => {
            return Err(Error::Invalid(format!(
                "unknown suite {other:?}; expected one of {}",
                SUITE_NAMES.join(", ")
            )))
        }
    })
}
