//! Sweeps of `deg gcd(F(g^k), G(g^k))` and of the `T_gcd` slope over `k`.

use num_bigint::BigInt;
use num_traits::Zero;
use serde::Serialize;

use super::{char_slope, mult_independent, ngcd_slope, tgcd_slope};
use crate::error::{Error, Result};
use crate::exactpoly::{coprime_multivariate, mp_gcd, substitute, MultiPoly, Rational, RationalFunction};
use crate::par::{self, Execution};
use crate::report;

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Track {
    /// Common zeros of the compositions.
    #[default]
    N,
    /// The gcd characteristic `T_gcd`; needs polynomial arguments.
    T,
}

#[derive(Clone, Debug)]
pub struct SweepConfig {
    /// `F` in `x1..xn` (slot `x0` unused).
    pub f: MultiPoly,
    pub g: MultiPoly,
    pub gs: Vec<RationalFunction>,
    pub k_min: u32,
    pub k_max: u32,
    pub k_step: u32,
    /// Report threshold only.
    pub epsilon: Rational,
    pub exec: Execution,
}

impl SweepConfig {
    pub fn new(f: MultiPoly, g: MultiPoly, gs: Vec<RationalFunction>, k_min: u32, k_max: u32) -> Self {
        SweepConfig {
            f,
            g,
            gs,
            k_min,
            k_max,
            k_step: 1,
            epsilon: Rational::new(1.into(), 10.into()),
            exec: Execution::default(),
        }
    }

    pub fn ks(&self) -> Vec<u32> {
        (self.k_min..=self.k_max).step_by(self.k_step.max(1) as usize).collect()
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SweepRow {
    pub k: u32,
    pub gcd_degree: u64,
    pub scale: u64,
    #[serde(serialize_with = "report::rational")]
    pub ratio: Rational,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SweepReport {
    pub track: Track,
    #[serde(rename = "F", serialize_with = "report::display")]
    pub f: MultiPoly,
    #[serde(rename = "G", serialize_with = "report::display")]
    pub g: MultiPoly,
    #[serde(serialize_with = "report::displays")]
    pub gs: Vec<RationalFunction>,
    #[serde(serialize_with = "report::rational")]
    pub epsilon: Rational,
    /// Rank of the certified independence check.
    pub rank: usize,
    pub rows: Vec<SweepRow>,
    /// Least sampled `k` with `ratio < epsilon`.
    pub first_below: Option<u32>,
    /// Least sampled `k` from which every later sampled ratio is below `epsilon`.
    pub stable_from: Option<u32>,
    /// Every sampled `k >= first_below` stays below `epsilon`.
    pub all_later_below: bool,
}

impl SweepReport {
    pub fn row(&self, k: u32) -> Option<&SweepRow> {
        self.rows.iter().find(|r| r.k == k)
    }
}

fn validate(cfg: &SweepConfig, track: Track) -> Result<usize> {
    if cfg.k_min == 0 || cfg.k_min > cfg.k_max {
        return Err(Error::Invalid(format!("bad k range {}..={}", cfg.k_min, cfg.k_max)));
    }
    let n = cfg.gs.len();
    for (h, name) in [(&cfg.f, "F"), (&cfg.g, "G")] {
        if h.nvars() != n + 1 {
            return Err(Error::ArityMismatch(h.nvars(), n + 1));
        }
        if h.uses_var(0) {
            return Err(Error::Invalid(format!("{name} = {h} involves x0; use x1..xn")));
        }
        if h.is_zero() {
            return Err(Error::ZeroInput(name));
        }
        if h.is_constant() {
            return Err(Error::ConstantInput(name));
        }
    }
    if !coprime_multivariate(&cfg.f, &cfg.g)? {
        return Err(Error::NotCoprime(mp_gcd(&cfg.f, &cfg.g)?.to_string()));
    }
    if track == Track::T {
        if let Some(g) = cfg.gs.iter().find(|g| !g.is_polynomial()) {
            return Err(Error::NotPolynomial(g.to_string()));
        }
        if cfg.f.constant_term().is_zero() && cfg.g.constant_term().is_zero() {
            return Err(Error::BothVanishAtOrigin);
        }
    }
    let cert = mult_independent(&cfg.gs)?;
    if let Some(w) = cert.witness {
        return Err(Error::Dependent { witness: w });
    }
    Ok(cert.rank)
}

fn sweep(cfg: &SweepConfig, track: Track) -> Result<SweepReport> {
    let rank = validate(cfg, track)?;
    let max_t = cfg.gs.iter().map(char_slope).max().unwrap_or(0);
    let rows = par::map(cfg.exec, cfg.ks(), |k| -> Result<SweepRow> {
        let fk = substitute(&cfg.f, &cfg.gs, k)?;
        let gk = substitute(&cfg.g, &cfg.gs, k)?;
        if fk.is_zero() || gk.is_zero() {
            return Err(Error::Invalid(format!("a composition vanishes identically at k = {k}")));
        }
        let gcd_degree = match track {
            Track::N => ngcd_slope(&fk, &gk)?,
            Track::T => tgcd_slope(&fk, &gk)?,
        };
        let scale = u64::from(k) * max_t;
        let ratio = Rational::new(BigInt::from(gcd_degree), BigInt::from(scale.max(1)));
        Ok(SweepRow {
            k,
            gcd_degree,
            scale,
            ratio,
        })
    })
    .into_iter()
    .collect::<Result<Vec<_>>>()?;
    let below: Vec<bool> = rows.iter().map(|r| r.ratio < cfg.epsilon).collect();
    let first_below = rows.iter().zip(&below).find(|(_, b)| **b).map(|(r, _)| r.k);
    let tail = below.iter().rev().take_while(|b| **b).count();
    let stable_from = (tail > 0).then(|| rows[rows.len() - tail].k);
    Ok(SweepReport {
        track,
        f: cfg.f.clone(),
        g: cfg.g.clone(),
        gs: cfg.gs.clone(),
        epsilon: cfg.epsilon.clone(),
        rank,
        all_later_below: first_below.is_some() && first_below == stable_from,
        first_below,
        stable_from,
        rows,
    })
}

/// `deg gcd(F(g^k), G(g^k))` against `k·max T(g_i)`. Refuses dependent
/// arguments with a witness.
pub fn gcd_sweep(cfg: &SweepConfig) -> Result<SweepReport> {
    sweep(cfg, Track::N)
}

/// The `T_gcd` slope of the compositions; arguments must be polynomials and
/// `F`, `G` must not both vanish at the origin.
pub fn tgcd_sweep(cfg: &SweepConfig) -> Result<SweepReport> {
    sweep(cfg, Track::T)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactpoly::{parse_multi, parse_rf};

    fn cfg(f: &str, g: &str, gs: &[&str], k_min: u32, k_max: u32) -> SweepConfig {
        let n = gs.len() + 1;
        SweepConfig::new(
            parse_multi(f, Some(n)).unwrap(),
            parse_multi(g, Some(n)).unwrap(),
            gs.iter().map(|s| parse_rf(s).unwrap()).collect(),
            k_min,
            k_max,
        )
    }

    #[test]
    fn shifted_power_sweep() {
        let r = gcd_sweep(&cfg("x1-1", "x2-1", &["z", "z+1"], 1, 11)).unwrap();
        let six = r.row(6).unwrap();
        assert_eq!((six.gcd_degree, six.scale), (2, 6));
        assert_eq!(six.ratio, Rational::new(1.into(), 3.into()));
        assert_eq!(r.row(5).unwrap().gcd_degree, 0);
        assert_eq!(r.first_below, Some(1));
        assert_eq!(r.stable_from, Some(7));
        assert!(!r.all_later_below);
    }

    #[test]
    fn tgcd_track() {
        let c = cfg("x1-1", "x2-1", &["z", "z+1"], 6, 7);
        let r = tgcd_sweep(&c).unwrap();
        assert_eq!(r.row(6).unwrap().gcd_degree, 2);
        assert_eq!(r.row(7).unwrap().gcd_degree, 0);
        assert_eq!(tgcd_sweep(&cfg("x1", "x2", &["z", "z+1"], 1, 2)), Err(Error::BothVanishAtOrigin));
        assert!(matches!(
            tgcd_sweep(&cfg("x1-1", "x2-1", &["1/z", "z+1"], 1, 2)),
            Err(Error::NotPolynomial(_))
        ));
    }

    #[test]
    fn dependent_arguments_refused() {
        let e = gcd_sweep(&cfg("x1-1", "x2-1", &["z^2", "z^3"], 1, 3)).unwrap_err();
        assert_eq!(
            e,
            Error::Dependent {
                witness: vec![BigInt::from(3), BigInt::from(-2)]
            }
        );
    }

    #[test]
    fn sequential_matches_parallel() {
        let mut c = cfg("x1*x2-1", "x3-1", &["z", "z+1", "z+2"], 1, 10);
        let a = gcd_sweep(&c).unwrap();
        c.exec = Execution::Sequential;
        assert_eq!(a, gcd_sweep(&c).unwrap());
    }
}
