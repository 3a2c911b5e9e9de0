//! Wronskians of rational functions and the two local vanishing-order
//! inequalities built on them.

use num_bigint::BigInt;
use num_traits::ToPrimitive;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::exactpoly::{coprime_basis, valuation, MultiPoly, Place, RationalFunction, UniPoly};
use crate::idealslice::{binom, build_basis_slice, check_form_pair, slice_constants};
use crate::linalg::{det_bareiss, det_cofactor};
use crate::ordering::MonomialOrder;
use crate::report;

/// `det(f_i^{(j)})`, rows indexed by the derivative order.
///
/// Denominators are cleared first: with `L` the lcm of the denominators,
/// `W(L·f) = L^M·W(f)`, and `W(L·f)` is a determinant of polynomials.
pub fn wronskian(fs: &[RationalFunction]) -> Result<RationalFunction> {
    if fs.is_empty() {
        return Err(Error::Empty("Wronskian of an empty tuple"));
    }
    let mut l = UniPoly::one();
    for f in fs {
        let g = l.gcd(f.den())?;
        l = &l * &f.den().div_exact(&g).expect("gcd divides");
    }
    let polys: Vec<UniPoly> = fs
        .iter()
        .map(|f| f.num() * &l.div_exact(f.den()).expect("den divides lcm"))
        .collect();
    let w = polynomial_wronskian(polys);
    RationalFunction::new(w, l.pow(fs.len() as u32))
}

fn polynomial_wronskian(ps: Vec<UniPoly>) -> UniPoly {
    let m = ps.len();
    let mut rows = vec![ps];
    for _ in 1..m {
        let next = rows.last().expect("nonempty").iter().map(UniPoly::derivative).collect();
        rows.push(next);
    }
    if m <= 3 {
        det_cofactor(&rows)
    } else {
        det_bareiss(rows)
    }
}

/// The defining determinant evaluated directly over `Q(z)`; a slower
/// cross-check of [`wronskian`].
pub fn wronskian_direct(fs: &[RationalFunction]) -> Result<RationalFunction> {
    if fs.is_empty() {
        return Err(Error::Empty("Wronskian of an empty tuple"));
    }
    let mut rows = vec![fs.to_vec()];
    for _ in 1..fs.len() {
        let next = rows.last().expect("nonempty").iter().map(RationalFunction::derivative).collect();
        rows.push(next);
    }
    Ok(det_bareiss(rows))
}

/// Signed order of `f` at `pl`.
pub fn vanish_order(f: &RationalFunction, pl: &Place) -> Result<i64> {
    valuation(f, pl)
}

fn plus(f: &RationalFunction, pl: &Place) -> Result<i64> {
    Ok(vanish_order(f, pl)?.max(0))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct LocalCheckReport {
    #[serde(serialize_with = "report::display")]
    pub place: Place,
    pub lhs: i64,
    pub rhs: i64,
    /// `lhs <= rhs`.
    pub pass: bool,
    /// The Wronskian vanishes identically, so there is nothing to check.
    pub vacuous: bool,
}

/// `Σ v⁺(η_j) - M(M-1)/2 <= v⁺(W(η))` at one place. Dependent tuples have
/// `W = 0` and are reported as vacuous. The bound is meant for entire
/// functions; at infinity the order of `W` is taken in the parameter `1/z`.
pub fn ordw_check(etas: &[RationalFunction], pl: &Place) -> Result<LocalCheckReport> {
    ordw_check_with(etas, &wronskian(etas)?, pl)
}

/// [`ordw_check`] at several places, computing the Wronskian once.
pub fn ordw_check_all(etas: &[RationalFunction], places: &[Place]) -> Result<Vec<LocalCheckReport>> {
    let w = wronskian(etas)?;
    places.iter().map(|pl| ordw_check_with(etas, &w, pl)).collect()
}

fn ordw_check_with(etas: &[RationalFunction], w: &RationalFunction, pl: &Place) -> Result<LocalCheckReport> {
    let m = etas.len() as i64;
    if w.is_zero() {
        return Ok(LocalCheckReport {
            place: pl.clone(),
            lhs: 0,
            rhs: 0,
            pass: true,
            vacuous: true,
        });
    }
    let mut lhs = -(m * (m - 1) / 2);
    for e in etas {
        lhs += plus(e, pl)?;
    }
    // d/dz is not a derivation in the local parameter w = 1/z at infinity;
    // there W_w = (-1/w^2)^(M(M-1)/2) W_z.
    let shift = if matches!(pl, Place::Infinity) { m * (m - 1) } else { 0 };
    let rhs = (vanish_order(w, pl)? - shift).max(0);
    Ok(LocalCheckReport {
        place: pl.clone(),
        lhs,
        rhs,
        pass: lhs <= rhs,
        vacuous: false,
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BsCheckReport {
    #[serde(flatten)]
    pub check: LocalCheckReport,
    /// `(v(g_0), …, v(g_n))`, the weight vector of the order.
    pub weights: Vec<u64>,
    #[serde(serialize_with = "report::display")]
    pub order: MonomialOrder,
    /// `F` and `G` were exchanged to get `TM(F2) <= TM(F1)`.
    pub swapped: bool,
    /// Trailing monomials coincided; `F2 = G` was kept.
    pub tm_tie: bool,
    #[serde(serialize_with = "report::display")]
    pub h: UniPoly,
    #[serde(serialize_with = "report::bigint")]
    pub c: BigInt,
    pub basis_size: usize,
    pub eta_orders: Vec<i64>,
    pub min_support_order: i64,
}

/// Polynomials in the (BS) setting have no common zero.
fn check_no_common_zero(gs: &[UniPoly]) -> Result<()> {
    if let Some(i) = gs.iter().position(UniPoly::is_zero) {
        return Err(Error::Invalid(format!("coordinate g{i} is identically zero")));
    }
    let mut g = gs[0].clone();
    for p in &gs[1..] {
        g = g.gcd(p)?;
    }
    if g.is_constant() {
        Ok(())
    } else {
        Err(Error::CommonZero(g.to_string()))
    }
}

/// `c·Σ v⁺(g_i) - C(m+n-2d, n)·min_{i∈I} v⁺(g^i) <= Σ v⁺(η_j)` at a finite
/// place, where `η_j = β_j(g)/h` runs over the slice basis built for the
/// weight order `u = (v(g_0), …, v(g_n))`, `h = gcd(F(g), G(g))` and `I` is
/// the joint support of `F` and `G`.
pub fn bs_check(f: &MultiPoly, g: &MultiPoly, m: u32, gs: &[UniPoly], pl: &Place) -> Result<BsCheckReport> {
    let d = check_form_pair(f, g)?;
    if gs.len() != f.nvars() {
        return Err(Error::ArityMismatch(f.nvars(), gs.len()));
    }
    if m < d {
        return Err(Error::Invalid(format!("slice degree m = {m} is below d = {d}")));
    }
    if *pl == Place::Infinity {
        return Err(Error::InvalidPlace("inf".into()));
    }
    check_no_common_zero(gs)?;
    let n = gs.len() as i64 - 1;
    let gfs: Vec<RationalFunction> = gs.iter().cloned().map(RationalFunction::from_poly).collect();
    let u: Vec<u64> = gfs.iter().map(|x| vanish_order(x, pl).map(|v| v as u64)).collect::<Result<_>>()?;
    let ord = MonomialOrder::weight(u.iter().copied());
    let slice = build_basis_slice(f, g, m, &ord)?;
    let fg = f.eval_uni(gs)?;
    let gg = g.eval_uni(gs)?;
    if fg.is_zero() || gg.is_zero() {
        return Err(Error::Invalid("F(g) or G(g) vanishes identically".into()));
    }
    let h = fg.gcd(&gg)?;
    let mut eta_orders = Vec::with_capacity(slice.basis.len());
    for beta in &slice.basis {
        let num = beta.eval_uni(gs)?;
        let eta = RationalFunction::new(num, h.clone())?;
        if eta.is_zero() {
            return Err(Error::Invalid(format!("basis element {beta} vanishes at g")));
        }
        eta_orders.push(vanish_order(&eta, pl)?);
    }
    let rhs: i64 = eta_orders.iter().map(|v| v.max(&0)).sum();
    let consts = slice_constants(m.into(), n, d.into())?;
    let sum_u: i64 = u.iter().map(|&v| v as i64).sum();
    let min_support_order = f
        .terms()
        .chain(g.terms())
        .map(|(e, _)| ord.weight_of(e).to_i64().unwrap_or(i64::MAX))
        .min()
        .expect("nonzero forms");
    let lhs = &consts.c * sum_u - binom(i64::from(m) + n - 2 * i64::from(d), n) * min_support_order;
    let lhs = lhs.to_i64().ok_or_else(|| Error::Invalid("left-hand side out of range".into()))?;
    Ok(BsCheckReport {
        check: LocalCheckReport {
            place: pl.clone(),
            lhs,
            rhs,
            pass: lhs <= rhs,
            vacuous: false,
        },
        weights: u,
        order: ord,
        swapped: slice.swapped,
        tm_tie: slice.tm_tie,
        h,
        c: consts.c,
        basis_size: slice.basis.len(),
        eta_orders,
        min_support_order,
    })
}

/// Every finite place where some `g_i`, `F(g)` or `G(g)` vanishes, as a
/// gcd-free basis.
pub fn bs_places(f: &MultiPoly, g: &MultiPoly, gs: &[UniPoly]) -> Result<Vec<Place>> {
    let mut polys: Vec<UniPoly> = gs.iter().filter(|p| !p.is_zero()).cloned().collect();
    for x in [f.eval_uni(gs)?, g.eval_uni(gs)?] {
        if !x.is_zero() {
            polys.push(x);
        }
    }
    Ok(coprime_basis(&polys)?.into_iter().map(Place::Finite).collect())
}

/// Every place of a gcd-free basis of all numerators and denominators,
/// infinity included.
pub fn tuple_places(fs: &[RationalFunction]) -> Result<Vec<Place>> {
    crate::nevandeg::joint_places(fs)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactpoly::{parse_multi, parse_rf, parse_uni, Rational};

    fn rf(s: &str) -> RationalFunction {
        parse_rf(s).unwrap()
    }

    fn place(s: &str) -> Place {
        Place::finite(parse_uni(s).unwrap()).unwrap()
    }

    #[test]
    fn wronskian_examples() {
        assert_eq!(wronskian(&[rf("1"), rf("z"), rf("z^2")]).unwrap(), rf("2"));
        assert!(wronskian(&[rf("z/(z+1)"), rf("z/(z+1)")]).unwrap().is_zero());
        let mut fact = 1i64;
        for m in 1..=5usize {
            let fs: Vec<RationalFunction> = (0..m).map(|j| rf(&format!("z^{j}"))).collect();
            if m > 1 {
                fact *= (1..m as i64).product::<i64>();
            }
            let expect = RationalFunction::constant(Rational::from_integer(fact.into()));
            assert_eq!(wronskian(&fs).unwrap(), expect, "M = {m}");
        }
        assert!(wronskian(&[]).is_err());
    }

    #[test]
    fn cleared_denominators_agree_with_direct_determinant() {
        let fs = [rf("1/(z-1)"), rf("z^2/(z+2)"), rf("(z^3-z)/(z^2+1)"), rf("z"), rf("1/z^2")];
        for m in 1..=fs.len() {
            assert_eq!(wronskian(&fs[..m]).unwrap(), wronskian_direct(&fs[..m]).unwrap(), "M = {m}");
        }
    }

    #[test]
    fn vanish_order_examples() {
        assert_eq!(vanish_order(&rf("z^3"), &place("z")).unwrap(), 3);
        assert_eq!(vanish_order(&rf("1/(z-1)"), &place("z-1")).unwrap(), -1);
        assert_eq!(vanish_order(&rf("(z^2+z+1)^2"), &place("z^2+z+1")).unwrap(), 2);
    }

    #[test]
    fn ordw_examples() {
        let r = ordw_check(&[rf("1"), rf("z"), rf("z^2")], &place("z")).unwrap();
        assert_eq!((r.lhs, r.rhs, r.pass), (0, 0, true));
        let r = ordw_check(&[rf("z^2"), rf("z^3")], &place("z")).unwrap();
        assert_eq!((r.lhs, r.rhs, r.pass), (4, 4, true));
        let r = ordw_check(&[rf("1"), rf("z")], &place("z-5")).unwrap();
        assert_eq!((r.lhs, r.rhs, r.pass), (-1, 0, true));
        // W(1, z) = 1 has order 0 in z but order -2 in 1/z
        let r = ordw_check(&[rf("1"), rf("z")], &Place::Infinity).unwrap();
        assert_eq!((r.lhs, r.rhs), (-1, 0));
        // (z^3, z^-3) has a pole at 0 and breaks the bound
        let r = ordw_check(&[rf("z^3"), rf("1/z^3")], &place("z")).unwrap();
        assert_eq!((r.lhs, r.rhs, r.pass), (2, 0, false));
        let r = ordw_check(&[rf("z"), rf("2*z")], &place("z")).unwrap();
        assert!(r.vacuous);
    }

    #[test]
    fn bs_linear_forms() {
        let f = parse_multi("x0", Some(2)).unwrap();
        let g = parse_multi("x1", Some(2)).unwrap();
        let gs = [parse_uni("z").unwrap(), parse_uni("z+1").unwrap()];
        let r = bs_check(&f, &g, 2, &gs, &place("z")).unwrap();
        assert_eq!(r.weights, vec![1, 0]);
        assert_eq!(r.basis_size, 3);
        // c = 2·C(2,2) - C(1,2) = 2; lhs = 2·1 - C(1,1)·0 = 2; η = (z^2, z(z+1), (z+1)^2)
        assert_eq!((r.check.lhs, r.check.rhs), (2, 3));
        assert!(r.check.pass);
    }

    #[test]
    fn bs_without_vanishing() {
        let f = parse_multi("x0^2+x1*x2", Some(3)).unwrap();
        let g = parse_multi("x1^2-x0*x2", Some(3)).unwrap();
        let gs = [parse_uni("z+1").unwrap(), parse_uni("z+2").unwrap(), parse_uni("z+3").unwrap()];
        let r = bs_check(&f, &g, 4, &gs, &place("z")).unwrap();
        assert!(r.check.lhs <= 0 && r.check.pass);
    }

    #[test]
    fn bs_quadrics_at_origin() {
        let f = parse_multi("x0^2+x1*x2", Some(3)).unwrap();
        let g = parse_multi("x1^2-x0*x2+x2^2", Some(3)).unwrap();
        let gs = [
            parse_uni("z^2").unwrap(),
            parse_uni("z*(z-1)").unwrap(),
            parse_uni("(z-1)^2").unwrap(),
        ];
        for pl in bs_places(&f, &g, &gs).unwrap() {
            let r = bs_check(&f, &g, 4, &gs, &pl).unwrap();
            assert!(r.check.pass, "{r:?}");
        }
    }

    #[test]
    fn bs_rejects_common_zero() {
        let f = parse_multi("x0", Some(2)).unwrap();
        let g = parse_multi("x1", Some(2)).unwrap();
        let gs = [parse_uni("z").unwrap(), parse_uni("z^2").unwrap()];
        assert!(matches!(bs_check(&f, &g, 2, &gs, &place("z")), Err(Error::CommonZero(_))));
    }
}
