//! Multivariate gcd by recursive content / primitive-part reduction.
//!
//! A polynomial is viewed as univariate in its first occurring variable with
//! coefficients in the remaining ones; contents recurse, and the primitive
//! parts go through a primitive pseudo-remainder sequence.

use super::MultiPoly;
use crate::error::{Error, Result};

/// Coefficients of `p` as a polynomial in `x_var`, indexed by power.
fn coefficients_in(p: &MultiPoly, var: usize) -> Vec<MultiPoly> {
    let n = p.nvars();
    let mut out = vec![MultiPoly::zero(n); p.degree_in(var) as usize + 1];
    for (e, c) in p.terms() {
        let k = e.0[var] as usize;
        let mut e = e.clone();
        e.0[var] = 0;
        out[k] = &out[k] + &MultiPoly::monomial(e, c.clone());
    }
    out
}

fn leading_in(p: &MultiPoly, var: usize) -> MultiPoly {
    coefficients_in(p, var).pop().unwrap_or_else(|| MultiPoly::zero(p.nvars()))
}

fn x_pow(n: usize, var: usize, k: u32) -> MultiPoly {
    let mut e = super::ExponentVector::zero(n);
    e.0[var] = k;
    MultiPoly::monomial(e, num_traits::One::one())
}

/// Content with respect to `x_var`: gcd of the coefficients.
fn content_in(p: &MultiPoly, var: usize) -> MultiPoly {
    let mut acc = MultiPoly::zero(p.nvars());
    for c in coefficients_in(p, var) {
        if c.is_zero() {
            continue;
        }
        acc = gcd_inner(&acc, &c);
        if acc.is_constant() && !acc.is_zero() {
            break;
        }
    }
    acc
}

fn primitive_in(p: &MultiPoly, var: usize) -> MultiPoly {
    let c = content_in(p, var);
    if c.is_constant() {
        return p.clone();
    }
    p.div_exact(&c).expect("content divides")
}

/// Lazy pseudo-remainder of `a` by `b` in `x_var`.
fn prem_in(a: &MultiPoly, b: &MultiPoly, var: usize) -> MultiPoly {
    let db = b.degree_in(var);
    let lb = leading_in(b, var);
    let mut r = a.clone();
    while !r.is_zero() && r.uses_var(var) && r.degree_in(var) >= db {
        let dr = r.degree_in(var);
        let lr = leading_in(&r, var);
        let shifted = &(&lr * &x_pow(r.nvars(), var, dr - db)) * b;
        r = &(&lb * &r) - &shifted;
    }
    r
}

fn normalize(p: MultiPoly) -> MultiPoly {
    if p.is_zero() {
        p
    } else {
        p.monic_lex()
    }
}

fn gcd_inner(a: &MultiPoly, b: &MultiPoly) -> MultiPoly {
    if a.is_zero() {
        return normalize(b.clone());
    }
    if b.is_zero() {
        return normalize(a.clone());
    }
    if a.is_constant() || b.is_constant() {
        return MultiPoly::one(a.nvars());
    }
    let var = (0..a.nvars()).find(|&v| a.uses_var(v) || b.uses_var(v)).expect("nonconstant");
    if !a.uses_var(var) {
        return gcd_inner(a, &content_in(b, var));
    }
    if !b.uses_var(var) {
        return gcd_inner(&content_in(a, var), b);
    }
    let ca = content_in(a, var);
    let cb = content_in(b, var);
    let content = gcd_inner(&ca, &cb);
    let mut p = primitive_in(a, var);
    let mut q = primitive_in(b, var);
    if p.degree_in(var) < q.degree_in(var) {
        std::mem::swap(&mut p, &mut q);
    }
    while !q.is_zero() && q.uses_var(var) {
        let r = prem_in(&p, &q, var);
        p = q;
        q = if r.is_zero() { r } else { primitive_in(&r, var) };
    }
    // q nonzero and free of var means the primitive parts are coprime in var
    let g = if q.is_zero() {
        primitive_in(&p, var)
    } else {
        MultiPoly::one(a.nvars())
    };
    normalize(&content * &g)
}

/// Gcd in `Q[x0..xn]`, normalised to lex-leading coefficient 1.
pub fn mp_gcd(a: &MultiPoly, b: &MultiPoly) -> Result<MultiPoly> {
    if a.nvars() != b.nvars() {
        return Err(Error::ArityMismatch(a.nvars(), b.nvars()));
    }
    if a.is_zero() && b.is_zero() {
        return Err(Error::ZeroInput("gcd of two zero polynomials"));
    }
    Ok(gcd_inner(a, b))
}

/// True iff `gcd(F, G)` is a constant.
pub fn coprime_multivariate(f: &MultiPoly, g: &MultiPoly) -> Result<bool> {
    if f.is_zero() || g.is_zero() {
        return Err(Error::ZeroInput("coprimality test"));
    }
    Ok(mp_gcd(f, g)?.is_constant())
}
