//! Gcd-free bases, places and valuations.
//!
//! Nothing here factors into irreducibles: a coprime basis obtained by gcd
//! refinement plays the role of the set of prime divisors.

use std::fmt;

use super::{RationalFunction, UniPoly};
use crate::error::{Error, Result};

/// A place of `Q(z)`: a squarefree monic polynomial, or the point at infinity.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub enum Place {
    Finite(UniPoly),
    Infinity,
}

impl Place {
    /// Validates and normalises a finite place.
    pub fn finite(p: UniPoly) -> Result<Place> {
        if p.is_constant() {
            return Err(Error::InvalidPlace(p.to_string()));
        }
        let p = p.monic();
        if !p.is_squarefree() {
            return Err(Error::NotSquarefree(p.to_string()));
        }
        Ok(Place::Finite(p))
    }

    /// Degree of the place; infinity has degree 1.
    pub fn degree(&self) -> usize {
        match self {
            Place::Finite(p) => p.degree_or_zero(),
            Place::Infinity => 1,
        }
    }
}

impl fmt::Display for Place {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Place::Finite(p) => write!(f, "{p}"),
            Place::Infinity => write!(f, "inf"),
        }
    }
}

/// Multiplicity of the squarefree `p` in the nonzero `a`. Errors when `p`
/// shares a factor with the cofactor, i.e. when only part of `p` divides.
fn multiplicity_at(a: &UniPoly, p: &UniPoly) -> Result<i64> {
    let (k, rest) = a.multiplicity(p)?;
    if !rest.gcd(p)?.is_one() {
        return Err(Error::PlaceSplits {
            place: p.to_string(),
            poly: a.to_string(),
        });
    }
    Ok(i64::from(k))
}

/// Order of `f` at `pl`: multiplicity in the numerator minus multiplicity in
/// the denominator; at infinity `deg den - deg num`.
pub fn valuation(f: &RationalFunction, pl: &Place) -> Result<i64> {
    if f.is_zero() {
        return Err(Error::ZeroInput("valuation of the zero function"));
    }
    match pl {
        Place::Infinity => Ok(f.den().degree_or_zero() as i64 - f.num().degree_or_zero() as i64),
        Place::Finite(p) => {
            if p.is_constant() {
                return Err(Error::InvalidPlace(p.to_string()));
            }
            if !p.is_squarefree() {
                return Err(Error::NotSquarefree(p.to_string()));
            }
            Ok(multiplicity_at(f.num(), p)? - multiplicity_at(f.den(), p)?)
        }
    }
}

/// Pairwise coprime, monic, nonconstant, squarefree polynomials such that
/// every input is a constant times a product of powers of them.
///
/// Each input contributes its chain `p, gcd(p, p'), …`; refinement replaces
/// any pair `(a, b)` with nonconstant `g = gcd(a, b)` by `a/g, b/g, g` until
/// the set is pairwise coprime. The chain forces every basis element to be
/// squarefree. Output is sorted by degree, then coefficient sequence.
pub fn coprime_basis(ps: &[UniPoly]) -> Result<Vec<UniPoly>> {
    let mut set: Vec<UniPoly> = Vec::new();
    for p in ps {
        if p.is_zero() {
            return Err(Error::ZeroInput("coprime basis element"));
        }
        let mut cur = p.monic();
        while !cur.is_constant() {
            let next = cur.gcd(&cur.derivative())?;
            push_unique(&mut set, cur);
            cur = next;
        }
    }
    'outer: loop {
        for i in 0..set.len() {
            for j in (i + 1)..set.len() {
                let g = set[i].gcd(&set[j])?;
                if g.is_one() {
                    continue;
                }
                let a = set[i].div_exact(&g).expect("gcd divides");
                let b = set[j].div_exact(&g).expect("gcd divides");
                set.remove(j);
                set.remove(i);
                for q in [a, b, g] {
                    if !q.is_constant() {
                        push_unique(&mut set, q.monic());
                    }
                }
                continue 'outer;
            }
        }
        break;
    }
    set.sort_by(UniPoly::canonical_cmp);
    Ok(set)
}

fn push_unique(set: &mut Vec<UniPoly>, p: UniPoly) {
    if !set.contains(&p) {
        set.push(p);
    }
}
