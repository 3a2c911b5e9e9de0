//! Exact linear algebra: fraction-free rank, rational row reduction, kernels
//! and determinants over any ring with exact division.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use crate::exactpoly::{Rational, RationalFunction, UniPoly};

/// A commutative ring with exact division by nonzero divisors of exact
/// multiples: enough for fraction-free elimination.
pub trait ExactRing: Clone {
    fn zero_value() -> Self;
    fn one_value() -> Self;
    fn is_zero_value(&self) -> bool;
    fn add(&self, o: &Self) -> Self;
    fn sub(&self, o: &Self) -> Self;
    fn mul(&self, o: &Self) -> Self;
    /// Exact division; `o` is nonzero and divides `self`.
    fn div(&self, o: &Self) -> Self;
    fn neg(&self) -> Self;
}

impl ExactRing for Rational {
    fn zero_value() -> Self {
        Zero::zero()
    }
    fn one_value() -> Self {
        One::one()
    }
    fn is_zero_value(&self) -> bool {
        Zero::is_zero(self)
    }
    fn add(&self, o: &Self) -> Self {
        self + o
    }
    fn sub(&self, o: &Self) -> Self {
        self - o
    }
    fn mul(&self, o: &Self) -> Self {
        self * o
    }
    fn div(&self, o: &Self) -> Self {
        self / o
    }
    fn neg(&self) -> Self {
        -self
    }
}

impl ExactRing for RationalFunction {
    fn zero_value() -> Self {
        RationalFunction::zero()
    }
    fn one_value() -> Self {
        RationalFunction::one()
    }
    fn is_zero_value(&self) -> bool {
        RationalFunction::is_zero(self)
    }
    fn add(&self, o: &Self) -> Self {
        RationalFunction::add(self, o)
    }
    fn sub(&self, o: &Self) -> Self {
        RationalFunction::sub(self, o)
    }
    fn mul(&self, o: &Self) -> Self {
        RationalFunction::mul(self, o)
    }
    fn div(&self, o: &Self) -> Self {
        RationalFunction::div(self, o).expect("nonzero divisor")
    }
    fn neg(&self) -> Self {
        RationalFunction::neg(self)
    }
}

impl ExactRing for UniPoly {
    fn zero_value() -> Self {
        UniPoly::zero()
    }
    fn one_value() -> Self {
        UniPoly::one()
    }
    fn is_zero_value(&self) -> bool {
        UniPoly::is_zero(self)
    }
    fn add(&self, o: &Self) -> Self {
        self + o
    }
    fn sub(&self, o: &Self) -> Self {
        self - o
    }
    fn mul(&self, o: &Self) -> Self {
        self * o
    }
    fn div(&self, o: &Self) -> Self {
        self.div_exact(o).expect("exact polynomial division")
    }
    fn neg(&self) -> Self {
        -self
    }
}

/// Scales each row by the lcm of its denominators.
fn integer_rows(rows: &[Vec<Rational>]) -> Vec<Vec<BigInt>> {
    rows.iter()
        .map(|row| {
            let l = row.iter().fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
            row.iter().map(|c| c.numer() * (&l / c.denom())).collect()
        })
        .collect()
}

/// Rank by Bareiss fraction-free elimination over the integers. Pivots are
/// taken column by column, first nonzero row first.
pub fn rank_fraction_free(rows: &[Vec<Rational>]) -> usize {
    let mut a = integer_rows(rows);
    let nrows = a.len();
    let ncols = a.first().map_or(0, Vec::len);
    let mut prev = BigInt::one();
    let mut r = 0;
    for c in 0..ncols {
        if r == nrows {
            break;
        }
        let Some(p) = (r..nrows).find(|&i| !a[i][c].is_zero()) else {
            continue;
        };
        a.swap(r, p);
        let (top, rest) = a.split_at_mut(r + 1);
        let pivot_row = &top[r];
        let pivot = pivot_row[c].clone();
        for row in rest.iter_mut() {
            let lead = std::mem::take(&mut row[c]);
            for j in (c + 1)..ncols {
                let v = &pivot * &row[j] - &lead * &pivot_row[j];
                row[j] = if prev.is_one() { v } else { v / &prev };
            }
        }
        prev = pivot;
        r += 1;
    }
    r
}

/// Reduced row echelon form over the rationals, with pivot columns.
pub fn rref(mut a: Vec<Vec<Rational>>) -> (Vec<Vec<Rational>>, Vec<usize>) {
    let nrows = a.len();
    let ncols = a.first().map_or(0, Vec::len);
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..ncols {
        if r == nrows {
            break;
        }
        let Some(p) = (r..nrows).find(|&i| !a[i][c].is_zero()) else {
            continue;
        };
        a.swap(r, p);
        let inv = a[r][c].recip();
        for v in a[r].iter_mut() {
            *v *= &inv;
        }
        let pivot = a[r].clone();
        for (i, row) in a.iter_mut().enumerate() {
            if i == r || row[c].is_zero() {
                continue;
            }
            let f = row[c].clone();
            for (x, p) in row[c..].iter_mut().zip(&pivot[c..]) {
                *x -= &f * p;
            }
        }
        pivots.push(c);
        r += 1;
    }
    (a, pivots)
}

/// Basis of `{v : v^T A = 0}`, one vector per free column of `A^T`.
pub fn left_kernel(a: &[Vec<Rational>]) -> Vec<Vec<Rational>> {
    let nrows = a.len();
    let ncols = a.first().map_or(0, Vec::len);
    let at: Vec<Vec<Rational>> = (0..ncols).map(|j| (0..nrows).map(|i| a[i][j].clone()).collect()).collect();
    // A^T is ncols x nrows; its kernel lives in Q^nrows
    let (red, pivots) = if ncols == 0 { (Vec::new(), Vec::new()) } else { rref(at) };
    (0..nrows)
        .filter(|c| !pivots.contains(c))
        .map(|free| {
            let mut v = vec![Rational::zero(); nrows];
            v[free] = Rational::one();
            for (row, &pc) in pivots.iter().enumerate() {
                v[pc] = -red[row][free].clone();
            }
            v
        })
        .collect()
}

/// Scales a rational vector to a primitive integer vector whose first
/// nonzero entry is positive.
pub fn primitive_integer_vector(v: &[Rational]) -> Vec<BigInt> {
    let l = v.iter().fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
    let ints: Vec<BigInt> = v.iter().map(|c| c.numer() * (&l / c.denom())).collect();
    let g = ints.iter().fold(BigInt::zero(), |acc, c| acc.gcd(c));
    if g.is_zero() {
        return ints;
    }
    let sign = match ints.iter().find(|c| !c.is_zero()) {
        Some(c) if c < &BigInt::zero() => -BigInt::one(),
        _ => BigInt::one(),
    };
    ints.into_iter().map(|c| c / &g * &sign).collect()
}

/// Determinant by Bareiss elimination with row swaps.
pub fn det_bareiss<F: ExactRing>(mut a: Vec<Vec<F>>) -> F {
    let n = a.len();
    if n == 0 {
        return F::one_value();
    }
    let mut prev = F::one_value();
    let mut negate = false;
    for k in 0..n {
        let Some(p) = (k..n).find(|&i| !a[i][k].is_zero_value()) else {
            return F::zero_value();
        };
        if p != k {
            a.swap(k, p);
            negate = !negate;
        }
        for i in (k + 1)..n {
            for j in (k + 1)..n {
                let v = a[k][k].mul(&a[i][j]).sub(&a[i][k].mul(&a[k][j]));
                a[i][j] = v.div(&prev);
            }
        }
        prev = a[k][k].clone();
    }
    let d = a[n - 1][n - 1].clone();
    if negate {
        d.neg()
    } else {
        d
    }
}

/// Determinant by Laplace expansion along the first row.
pub fn det_cofactor<F: ExactRing>(a: &[Vec<F>]) -> F {
    let n = a.len();
    match n {
        0 => F::one_value(),
        1 => a[0][0].clone(),
        2 => a[0][0].mul(&a[1][1]).sub(&a[0][1].mul(&a[1][0])),
        _ => {
            let mut acc = F::zero_value();
            for j in 0..n {
                if a[0][j].is_zero_value() {
                    continue;
                }
                let minor: Vec<Vec<F>> = a[1..]
                    .iter()
                    .map(|row| row.iter().enumerate().filter(|&(c, _)| c != j).map(|(_, v)| v.clone()).collect())
                    .collect();
                let t = a[0][j].mul(&det_cofactor(&minor));
                acc = if j % 2 == 0 { acc.add(&t) } else { acc.sub(&t) };
            }
            acc
        }
    }
}
