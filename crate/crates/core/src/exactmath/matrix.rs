//! Exact determinants by fraction-free elimination.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Zero};

use super::qpoly::QPolynomial;
use crate::error::{Error, Result};

/// Integral domain with exact division, enough for Bareiss elimination.
pub trait BareissRing: Clone {
    fn ring_zero() -> Self;
    fn ring_one() -> Self;
    fn ring_is_zero(&self) -> bool;
    fn ring_mul(&self, other: &Self) -> Self;
    fn ring_sub(&self, other: &Self) -> Self;
    fn ring_neg(&self) -> Self;
    /// Divide, knowing the division is exact.
    fn ring_div(&self, other: &Self) -> Self;
}

impl BareissRing for BigInt {
    fn ring_zero() -> Self {
        Zero::zero()
    }
    fn ring_one() -> Self {
        One::one()
    }
    fn ring_is_zero(&self) -> bool {
        Zero::is_zero(self)
    }
    fn ring_mul(&self, other: &Self) -> Self {
        self * other
    }
    fn ring_sub(&self, other: &Self) -> Self {
        self - other
    }
    fn ring_neg(&self) -> Self {
        -self
    }
    fn ring_div(&self, other: &Self) -> Self {
        debug_assert!(Zero::is_zero(&(self % other)));
        self / other
    }
}

impl BareissRing for QPolynomial {
    fn ring_zero() -> Self {
        QPolynomial::zero()
    }
    fn ring_one() -> Self {
        QPolynomial::one()
    }
    fn ring_is_zero(&self) -> bool {
        QPolynomial::is_zero(self)
    }
    fn ring_mul(&self, other: &Self) -> Self {
        self * other
    }
    fn ring_sub(&self, other: &Self) -> Self {
        self - other
    }
    fn ring_neg(&self) -> Self {
        -self
    }
    fn ring_div(&self, other: &Self) -> Self {
        QPolynomial::div_exact(self, other).expect("Bareiss division must be exact")
    }
}

/// Determinant of a square matrix over an integral domain, consuming it.
pub fn bareiss_det<T: BareissRing>(mut m: Vec<Vec<T>>) -> T {
    let n = m.len();
    if n == 0 {
        return T::ring_one();
    }
    let mut sign_flip = false;
    let mut prev = T::ring_one();
    for k in 0..n {
        if m[k][k].ring_is_zero() {
            match (k + 1..n).find(|&r| !m[r][k].ring_is_zero()) {
                None => return T::ring_zero(),
                Some(r) => {
                    m.swap(k, r);
                    sign_flip = !sign_flip;
                }
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let v = m[i][j].ring_mul(&m[k][k]).ring_sub(&m[i][k].ring_mul(&m[k][j]));
                m[i][j] = v.ring_div(&prev);
            }
            m[i][k] = T::ring_zero();
        }
        prev = m[k][k].clone();
    }
    let d = m[n - 1][n - 1].clone();
    if sign_flip {
        d.ring_neg()
    } else {
        d
    }
}

/// Dense rectangular matrix of rationals, row-major.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RationalMatrix {
    rows: usize,
    cols: usize,
    entries: Vec<BigRational>,
}

impl RationalMatrix {
    pub fn new(rows: usize, cols: usize, entries: Vec<BigRational>) -> Result<Self> {
        if entries.len() != rows * cols {
            return Err(Error::Shape(format!(
                "{} entries for a {rows}x{cols} matrix",
                entries.len()
            )));
        }
        Ok(RationalMatrix { rows, cols, entries })
    }

    pub fn from_rows(rows: Vec<Vec<BigRational>>) -> Result<Self> {
        let r = rows.len();
        let c = rows.first().map_or(0, |x| x.len());
        if rows.iter().any(|x| x.len() != c) {
            return Err(Error::Shape("ragged rows".into()));
        }
        Self::new(r, c, rows.into_iter().flatten().collect())
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> BigRational) -> Self {
        let mut entries = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                entries.push(f(i, j));
            }
        }
        RationalMatrix { rows, cols, entries }
    }

    pub fn identity(n: usize) -> Self {
        Self::from_fn(n, n, |i, j| if i == j { BigRational::one() } else { BigRational::zero() })
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &BigRational {
        &self.entries[i * self.cols + j]
    }

    pub fn row(&self, i: usize) -> &[BigRational] {
        &self.entries[i * self.cols..(i + 1) * self.cols]
    }

    /// Exact determinant. Each row is scaled by the lcm of its denominators,
    /// the integer matrix goes through Bareiss, and the scale is divided out.
    pub fn det_exact(&self) -> Result<BigRational> {
        if self.rows != self.cols {
            return Err(Error::Shape(format!(
                "determinant of a non-square {}x{} matrix",
                self.rows, self.cols
            )));
        }
        let mut scale = BigInt::one();
        let mut int_rows = Vec::with_capacity(self.rows);
        for i in 0..self.rows {
            let row = self.row(i);
            let l = row.iter().fold(BigInt::one(), |acc, x| acc.lcm(x.denom()));
            int_rows.push(row.iter().map(|x| x.numer() * (&l / x.denom())).collect::<Vec<_>>());
            scale *= l;
        }
        Ok(BigRational::new(bareiss_det(int_rows), scale))
    }
}

/// `∏_{i<j} (x_i - x_j)`.
pub fn vandermonde(x: &[BigRational]) -> BigRational {
    let mut acc = BigRational::one();
    for i in 0..x.len() {
        for j in i + 1..x.len() {
            acc *= &x[i] - &x[j];
        }
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;

    fn r(n: i64) -> BigRational {
        BigRational::from_integer(n.into())
    }

    #[test]
    fn small_dets() {
        assert_eq!(RationalMatrix::identity(2).det_exact().unwrap(), r(1));
        let m = RationalMatrix::from_rows(vec![vec![r(1), r(2)], vec![r(3), r(4)]]).unwrap();
        assert_eq!(m.det_exact().unwrap(), r(-2));
        assert_eq!(RationalMatrix::identity(0).det_exact().unwrap(), r(1));
        assert_eq!(vandermonde(&[r(1), r(2), r(3)]), r(-2));
        let bad = RationalMatrix::new(1, 2, vec![r(1), r(2)]).unwrap();
        assert!(bad.det_exact().is_err());
    }
}
