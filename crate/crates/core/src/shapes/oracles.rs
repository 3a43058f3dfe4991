//! Brute-force and classical counts used as independent references.

use std::collections::HashMap;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use super::partition::{Partition, SkewShape};
use crate::error::{Error, Result};
use crate::exactmath::{factorial, QPolynomial, QSeries, RationalMatrix};

/// Largest shape the memoized filling oracle accepts by default.
pub const BACKTRACK_LIMIT: usize = 20;

/// Largest series order the SSYT oracle accepts.
pub const SSYT_ORDER_LIMIT: usize = 40;

/// `f^λ = n! / ∏ h(u)`.
pub fn hlf_count(lambda: &Partition) -> BigInt {
    let hooks = lambda.cells().into_iter().fold(BigInt::one(), |acc, c| acc * lambda.hook(c).unwrap());
    factorial(lambda.size() as u64) / hooks
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SytMethod {
    /// Fill cells one at a time, memoizing on the filled subshape.
    Backtrack,
    /// `n! det[1/(λ_i - μ_j - i + j)!]`.
    Determinant,
}

/// `f^{λ/μ}` by one of two independent methods.
pub fn syt_count_oracle(shape: &SkewShape, method: SytMethod) -> Result<BigInt> {
    match method {
        SytMethod::Backtrack => {
            if shape.size() > BACKTRACK_LIMIT {
                return Err(Error::Resource(format!(
                    "{} cells exceeds the filling limit {BACKTRACK_LIMIT}",
                    shape.size()
                )));
            }
            Ok(syt_fill_count(shape))
        }
        SytMethod::Determinant => Ok(syt_aitken(shape)),
    }
}

/// Memoized count of standard fillings, without a size cap.
pub fn syt_fill_count(shape: &SkewShape) -> BigInt {
    let lambda = shape.outer().parts().to_vec();
    let l = lambda.len();
    let mut start: Vec<usize> = (1..=l).map(|i| shape.inner().part(i)).collect();
    start.truncate(l);
    let mut memo: HashMap<Vec<usize>, BigInt> = HashMap::new();
    fn go(nu: &mut Vec<usize>, lambda: &[usize], memo: &mut HashMap<Vec<usize>, BigInt>) -> BigInt {
        if nu.as_slice() == lambda {
            return BigInt::one();
        }
        if let Some(v) = memo.get(nu.as_slice()) {
            return v.clone();
        }
        let mut total = BigInt::zero();
        for i in 0..nu.len() {
            if nu[i] < lambda[i] && (i == 0 || nu[i - 1] > nu[i]) {
                nu[i] += 1;
                total += go(nu, lambda, memo);
                nu[i] -= 1;
            }
        }
        memo.insert(nu.clone(), total.clone());
        total
    }
    go(&mut start, &lambda, &mut memo)
}

fn syt_aitken(shape: &SkewShape) -> BigInt {
    let l = shape.outer().len();
    if l == 0 {
        return BigInt::one();
    }
    let lam = |i: usize| shape.outer().part(i) as i64;
    let mu = |j: usize| shape.inner().part(j) as i64;
    let m = RationalMatrix::from_fn(l, l, |i, j| {
        let k = lam(i + 1) - mu(j + 1) - (i as i64 + 1) + (j as i64 + 1);
        if k < 0 {
            BigRational::zero()
        } else {
            BigRational::new(BigInt::one(), factorial(k as u64))
        }
    });
    let v = m.det_exact().expect("square") * BigRational::from_integer(factorial(shape.size() as u64));
    assert!(v.is_integer(), "Aitken determinant must be integral");
    v.to_integer()
}

/// `s_{λ/μ}(1, q, q^2, ...)` through `q^order`, by summing over SSYT
/// built one horizontal strip (one entry value) at a time.
pub fn ssyt_series_oracle(shape: &SkewShape, order: usize) -> Result<QSeries> {
    if order > SSYT_ORDER_LIMIT {
        return Err(Error::Resource(format!("order {order} exceeds {SSYT_ORDER_LIMIT}")));
    }
    let lambda: Vec<usize> = shape.outer().parts().to_vec();
    let start: Vec<usize> = (1..=lambda.len()).map(|i| shape.inner().part(i)).collect();
    let mut memo: HashMap<(Vec<usize>, usize), Vec<BigInt>> = HashMap::new();
    let coeffs = strip_sum(&start, 1, &lambda, order, &mut memo);
    Ok(QSeries::from_coeffs(order, coeffs))
}

/// Sum over fillings of `λ/ν` with entries `>= v`, each entry `u` weighing `q^{u-1}`.
fn strip_sum(
    nu: &[usize],
    v: usize,
    lambda: &[usize],
    order: usize,
    memo: &mut HashMap<(Vec<usize>, usize), Vec<BigInt>>,
) -> Vec<BigInt> {
    let mut out = vec![BigInt::zero(); order + 1];
    if nu == lambda {
        out[0] = BigInt::one();
        return out;
    }
    if v - 1 > order {
        return out;
    }
    let key = (nu.to_vec(), v);
    if let Some(r) = memo.get(&key) {
        return r.clone();
    }
    let mut strips = Vec::new();
    let mut kappa = nu.to_vec();
    enumerate_strips(nu, lambda, 0, &mut kappa, &mut strips);
    for kappa in strips {
        let added: usize = kappa.iter().sum::<usize>() - nu.iter().sum::<usize>();
        let w = (v - 1) * added;
        if w > order {
            continue;
        }
        let sub = strip_sum(&kappa, v + 1, lambda, order, memo);
        for t in 0..=order - w {
            out[t + w] += &sub[t];
        }
    }
    memo.insert(key, out.clone());
    out
}

/// All `κ` with `ν ⊆ κ ⊆ λ` and `κ/ν` a horizontal strip.
fn enumerate_strips(nu: &[usize], lambda: &[usize], i: usize, kappa: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
    if i == nu.len() {
        out.push(kappa.clone());
        return;
    }
    let hi = if i == 0 { lambda[0] } else { lambda[i].min(nu[i - 1]) };
    for x in nu[i]..=hi {
        kappa[i] = x;
        enumerate_strips(nu, lambda, i + 1, kappa, out);
    }
    kappa[i] = nu[i];
}

/// Result of [`box_counts`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum BoxCount {
    Count(BigInt),
    Qgf(QPolynomial),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BoxMode {
    Count,
    Qgf,
}

/// Plane partitions in an `a × b × c` box: the count, or `Σ q^{|π|}`.
pub fn box_counts(a: usize, b: usize, c: usize, mode: BoxMode) -> BoxCount {
    match mode {
        BoxMode::Count => BoxCount::Count(macmahon_count(a, b, c)),
        BoxMode::Qgf => BoxCount::Qgf(macmahon_qgf(a, b, c)),
    }
}

/// `∏_{i,j,k} (i+j+k-1)/(i+j+k-2)`.
pub fn macmahon_count(a: usize, b: usize, c: usize) -> BigInt {
    let mut acc = BigRational::one();
    for i in 1..=a {
        for j in 1..=b {
            for k in 1..=c {
                let s = (i + j + k) as i64;
                acc *= BigRational::new(BigInt::from(s - 1), BigInt::from(s - 2));
            }
        }
    }
    assert!(acc.is_integer());
    acc.to_integer()
}

/// `∏_{i,j,k} (1-q^{i+j+k-1})/(1-q^{i+j+k-2})` as an exact polynomial.
pub fn macmahon_qgf(a: usize, b: usize, c: usize) -> QPolynomial {
    let mut num = Vec::new();
    let mut den = Vec::new();
    for i in 1..=a {
        for j in 1..=b {
            for k in 1..=c {
                num.push(i + j + k - 1);
                den.push(i + j + k - 2);
            }
        }
    }
    QPolynomial::product_one_minus(&num)
        .div_exact(&QPolynomial::product_one_minus(&den))
        .expect("MacMahon product is a polynomial")
}

/// Reverse plane partitions of shape `μ` with entries in `0..=c`.
pub fn rpp_bounded_count(mu: &Partition, c: usize) -> BigInt {
    let mut memo = HashMap::new();
    let above = vec![0; mu.first()];
    rpp_rows(mu.parts(), 0, &above, c, &mut memo)
}

fn rpp_rows(
    mu: &[usize],
    r: usize,
    above: &[usize],
    c: usize,
    memo: &mut HashMap<(usize, Vec<usize>), BigInt>,
) -> BigInt {
    if r == mu.len() {
        return BigInt::one();
    }
    let key = (r, above[..mu[r]].to_vec());
    if let Some(v) = memo.get(&key) {
        return v.clone();
    }
    let mut total = BigInt::zero();
    let mut row = vec![0; mu[r]];
    fn fill(
        mu: &[usize],
        r: usize,
        j: usize,
        row: &mut Vec<usize>,
        above: &[usize],
        c: usize,
        total: &mut BigInt,
        memo: &mut HashMap<(usize, Vec<usize>), BigInt>,
    ) {
        if j == row.len() {
            *total += rpp_rows(mu, r + 1, row, c, memo);
            return;
        }
        let lo = above[j].max(if j > 0 { row[j - 1] } else { 0 });
        for v in lo..=c {
            row[j] = v;
            fill(mu, r, j + 1, row, above, c, total, memo);
        }
    }
    fill(mu, r, 0, &mut row, above, c, &mut total, memo);
    memo.insert(key, total.clone());
    total
}

/// A filling of `base` by nonnegative integers, weakly decreasing along rows
/// and columns, or weakly increasing when `reverse` is set.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct PlanePartition {
    pub base: Partition,
    /// `entries[i][j]` is the entry in cell `(i+1, j+1)`.
    pub entries: Vec<Vec<usize>>,
    pub reverse: bool,
}

impl PlanePartition {
    pub fn volume(&self) -> usize {
        self.entries.iter().flatten().sum()
    }

    pub fn entry(&self, i: usize, j: usize) -> usize {
        self.entries[i - 1][j - 1]
    }

    pub fn is_valid(&self) -> bool {
        let ok = |x: usize, y: usize| if self.reverse { x <= y } else { x >= y };
        for (i, row) in self.entries.iter().enumerate() {
            if row.len() != self.base.part(i + 1) {
                return false;
            }
            for j in 0..row.len() {
                if j > 0 && !ok(row[j - 1], row[j]) {
                    return false;
                }
                if i > 0 && !ok(self.entries[i - 1][j], row[j]) {
                    return false;
                }
            }
        }
        self.entries.len() == self.base.len()
    }

    /// Base inside `a × b` and every entry at most `c`.
    pub fn fits_in_box(&self, a: usize, b: usize, c: usize) -> bool {
        self.base.len() <= a && self.base.first() <= b && self.entries.iter().flatten().all(|&v| v <= c)
    }
}

/// Every ordinary plane partition on `base` with entries at most `c`.
pub fn plane_partitions(base: &Partition, c: usize) -> Vec<PlanePartition> {
    let mut out = Vec::new();
    let mut entries: Vec<Vec<usize>> = base.parts().iter().map(|&p| vec![0; p]).collect();
    let cells = base.cells();
    fn rec(cells: &[(usize, usize)], k: usize, c: usize, e: &mut Vec<Vec<usize>>, base: &Partition, out: &mut Vec<PlanePartition>) {
        if k == cells.len() {
            out.push(PlanePartition { base: base.clone(), entries: e.clone(), reverse: false });
            return;
        }
        let (i, j) = (cells[k].0 - 1, cells[k].1 - 1);
        let mut hi = c;
        if i > 0 {
            hi = hi.min(e[i - 1][j]);
        }
        if j > 0 {
            hi = hi.min(e[i][j - 1]);
        }
        for v in 0..=hi {
            e[i][j] = v;
            rec(cells, k + 1, c, e, base, out);
        }
        e[i][j] = 0;
    }
    rec(&cells, 0, c, &mut entries, base, &mut out);
    out
}

/// Euler number `E_n` by the boustrophedon (Seidel–Entringer) triangle.
pub fn euler_number(n: usize) -> BigInt {
    let mut row = vec![BigInt::one()];
    for i in 1..=n {
        let mut next = Vec::with_capacity(i + 1);
        next.push(BigInt::zero());
        for k in 0..i {
            let v = &next[k] + &row[i - 1 - k];
            next.push(v);
        }
        row = next;
    }
    row.last().cloned().unwrap()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn spot_values() {
        assert_eq!(hlf_count(&Partition::of(&[3, 2, 1])), BigInt::from(16));
        let s = SkewShape::of(&[3, 3, 2], &[2, 1]);
        assert_eq!(syt_count_oracle(&s, SytMethod::Backtrack).unwrap(), BigInt::from(16));
        assert_eq!(syt_count_oracle(&s, SytMethod::Determinant).unwrap(), BigInt::from(16));
        assert_eq!(macmahon_count(3, 2, 3), BigInt::from(175));
        assert_eq!(rpp_bounded_count(&Partition::of(&[2, 1]), 1), BigInt::from(5));
        let e: Vec<BigInt> = (0..8).map(euler_number).collect();
        assert_eq!(e, [1, 1, 1, 2, 5, 16, 61, 272].map(BigInt::from).to_vec());
        let ser = ssyt_series_oracle(&SkewShape::of(&[1], &[]), 3).unwrap();
        assert!(ser.coeffs().iter().all(|c| c.is_one()));
    }
}
