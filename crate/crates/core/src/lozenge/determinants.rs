//! Determinant formulas for weighted tiling sums and the q-volume
//! generating function.

use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use serde::Serialize;

use super::tiling::{enumerate_tilings, tiling_weight, Region, WeightMode};
use crate::error::{domain, Error, Result};
use crate::exactmath::{bareiss_det, superfactorial as phi, vandermonde, QPolynomial, RationalMatrix};
use crate::multivar::WeightSpec;
use crate::shapes::Partition;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum ZMethod {
    Determinant,
    Enumerate,
}

impl FromStr for ZMethod {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "determinant" | "det" => Ok(Self::Determinant),
            "enumerate" | "enum" => Ok(Self::Enumerate),
            _ => Err(domain!("unknown method {s:?}")),
        }
    }
}

/// `∏_{t=1}^{n} (x_i - y_t)`.
fn x_minus_y(w: &WeightSpec, i: usize, n: usize) -> Result<BigRational> {
    let xi = w.xi(i)?;
    let mut acc = BigRational::one();
    for t in 1..=n {
        acc *= xi - w.yj(t)?;
    }
    Ok(acc)
}

/// `∏_{k=lo}^{hi} (x_i - x_k)`, erroring on a vanishing factor.
fn x_minus_x(w: &WeightSpec, i: usize, lo: usize, hi: usize) -> Result<BigRational> {
    let xi = w.xi(i)?;
    let mut acc = BigRational::one();
    for k in lo..=hi {
        let f = xi - w.xi(k)?;
        if f.is_zero() {
            return Err(Error::Singular(format!("x_{i} = x_{k}")));
        }
        acc *= f;
    }
    Ok(acc)
}

/// `Σ_{T∈Ω_μ(λ)} wt(T)` as `det[∏_{t≤μ_j+L_j-j-1}(x_i-y_t) ∏_{k=L_j}^{d'}(x_i-x_k)] / Δ(x)`
/// with `d' = ℓ(λ)` and `L_j = min{k : λ_k - k + 1 ≤ μ_j - j}`.
pub fn z_base_mu_lambda(lambda: &Partition, mu: &Partition, w: &WeightSpec) -> Result<BigRational> {
    let dp = lambda.len();
    if dp == 0 {
        return Ok(BigRational::one());
    }
    let xs: Vec<BigRational> = (1..=dp).map(|i| w.xi(i).cloned()).collect::<Result<_>>()?;
    for i in 0..dp {
        for k in i + 1..dp {
            if xs[i] == xs[k] {
                return Err(Error::Singular(format!("x_{} = x_{}", i + 1, k + 1)));
            }
        }
    }
    let l: Vec<usize> = (1..=dp)
        .map(|j| {
            let target = mu.part(j) as i64 - j as i64;
            (1..=dp).find(|&k| lambda.part(k) as i64 - k as i64 + 1 <= target).unwrap_or(dp + 1)
        })
        .collect();
    let mut rows = Vec::with_capacity(dp);
    for i in 1..=dp {
        let mut row = Vec::with_capacity(dp);
        for j in 1..=dp {
            let lj = l[j - 1];
            let ny = (mu.part(j) + lj) as i64 - j as i64 - 1;
            let ny = usize::try_from(ny).map_err(|_| Error::Verification(format!("negative y-range in column {j}")))?;
            let mut v = x_minus_y(w, i, ny)?;
            for k in lj..=dp {
                v *= &xs[i - 1] - &xs[k - 1];
            }
            row.push(v);
        }
        rows.push(row);
    }
    Ok(RationalMatrix::from_rows(rows)?.det_exact()? / vandermonde(&xs))
}

/// The matrix `A(μ,d)` of size `d + ℓ(μ)`.
pub fn matrix_a(mu: &Partition, d: usize, w: &WeightSpec) -> Result<RationalMatrix> {
    let l = mu.len();
    let n = d + l;
    let mut rows = Vec::with_capacity(n);
    for i in 1..=n {
        let mut row = Vec::with_capacity(n);
        for j in 1..=n {
            let v = if j > l {
                x_minus_y(w, i, d + l - j)? / x_minus_x(w, i, i + 1, n)?
            } else if i <= j + d {
                x_minus_y(w, i, mu.part(j) + d)? / x_minus_x(w, i, i + 1, d + j)?
            } else {
                BigRational::zero()
            };
            row.push(v);
        }
        rows.push(row);
    }
    RationalMatrix::from_rows(rows)
}

/// `Σ_{T∈Ω_{μ,d}} wt(T) = det A(μ,d)`; the empty base has one empty tiling.
pub fn z_mu_d(mu: &Partition, d: usize, w: &WeightSpec) -> Result<BigRational> {
    if mu.is_empty() {
        return Ok(BigRational::one());
    }
    matrix_a(mu, d, w)?.det_exact()
}

/// `Σ_{T∈Ω_{μ,d}} ∏_{(i,j)∈hl(T)} x_i`, the `y = 0` matrix `B`.
pub fn z_mu_d_x_only(mu: &Partition, d: usize, x: &[BigRational]) -> Result<BigRational> {
    if mu.is_empty() {
        return Ok(BigRational::one());
    }
    let l = mu.len();
    let n = d + l;
    let w = WeightSpec::new(x.to_vec(), Vec::new());
    let pow = |i: usize, e: usize| -> Result<BigRational> { Ok(num_traits::pow(w.xi(i)?.clone(), e)) };
    let mut rows = Vec::with_capacity(n);
    for i in 1..=n {
        let mut row = Vec::with_capacity(n);
        for j in 1..=n {
            let v = if j > l {
                pow(i, d + l - j)? / x_minus_x(&w, i, i + 1, n)?
            } else if i <= j + d {
                pow(i, mu.part(j) + d)? / x_minus_x(&w, i, i + 1, d + j)?
            } else {
                BigRational::zero()
            };
            row.push(v);
        }
        rows.push(row);
    }
    RationalMatrix::from_rows(rows)?.det_exact()
}

/// `Z(a,b,c)` for the hexagon, the matrix `M = A(b^a, c)`.
pub fn z_hexagon(a: usize, b: usize, c: usize, w: &WeightSpec) -> Result<BigRational> {
    z_mu_d(&Partition::rectangle(a, b), c, w)
}

/// Sum of tiling weights over a region, by a determinant or by listing tilings.
pub fn partition_function(region: &Region, w: &WeightSpec, method: ZMethod) -> Result<BigRational> {
    match method {
        ZMethod::Enumerate => {
            let mode = WeightMode::Explicit(w.clone());
            let mut acc = BigRational::zero();
            for t in enumerate_tilings(region)? {
                acc += tiling_weight(&t, &mode)?;
            }
            Ok(acc)
        }
        ZMethod::Determinant => match region {
            Region::BaseMuLambda { lambda, mu } => z_base_mu_lambda(lambda, mu, w),
            Region::MuD { mu, d } => z_mu_d(mu, *d, w),
            Region::Hexagon { a, b, c } => z_hexagon(*a, *b, *c, w),
        },
    }
}

/// `Φ(a+b+c+d+e)Φ(c+d+e)Φ(a+b+c)Φ(a)Φ(b)Φ(c) / (Φ(a+c+d+e)Φ(b+c+d+e)Φ(a+b)Φ(b+c)Φ(a+c))`,
/// the hexagon sum at `x_i = k - i`, `y_j = j`, `k = a+b+2c+d+e+1`.
pub fn hexagon_product(a: usize, b: usize, c: usize, d: usize, e: usize) -> BigRational {
    let (a, b, c, d, e) = (a as u64, b as u64, c as u64, d as u64, e as u64);
    BigRational::new(
        phi(a + b + c + d + e) * phi(c + d + e) * phi(a + b + c) * phi(a) * phi(b) * phi(c),
        phi(a + c + d + e) * phi(b + c + d + e) * phi(a + b) * phi(b + c) * phi(a + c),
    )
}

/// `x_i = k - i`, `y_j = j` with `k = a+b+2c+d+e+1`, long enough for `H(a,b,c)`.
pub fn hexagon_product_point(a: usize, b: usize, c: usize, d: usize, e: usize) -> WeightSpec {
    let k = (a + b + 2 * c + d + e + 1) as i64;
    let x: Vec<i64> = (1..=(a + c) as i64).map(|i| k - i).collect();
    let y: Vec<i64> = (1..=(b + c) as i64).collect();
    WeightSpec::from_ints(&x, &y)
}

/// `(q;q)_m = (1-q)(1-q^2)⋯(1-q^m)`.
fn q_pochhammer(m: usize) -> QPolynomial {
    QPolynomial::product_one_minus(&(1..=m).collect::<Vec<_>>())
}

/// `Σ_{P∈PP_μ(d)} q^{|P|}` from the `y = 0` determinant at `x_i = q^{d-i}`.
///
/// Row `i` is cleared of its denominator `(q;q)_{d+ℓ-i}` and of negative
/// powers of `q` before a fraction-free determinant over `Z[q]`.
pub fn qvolume_det(mu: &Partition, d: usize) -> Result<QPolynomial> {
    let l = mu.len();
    let n = d + l;
    let nmu: usize = (1..=l).map(|r| r * mu.part(r)).sum();
    if n == 0 {
        return Ok(QPolynomial::one());
    }
    // entry = sign · q^e / (q;q)_m, from ∏_{k=i+1}^{i+m} (q^{d-i} - q^{d-k})
    let entry = |i: usize, j: usize| -> Option<(i64, i64, usize)> {
        let di = d as i64 - i as i64;
        let (power, m) = if j > l {
            ((d + l - j) as i64, n - i)
        } else if i <= j + d {
            ((mu.part(j) + d) as i64, d + j - i)
        } else {
            return None;
        };
        let mm = m as i64;
        let e = di * power - mm * di + mm * (mm + 1) / 2;
        let sign = if m % 2 == 0 { 1 } else { -1 };
        Some((sign, e, m))
    };
    let mut rows = Vec::with_capacity(n);
    let mut shift_total: i64 = 0;
    let mut denominator = QPolynomial::one();
    for i in 1..=n {
        let cells: Vec<Option<(i64, i64, usize)>> = (1..=n).map(|j| entry(i, j)).collect();
        let row_m = n - i;
        let low = cells.iter().flatten().map(|&(_, e, _)| e).min().unwrap_or(0).min(0);
        shift_total += -low;
        denominator = &denominator * &q_pochhammer(row_m);
        let row: Vec<QPolynomial> = cells
            .into_iter()
            .map(|c| match c {
                None => QPolynomial::zero(),
                Some((sign, e, m)) => {
                    let quotient = q_pochhammer(row_m).div_exact(&q_pochhammer(m)).expect("(q;q)_m divides (q;q)_M");
                    quotient.shift((e - low) as usize).scale(&BigInt::from(sign))
                }
            })
            .collect();
        rows.push(row);
    }
    let det = bareiss_det(rows);
    let det = det
        .div_exact(&denominator)
        .ok_or_else(|| Error::Verification("q-volume determinant is not divisible by its row factors".into()))?;
    let total = nmu as i64 - shift_total;
    if total >= 0 {
        Ok(det.shift(total as usize))
    } else {
        let drop = (-total) as usize;
        if det.lowest_degree().is_some_and(|lo| lo < drop) {
            return Err(Error::Verification("q-volume determinant has negative powers".into()));
        }
        Ok(QPolynomial::from_coeffs(det.coeffs().iter().skip(drop).cloned().collect()))
    }
}

/// `Σ_{P∈PP_μ(d)} q^{|P|}` by listing plane partitions.
pub fn qvolume_enumerate(mu: &Partition, d: usize) -> QPolynomial {
    let mut coeffs: Vec<BigInt> = Vec::new();
    for p in crate::shapes::plane_partitions(mu, d) {
        let v = p.volume();
        if coeffs.len() <= v {
            coeffs.resize(v + 1, BigInt::zero());
        }
        coeffs[v] += 1;
    }
    QPolynomial::from_coeffs(coeffs)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactmath::rat;

    #[test]
    fn one_cell() {
        let w = WeightSpec::from_ints(&[5, 3], &[1, -2]);
        let z = z_mu_d(&Partition::of(&[1]), 1, &w).unwrap();
        assert_eq!(z, rat((5 - 1) + (3 - -2)));
        let ones = WeightSpec::from_ints(&[1, 1], &[0, 0]);
        assert!(matches!(z_mu_d(&Partition::of(&[1]), 1, &ones), Err(Error::Singular(_))));
    }

    #[test]
    fn q_volumes() {
        assert_eq!(qvolume_det(&Partition::of(&[1]), 1).unwrap(), QPolynomial::from_i64s(&[1, 1]));
        assert_eq!(qvolume_det(&Partition::empty(), 2).unwrap(), QPolynomial::one());
        assert_eq!(qvolume_det(&Partition::of(&[2, 2]), 2).unwrap().eval_at_one(), BigInt::from(20));
    }

    #[test]
    fn hexagon_hook_point() {
        for (a, b, c, d, e) in [(1, 1, 1, 0, 0), (2, 1, 1, 1, 2), (1, 2, 2, 2, 0)] {
            let w = hexagon_product_point(a, b, c, d, e);
            assert_eq!(z_hexagon(a, b, c, &w).unwrap(), hexagon_product(a, b, c, d, e));
        }
    }
}
