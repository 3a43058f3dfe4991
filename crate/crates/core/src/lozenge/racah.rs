//! The q-Racah box identity: a weighted sum over plane partitions in
//! `a×b×c` against a product over the boxes, and its `q → 1` form with
//! `u = q^h`.

use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::Serialize;

use crate::error::{domain, Error, Result};
use crate::exactmath::{rat, serialize_rational};
use crate::rng::SplitMix64;
use crate::shapes::{macmahon_count, macmahon_qgf, plane_partitions, Partition};

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct RacahReport {
    pub a: usize,
    pub b: usize,
    pub c: usize,
    #[serde(serialize_with = "serialize_rational")]
    pub q: BigRational,
    #[serde(serialize_with = "serialize_rational")]
    pub u: BigRational,
    #[serde(serialize_with = "serialize_rational")]
    pub lhs: BigRational,
    #[serde(serialize_with = "serialize_rational")]
    pub rhs: BigRational,
    pub holds: bool,
    /// At `u = 0` both sides equal the MacMahon generating function at `q`.
    pub u_zero_matches_macmahon: bool,
}

fn qpow(q: &BigRational, e: i64) -> BigRational {
    q.pow(e as i32)
}

/// Boxes `(i,j,k)` of every plane partition in `a×b×c`: row, column, level.
fn boxed_partitions(a: usize, b: usize, c: usize) -> Vec<Vec<(i64, i64, i64)>> {
    plane_partitions(&Partition::rectangle(a, b), c)
        .into_iter()
        .map(|p| {
            let mut boxes = Vec::with_capacity(p.volume());
            for (r, row) in p.entries.iter().enumerate() {
                for (s, &h) in row.iter().enumerate() {
                    for k in 1..=h {
                        boxes.push((r as i64 + 1, s as i64 + 1, k as i64));
                    }
                }
            }
            boxes
        })
        .collect()
}

fn all_boxes(a: usize, b: usize, c: usize) -> impl Iterator<Item = (i64, i64, i64)> {
    (1..=a as i64).flat_map(move |i| (1..=b as i64).flat_map(move |j| (1..=c as i64).map(move |k| (i, j, k))))
}

/// Whether some denominator of either side vanishes at `(q, u)`.
pub fn racah_singular(a: usize, b: usize, c: usize, q: &BigRational, u: &BigRational) -> bool {
    if q.is_zero() {
        return true;
    }
    all_boxes(a, b, c).any(|(i, j, k)| {
        (BigRational::one() - qpow(q, j + k - 2 * i + 1) * u).is_zero()
            || (BigRational::one() - qpow(q, i + j + k - 2)).is_zero()
            || (BigRational::one() - qpow(q, j + k - i) * u).is_zero()
    })
}

/// `Σ_Π ∏_{(i,j,k)∈Π} (q - q^{j+k-2i} u) / (1 - q^{j+k-2i+1} u)`.
pub fn racah_lhs(a: usize, b: usize, c: usize, q: &BigRational, u: &BigRational) -> BigRational {
    let mut total = BigRational::zero();
    for boxes in boxed_partitions(a, b, c) {
        let mut term = BigRational::one();
        for (i, j, k) in boxes {
            let e = j + k - 2 * i;
            term *= (q - qpow(q, e) * u) / (BigRational::one() - qpow(q, e + 1) * u);
        }
        total += term;
    }
    total
}

/// `∏ (1 - q^{i+j+k-1})(1 - q^{j+k-i-1} u) / ((1 - q^{i+j+k-2})(1 - q^{j+k-i} u))`.
pub fn racah_rhs(a: usize, b: usize, c: usize, q: &BigRational, u: &BigRational) -> BigRational {
    let one = BigRational::one();
    let mut acc = BigRational::one();
    for (i, j, k) in all_boxes(a, b, c) {
        acc *= (&one - qpow(q, i + j + k - 1)) * (&one - qpow(q, j + k - i - 1) * u);
        acc /= (&one - qpow(q, i + j + k - 2)) * (&one - qpow(q, j + k - i) * u);
    }
    acc
}

pub fn racah_verify(a: usize, b: usize, c: usize, q: &BigRational, u: &BigRational) -> Result<RacahReport> {
    if racah_singular(a, b, c, q, u) {
        return Err(Error::Singular(format!("(q, u) = ({q}, {u}) makes a denominator vanish on {a}×{b}×{c}")));
    }
    let lhs = racah_lhs(a, b, c, q, u);
    let rhs = racah_rhs(a, b, c, q, u);
    let zero = BigRational::zero();
    let mac = macmahon_qgf(a, b, c).eval(q);
    let u_zero_matches_macmahon = racah_lhs(a, b, c, q, &zero) == mac && racah_rhs(a, b, c, q, &zero) == mac;
    Ok(RacahReport { a, b, c, q: q.clone(), u: u.clone(), holds: lhs == rhs, lhs, rhs, u_zero_matches_macmahon })
}

/// Random `(q, u)` avoiding every singular point, numerators and
/// denominators bounded by `bound`.
pub fn racah_random_point(rng: &mut SplitMix64, a: usize, b: usize, c: usize, bound: i64) -> (BigRational, BigRational) {
    loop {
        let q = rng.rational(bound);
        let u = rng.rational(bound);
        if !racah_singular(a, b, c, &q, &u) {
            return (q, u);
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct RacahHReport {
    pub a: usize,
    pub b: usize,
    pub c: usize,
    #[serde(serialize_with = "serialize_rational")]
    pub h: BigRational,
    #[serde(serialize_with = "serialize_rational")]
    pub lhs: BigRational,
    #[serde(serialize_with = "serialize_rational")]
    pub rhs: BigRational,
    pub holds: bool,
}

/// `Σ_Π ∏ (j+k-2i-1+h)/(j+k-2i+1+h)` against
/// `∏ (i+j+k-1)(j+k-i-1+h) / ((i+j+k-2)(j+k-i+h))`.
pub fn racah_h(a: usize, b: usize, c: usize, h: &BigRational) -> Result<RacahHReport> {
    let singular = all_boxes(a, b, c)
        .any(|(i, j, k)| (rat(j + k - 2 * i + 1) + h).is_zero() || (rat(j + k - i) + h).is_zero());
    if singular {
        return Err(domain!("h = {h} makes a denominator vanish on {a}×{b}×{c}"));
    }
    let mut lhs = BigRational::zero();
    for boxes in boxed_partitions(a, b, c) {
        let mut term = BigRational::one();
        for (i, j, k) in boxes {
            let e = j + k - 2 * i;
            term *= (rat(e - 1) + h) / (rat(e + 1) + h);
        }
        lhs += term;
    }
    let rhs = racah_h_product(a, b, c, h);
    Ok(RacahHReport { a, b, c, h: h.clone(), holds: lhs == rhs, lhs, rhs })
}

pub fn racah_h_product(a: usize, b: usize, c: usize, h: &BigRational) -> BigRational {
    let mut acc = BigRational::one();
    for (i, j, k) in all_boxes(a, b, c) {
        acc *= rat(i + j + k - 1) * (rat(j + k - i - 1) + h);
        acc /= rat(i + j + k - 2) * (rat(j + k - i) + h);
    }
    acc
}

/// `|RHS(h)/|PP(a,b,c)| - 1|` and the bound `abc/(h-a)` it must respect
/// for large `h`.
pub fn racah_large_h_deviation(a: usize, b: usize, c: usize, h: u64) -> (BigRational, BigRational) {
    let hr = BigRational::from_integer(h.into());
    let ratio = racah_h_product(a, b, c, &hr) / BigRational::from_integer(macmahon_count(a, b, c));
    let dev = (ratio - BigRational::one()).abs();
    let bound = rat((a * b * c) as i64) / (hr - rat(a as i64));
    (dev, bound)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactmath::ratio;

    #[test]
    fn single_box() {
        let (q, u) = (ratio(2, 3), ratio(-1, 5));
        let r = racah_verify(1, 1, 1, &q, &u).unwrap();
        let one = BigRational::one();
        assert_eq!(r.lhs, &one + (&q - &u) / (&one - &q * &u));
        assert!(r.holds && r.u_zero_matches_macmahon);
    }

    #[test]
    fn small_boxes_and_h() {
        let mut rng = SplitMix64::new(11);
        for (a, b, c) in [(2, 1, 1), (1, 2, 2), (2, 2, 2)] {
            let (q, u) = racah_random_point(&mut rng, a, b, c, 5);
            assert!(racah_verify(a, b, c, &q, &u).unwrap().holds);
            assert!(racah_h(a, b, c, &ratio(7, 2)).unwrap().holds);
        }
        let (dev, bound) = racah_large_h_deviation(2, 2, 2, 1_000_000);
        assert!(dev <= bound && !dev.is_zero());
    }
}
