//! Power series in `q` truncated at a fixed order.

use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use super::qpoly::QPolynomial;
use crate::error::{Error, Result};

/// `c_0 + c_1 q + ... + c_D q^D`, exact through `q^D`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct QSeries {
    coeffs: Vec<BigInt>,
}

impl QSeries {
    pub fn zero(order: usize) -> Self {
        QSeries { coeffs: vec![BigInt::zero(); order + 1] }
    }

    pub fn one(order: usize) -> Self {
        let mut s = Self::zero(order);
        s.coeffs[0] = BigInt::one();
        s
    }

    pub fn from_coeffs(order: usize, mut coeffs: Vec<BigInt>) -> Self {
        coeffs.resize(order + 1, BigInt::zero());
        QSeries { coeffs }
    }

    pub fn from_poly(p: &QPolynomial, order: usize) -> Self {
        Self::from_coeffs(order, p.coeffs().iter().take(order + 1).cloned().collect())
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn coeff(&self, k: usize) -> &BigInt {
        &self.coeffs[k]
    }

    pub fn coeff_mut(&mut self, k: usize) -> &mut BigInt {
        &mut self.coeffs[k]
    }

    /// Lowest exponent with nonzero coefficient within the window.
    pub fn lowest_term(&self) -> Option<(usize, &BigInt)> {
        self.coeffs.iter().enumerate().find(|(_, c)| !c.is_zero())
    }

    pub fn add(&self, other: &QSeries) -> QSeries {
        let d = self.order().min(other.order());
        Self::from_coeffs(d, (0..=d).map(|k| &self.coeffs[k] + &other.coeffs[k]).collect())
    }

    /// Add `other · q^shift` in place.
    pub fn add_shifted(&mut self, other: &QSeries, shift: usize) {
        let d = self.order();
        for k in shift..=d {
            if k - shift > other.order() {
                break;
            }
            self.coeffs[k] += &other.coeffs[k - shift];
        }
    }

    pub fn mul(&self, other: &QSeries) -> QSeries {
        let d = self.order().min(other.order());
        let mut out = vec![BigInt::zero(); d + 1];
        for (i, a) in self.coeffs.iter().enumerate().take(d + 1) {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate().take(d + 1 - i) {
                out[i + j] += a * b;
            }
        }
        QSeries { coeffs: out }
    }

    /// Multiply by `q^k`, dropping what falls off the end.
    pub fn shift(&self, k: usize) -> QSeries {
        let d = self.order();
        let mut out = vec![BigInt::zero(); d + 1];
        for i in k..=d {
            out[i] = self.coeffs[i - k].clone();
        }
        QSeries { coeffs: out }
    }

    /// Multiply by `(1 - q^k)` in place, `k >= 1`.
    pub fn mul_one_minus(&mut self, k: usize) {
        for i in (k..self.coeffs.len()).rev() {
            let v = self.coeffs[i - k].clone();
            self.coeffs[i] -= v;
        }
    }

    /// Divide by `(1 - q^k)` in place, `k >= 1`.
    pub fn div_one_minus(&mut self, k: usize) {
        for i in k..self.coeffs.len() {
            let v = self.coeffs[i - k].clone();
            self.coeffs[i] += v;
        }
    }

    /// `q^shift · ∏(1-q^a) / ∏(1-q^b)` through `q^order`.
    pub fn from_factors(num: &[usize], den: &[usize], shift: i64, order: usize) -> Result<QSeries> {
        if num.contains(&0) {
            return Ok(Self::zero(order));
        }
        if den.contains(&0) {
            return Err(Error::Expansion("factor (1 - q^0) in denominator".into()));
        }
        if shift < 0 {
            return Err(Error::Expansion(format!("negative leading power q^{shift}")));
        }
        let mut s = Self::zero(order);
        if (shift as usize) <= order {
            s.coeffs[shift as usize] = BigInt::one();
        }
        for &a in num {
            s.mul_one_minus(a);
        }
        for &b in den {
            s.div_one_minus(b);
        }
        Ok(s)
    }
}

impl fmt::Debug for QSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for QSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let p = QPolynomial::from_coeffs(self.coeffs.clone());
        write!(f, "{p} + O(q^{})", self.order() + 1)
    }
}

/// Expand `num / den` through `q^order`.
///
/// The lowest power of `q` is factored out of `den`; what remains must have
/// constant term ±1, and `num` must vanish to at least the same order.
pub fn qseries_from_ratio(num: &QPolynomial, den: &QPolynomial, order: usize) -> Result<QSeries> {
    let low_d = den
        .lowest_degree()
        .ok_or_else(|| Error::Expansion("division by the zero polynomial".into()))?;
    let unit = &den.coeffs()[low_d];
    if !unit.abs().is_one() {
        return Err(Error::Expansion(format!(
            "denominator has non-unit lowest coefficient {unit}"
        )));
    }
    let low_n = match num.lowest_degree() {
        None => return Ok(QSeries::zero(order)),
        Some(l) => l,
    };
    if low_n < low_d {
        return Err(Error::Expansion(format!(
            "numerator vanishes to order {low_n}, denominator to order {low_d}"
        )));
    }
    // After dividing both by q^low_d we need terms up to `order` of the
    // numerator, and the reduced denominator up to the same order.
    let n: Vec<BigInt> = (0..=order).map(|k| num.coeff(k + low_d)).collect();
    let d: Vec<BigInt> = (0..=order).map(|k| den.coeff(k + low_d)).collect();
    let mut out = vec![BigInt::zero(); order + 1];
    for k in 0..=order {
        let mut acc = n[k].clone();
        for i in 1..=k {
            if !d[i].is_zero() {
                acc -= &d[i] * &out[k - i];
            }
        }
        out[k] = acc * unit;
    }
    Ok(QSeries { coeffs: out })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ints(s: &QSeries) -> Vec<i64> {
        s.coeffs().iter().map(|c| c.try_into().unwrap()).collect()
    }

    #[test]
    fn geometric() {
        let s = qseries_from_ratio(&QPolynomial::one(), &QPolynomial::one_minus_q_pow(1), 3).unwrap();
        assert_eq!(ints(&s), vec![1, 1, 1, 1]);
        let den = &QPolynomial::one_minus_q_pow(1) * &QPolynomial::one_minus_q_pow(1);
        let s = qseries_from_ratio(&QPolynomial::monomial(1), &den, 3).unwrap();
        assert_eq!(ints(&s), vec![0, 1, 2, 3]);
        let s = qseries_from_ratio(
            &QPolynomial::one_minus_q_pow(2),
            &QPolynomial::one_minus_q_pow(1),
            5,
        )
        .unwrap();
        assert_eq!(ints(&s), vec![1, 1, 0, 0, 0, 0]);
    }

    #[test]
    fn non_unit_rejected() {
        let den = QPolynomial::from_i64s(&[2, 1]);
        assert!(qseries_from_ratio(&QPolynomial::one(), &den, 3).is_err());
    }
}
