//! Polynomials in `q` with big-integer coefficients, and the q-analogues of
//! the factorial family.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{domain, Result};

/// A polynomial `Σ c_k q^k`. Coefficients are stored densely and the
/// trailing zeros are always trimmed, so the zero polynomial is empty.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct QPolynomial {
    coeffs: Vec<BigInt>,
}

impl QPolynomial {
    pub fn zero() -> Self {
        QPolynomial { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(BigInt::one())
    }

    pub fn constant(c: BigInt) -> Self {
        Self::from_coeffs(vec![c])
    }

    /// `q^k`.
    pub fn monomial(k: usize) -> Self {
        let mut c = vec![BigInt::zero(); k + 1];
        c[k] = BigInt::one();
        QPolynomial { coeffs: c }
    }

    /// `1 - q^k`; for `k = 0` this is the zero polynomial.
    pub fn one_minus_q_pow(k: usize) -> Self {
        let mut c = vec![BigInt::zero(); k + 1];
        c[0] += 1;
        c[k] -= 1;
        Self::from_coeffs(c)
    }

    pub fn from_coeffs(mut coeffs: Vec<BigInt>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        QPolynomial { coeffs }
    }

    pub fn from_i64s(cs: &[i64]) -> Self {
        Self::from_coeffs(cs.iter().map(|&c| BigInt::from(c)).collect())
    }

    /// `∏ (1 - q^k)` over the given exponents.
    pub fn product_one_minus(exps: &[usize]) -> Self {
        let mut c = vec![BigInt::one()];
        for &k in exps {
            let mut next = vec![BigInt::zero(); c.len() + k];
            for (i, v) in c.iter().enumerate() {
                next[i] += v;
                next[i + k] -= v;
            }
            c = next;
        }
        Self::from_coeffs(c)
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn coeff(&self, k: usize) -> BigInt {
        self.coeffs.get(k).cloned().unwrap_or_default()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Highest exponent with a nonzero coefficient; `None` for zero.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    /// Lowest exponent with a nonzero coefficient; `None` for zero.
    pub fn lowest_degree(&self) -> Option<usize> {
        self.coeffs.iter().position(|c| !c.is_zero())
    }

    /// Multiply by `q^k`.
    pub fn shift(&self, k: usize) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let mut c = vec![BigInt::zero(); k];
        c.extend(self.coeffs.iter().cloned());
        QPolynomial { coeffs: c }
    }

    pub fn eval(&self, q: &BigRational) -> BigRational {
        let mut acc = BigRational::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * q + BigRational::from_integer(c.clone());
        }
        acc
    }

    pub fn eval_at_one(&self) -> BigInt {
        self.coeffs.iter().sum()
    }

    pub fn scale(&self, s: &BigInt) -> Self {
        Self::from_coeffs(self.coeffs.iter().map(|c| c * s).collect())
    }

    /// Exact division; `None` if `divisor` does not divide `self` over `Z[q]`.
    pub fn div_exact(&self, divisor: &Self) -> Option<Self> {
        let dd = divisor.degree()?;
        if self.is_zero() {
            return Some(Self::zero());
        }
        let lead = &divisor.coeffs[dd];
        let mut rem = self.coeffs.clone();
        if rem.len() <= dd {
            return None;
        }
        let mut quot = vec![BigInt::zero(); rem.len() - dd];
        for k in (0..quot.len()).rev() {
            let top = &rem[k + dd];
            if top.is_zero() {
                continue;
            }
            if !(top % lead).is_zero() {
                return None;
            }
            let f = top / lead;
            for (i, dc) in divisor.coeffs.iter().enumerate() {
                rem[k + i] -= &f * dc;
            }
            quot[k] = f;
        }
        if rem.iter().any(|c| !c.is_zero()) {
            return None;
        }
        Some(Self::from_coeffs(quot))
    }
}

impl fmt::Debug for QPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for QPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let neg = c.is_negative();
            let mag = c.abs();
            if first {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if neg { '-' } else { '+' })?;
            }
            first = false;
            let show_mag = k == 0 || !mag.is_one();
            if show_mag {
                write!(f, "{mag}")?;
            }
            match k {
                0 => {}
                1 => write!(f, "q")?,
                _ => write!(f, "q^{k}")?,
            }
        }
        Ok(())
    }
}

impl Add for &QPolynomial {
    type Output = QPolynomial;
    fn add(self, rhs: &QPolynomial) -> QPolynomial {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        QPolynomial::from_coeffs((0..n).map(|k| self.coeff(k) + rhs.coeff(k)).collect())
    }
}

impl Sub for &QPolynomial {
    type Output = QPolynomial;
    fn sub(self, rhs: &QPolynomial) -> QPolynomial {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        QPolynomial::from_coeffs((0..n).map(|k| self.coeff(k) - rhs.coeff(k)).collect())
    }
}

impl Mul for &QPolynomial {
    type Output = QPolynomial;
    fn mul(self, rhs: &QPolynomial) -> QPolynomial {
        if self.is_zero() || rhs.is_zero() {
            return QPolynomial::zero();
        }
        let mut c = vec![BigInt::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                c[i + j] += a * b;
            }
        }
        QPolynomial::from_coeffs(c)
    }
}

impl Neg for &QPolynomial {
    type Output = QPolynomial;
    fn neg(self) -> QPolynomial {
        QPolynomial { coeffs: self.coeffs.iter().map(|c| -c).collect() }
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr for QPolynomial {
            type Output = QPolynomial;
            fn $m(self, rhs: QPolynomial) -> QPolynomial {
                (&self).$m(&rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

/// Selector for [`q_special_factorial`]. Each q-object is a product of
/// `(1 - q^k)` factors; [`QFactorial::exponents`] lists the `k`s.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum QFactorial {
    /// `[m]! = (1-q)(1-q^2)⋯(1-q^m)`
    Factorial(i64),
    /// `[k]!! = ∏ (1-q^i)` over `1 <= i <= k` with `i ≡ k (mod 2)`
    DoubleFactorial(i64),
    /// `Φ_q(n) = [1]![2]!⋯[n-1]!`
    Superfactorial(i64),
    /// `ℷ_q(n) = [n-2]![n-4]!⋯`
    DoubleSuperfactorial(i64),
    /// `Ψ_q(n) = [1]!![3]!!⋯[2n-3]!!`
    SuperDoublefactorial(i64),
    /// `Ψ_q(n;k) = [k+1]!![k+3]!!⋯[k+2n-3]!!`
    ShiftedSuperDoublefactorial { n: i64, k: i64 },
}

fn qfact_exps(m: u64, out: &mut Vec<usize>) {
    out.extend(1..=m as usize);
}

fn qdouble_exps(k: i64, out: &mut Vec<usize>) {
    let mut i = k;
    while i >= 1 {
        out.push(i as usize);
        i -= 2;
    }
}

impl QFactorial {
    /// The multiset of `k` with `self = ∏ (1 - q^k)`.
    pub fn exponents(&self) -> Result<Vec<usize>> {
        use QFactorial::*;
        let check = |name: &str, v: i64| -> Result<u64> {
            if v < 0 {
                Err(domain!("{name} must be nonnegative, got {v}"))
            } else {
                Ok(v as u64)
            }
        };
        let mut out = Vec::new();
        match *self {
            Factorial(m) => qfact_exps(check("m", m)?, &mut out),
            DoubleFactorial(k) => qdouble_exps(check("k", k)? as i64, &mut out),
            Superfactorial(n) => {
                for i in 1..check("n", n)? {
                    qfact_exps(i, &mut out);
                }
            }
            DoubleSuperfactorial(n) => {
                let mut k = check("n", n)? as i64 - 2;
                while k >= 0 {
                    qfact_exps(k as u64, &mut out);
                    k -= 2;
                }
            }
            SuperDoublefactorial(n) => {
                for i in 1..check("n", n)? as i64 {
                    qdouble_exps(2 * i - 1, &mut out);
                }
            }
            ShiftedSuperDoublefactorial { n, k } => {
                let k = check("k", k)? as i64;
                for i in 1..check("n", n)? as i64 {
                    qdouble_exps(k + 2 * i - 1, &mut out);
                }
            }
        }
        Ok(out)
    }
}

/// Expand a q-analogue of the factorial family into a polynomial.
pub fn q_special_factorial(kind: QFactorial) -> Result<QPolynomial> {
    Ok(QPolynomial::product_one_minus(&kind.exponents()?))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn q_factorial_two() {
        let p = q_special_factorial(QFactorial::Factorial(2)).unwrap();
        assert_eq!(p, QPolynomial::from_i64s(&[1, -1, -1, 1]));
        assert_eq!(p.to_string(), "1 - q - q^2 + q^3");
    }

    #[test]
    fn exact_division() {
        let a = QPolynomial::one_minus_q_pow(6);
        let b = QPolynomial::one_minus_q_pow(2);
        let c = a.div_exact(&b).unwrap();
        assert_eq!(c, QPolynomial::from_i64s(&[1, 0, 1, 0, 1]));
        assert!(b.div_exact(&QPolynomial::one_minus_q_pow(3)).is_none());
    }
}
