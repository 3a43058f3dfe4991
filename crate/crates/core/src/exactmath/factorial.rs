//! Factorials and the superfactorial family.
//!
//! Arguments are `i64` so that negative input can be reported instead of
//! silently wrapping; every empty product is 1.

use num_bigint::BigInt;
use num_traits::One;

use crate::error::{domain, Result};

fn nonneg(name: &str, v: i64) -> Result<u64> {
    if v < 0 {
        Err(domain!("{name} must be nonnegative, got {v}"))
    } else {
        Ok(v as u64)
    }
}

/// `n!`.
pub fn factorial(n: u64) -> BigInt {
    (2..=n).fold(BigInt::one(), |acc, k| acc * k)
}

/// `n!! = n(n-2)(n-4)...`, with `0!! = (-1)!! = 1`.
pub fn double_factorial(n: i64) -> BigInt {
    let mut acc = BigInt::one();
    let mut k = n;
    while k > 1 {
        acc *= k;
        k -= 2;
    }
    acc
}

/// Falling factorial `(k)_m = k(k-1)...(k-m+1)`.
pub fn falling_factorial(k: i64, m: u64) -> BigInt {
    (0..m as i64).fold(BigInt::one(), |acc, i| acc * (k - i))
}

/// `Φ(n) = 1!·2!⋯(n-1)!`.
pub fn superfactorial(n: u64) -> BigInt {
    let mut acc = BigInt::one();
    let mut f = BigInt::one();
    for i in 1..n {
        f *= i;
        acc *= &f;
    }
    acc
}

/// `ℷ(n) = (n-2)!(n-4)!⋯`, stopping at 1! or 0!.
pub fn double_superfactorial(n: u64) -> BigInt {
    let mut acc = BigInt::one();
    let mut k = n as i64 - 2;
    while k >= 0 {
        acc *= factorial(k as u64);
        k -= 2;
    }
    acc
}

/// `Ψ(n) = 1!!·3!!⋯(2n-3)!!`.
pub fn super_doublefactorial(n: u64) -> BigInt {
    shifted_super_doublefactorial(n, 0)
}

/// `Ψ(n;k) = (k+1)!!(k+3)!!⋯(k+2n-3)!!`.
pub fn shifted_super_doublefactorial(n: u64, k: u64) -> BigInt {
    (1..n as i64).fold(BigInt::one(), |acc, i| {
        acc * double_factorial(k as i64 + 2 * i - 1)
    })
}

/// `∏_{i=0}^{n-1} (k+2i-1)!!`: the shifted product with the `i = 0` term kept.
///
/// This is the variant that makes the `m = 1` closed form for the
/// six-parameter family agree with the determinant oracle.
pub fn shifted_super_doublefactorial_from_zero(n: u64, k: u64) -> BigInt {
    (0..n as i64).fold(BigInt::one(), |acc, i| {
        acc * double_factorial(k as i64 + 2 * i - 1)
    })
}

/// `Ψ^{(m)}(n) = ∏_{i=1}^{n-1} ∏_{j=1}^{i} (jm+j-1)_m`.
pub fn falling_superfactorial(n: u64, m: u64) -> BigInt {
    let mut acc = BigInt::one();
    for i in 1..n {
        for j in 1..=i {
            let top = (j * m + j) as i64 - 1;
            acc *= falling_factorial(top, m);
        }
    }
    acc
}

/// Selector for [`special_factorial`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SpecialFactorial {
    Factorial(i64),
    DoubleFactorial(i64),
    FallingFactorial { k: i64, m: i64 },
    Superfactorial(i64),
    DoubleSuperfactorial(i64),
    SuperDoublefactorial(i64),
    ShiftedSuperDoublefactorial { n: i64, k: i64 },
    FallingSuperfactorial { n: i64, m: i64 },
}

/// Evaluate one member of the factorial family, rejecting negative input.
pub fn special_factorial(kind: SpecialFactorial) -> Result<BigInt> {
    use SpecialFactorial::*;
    Ok(match kind {
        Factorial(n) => factorial(nonneg("n", n)?),
        DoubleFactorial(n) => double_factorial(nonneg("n", n)? as i64),
        FallingFactorial { k, m } => falling_factorial(nonneg("k", k)? as i64, nonneg("m", m)?),
        Superfactorial(n) => superfactorial(nonneg("n", n)?),
        DoubleSuperfactorial(n) => double_superfactorial(nonneg("n", n)?),
        SuperDoublefactorial(n) => super_doublefactorial(nonneg("n", n)?),
        ShiftedSuperDoublefactorial { n, k } => {
            shifted_super_doublefactorial(nonneg("n", n)?, nonneg("k", k)?)
        }
        FallingSuperfactorial { n, m } => falling_superfactorial(nonneg("n", n)?, nonneg("m", m)?),
    })
}

/// Binomial coefficient, zero outside `0 <= k <= n`.
pub fn binomial(n: i64, k: i64) -> BigInt {
    if n < 0 || k < 0 || k > n {
        return BigInt::from(0);
    }
    let k = k.min(n - k);
    let mut acc = BigInt::one();
    for i in 0..k {
        acc = acc * (n - i) / (i + 1);
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_values() {
        assert_eq!(superfactorial(4), BigInt::from(12));
        assert_eq!(superfactorial(1), BigInt::from(1));
        assert_eq!(super_doublefactorial(3), BigInt::from(3));
        assert_eq!(falling_superfactorial(3, 1), BigInt::from(3));
        assert_eq!(double_superfactorial(5), BigInt::from(6));
        assert_eq!(binomial(6, 3), BigInt::from(20));
        assert!(special_factorial(SpecialFactorial::Factorial(-1)).is_err());
    }
}
