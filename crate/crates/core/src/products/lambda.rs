//! The six-parameter family `Λ(a,b,c,d,e,m)` and its product formulas.

use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use serde::Serialize;

use crate::error::{domain, Result};
use crate::exactmath::{
    binomial, double_superfactorial as gimel, factorial, falling_superfactorial, shifted_super_doublefactorial_from_zero,
    super_doublefactorial as psi, superfactorial as phi,
};
use crate::shapes::{Partition, SkewShape};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub struct LambdaParams {
    pub a: usize,
    pub b: usize,
    pub c: usize,
    pub d: usize,
    pub e: usize,
    pub m: usize,
}

impl LambdaParams {
    pub fn new(a: usize, b: usize, c: usize, d: usize, e: usize, m: usize) -> Self {
        LambdaParams { a, b, c, d, e, m }
    }

    /// Parse `"a,b,c,d,e,m"`.
    pub fn parse(text: &str) -> Result<Self> {
        let v: Vec<usize> = text
            .split(',')
            .map(|s| s.trim().parse::<usize>().map_err(|_| domain!("bad parameter {s:?}")))
            .collect::<Result<_>>()?;
        match v[..] {
            [a, b, c, d, e, m] => Ok(Self::new(a, b, c, d, e, m)),
            _ => Err(domain!("expected six parameters a,b,c,d,e,m, got {}", v.len())),
        }
    }

    /// Every tuple with all six parameters in `0..=max`.
    pub fn grid(max: usize) -> Vec<LambdaParams> {
        let r = 0..=max;
        let mut out = Vec::new();
        for a in r.clone() {
            for b in r.clone() {
                for c in r.clone() {
                    for d in r.clone() {
                        for e in r.clone() {
                            for m in r.clone() {
                                out.push(Self::new(a, b, c, d, e, m));
                            }
                        }
                    }
                }
            }
        }
        out
    }
}

impl std::str::FromStr for LambdaParams {
    type Err = crate::error::Error;
    fn from_str(s: &str) -> Result<Self> {
        Self::parse(s)
    }
}

impl fmt::Display for LambdaParams {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{},{},{},{},{},{}", self.a, self.b, self.c, self.d, self.e, self.m)
    }
}

/// `λ/b^a`: rows `1..=a+c` have length `b + c + ν_i` with
/// `ν_i = d + (a+c-i)m`; below them come the columns of
/// `θ = (e + (b+c-1)m, ..., e+m, e)`, i.e. the rows of `θ'`.
pub fn build_lambda_shape(p: LambdaParams) -> SkewShape {
    let LambdaParams { a, b, c, d, e, m } = p;
    let mut parts: Vec<usize> = (1..=a + c).map(|i| b + c + d + (a + c - i) * m).collect();
    let theta: Vec<usize> = (1..=b + c).map(|i| e + (b + c - i) * m).collect();
    let theta = Partition::new(theta).expect("θ is decreasing");
    parts.extend(theta.conjugate().parts());
    let lambda = Partition::new(parts).expect("Λ rows are decreasing");
    // P1: rows below the rectangle fit inside its width.
    assert!(lambda.part(a + c + 1) <= b + c);
    // P2: the rectangle rows exceed b+c by an arithmetic progression.
    for i in 1..a + c {
        assert_eq!(lambda.part(i) - lambda.part(i + 1), m);
    }
    SkewShape::new(lambda, Partition::rectangle(a, b)).expect("b^a lies inside λ")
}

fn rational(n: BigInt) -> BigRational {
    BigRational::from_integer(n)
}

fn integral(v: BigRational, what: &str) -> BigInt {
    assert!(v.is_integer(), "{what} evaluated to the non-integer {v}");
    v.to_integer()
}

/// `f^{Λ(a,b,c,d,e,m)}` by the product formula.
pub fn f_lambda_product(p: LambdaParams) -> BigInt {
    let LambdaParams { a, b, c, d, e, m } = p;
    let n = build_lambda_shape(p).size();
    let (a64, b64, c64) = (a as u64, b as u64, c as u64);
    let m1 = m + 1;
    let mut v = rational(factorial(n as u64) * phi(a64 + b64 + c64) * phi(a64) * phi(b64) * phi(c64));
    v /= rational(
        phi(a64 + b64) * phi(b64 + c64) * phi(a64 + c64)
            * falling_superfactorial(a64 + c64, m as u64)
            * falling_superfactorial(b64 + c64, m as u64),
    );
    for i in 0..a + c {
        v *= BigRational::new(factorial((i * m1) as u64), factorial((d + i * m1) as u64));
    }
    for i in 0..b + c {
        v *= BigRational::new(factorial((i * m1) as u64), factorial((e + i * m1) as u64));
    }
    for i in 0..b {
        for j in 0..a {
            v *= rational(BigInt::from(1 + d + e + (c + i + j) * m1));
        }
    }
    for i in 0..b + c {
        for j in 0..a + c {
            v /= rational(BigInt::from(1 + d + e + (i + j) * m1));
        }
    }
    integral(v, "the product formula")
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum CorollaryKind {
    /// `m = 0`: `(b+c+d)^{a+c}(b+c)^e / b^a`.
    Abcde,
    /// `m = 1, d = e = 0`: `δ_{a+b+2c} / b^a`.
    Abc,
    /// `m = 1`.
    Abcde1,
}

impl CorollaryKind {
    pub fn params(&self, a: usize, b: usize, c: usize, d: usize, e: usize) -> LambdaParams {
        match self {
            CorollaryKind::Abcde => LambdaParams::new(a, b, c, d, e, 0),
            CorollaryKind::Abc => LambdaParams::new(a, b, c, 0, 0, 1),
            CorollaryKind::Abcde1 => LambdaParams::new(a, b, c, d, e, 1),
        }
    }
}

/// The closed forms for `m = 0` and `m = 1`. `d`, `e` are ignored for `Abc`.
pub fn f_corollary(kind: CorollaryKind, a: usize, b: usize, c: usize, d: usize, e: usize) -> BigInt {
    let (a, b, c, d, e) = (a as u64, b as u64, c as u64, d as u64, e as u64);
    let v = match kind {
        CorollaryKind::Abcde => {
            let n = (a + c + e) * (b + c + d) - a * b - e * d;
            BigRational::new(
                factorial(n)
                    * phi(a)
                    * phi(b)
                    * phi(c)
                    * phi(d)
                    * phi(e)
                    * phi(a + b + c)
                    * phi(c + d + e)
                    * phi(a + b + c + d + e),
                phi(a + b) * phi(d + e) * phi(a + c + d) * phi(b + c + e) * phi(a + b + 2 * c + d + e),
            )
        }
        CorollaryKind::Abc => {
            let n = binomial((a + b + 2 * c) as i64, 2) - BigInt::from(a * b);
            let n: u64 = n.try_into().expect("small");
            BigRational::new(
                factorial(n) * phi(a) * phi(b) * phi(c) * phi(a + b + c) * psi(c) * psi(a + b + c),
                phi(a + b) * phi(b + c) * phi(a + c) * psi(a + c) * psi(b + c) * psi(a + b + 2 * c),
            )
        }
        CorollaryKind::Abcde1 => {
            let n = (a + c + e) * (b + c + d) + (a + c) * (a + c).saturating_sub(1) / 2
                + (b + c) * (b + c).saturating_sub(1) / 2
                - a * b
                - e * d;
            let psi0 = shifted_super_doublefactorial_from_zero;
            BigRational::new(
                factorial(n)
                    * phi(a)
                    * phi(b)
                    * phi(c)
                    * phi(a + b + c)
                    * psi0(c, d + e)
                    * psi0(a + b + c, d + e)
                    * gimel(2 * a + 2 * c)
                    * gimel(2 * b + 2 * c)
                    * gimel(d)
                    * gimel(e),
                phi(a + b)
                    * phi(b + c)
                    * phi(a + c)
                    * psi(a + c)
                    * psi(b + c)
                    * psi0(a + b + 2 * c, d + e)
                    * gimel(2 * a + 2 * c + d)
                    * gimel(2 * b + 2 * c + e),
            )
        }
    };
    integral(v, "the corollary closed form")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn shapes_and_values() {
        assert_eq!(build_lambda_shape(LambdaParams::new(1, 1, 1, 0, 0, 0)), SkewShape::of(&[2, 2], &[1]));
        assert_eq!(build_lambda_shape(LambdaParams::new(1, 1, 1, 1, 1, 0)), SkewShape::of(&[3, 3, 2], &[1]));
        assert_eq!(f_lambda_product(LambdaParams::new(1, 1, 1, 1, 1, 0)), BigInt::from(42));
        assert_eq!(f_lambda_product(LambdaParams::new(1, 1, 1, 0, 0, 0)), BigInt::from(2));
        assert_eq!(f_lambda_product(LambdaParams::new(0, 0, 1, 0, 0, 0)), BigInt::from(1));
        assert_eq!(f_corollary(CorollaryKind::Abcde, 1, 1, 1, 1, 1), BigInt::from(42));
        assert_eq!(
            build_lambda_shape(LambdaParams::new(1, 2, 1, 0, 0, 1)),
            SkewShape::of(&[4, 3, 2, 1], &[2])
        );
    }
}
