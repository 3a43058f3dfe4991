//! q-analogues: `Σ_T q^{|T|}` over SSYT of `Λ(a,b,c,d,e,m)` as products.

use serde::Serialize;

use super::lambda::{build_lambda_shape, LambdaParams};
use crate::error::Result;
use crate::exactmath::{QFactorial, QSeries};

fn binom2(n: usize) -> usize {
    n * n.saturating_sub(1) / 2
}

fn binom3(n: usize) -> usize {
    if n < 3 {
        0
    } else {
        n * (n - 1) * (n - 2) / 6
    }
}

fn exps(kind: QFactorial) -> Vec<usize> {
    kind.exponents().expect("nonnegative arguments")
}

fn phi_q(n: usize) -> Vec<usize> {
    exps(QFactorial::Superfactorial(n as i64))
}

fn psi_q(n: usize) -> Vec<usize> {
    exps(QFactorial::SuperDoublefactorial(n as i64))
}

fn gimel_q(n: usize) -> Vec<usize> {
    exps(QFactorial::DoubleSuperfactorial(n as i64))
}

/// `∏_{i=0}^{n-1} [k+2i-1]!!`.
fn psi_q_from_zero(n: usize, k: usize) -> Vec<usize> {
    if n == 0 {
        return Vec::new();
    }
    let mut v = if k >= 1 { exps(QFactorial::DoubleFactorial(k as i64 - 1)) } else { Vec::new() };
    v.extend(exps(QFactorial::ShiftedSuperDoublefactorial { n: n as i64, k: k as i64 }));
    v
}

fn doubled(v: Vec<usize>) -> Vec<usize> {
    v.into_iter().map(|k| 2 * k).collect()
}

/// `q^N ∏_{i,j,k} (1-q^{(m+1)(i+j+k-1)})/(1-q^{(m+1)(i+j+k-2)}) ∏ 1/(1-q^{h(u)})`
/// over `u ∈ λ/(0^c b^a)`, with `N = Σ_{(i,j)∈λ/b^a} (λ'_j - i)`.
pub fn q_lambda_product(p: LambdaParams, order: usize) -> Result<QSeries> {
    let LambdaParams { a, b, c, m, .. } = p;
    let shape = build_lambda_shape(p);
    let lam = shape.outer();
    let lc = lam.conjugate();
    let mut num = Vec::new();
    let mut den = Vec::new();
    for i in 1..=a {
        for j in 1..=b {
            for k in 1..=c {
                num.push((m + 1) * (i + j + k - 1));
                den.push((m + 1) * (i + j + k - 2));
            }
        }
    }
    for (i, j) in lam.cells() {
        let inner = if i > c && i <= a + c { b } else { 0 };
        if j > inner {
            den.push(lam.hook((i, j))?);
        }
    }
    let n: usize = shape.cells().iter().map(|&(i, j)| lc.part(j) - i).sum();
    QSeries::from_factors(&num, &den, n as i64, order)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum QCorollaryKind {
    /// `m = 0`.
    Abcde,
    /// `m = 1, d = e = 0`.
    Abc,
    /// `m = 1`.
    Abcde1,
}

/// Closed-form q-products for `m = 0` and `m = 1`.
pub fn q_corollary(kind: QCorollaryKind, a: usize, b: usize, c: usize, d: usize, e: usize, order: usize) -> Result<QSeries> {
    let (num, den, n) = match kind {
        QCorollaryKind::Abcde => {
            let n = b * binom2(c + e) + c * binom2(a + c + e) + d * binom2(a + c);
            let num = [a, b, c, d, e, a + b + c, c + d + e, a + b + c + d + e].iter().flat_map(|&k| phi_q(k)).collect();
            let den = [a + b, d + e, a + c + d, b + c + e, a + b + 2 * c + d + e].iter().flat_map(|&k| phi_q(k)).collect();
            (num, den, n)
        }
        QCorollaryKind::Abc => {
            let n = binom3(a + b + 2 * c) + b * binom2(a + 1) + a * binom2(b + 1) - a * b * (a + b + 2 * c);
            let (mut num, mut den) = macmahon_base_q2(a, b, c);
            num.extend(psi_q(c).into_iter().chain(psi_q(a + b + c)));
            den.extend(psi_q(a + c).into_iter().chain(psi_q(b + c)).chain(psi_q(a + b + 2 * c)));
            (num, den, n)
        }
        QCorollaryKind::Abcde1 => {
            let n = binom3(a + b + 2 * c + e) + d * binom2(a + c) + binom3(a + c) + b * binom2(a + 1) + a * binom2(b + 1)
                - binom3(a + c + e)
                - a * b * (a + b + 2 * c + e);
            let (mut num, mut den) = macmahon_base_q2(a, b, c);
            num.extend(psi_q_from_zero(c, d + e));
            num.extend(psi_q_from_zero(a + b + c, d + e));
            for k in [2 * a + 2 * c, 2 * b + 2 * c, d, e] {
                num.extend(gimel_q(k));
            }
            den.extend(psi_q_from_zero(a + b + 2 * c, d + e));
            den.extend(psi_q(a + c).into_iter().chain(psi_q(b + c)));
            den.extend(gimel_q(2 * a + 2 * c + d).into_iter().chain(gimel_q(2 * b + 2 * c + e)));
            (num, den, n)
        }
    };
    QSeries::from_factors(&num, &den, n as i64, order)
}

/// `Φ_{q²}(a)Φ_{q²}(b)Φ_{q²}(c)Φ_{q²}(a+b+c) / (Φ_{q²}(a+b)Φ_{q²}(b+c)Φ_{q²}(a+c))`.
fn macmahon_base_q2(a: usize, b: usize, c: usize) -> (Vec<usize>, Vec<usize>) {
    let num = [a, b, c, a + b + c].iter().flat_map(|&k| doubled(phi_q(k))).collect();
    let den = [a + b, b + c, a + c].iter().flat_map(|&k| doubled(phi_q(k))).collect();
    (num, den)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::shapes::{ssyt_series_oracle, SkewShape};

    #[test]
    fn two_two_over_one() {
        let p = LambdaParams::new(1, 1, 1, 0, 0, 0);
        let s = q_lambda_product(p, 6).unwrap();
        assert_eq!(s, ssyt_series_oracle(&SkewShape::of(&[2, 2], &[1]), 6).unwrap());
        assert_eq!(q_corollary(QCorollaryKind::Abcde, 1, 1, 1, 0, 0, 6).unwrap(), s);
    }
}
