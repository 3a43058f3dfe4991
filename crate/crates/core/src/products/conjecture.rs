//! Conjectured closed forms, reported against the determinant oracle and
//! never used as an oracle themselves.

use num_bigint::BigInt;
use num_rational::BigRational;
use serde::Serialize;

use super::lambda::{build_lambda_shape, f_lambda_product, LambdaParams};
use crate::error::{precondition, Result};
use crate::exactmath::{binomial, factorial, superfactorial as phi};
use crate::shapes::{hlf_count, syt_count_oracle, Partition, SkewShape, SytMethod};

pub const CONJECTURAL: &str = "CONJECTURAL";

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum ConjectureKind {
    /// `λ = (2a+c)^{c+a}(a+c)^a`, `μ = (a+1)a^{a-1}1`.
    SchubSkew,
    /// The `c = a` case in a single-parameter form.
    Kratt,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ConjectureReport {
    pub status: &'static str,
    pub kind: ConjectureKind,
    pub a: usize,
    pub c: usize,
    pub shape: String,
    pub conjectured: String,
    /// Determinant oracle for `SchubSkew`; the `SchubSkew` closed form at
    /// `c = a` for `Kratt`.
    pub computed: String,
    pub equal: bool,
}

/// The shape the conjecture is about.
pub fn schub_skew_shape(a: usize, c: usize) -> SkewShape {
    let mut outer = vec![2 * a + c; c + a];
    outer.extend(std::iter::repeat(a + c).take(a));
    let mut inner = vec![a + 1];
    inner.extend(std::iter::repeat(a).take(a - 1));
    inner.push(1);
    SkewShape::new(Partition::new(outer).unwrap(), Partition::new(inner).unwrap()).expect("μ ⊆ λ")
}

fn schub_skew_formula(a: usize, c: usize) -> BigRational {
    let (a, c) = (a as u64, c as u64);
    let n = (2 * a + c) * (2 * a + c) - 2 * a * a - 2;
    let s = (2 * a * a + 4 * a * c + c * c) as i64;
    let a_i = a as i64;
    let bracket = BigRational::new(
        BigInt::from(a_i * a_i) * (BigInt::from(s) * s - a_i * a_i),
        BigInt::from(4 * a_i * a_i - 1),
    );
    BigRational::new(
        factorial(n) * phi(a).pow(4) * phi(c) * phi(4 * a + c),
        phi(2 * a).pow(2) * phi(4 * a + 2 * c),
    ) * bracket
}

fn kratt_formula(a: usize) -> BigRational {
    let a = a as u64;
    let n = 7 * a * a - 2;
    let a_i = a as i64;
    let bracket = BigRational::new(BigInt::from((49 * a_i * a_i - 1) * a_i.pow(4)), BigInt::from(4 * a_i * a_i - 1));
    BigRational::new(factorial(n) * phi(a).pow(5) * phi(5 * a), phi(2 * a).pow(2) * phi(6 * a)) * bracket
}

fn show(r: &BigRational) -> String {
    crate::exactmath::rational_string(r)
}

pub fn conjecture_eval(kind: ConjectureKind, a: usize, c: usize) -> Result<ConjectureReport> {
    if a == 0 {
        return Err(precondition!("a must be at least 1"));
    }
    let (conj, computed, c, shape) = match kind {
        ConjectureKind::SchubSkew => {
            let shape = schub_skew_shape(a, c);
            let f = syt_count_oracle(&shape, SytMethod::Determinant)?;
            (schub_skew_formula(a, c), BigRational::from_integer(f), c, shape)
        }
        ConjectureKind::Kratt => (kratt_formula(a), schub_skew_formula(a, a), a, schub_skew_shape(a, a)),
    };
    Ok(ConjectureReport {
        status: CONJECTURAL,
        kind,
        a,
        c,
        shape: shape.to_string(),
        equal: conj == computed,
        conjectured: show(&conj),
        computed: show(&computed),
    })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SytIdentityReport {
    pub a: usize,
    pub c: usize,
    pub d: usize,
    pub e: usize,
    pub lhs: String,
    pub rhs: String,
    pub equal: bool,
}

/// `f^π f^{(a+c)^{d+e}} = f^{(a+c)^{a+c+d+e}/a^a} C((a+c)(d+e), (a+c)e) f^{(a+c)^e} f^{(a+c)^d}`
/// with `π = Λ(a,a,c,d,e,0)`; `(a+c)^k` has `k` rows of length `a+c`.
pub fn verify_syt_identity(a: usize, c: usize, d: usize, e: usize) -> Result<SytIdentityReport> {
    let w = a + c;
    let rect = |k: usize| hlf_count(&Partition::rectangle(k, w));
    let pi = LambdaParams::new(a, a, c, d, e, 0);
    let f_pi = f_lambda_product(pi);
    debug_assert_eq!(build_lambda_shape(pi).inner(), &Partition::rectangle(a, a));
    let big = SkewShape::new(Partition::rectangle(w + d + e, w), Partition::rectangle(a, a))?;
    let f_big = syt_count_oracle(&big, SytMethod::Determinant)?;
    let lhs = f_pi * rect(d + e);
    let rhs = f_big * binomial((w * (d + e)) as i64, (w * e) as i64) * rect(e) * rect(d);
    Ok(SytIdentityReport { a, c, d, e, equal: lhs == rhs, lhs: lhs.to_string(), rhs: rhs.to_string() })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn identity_small() {
        assert!(verify_syt_identity(1, 1, 0, 0).unwrap().equal);
        assert!(verify_syt_identity(1, 1, 1, 1).unwrap().equal);
        assert!(verify_syt_identity(2, 1, 1, 0).unwrap().equal);
    }

    #[test]
    fn conjecture_reports() {
        let r = conjecture_eval(ConjectureKind::SchubSkew, 1, 0).unwrap();
        assert_eq!(r.status, CONJECTURAL);
        assert_eq!(r.shape, "[2,1]/[2,1]");
        assert!(r.equal);
        let k = conjecture_eval(ConjectureKind::Kratt, 1, 0).unwrap();
        assert_eq!(k.c, 1);
    }
}
