//! Exact arithmetic: big rationals, the factorial family and its
//! q-analogues, truncated q-series, and fraction-free determinants.

pub mod factorial;
pub mod matrix;
pub mod qpoly;
pub mod qseries;

pub use factorial::*;
pub use matrix::{bareiss_det, vandermonde, BareissRing, RationalMatrix};
pub use qpoly::{q_special_factorial, QFactorial, QPolynomial};
pub use qseries::{qseries_from_ratio, QSeries};

pub use num_bigint::BigInt;
pub use num_rational::BigRational;

use num_traits::{One, Zero};

/// Integer as a rational.
pub fn rat(n: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(n))
}

/// `p/q` as a rational; panics on `q = 0`.
pub fn ratio(p: i64, q: i64) -> BigRational {
    BigRational::new(BigInt::from(p), BigInt::from(q))
}

pub fn big(n: i64) -> BigInt {
    BigInt::from(n)
}

/// Lossless text form: `"7"` or `"-3/4"`.
pub fn rational_string(r: &BigRational) -> String {
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

/// Parse `"p"` or `"p/q"` (whitespace allowed around the parts).
pub fn parse_rational(s: &str) -> Option<BigRational> {
    let s = s.trim();
    let (p, q) = match s.split_once('/') {
        Some((p, q)) => (p.trim(), q.trim()),
        None => (s, "1"),
    };
    let p: BigInt = p.parse().ok()?;
    let q: BigInt = q.parse().ok()?;
    if q.is_zero() {
        return None;
    }
    Some(BigRational::new(p, q))
}

/// The integer value of `r`, or `None` if it is not integral.
pub fn to_integer(r: &BigRational) -> Option<BigInt> {
    r.is_integer().then(|| r.to_integer())
}

/// Product of an iterator of rationals.
pub fn rat_product<'a>(it: impl IntoIterator<Item = BigRational>) -> BigRational {
    it.into_iter().fold(BigRational::one(), |acc, x| acc * x)
}

/// Serde helper writing a rational as its lossless string.
pub fn serialize_rational<S: serde::Serializer>(r: &BigRational, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.serialize_str(&rational_string(r))
}

pub fn serialize_opt_rational<S: serde::Serializer>(r: &Option<BigRational>, s: S) -> std::result::Result<S::Ok, S::Error> {
    match r {
        Some(r) => serialize_rational(r, s),
        None => s.serialize_none(),
    }
}
