//! Named permutation families and the product formulas for their
//! principal evaluations.

use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::One;
use serde::Serialize;

use super::perm::{word_to_perm, Permutation};
use super::words::reading_word;
use crate::error::{domain, Error, Result};
use crate::excited::{count_excited, CountMethod};
use crate::exactmath::{
    double_factorial, double_superfactorial as gimel, factorial, super_doublefactorial as psi, superfactorial as phi,
};
use crate::shapes::{euler_number, macmahon_count, Partition, SkewShape};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Family {
    /// `n ⋯ 2 1`.
    W0 { n: usize },
    /// `(b+1, ..., a+b, 1, ..., b)`, dominant of shape `b^a`.
    Box { a: usize, b: usize },
    /// `2413 ⊗ 1^a`.
    V { a: usize },
    /// `(a+1, ..., 2a-1, 2a+1, 1, ..., a-1, 2a, a)`.
    W { a: usize },
    /// `351624 ⊗ 1^a`.
    S { a: usize },
    /// From the reading word of `δ_{4a}/a^a`, in `S_{8a-2}`.
    T { a: usize },
    /// `2143⋯(2n)(2n-1)`.
    Doublefact { n: usize },
    /// `(2143⋯(2n)(2n-1)) ⊗ 1^a`.
    Zigzag { n: usize, a: usize },
    /// From `δ_{n+2}/δ_n`, in `S_{2n+2}`.
    X { n: usize },
    /// From `(n+1)^2 n(n-1)⋯2/δ_n`, in `S_{2n+2}`.
    Y { n: usize },
    /// From `(n+2)^3 (n+1) n⋯3/δ_n`, in `S_{2n+4}`.
    Z { n: usize },
}

impl Family {
    pub const KINDS: [&'static str; 11] = ["w0", "box", "v", "w", "s", "t", "doublefact", "zigzag", "x", "y", "z"];

    /// Build from a kind name and the parameters `n`/`a` and `b`.
    pub fn from_parts(kind: &str, n: Option<usize>, a: Option<usize>, b: Option<usize>) -> Result<Self> {
        let need = |v: Option<usize>, name: &str| v.ok_or_else(|| domain!("family {kind} needs --{name}"));
        let first = |name: &str| n.or(a).ok_or_else(|| domain!("family {kind} needs --{name}"));
        let f = match kind {
            "w0" => Family::W0 { n: first("n")? },
            "box" | "u" => Family::Box { a: need(a, "a")?, b: need(b, "b")? },
            "v" => Family::V { a: first("a")? },
            "w" => Family::W { a: first("a")? },
            "s" => Family::S { a: first("a")? },
            "t" => Family::T { a: first("a")? },
            "doublefact" => Family::Doublefact { n: first("n")? },
            "zigzag" => Family::Zigzag { n: need(n, "n")?, a: need(a, "a")? },
            "x" => Family::X { n: first("n")? },
            "y" => Family::Y { n: first("n")? },
            "z" => Family::Z { n: first("n")? },
            _ => return Err(domain!("unknown family {kind:?}; expected one of {:?}", Self::KINDS)),
        };
        Ok(f)
    }

    fn params(&self) -> Vec<usize> {
        match *self {
            Family::W0 { n } | Family::Doublefact { n } | Family::X { n } | Family::Y { n } | Family::Z { n } => {
                vec![n]
            }
            Family::V { a } | Family::W { a } | Family::S { a } | Family::T { a } => vec![a],
            Family::Box { a, b } => vec![a, b],
            Family::Zigzag { n, a } => vec![n, a],
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let name = match self {
            Family::W0 { .. } => "w0",
            Family::Box { .. } => "box",
            Family::V { .. } => "v",
            Family::W { .. } => "w",
            Family::S { .. } => "s",
            Family::T { .. } => "t",
            Family::Doublefact { .. } => "doublefact",
            Family::Zigzag { .. } => "zigzag",
            Family::X { .. } => "x",
            Family::Y { .. } => "y",
            Family::Z { .. } => "z",
        };
        let ps: Vec<String> = self.params().iter().map(|p| p.to_string()).collect();
        write!(f, "{name}({})", ps.join(","))
    }
}

fn zigzag_base(n: usize) -> Permutation {
    Permutation::of(&(1..=n).flat_map(|k| [2 * k, 2 * k - 1]).collect::<Vec<_>>())
}

fn from_shape(outer: Vec<usize>, inner: Partition, n: usize) -> Permutation {
    let shape = SkewShape::new(Partition::new(outer).expect("family shape"), inner).expect("family shape");
    word_to_perm(&reading_word(&shape), n).expect("letters fit")
}

pub fn family(kind: Family) -> Result<Permutation> {
    if kind.params().contains(&0) {
        return Err(domain!("{kind}: parameters must be at least 1"));
    }
    let w = match kind {
        Family::W0 { n } => Permutation::of(&(1..=n).rev().collect::<Vec<_>>()),
        Family::Box { a, b } => Permutation::of(&(b + 1..=a + b).chain(1..=b).collect::<Vec<_>>()),
        Family::V { a } => Permutation::of(&[2, 4, 1, 3]).kron(a),
        Family::W { a } => {
            let mut v: Vec<usize> = (a + 1..2 * a).collect();
            v.push(2 * a + 1);
            v.extend(1..a);
            v.extend([2 * a, a]);
            Permutation::of(&v)
        }
        Family::S { a } => Permutation::of(&[3, 5, 1, 6, 2, 4]).kron(a),
        Family::T { a } => from_shape(Partition::staircase(4 * a).parts().to_vec(), Partition::rectangle(a, a), 8 * a - 2),
        Family::Doublefact { n } => zigzag_base(n),
        Family::Zigzag { n, a } => zigzag_base(n).kron(a),
        Family::X { n } => from_shape(Partition::staircase(n + 2).parts().to_vec(), Partition::staircase(n), 2 * n + 2),
        Family::Y { n } => {
            let mut outer = vec![n + 1, n + 1];
            outer.extend((2..=n).rev());
            from_shape(outer, Partition::staircase(n), 2 * n + 2)
        }
        Family::Z { n } => {
            let mut outer = vec![n + 2; 3];
            outer.extend((3..=n + 1).rev());
            from_shape(outer, Partition::staircase(n), 2 * n + 4)
        }
    };
    Ok(w)
}

fn r(num: BigInt, den: BigInt) -> BigRational {
    BigRational::new(num, den)
}

fn int(n: u64) -> BigInt {
    BigInt::from(n)
}

fn integral(v: BigRational, kind: Family) -> Result<BigInt> {
    if !v.is_integer() {
        return Err(Error::Verification(format!("closed form for {kind} gave the non-integer {v}")));
    }
    Ok(v.to_integer())
}

/// `Υ_w(c)` for `w = family(kind)` by its product formula.
///
/// Only `w0`, `box`, `v` (with `c ≥ a`) and `w` carry a shift `c`; the
/// others require `c = 0`.
pub fn upsilon_closed_form(kind: Family, c: usize) -> Result<BigInt> {
    if kind.params().contains(&0) {
        return Err(domain!("{kind}: parameters must be at least 1"));
    }
    let no_shift = || -> Result<()> {
        if c != 0 {
            return Err(domain!("{kind} has no closed form with c = {c}"));
        }
        Ok(())
    };
    let c64 = c as u64;
    let v = match kind {
        Family::W0 { n } => {
            let n = n as u64;
            r(
                phi(2 * c64 + 2 * n - 1) * phi(n) * gimel(2 * c64 + 1) * gimel(2 * n - 1),
                phi(n + 2 * c64) * phi(2 * n - 1) * gimel(2 * c64 + 2 * n - 1),
            )
        }
        Family::Box { a, b } => BigRational::from_integer(macmahon_count(a, b, c)),
        Family::V { a } => {
            if c < a {
                return Err(domain!("{kind}: the product formula needs c ≥ a, got c = {c}"));
            }
            let a = a as u64;
            r(
                phi(4 * a + c64) * phi(c64) * phi(a).pow(4) * phi(3 * a).pow(2),
                phi(3 * a + c64) * phi(a + c64) * phi(2 * a).pow(3) * phi(4 * a),
            )
        }
        Family::W { a } => {
            let a = a as u64;
            r(phi(2 * a + c64) * phi(a).pow(2) * phi(c64), phi(a + c64).pow(2) * phi(2 * a))
                * r(
                    int(a * (2 * a + c64) * (2 * a * c64 + 4 * a * a - 1)),
                    int(2 * (4 * a * a - 1)),
                )
        }
        Family::S { a } => {
            no_shift()?;
            let a = a as u64;
            r(phi(a).pow(5) * phi(3 * a).pow(2) * phi(5 * a), phi(2 * a).pow(4) * phi(4 * a).pow(2))
        }
        Family::T { a } => {
            no_shift()?;
            let a = a as u64;
            r(
                phi(a).pow(3) * phi(3 * a) * phi(4 * a - 1) * phi(8 * a - 2) * psi(a) * psi(3 * a),
                phi(2 * a).pow(3)
                    * phi(3 * a - 1)
                    * phi(5 * a - 1)
                    * psi(2 * a).pow(2)
                    * psi(4 * a)
                    * gimel(8 * a - 2),
            )
        }
        Family::Doublefact { n } => {
            no_shift()?;
            BigRational::from_integer(double_factorial(2 * n as i64 - 1))
        }
        Family::Zigzag { n, a } => {
            no_shift()?;
            let (n, a) = (n as u64, a as u64);
            let mut v = r(phi(2 * n * a) * phi(a).pow(2 * n as u32 - 2), phi(2 * a).pow(n as u32));
            let mut p = BigRational::one();
            for k in 1..n {
                p *= r(phi(2 * k * a), phi((2 * k + 1) * a));
            }
            v *= &p * &p;
            v
        }
        Family::X { n } => {
            no_shift()?;
            BigRational::from_integer(euler_number(2 * n + 1))
        }
        Family::Y { n } => {
            no_shift()?;
            r(factorial(n as u64) * euler_number(2 * n + 1), BigInt::from(2).pow(n as u32))
        }
        Family::Z { n } => {
            no_shift()?;
            let e = euler_number(2 * n + 1);
            let n64 = n as u64;
            r(
                int(n64 + 1) * factorial(2 * n64 + 3) * &e * &e,
                factorial(n64)
                    * BigInt::from(2).pow(5 * n as u32 + 1)
                    * (BigInt::from(2).pow(2 * n as u32 + 2) - 1),
            )
        }
    };
    integral(v, kind)
}

/// `Υ_w(c) = |E((1^c ⋄ μ)/μ)|` for a dominant `w` of shape `μ`, where
/// `1^c ⋄ μ = (c+μ_1)^c (c+μ_1)(c+μ_2)⋯`.
pub fn upsilon_dominant(mu: &Partition, c: usize) -> Result<BigInt> {
    let mut outer = vec![mu.first() + c; c];
    outer.extend(mu.parts().iter().map(|&m| m + c));
    let shape = SkewShape::new(Partition::new(outer)?, mu.clone())?;
    count_excited(&shape, CountMethod::Determinant)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn constructions() {
        assert_eq!(family(Family::Box { a: 2, b: 2 }).unwrap().to_string(), "3412");
        assert_eq!(family(Family::X { n: 3 }).unwrap().to_string(), "31527486");
        assert_eq!(family(Family::S { a: 1 }).unwrap().to_string(), "351624");
        assert_eq!(family(Family::W { a: 2 }).unwrap().to_string(), "35142");
        assert!(family(Family::W0 { n: 0 }).is_err());
    }

    #[test]
    fn closed_values() {
        assert_eq!(upsilon_closed_form(Family::Box { a: 2, b: 2 }, 1).unwrap(), BigInt::from(6));
        assert_eq!(upsilon_closed_form(Family::Doublefact { n: 2 }, 0).unwrap(), BigInt::from(3));
        assert_eq!(upsilon_closed_form(Family::X { n: 1 }, 0).unwrap(), BigInt::from(2));
        assert_eq!(upsilon_closed_form(Family::W0 { n: 3 }, 1).unwrap(), BigInt::from(5));
        assert!(upsilon_closed_form(Family::V { a: 2 }, 1).is_err());
        assert!(upsilon_closed_form(Family::S { a: 1 }, 1).is_err());
        assert_eq!(upsilon_dominant(&Partition::of(&[2, 1]), 1).unwrap(), BigInt::from(5));
    }
}
