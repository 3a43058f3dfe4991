//! The multivariate excited-diagram sums `G` and `F` and their hook
//! specializations.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use super::fschur::{factorial_schur, FactorialSchurInput, FsMethod};
use super::weights::WeightSpec;
use crate::error::{domain, Error, Result};
use crate::excited::{enumerate_excited, ExcitedDiagram, Variant};
use crate::exactmath::QSeries;
use crate::shapes::{Partition, SkewShape};

/// `z^{⟨λ⟩}`: walking the boundary of `λ` inside the `d × (n-d)` box, the
/// vertical step of row `i` sits at `λ_i + d - i + 1` and gets `x_i`, the
/// horizontal step of column `j` sits at `j + d - λ'_j` and gets `y_j`.
pub fn z_sequence(lambda: &Partition, d: usize, n: usize, w: &WeightSpec) -> Result<Vec<BigRational>> {
    if lambda.len() > d || n < d || lambda.first() > n - d {
        return Err(domain!("{lambda} does not fit in a {d} x {} box", n.saturating_sub(d)));
    }
    let lc = lambda.conjugate();
    let mut z: Vec<Option<BigRational>> = vec![None; n];
    for i in 1..=d {
        z[lambda.part(i) + d - i] = Some(w.xi(i)?.clone());
    }
    for j in 1..=n - d {
        let pos = j + d - lc.part(j);
        debug_assert!(z[pos - 1].is_none());
        z[pos - 1] = Some(w.yj(j)?.clone());
    }
    Ok(z.into_iter().map(|v| v.expect("every step assigned once")).collect())
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum GMethod {
    /// `Σ_D ∏_{(i,j)∈D} (x_i - y_j)`.
    Sum,
    /// `s_μ^{(d)}(x | z^{⟨λ⟩})` with `d = ℓ(λ)`.
    FactorialSchur,
}

/// `G_{λ/μ}` from an already enumerated list of diagrams.
pub fn g_from_diagrams(diagrams: &[ExcitedDiagram], w: &WeightSpec) -> Result<BigRational> {
    let mut total = BigRational::zero();
    for d in diagrams {
        let mut p = BigRational::one();
        for &(i, j) in d.cells() {
            p *= w.diff(i, j)?;
        }
        total += p;
    }
    Ok(total)
}

/// `F_{λ/μ}` from a list of diagrams: `Σ_D ∏_{[λ]∖D} 1/(x_i - y_j)`.
pub fn f_from_diagrams(shape: &SkewShape, diagrams: &[ExcitedDiagram], w: &WeightSpec) -> Result<BigRational> {
    let inv = w.inverse_table(shape.outer().len(), shape.outer().first())?;
    let mut total = BigRational::zero();
    for d in diagrams {
        let mut p = BigRational::one();
        for (i, j) in d.complement() {
            p *= &inv[i - 1][j - 1];
        }
        total += p;
    }
    Ok(total)
}

pub fn g_eval(shape: &SkewShape, w: &WeightSpec, method: GMethod) -> Result<BigRational> {
    let lam = shape.outer();
    let d = lam.len();
    w.check_covers(d, lam.first())?;
    match method {
        GMethod::Sum => g_from_diagrams(&enumerate_excited(shape, Variant::SE), w),
        GMethod::FactorialSchur => {
            let n = d + lam.first();
            let z = z_sequence(lam, d, n, w)?;
            let input = FactorialSchurInput { mu: shape.inner().clone(), d, x: w.x[..d].to_vec(), a: z };
            match factorial_schur(&input, FsMethod::Determinant) {
                Err(Error::Singular(_)) => factorial_schur(&input, FsMethod::Tableaux),
                r => r,
            }
        }
    }
}

pub fn f_eval(shape: &SkewShape, w: &WeightSpec) -> Result<BigRational> {
    f_from_diagrams(shape, &enumerate_excited(shape, Variant::SE), w)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum HookMode {
    Numeric,
    QSeries(usize),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum HookValue {
    Numeric(BigRational),
    Series(QSeries),
}

/// `F` at the hook point, giving `f^{λ/μ}/|λ/μ|!`, or its q-analogue
/// `s_{λ/μ}(1, q, q^2, ...)`.
///
/// At `x_i = q^{λ_i-i+1}`, `y_j = q^{j-λ'_j}` each factor becomes
/// `1/(x_i - y_j) = -q^{λ'_j-j}/(1-q^{h(i,j)})`. The sign and the content
/// shift `q^{C(λ/μ)}` cancel, leaving `Σ_D ∏ q^{λ'_j-i}/(1-q^{h(i,j)})`.
pub fn specialize_hooks(shape: &SkewShape, mode: HookMode) -> Result<HookValue> {
    let diagrams = enumerate_excited(shape, Variant::SE);
    let lam = shape.outer();
    match mode {
        HookMode::Numeric => {
            let w = WeightSpec::hook(lam);
            Ok(HookValue::Numeric(f_from_diagrams(shape, &diagrams, &w)?))
        }
        HookMode::QSeries(order) => {
            let lc = lam.conjugate();
            let content: i64 = shape.cells().iter().map(|&(i, j)| j as i64 - i as i64).sum();
            let mut total = QSeries::zero(order);
            for d in &diagrams {
                let comp = d.complement();
                let hooks: Vec<usize> = comp.iter().map(|&c| lam.hook(c)).collect::<Result<_>>()?;
                let shift: i64 = comp.iter().map(|&(_, j)| lc.part(j) as i64 - j as i64).sum::<i64>() + content;
                total = total.add(&QSeries::from_factors(&[], &hooks, shift, order)?);
            }
            Ok(HookValue::Series(total))
        }
    }
}

/// `|λ/μ|! · F` at the hook point, as an integer.
pub fn nhlf_count(shape: &SkewShape) -> Result<BigInt> {
    match specialize_hooks(shape, HookMode::Numeric)? {
        HookValue::Numeric(v) => {
            let n = crate::exactmath::factorial(shape.size() as u64);
            let r = v * BigRational::from_integer(n);
            assert!(r.is_integer(), "hook sum times n! must be an integer");
            Ok(r.to_integer())
        }
        HookValue::Series(_) => unreachable!(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactmath::ratio;

    #[test]
    fn z_example() {
        let xs: Vec<i64> = vec![1, 2, 3, 4];
        let ys: Vec<i64> = vec![-1, -2, -3, -4, -5];
        let w = WeightSpec::from_ints(&xs, &ys);
        let z = z_sequence(&Partition::of(&[5, 5, 3, 3]), 4, 9, &w).unwrap();
        let got: Vec<String> = z.iter().map(|v| v.to_string()).collect();
        assert_eq!(got, ["-1", "-2", "-3", "4", "3", "-4", "-5", "2", "1"]);
    }

    #[test]
    fn hook_value_is_positive() {
        let s = SkewShape::of(&[3, 3, 2], &[2, 1]);
        assert_eq!(specialize_hooks(&s, HookMode::Numeric).unwrap(), HookValue::Numeric(ratio(2, 15)));
    }
}
