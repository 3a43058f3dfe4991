//! Factorial Schur functions `s_μ^{(d)}(x | a)`.

use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::error::{domain, precondition, Error, Result};
use crate::exactmath::{vandermonde, RationalMatrix};
use crate::shapes::Partition;

/// Largest `|μ|` accepted by the tableau method.
pub const TABLEAU_LIMIT: usize = 14;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FactorialSchurInput {
    pub mu: Partition,
    pub d: usize,
    /// `x_1..x_d`.
    pub x: Vec<BigRational>,
    /// `a_1, a_2, ...`.
    pub a: Vec<BigRational>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FsMethod {
    /// `det[∏_{k ≤ μ_j+d-j} (x_i - a_k)] / ∏_{i<j}(x_i - x_j)`.
    Determinant,
    /// `Σ_T ∏_u (x_{T(u)} - a_{T(u)+c(u)})` over SSYT with entries at most `d`.
    Tableaux,
}

pub fn factorial_schur(input: &FactorialSchurInput, method: FsMethod) -> Result<BigRational> {
    let FactorialSchurInput { mu, d, x, a } = input;
    let d = *d;
    if mu.len() > d {
        return Ok(BigRational::zero());
    }
    if x.len() < d {
        return Err(domain!("{d} x-values needed, {} given", x.len()));
    }
    if mu.is_empty() {
        return Ok(BigRational::one());
    }
    match method {
        FsMethod::Determinant => {
            let need = mu.first() + d - 1;
            if a.len() < need {
                return Err(domain!("{need} a-values needed, {} given", a.len()));
            }
            for i in 0..d {
                for k in i + 1..d {
                    if x[i] == x[k] {
                        return Err(Error::Singular(format!("x_{} = x_{}", i + 1, k + 1)));
                    }
                }
            }
            let m = RationalMatrix::from_fn(d, d, |i, j| {
                let top = mu.part(j + 1) + d - (j + 1);
                (0..top).fold(BigRational::one(), |acc, k| acc * (&x[i] - &a[k]))
            });
            Ok(m.det_exact()? / vandermonde(&x[..d]))
        }
        FsMethod::Tableaux => {
            if mu.size() > TABLEAU_LIMIT {
                return Err(Error::Resource(format!("|μ| = {} exceeds {TABLEAU_LIMIT}", mu.size())));
            }
            let cells = mu.cells();
            let mut total = BigRational::zero();
            for t in semistandard_tableaux(mu, d) {
                let mut w = BigRational::one();
                for &(i, j) in &cells {
                    let v = t[i - 1][j - 1];
                    let idx = v + j - i;
                    let ak = a.get(idx - 1).ok_or_else(|| precondition!("a_{idx} not supplied"))?;
                    w *= &x[v - 1] - ak;
                }
                total += w;
            }
            Ok(total)
        }
    }
}

/// Every SSYT of shape `μ` with entries in `1..=max`, as row vectors.
pub fn semistandard_tableaux(mu: &Partition, max: usize) -> Vec<Vec<Vec<usize>>> {
    let cells = mu.cells();
    let mut t: Vec<Vec<usize>> = mu.parts().iter().map(|&p| vec![0; p]).collect();
    let mut out = Vec::new();
    fn rec(cells: &[(usize, usize)], k: usize, max: usize, t: &mut Vec<Vec<usize>>, out: &mut Vec<Vec<Vec<usize>>>) {
        if k == cells.len() {
            out.push(t.clone());
            return;
        }
        let (i, j) = (cells[k].0 - 1, cells[k].1 - 1);
        let mut lo = 1;
        if j > 0 {
            lo = lo.max(t[i][j - 1]);
        }
        if i > 0 {
            lo = lo.max(t[i - 1][j] + 1);
        }
        for v in lo..=max {
            t[i][j] = v;
            rec(cells, k + 1, max, t, out);
        }
        t[i][j] = 0;
    }
    rec(&cells, 0, max, &mut t, &mut out);
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactmath::rat;

    #[test]
    fn single_box() {
        let inp = FactorialSchurInput {
            mu: Partition::of(&[1]),
            d: 2,
            x: vec![rat(3), rat(5)],
            a: vec![rat(1), rat(2)],
        };
        assert_eq!(factorial_schur(&inp, FsMethod::Tableaux).unwrap(), rat(5));
        assert_eq!(factorial_schur(&inp, FsMethod::Determinant).unwrap(), rat(5));
    }
}
