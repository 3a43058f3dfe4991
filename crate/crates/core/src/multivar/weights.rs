//! Exact evaluation points `x`, `y`.

use num_rational::BigRational;
use num_traits::Zero;

use crate::error::{domain, Error, Result};
use crate::exactmath::{parse_rational, rat, rational_string};
use crate::rng::SplitMix64;
use crate::shapes::Partition;

/// Variables `x_1, x_2, ...` and `y_1, y_2, ...`, accessed 1-indexed.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WeightSpec {
    pub x: Vec<BigRational>,
    pub y: Vec<BigRational>,
}

impl WeightSpec {
    pub fn new(x: Vec<BigRational>, y: Vec<BigRational>) -> Self {
        WeightSpec { x, y }
    }

    pub fn from_ints(x: &[i64], y: &[i64]) -> Self {
        WeightSpec { x: x.iter().map(|&v| rat(v)).collect(), y: y.iter().map(|&v| rat(v)).collect() }
    }

    /// `x_i = λ_i - i + 1`, `y_j = j - λ'_j`, so that `x_i - y_j = h_λ(i,j)`.
    pub fn hook(lambda: &Partition) -> Self {
        let lc = lambda.conjugate();
        let x = (1..=lambda.len()).map(|i| rat(lambda.part(i) as i64 - i as i64 + 1)).collect();
        let y = (1..=lambda.first()).map(|j| rat(j as i64 - lc.part(j) as i64)).collect();
        WeightSpec { x, y }
    }

    /// Random point with numerators and denominators bounded by `bound`.
    pub fn random(rng: &mut SplitMix64, nx: usize, ny: usize, bound: i64) -> Self {
        let x = (0..nx).map(|_| rng.rational(bound)).collect();
        let y = (0..ny).map(|_| rng.rational(bound)).collect();
        WeightSpec { x, y }
    }

    pub fn xi(&self, i: usize) -> Result<&BigRational> {
        self.x.get(i.wrapping_sub(1)).ok_or_else(|| domain!("x_{i} not supplied ({} given)", self.x.len()))
    }

    pub fn yj(&self, j: usize) -> Result<&BigRational> {
        self.y.get(j.wrapping_sub(1)).ok_or_else(|| domain!("y_{j} not supplied ({} given)", self.y.len()))
    }

    /// `x_i - y_j`.
    pub fn diff(&self, i: usize, j: usize) -> Result<BigRational> {
        Ok(self.xi(i)? - self.yj(j)?)
    }

    /// Every weight `x_i - y_j` is positive.
    pub fn is_positive(&self) -> bool {
        match (self.x.iter().min(), self.y.iter().max()) {
            (Some(lo), Some(hi)) => lo > hi,
            _ => true,
        }
    }

    pub fn check_covers(&self, rows: usize, cols: usize) -> Result<()> {
        if self.x.len() < rows || self.y.len() < cols {
            return Err(domain!(
                "need {rows} x-values and {cols} y-values, got {} and {}",
                self.x.len(),
                self.y.len()
            ));
        }
        Ok(())
    }

    /// `1/(x_i - y_j)` for `i <= rows`, `j <= cols`, or a singularity error.
    pub fn inverse_table(&self, rows: usize, cols: usize) -> Result<Vec<Vec<BigRational>>> {
        self.check_covers(rows, cols)?;
        let mut t = Vec::with_capacity(rows);
        for i in 0..rows {
            let mut r = Vec::with_capacity(cols);
            for j in 0..cols {
                let d = &self.x[i] - &self.y[j];
                if d.is_zero() {
                    return Err(Error::Singular(format!("x_{} = y_{}", i + 1, j + 1)));
                }
                r.push(d.recip());
            }
            t.push(r);
        }
        Ok(t)
    }

    /// Parse `"x=1,2,3;y=0,-1/2"`.
    pub fn parse(text: &str) -> Result<Self> {
        let mut x = None;
        let mut y = None;
        for part in text.split(';') {
            let (k, v) = part.split_once('=').ok_or_else(|| domain!("expected x=... or y=..., got {part:?}"))?;
            let vals: Result<Vec<BigRational>> = v
                .split(',')
                .filter(|s| !s.trim().is_empty())
                .map(|s| parse_rational(s).ok_or_else(|| domain!("bad rational {s:?}")))
                .collect();
            match k.trim() {
                "x" => x = Some(vals?),
                "y" => y = Some(vals?),
                other => return Err(domain!("unknown weight vector {other:?}")),
            }
        }
        Ok(WeightSpec { x: x.unwrap_or_default(), y: y.unwrap_or_default() })
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::json!({
            "x": self.x.iter().map(rational_string).collect::<Vec<_>>(),
            "y": self.y.iter().map(rational_string).collect::<Vec<_>>(),
        })
    }
}
