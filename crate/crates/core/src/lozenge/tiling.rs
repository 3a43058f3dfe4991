//! Lozenge tilings stored as displacements of the cells of a base `μ`,
//! and their correspondence with excited diagrams.

use std::collections::BTreeMap;
use std::fmt;

use num_rational::BigRational;
use num_traits::One;
use serde::Serialize;

use crate::error::{domain, Error, Result};
use crate::excited::{enumerate_excited, is_excited, ExcitedDiagram, Variant};
use crate::multivar::WeightSpec;
use crate::shapes::{Cell, Partition, SkewShape};

/// A tiled region: plane partitions on a base, optionally cut off by an
/// outer shape.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
#[serde(tag = "region", rename_all = "snake_case")]
pub enum Region {
    /// `Ω_μ(λ)`: tilings whose horizontal lozenges stay inside `[λ]`.
    BaseMuLambda { lambda: Partition, mu: Partition },
    /// `Ω_{μ,d}`: base `μ`, height at most `d`.
    MuD { mu: Partition, d: usize },
    /// The hexagon `H(a,b,c)`, i.e. base `b^a` and height `c`.
    Hexagon { a: usize, b: usize, c: usize },
}

impl Region {
    pub fn base(&self) -> Partition {
        match self {
            Region::BaseMuLambda { mu, .. } | Region::MuD { mu, .. } => mu.clone(),
            Region::Hexagon { a, b, .. } => Partition::rectangle(*a, *b),
        }
    }

    /// Largest displacement any cell may have.
    pub fn height(&self) -> usize {
        match self {
            Region::BaseMuLambda { lambda, mu } => lambda.len().saturating_sub(mu.len()),
            Region::MuD { d, .. } => *d,
            Region::Hexagon { c, .. } => *c,
        }
    }

    /// The shape `λ` with `Ω = E(λ/μ)` under the bijection.
    pub fn outer(&self) -> Partition {
        match self {
            Region::BaseMuLambda { lambda, .. } => lambda.clone(),
            _ => padded_outer(&self.base(), self.height()),
        }
    }

    pub fn skew_shape(&self) -> Result<SkewShape> {
        SkewShape::new(self.outer(), self.base())
    }
}

impl fmt::Display for Region {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Region::BaseMuLambda { lambda, mu } => write!(f, "Ω_{mu}({lambda})"),
            Region::MuD { mu, d } => write!(f, "Ω_{{{mu},{d}}}"),
            Region::Hexagon { a, b, c } => write!(f, "H({a},{b},{c})"),
        }
    }
}

/// `(μ_1+d)^d (μ+d)`: every diagonal of `μ` gets exactly `d` free cells.
pub fn padded_outer(mu: &Partition, d: usize) -> Partition {
    if mu.is_empty() {
        return Partition::empty();
    }
    let mut parts = vec![mu.first() + d; d];
    parts.extend(mu.parts().iter().map(|&m| m + d));
    Partition::new(parts).expect("padding keeps the order")
}

/// Cell `(i,j)` of the base has slid to `(i+t_{ij}, j+t_{ij})`; the slid
/// cells are the horizontal lozenges.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct LozengeTiling {
    base: Partition,
    outer: Partition,
    /// `disp[i-1][j-1] = t_{ij}`.
    disp: Vec<Vec<usize>>,
}

impl LozengeTiling {
    /// The tiling with every displacement zero.
    pub fn seed(region: &Region) -> Self {
        let base = region.base();
        let disp = base.parts().iter().map(|&p| vec![0; p]).collect();
        LozengeTiling { base, outer: region.outer(), disp }
    }

    pub fn from_displacements(region: &Region, disp: Vec<Vec<usize>>) -> Result<Self> {
        let base = region.base();
        if disp.len() != base.len() || disp.iter().enumerate().any(|(i, r)| r.len() != base.part(i + 1)) {
            return Err(Error::Shape(format!("displacement array does not have shape {base}")));
        }
        let t = LozengeTiling { base, outer: region.outer(), disp };
        if !t.is_valid() {
            return Err(domain!("displacements do not give a tiling of {region}"));
        }
        Ok(t)
    }

    pub fn base(&self) -> &Partition {
        &self.base
    }

    pub fn outer(&self) -> &Partition {
        &self.outer
    }

    pub fn displacements(&self) -> &[Vec<usize>] {
        &self.disp
    }

    /// `t_{ij}`, 1-indexed.
    pub fn displacement(&self, (i, j): Cell) -> usize {
        self.disp[i - 1][j - 1]
    }

    /// Displacements weakly increase along rows and columns, and every
    /// slid cell stays inside the outer shape.
    pub fn is_valid(&self) -> bool {
        for (r, row) in self.disp.iter().enumerate() {
            for (s, &t) in row.iter().enumerate() {
                if !self.outer.contains_cell((r + 1 + t, s + 1 + t)) {
                    return false;
                }
                if s > 0 && row[s - 1] > t {
                    return false;
                }
                if r > 0 && self.disp[r - 1][s] > t {
                    return false;
                }
            }
        }
        true
    }

    /// `hl(T)` in row-major order of the base.
    pub fn horizontal_lozenges(&self) -> Vec<Cell> {
        self.base.cells().into_iter().map(|(i, j)| (i + self.displacement((i, j)), j + self.displacement((i, j)))).collect()
    }

    /// Entries `d - t_{ij}` of the plane partition drawn by the tiling.
    pub fn plane_partition(&self, d: usize) -> Vec<Vec<usize>> {
        self.disp.iter().map(|r| r.iter().map(|&t| d - t).collect()).collect()
    }

    /// Copy with `t_{ij}` changed by `delta`, if still nonnegative.
    pub fn moved(&self, (i, j): Cell, delta: i64) -> Option<Self> {
        let t = self.disp[i - 1][j - 1] as i64 + delta;
        if t < 0 {
            return None;
        }
        let mut next = self.clone();
        next.disp[i - 1][j - 1] = t as usize;
        Some(next)
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::json!({
            "base": self.base,
            "outer": self.outer,
            "displacements": self.disp,
            "horizontal_lozenges": self.horizontal_lozenges(),
        })
    }
}

/// `τ`: the tiling whose horizontal lozenges are the cells of `D`.
pub fn tiling_from_excited(d: &ExcitedDiagram) -> Result<LozengeTiling> {
    if d.variant() != Variant::SE {
        return Err(domain!("only SE excited diagrams correspond to tilings"));
    }
    let shape = d.shape();
    let base = shape.inner().clone();
    let mut by_diag: BTreeMap<i64, Vec<Cell>> = BTreeMap::new();
    for &c in d.cells() {
        by_diag.entry(c.1 as i64 - c.0 as i64).or_default().push(c);
    }
    let mut disp: Vec<Vec<usize>> = base.parts().iter().map(|&p| vec![0; p]).collect();
    for (k, cells) in by_diag.iter_mut() {
        cells.sort();
        let orig: Vec<Cell> = base.cells().into_iter().filter(|&(i, j)| j as i64 - i as i64 == *k).collect();
        for (&(oi, oj), &(ni, _)) in orig.iter().zip(cells.iter()) {
            disp[oi - 1][oj - 1] = ni - oi;
        }
    }
    let t = LozengeTiling { base, outer: shape.outer().clone(), disp };
    debug_assert!(t.is_valid());
    Ok(t)
}

/// `τ^{-1}`.
pub fn excited_from_tiling(t: &LozengeTiling) -> Result<ExcitedDiagram> {
    let shape = SkewShape::new(t.outer.clone(), t.base.clone())?;
    ExcitedDiagram::from_cells(&shape, Variant::SE, &t.horizontal_lozenges())
}

/// Whether the slid cells form an excited diagram; the reference check
/// that [`LozengeTiling::is_valid`] must agree with.
pub fn is_tiling_by_excited(t: &LozengeTiling) -> bool {
    match SkewShape::new(t.outer.clone(), t.base.clone()) {
        Ok(shape) => {
            let cells = t.horizontal_lozenges();
            cells.iter().all(|&c| t.outer.contains_cell(c)) && is_excited(&shape, Variant::SE, &cells)
        }
        Err(_) => false,
    }
}

pub const TILING_LIMIT: usize = 2_000_000;

/// Every tiling of the region, in the order of the excited diagrams.
pub fn enumerate_tilings(region: &Region) -> Result<Vec<LozengeTiling>> {
    let shape = region.skew_shape()?;
    let diagrams = enumerate_excited(&shape, Variant::SE);
    if diagrams.len() > TILING_LIMIT {
        return Err(Error::Resource(format!("{region} has more than {TILING_LIMIT} tilings")));
    }
    diagrams.iter().map(tiling_from_excited).collect()
}

/// How horizontal lozenges are weighted.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum WeightMode {
    /// Every tiling has weight 1.
    Uniform,
    /// `x_i = λ_i - i + 1`, `y_j = j - λ'_j`.
    Hook(Partition),
    Explicit(WeightSpec),
}

impl WeightMode {
    /// `x_i - y_j` for a lozenge at `(i,j)`.
    pub fn lozenge(&self, (i, j): Cell) -> Result<BigRational> {
        match self {
            WeightMode::Uniform => Ok(BigRational::one()),
            WeightMode::Hook(lambda) => {
                let lc = lambda.conjugate();
                let h = lambda.part(i) as i64 - i as i64 + lc.part(j) as i64 - j as i64 + 1;
                Ok(BigRational::from_integer(h.into()))
            }
            WeightMode::Explicit(w) => w.diff(i, j),
        }
    }
}

/// `∏_{(i,j)∈hl(T)} (x_i - y_j)`.
pub fn tiling_weight(t: &LozengeTiling, w: &WeightMode) -> Result<BigRational> {
    let mut acc = BigRational::one();
    for c in t.horizontal_lozenges() {
        acc *= w.lozenge(c)?;
    }
    Ok(acc)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_regions() {
        let r = Region::MuD { mu: Partition::of(&[1]), d: 1 };
        let ts = enumerate_tilings(&r).unwrap();
        assert_eq!(ts.len(), 2);
        let r = Region::MuD { mu: Partition::of(&[2, 2]), d: 2 };
        assert_eq!(enumerate_tilings(&r).unwrap().len(), 20);
        let r = Region::MuD { mu: Partition::empty(), d: 3 };
        assert_eq!(enumerate_tilings(&r).unwrap().len(), 1);
        let r = Region::BaseMuLambda { lambda: Partition::of(&[3, 3, 2]), mu: Partition::of(&[2, 1]) };
        let ts = enumerate_tilings(&r).unwrap();
        assert_eq!(ts.len(), 5);
        for t in &ts {
            assert_eq!(tiling_from_excited(&excited_from_tiling(t).unwrap()).unwrap(), *t);
        }
    }

    #[test]
    fn hook_weights() {
        let r = Region::BaseMuLambda { lambda: Partition::of(&[2, 2]), mu: Partition::of(&[1]) };
        let hook = WeightMode::Hook(Partition::of(&[2, 2]));
        let mut ws: Vec<BigRational> = enumerate_tilings(&r).unwrap().iter().map(|t| tiling_weight(t, &hook).unwrap()).collect();
        ws.sort();
        assert_eq!(ws, vec![BigRational::one(), BigRational::from_integer(3.into())]);
        let empty = LozengeTiling::seed(&Region::MuD { mu: Partition::empty(), d: 2 });
        assert_eq!(tiling_weight(&empty, &hook).unwrap(), BigRational::one());
    }
}
