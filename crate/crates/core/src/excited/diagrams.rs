//! Excited diagrams: enumeration, membership, flags and counts.

use std::collections::{BTreeSet, HashSet, VecDeque};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::One;
use serde::Serialize;

use crate::error::{precondition, Result};
use crate::exactmath::{bareiss_det, binomial};
use crate::shapes::{Cell, SkewShape};

/// Which move generates the diagrams.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum Variant {
    /// `(i,j) -> (i+1,j+1)` starting from `[μ]`.
    SE,
    /// `(i,j) -> (i-1,j+1)` starting from the bottom-justified reversed copy of `μ`.
    NE,
}

/// A set of `|μ|` cells of `[λ]` reachable from the seed by excited moves.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ExcitedDiagram {
    shape: SkewShape,
    variant: Variant,
    cells: Vec<Cell>,
}

impl ExcitedDiagram {
    pub fn shape(&self) -> &SkewShape {
        &self.shape
    }

    pub fn variant(&self) -> Variant {
        self.variant
    }

    /// Cells in row-major order.
    pub fn cells(&self) -> &[Cell] {
        &self.cells
    }

    pub fn contains(&self, c: Cell) -> bool {
        self.cells.binary_search(&c).is_ok()
    }

    /// `[λ] \ D`, row-major.
    pub fn complement(&self) -> Vec<Cell> {
        self.shape.outer().cells().into_iter().filter(|&c| !self.contains(c)).collect()
    }

    /// Build from an arbitrary cell list, checking membership in `E(λ/μ)`.
    pub fn from_cells(shape: &SkewShape, variant: Variant, cells: &[Cell]) -> Result<Self> {
        let set: BTreeSet<Cell> = cells.iter().copied().collect();
        let v: Vec<Cell> = set.into_iter().collect();
        if v.len() != cells.len() {
            return Err(precondition!("repeated cells"));
        }
        if !is_excited(shape, variant, &v) {
            return Err(precondition!("cells do not form an excited diagram of {shape}"));
        }
        Ok(ExcitedDiagram { shape: shape.clone(), variant, cells: v })
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::json!({
            "shape": self.shape.to_string(),
            "cells": self.cells.iter().map(|&(i, j)| [i, j]).collect::<Vec<_>>(),
        })
    }
}

/// The starting diagram for a variant.
pub fn seed(shape: &SkewShape, variant: Variant) -> Vec<Cell> {
    let mu = shape.inner();
    match variant {
        Variant::SE => mu.cells(),
        Variant::NE => {
            let d = shape.outer().len();
            let l = mu.len();
            let mut out = Vec::new();
            for r in 1..=l {
                for j in 1..=mu.part(l + 1 - r) {
                    out.push((d - l + r, j));
                }
            }
            out.sort();
            out
        }
    }
}

fn moved(shape: &SkewShape, variant: Variant, d: &[Cell], forward: bool) -> Vec<Vec<Cell>> {
    let lam = shape.outer();
    let set: HashSet<Cell> = d.iter().copied().collect();
    let free = |c: (isize, isize)| -> bool {
        c.0 >= 1 && c.1 >= 1 && lam.contains_cell((c.0 as usize, c.1 as usize)) && !set.contains(&(c.0 as usize, c.1 as usize))
    };
    let (di, dj): (isize, isize) = match variant {
        Variant::SE => (1, 1),
        Variant::NE => (-1, 1),
    };
    let (di, dj) = if forward { (di, dj) } else { (-di, -dj) };
    let mut out = Vec::new();
    for (k, &(i, j)) in d.iter().enumerate() {
        let (i, j) = (i as isize, j as isize);
        if free((i + di, j)) && free((i, j + dj)) && free((i + di, j + dj)) {
            let mut next = d.to_vec();
            next[k] = ((i + di) as usize, (j + dj) as usize);
            next.sort();
            out.push(next);
        }
    }
    out
}

fn closure(shape: &SkewShape, variant: Variant, start: Vec<Cell>, forward: bool) -> HashSet<Vec<Cell>> {
    let mut seen = HashSet::new();
    let mut queue = VecDeque::new();
    seen.insert(start.clone());
    queue.push_back(start);
    while let Some(d) = queue.pop_front() {
        for n in moved(shape, variant, &d, forward) {
            if seen.insert(n.clone()) {
                queue.push_back(n);
            }
        }
    }
    seen
}

/// All excited diagrams of the given variant, sorted by cell list.
///
/// An NE seed that does not fit inside `λ` gives no diagrams.
pub fn enumerate_excited(shape: &SkewShape, variant: Variant) -> Vec<ExcitedDiagram> {
    let s = seed(shape, variant);
    if !s.iter().all(|&c| shape.outer().contains_cell(c)) {
        return Vec::new();
    }
    let mut all: Vec<Vec<Cell>> = closure(shape, variant, s, true).into_iter().collect();
    all.sort();
    all.into_iter()
        .map(|cells| ExcitedDiagram { shape: shape.clone(), variant, cells })
        .collect()
}

/// Membership test by undoing moves until the seed shows up.
pub fn is_excited(shape: &SkewShape, variant: Variant, cells: &[Cell]) -> bool {
    let mut v = cells.to_vec();
    v.sort();
    v.dedup();
    if v.len() != shape.inner().size() || !v.iter().all(|&c| shape.outer().contains_cell(c)) {
        return false;
    }
    let s = seed(shape, variant);
    closure(shape, variant, v, false).contains(&s)
}

/// `f_i` for each row `i` of `μ`: the last row the diagonal through
/// `(i, μ_i)` reaches inside `λ`.
pub fn flags(shape: &SkewShape) -> Vec<usize> {
    let (lam, mu) = (shape.outer(), shape.inner());
    (1..=mu.len())
        .map(|i| {
            let mut t = 0;
            while lam.part(i + t + 1) >= mu.part(i) + t + 1 {
                t += 1;
            }
            i + t
        })
        .collect()
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CountMethod {
    Enumerate,
    /// `det[C(f_i + μ_i - i + j - 1, f_i - 1)]`.
    Determinant,
    /// `∏_{u∈μ} (d + c(u)) / h_μ(u)`, slim shapes only.
    HookContent,
}

/// `|E(λ/μ)|`.
pub fn count_excited(shape: &SkewShape, method: CountMethod) -> Result<BigInt> {
    match method {
        CountMethod::Enumerate => Ok(BigInt::from(enumerate_excited(shape, Variant::SE).len())),
        CountMethod::Determinant => {
            let mu = shape.inner();
            let f = flags(shape);
            let l = mu.len();
            let m: Vec<Vec<BigInt>> = (1..=l)
                .map(|i| {
                    (1..=l)
                        .map(|j| {
                            let fi = f[i - 1] as i64;
                            binomial(fi + mu.part(i) as i64 - i as i64 + j as i64 - 1, fi - 1)
                        })
                        .collect()
                })
                .collect();
            Ok(bareiss_det(m))
        }
        CountMethod::HookContent => {
            if !shape.is_slim() {
                return Err(precondition!("{shape} is not slim"));
            }
            let d = shape.outer().len() as i64;
            let mu = shape.inner();
            let mut acc = BigRational::one();
            for (i, j) in mu.cells() {
                let content = j as i64 - i as i64;
                acc *= BigRational::new(BigInt::from(d + content), BigInt::from(mu.hook((i, j))? as i64));
            }
            Ok(acc.to_integer())
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn known_counts() {
        let s = SkewShape::of(&[3, 3, 2], &[2, 1]);
        assert_eq!(enumerate_excited(&s, Variant::SE).len(), 5);
        assert_eq!(flags(&s), vec![2, 3]);
        assert_eq!(count_excited(&s, CountMethod::Determinant).unwrap(), BigInt::from(5));
        assert_eq!(enumerate_excited(&SkewShape::of(&[4, 4, 4], &[2, 1]), Variant::SE).len(), 8);
        assert_eq!(flags(&SkewShape::of(&[2, 2], &[1])), vec![2]);
        assert!(count_excited(&s, CountMethod::HookContent).is_err());
    }

    #[test]
    fn membership_by_reduction() {
        let s = SkewShape::of(&[2, 2], &[1]);
        assert!(is_excited(&s, Variant::SE, &[(2, 2)]));
        assert!(!is_excited(&s, Variant::SE, &[(2, 1)]));
    }
}
