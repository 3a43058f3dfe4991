//! Excited diagrams as families of non-intersecting lattice paths.
//!
//! The complement `[λ] \ D` of an excited diagram splits uniquely into
//! north/east paths whose endpoints depend only on `λ/μ`.

use std::collections::HashSet;

use serde::Serialize;

use super::diagrams::{ExcitedDiagram, Variant};
use crate::error::{precondition, Result};
use crate::shapes::{Cell, SkewShape};

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct LatticePath {
    pub start: Cell,
    pub end: Cell,
    /// Cells from `start` to `end`, each step north or east.
    pub cells: Vec<Cell>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PathFamily {
    pub shape: SkewShape,
    pub paths: Vec<LatticePath>,
}

impl PathFamily {
    pub fn support(&self) -> Vec<Cell> {
        let mut v: Vec<Cell> = self.paths.iter().flat_map(|p| p.cells.iter().copied()).collect();
        v.sort();
        v
    }

    pub fn is_non_intersecting(&self) -> bool {
        let mut seen = HashSet::new();
        self.paths.iter().flat_map(|p| p.cells.iter()).all(|c| seen.insert(*c))
    }
}

/// Endpoints of the family attached to `[μ]` itself, found by peeling
/// greedy paths off `[λ] \ [μ]`: start at the lowest cell of the leftmost
/// column and go north when possible, east otherwise.
pub fn endpoints(shape: &SkewShape) -> Result<Vec<(Cell, Cell)>> {
    if !shape.is_connected() {
        return Err(precondition!("{shape} is not connected"));
    }
    let mut left: HashSet<Cell> = shape.cells().into_iter().collect();
    let mut out = Vec::new();
    while !left.is_empty() {
        let start = *left.iter().min_by_key(|&&(i, j)| (j, std::cmp::Reverse(i))).unwrap();
        let mut cur = start;
        left.remove(&cur);
        loop {
            let north = (cur.0.wrapping_sub(1), cur.1);
            let east = (cur.0, cur.1 + 1);
            if cur.0 > 1 && left.contains(&north) {
                cur = north;
            } else if left.contains(&east) {
                cur = east;
            } else {
                break;
            }
            left.remove(&cur);
        }
        out.push((start, cur));
    }
    Ok(out)
}

/// Split `[λ] \ D` into the non-intersecting family.
pub fn excited_to_paths(d: &ExcitedDiagram) -> Result<PathFamily> {
    if d.variant() != Variant::SE {
        return Err(precondition!("path families are defined for SE diagrams"));
    }
    let support: Vec<Cell> = d.complement();
    let family = trace(d.shape(), &support)?;
    Ok(family)
}

fn trace(shape: &SkewShape, support: &[Cell]) -> Result<PathFamily> {
    let ends = endpoints(shape)?;
    let mut left: HashSet<Cell> = support.iter().copied().collect();
    let mut paths = Vec::new();
    for (start, end) in ends {
        if !left.remove(&start) {
            return Err(precondition!("start {start:?} is not in the support"));
        }
        let mut cells = vec![start];
        let mut cur = start;
        while cur != end {
            let north = (cur.0.wrapping_sub(1), cur.1);
            let east = (cur.0, cur.1 + 1);
            if cur.0 > end.0 && left.contains(&north) {
                cur = north;
            } else if cur.1 < end.1 && left.contains(&east) {
                cur = east;
            } else {
                return Err(precondition!("path from {start:?} cannot reach {end:?}"));
            }
            left.remove(&cur);
            cells.push(cur);
        }
        paths.push(LatticePath { start, end, cells });
    }
    if !left.is_empty() {
        return Err(precondition!("{} support cells not covered by paths", left.len()));
    }
    Ok(PathFamily { shape: shape.clone(), paths })
}

/// Recover `D` from the support of a family.
pub fn paths_to_excited(family: &PathFamily) -> Result<ExcitedDiagram> {
    if !family.is_non_intersecting() {
        return Err(precondition!("paths intersect"));
    }
    let support: HashSet<Cell> = family.support().into_iter().collect();
    let cells: Vec<Cell> = family.shape.outer().cells().into_iter().filter(|c| !support.contains(c)).collect();
    ExcitedDiagram::from_cells(&family.shape, Variant::SE, &cells)
}

/// Decompose an arbitrary support set, checking it is a valid family.
pub fn paths_from_support(shape: &SkewShape, support: &[Cell]) -> Result<PathFamily> {
    trace(shape, support)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::excited::enumerate_excited;

    #[test]
    fn example_endpoints() {
        let s = SkewShape::of(&[4, 4, 4], &[2, 1]);
        assert_eq!(endpoints(&s).unwrap(), vec![((3, 1), (1, 4)), ((3, 3), (2, 4))]);
        for d in enumerate_excited(&s, Variant::SE) {
            let f = excited_to_paths(&d).unwrap();
            assert_eq!(paths_to_excited(&f).unwrap(), d);
        }
        assert!(endpoints(&SkewShape::of(&[2, 1], &[1])).is_err());
    }
}
