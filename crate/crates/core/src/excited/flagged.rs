//! The bijection between excited diagrams and flagged tableaux.

use std::collections::BTreeMap;

use serde::Serialize;

use super::diagrams::{flags, ExcitedDiagram, Variant};
use crate::error::{precondition, Result};
use crate::shapes::{Partition, SkewShape};

/// SSYT of shape `μ` whose row-`i` entries are at most `flags[i-1]`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
pub struct FlaggedTableau {
    pub shape: Partition,
    /// `entries[x-1][y-1] = T_{x,y}`.
    pub entries: Vec<Vec<usize>>,
    pub flags: Vec<usize>,
}

impl FlaggedTableau {
    pub fn is_semistandard(&self) -> bool {
        let e = &self.entries;
        for x in 0..e.len() {
            for y in 0..e[x].len() {
                if y > 0 && e[x][y - 1] > e[x][y] {
                    return false;
                }
                if x > 0 && e[x - 1][y] >= e[x][y] {
                    return false;
                }
            }
        }
        true
    }

    pub fn respects_flags(&self) -> bool {
        self.entries.iter().enumerate().all(|(x, row)| row.iter().all(|&t| t >= x + 1 && t <= self.flags[x]))
    }
}

/// `T_{x,y}` is the row where the cell starting at `(x,y)` ended up.
///
/// Moves never let one cell overtake another on its diagonal, so the cells
/// of `D` on each diagonal are matched with those of `μ` in order.
pub fn excited_to_flagged(d: &ExcitedDiagram) -> Result<FlaggedTableau> {
    if d.variant() != Variant::SE {
        return Err(precondition!("flagged tableaux are defined for SE diagrams"));
    }
    let mu = d.shape().inner().clone();
    let mut by_diag: BTreeMap<i64, Vec<usize>> = BTreeMap::new();
    for &(i, j) in d.cells() {
        by_diag.entry(j as i64 - i as i64).or_default().push(i);
    }
    let mut entries: Vec<Vec<usize>> = mu.parts().iter().map(|&p| vec![0; p]).collect();
    let mut used: BTreeMap<i64, usize> = BTreeMap::new();
    for (x, y) in mu.cells() {
        let k = y as i64 - x as i64;
        let n = used.entry(k).or_default();
        entries[x - 1][y - 1] = by_diag[&k][*n];
        *n += 1;
    }
    Ok(FlaggedTableau { shape: mu, entries, flags: flags(d.shape()) })
}

/// Inverse map: `(x,y) -> (T_{x,y}, y + T_{x,y} - x)`.
pub fn flagged_to_excited(shape: &SkewShape, t: &FlaggedTableau) -> Result<ExcitedDiagram> {
    if &t.shape != shape.inner() {
        return Err(precondition!("tableau shape {} is not the inner shape of {shape}", t.shape));
    }
    if !t.is_semistandard() || !t.respects_flags() {
        return Err(precondition!("tableau is not a flagged SSYT"));
    }
    let mut cells = Vec::new();
    for (x, y) in t.shape.cells() {
        let r = t.entries[x - 1][y - 1];
        let c = (r, y + r - x);
        if !shape.outer().contains_cell(c) {
            return Err(precondition!("cell {c:?} falls outside the outer shape"));
        }
        cells.push(c);
    }
    ExcitedDiagram::from_cells(shape, Variant::SE, &cells)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::excited::enumerate_excited;

    #[test]
    fn round_trip_small() {
        let s = SkewShape::of(&[3, 3, 2], &[2, 1]);
        let all = enumerate_excited(&s, Variant::SE);
        let mut seen = std::collections::HashSet::new();
        for d in &all {
            let t = excited_to_flagged(d).unwrap();
            assert!(t.respects_flags());
            assert!(seen.insert(t.clone()));
            assert_eq!(&flagged_to_excited(&s, &t).unwrap(), d);
        }
        let s = SkewShape::of(&[2, 2], &[1]);
        let d = ExcitedDiagram::from_cells(&s, Variant::SE, &[(2, 2)]).unwrap();
        assert_eq!(excited_to_flagged(&d).unwrap().entries, vec![vec![2]]);
    }
}
