//! Reading words of skew shapes and the skew shape of a 321-avoiding
//! permutation.

use std::collections::BTreeMap;

use super::perm::{a_reduced_word, classify, word_to_perm, Permutation};
use crate::error::{precondition, Error, Result};
use crate::shapes::{Partition, SkewShape};

/// Label each cell `(i,j)` by `c_max - (j - i) + 1` and read row by row.
pub fn reading_word(shape: &SkewShape) -> Vec<usize> {
    let cells = shape.cells();
    let Some(cmax) = cells.iter().map(|&(i, j)| j as i64 - i as i64).max() else {
        return Vec::new();
    };
    cells.iter().map(|&(i, j)| (cmax - (j as i64 - i as i64) + 1) as usize).collect()
}

/// `(w, rw(λ/μ))` with `w ∈ S_n`; `n` defaults to one more than the largest letter.
pub fn shape_perm_correspondence(shape: &SkewShape, n: Option<usize>) -> Result<(Permutation, Vec<usize>)> {
    let word = reading_word(shape);
    let n = n.unwrap_or_else(|| word.iter().max().map_or(1, |m| m + 1));
    let w = word_to_perm(&word, n)?;
    if w.length() != word.len() {
        return Err(Error::Verification(format!("reading word of {shape} is not reduced")));
    }
    Ok((w, word))
}

/// Drop empty rows and columns so the last row of `μ` is zero.
pub fn normalize_skew(shape: &SkewShape) -> SkewShape {
    let rows: Vec<(usize, usize)> = (1..=shape.outer().len())
        .map(|i| (shape.inner().part(i), shape.outer().part(i)))
        .filter(|(m, l)| l > m)
        .collect();
    let shift = rows.iter().map(|&(m, _)| m).min().unwrap_or(0);
    let outer = rows.iter().map(|&(_, l)| l - shift).collect();
    let inner = rows.iter().map(|&(m, _)| m - shift).collect();
    SkewShape::new(Partition::new(outer).expect("rows"), Partition::new(inner).expect("rows"))
        .expect("normalized shape")
}

/// For 321-avoiding `w`, the normalized skew shape whose reading word,
/// with every letter raised by the returned offset, is a reduced word of `w`.
///
/// Cells are placed from the heap of a reduced word: a prior `r-1` sits
/// directly above the cell of `r`, the latest prior `r+1` directly left of
/// it. Components are stacked by decreasing content.
pub fn skewsh(w: &Permutation) -> Result<(SkewShape, usize)> {
    if !classify(w).avoid321 {
        return Err(precondition!("{w} contains 321"));
    }
    let word = a_reduced_word(w);
    let Some(&min_letter) = word.iter().min() else {
        return Ok((SkewShape::straight(Partition::empty()), 0));
    };
    let k = word.len();
    // row(p) - row(q) = delta for each edge (p, q, delta)
    let mut adj: Vec<Vec<(usize, i64)>> = vec![Vec::new(); k];
    let mut last: BTreeMap<usize, usize> = BTreeMap::new();
    for (p, &r) in word.iter().enumerate() {
        if let Some(&q) = last.get(&(r - 1)) {
            adj[p].push((q, 1));
            adj[q].push((p, -1));
        }
        if let Some(&q) = last.get(&(r + 1)) {
            adj[p].push((q, 0));
            adj[q].push((p, 0));
        }
        last.insert(r, p);
    }
    let mut row: Vec<Option<i64>> = vec![None; k];
    let mut components: Vec<Vec<usize>> = Vec::new();
    for s in 0..k {
        if row[s].is_some() {
            continue;
        }
        row[s] = Some(0);
        let mut comp = vec![s];
        let mut stack = vec![s];
        while let Some(p) = stack.pop() {
            let rp = row[p].unwrap();
            for &(q, delta) in &adj[p] {
                let want = rp - delta;
                match row[q] {
                    None => {
                        row[q] = Some(want);
                        comp.push(q);
                        stack.push(q);
                    }
                    Some(v) if v != want => {
                        return Err(Error::Verification(format!("inconsistent heap for {w}")));
                    }
                    Some(_) => {}
                }
            }
        }
        components.push(comp);
    }
    // content of letter r is -r; higher content first
    components.sort_by_key(|c| c.iter().map(|&p| word[p]).min().unwrap());
    let mut cells = Vec::with_capacity(k);
    let mut next_row = 1i64;
    for comp in &components {
        let top = comp.iter().map(|&p| row[p].unwrap()).min().unwrap();
        let bottom = comp.iter().map(|&p| row[p].unwrap()).max().unwrap();
        for &p in comp {
            let i = row[p].unwrap() - top + next_row;
            cells.push((i, i - word[p] as i64));
        }
        next_row += bottom - top + 1;
    }
    let shape = shape_from_cells(&cells)
        .ok_or_else(|| Error::Verification(format!("heap of {w} is not a skew shape")))?;
    let offset = min_letter - 1;
    let rw: Vec<usize> = reading_word(&shape).into_iter().map(|r| r + offset).collect();
    if word_to_perm(&rw, w.n())? != *w {
        return Err(Error::Verification(format!("skew shape {shape} does not reproduce {w}")));
    }
    Ok((shape, offset))
}

fn shape_from_cells(cells: &[(i64, i64)]) -> Option<SkewShape> {
    let min_col = cells.iter().map(|&(_, j)| j).min()?;
    let rows = cells.iter().map(|&(i, _)| i).max()? as usize;
    let mut span: Vec<Option<(i64, i64)>> = vec![None; rows];
    for &(i, j) in cells {
        let j = j - min_col + 1;
        let e = &mut span[i as usize - 1];
        *e = Some(match *e {
            None => (j, j),
            Some((a, b)) => (a.min(j), b.max(j)),
        });
    }
    let mut outer = Vec::with_capacity(rows);
    let mut inner = Vec::with_capacity(rows);
    for s in span {
        let (a, b) = s?;
        outer.push(b as usize);
        inner.push(a as usize - 1);
    }
    let shape = SkewShape::new(Partition::new(outer).ok()?, Partition::new(inner).ok()?).ok()?;
    (shape.size() == cells.len()).then_some(shape)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn reading_words() {
        let s = |o: &[usize], i: &[usize]| SkewShape::of(o, i);
        assert_eq!(reading_word(&s(&[3, 2, 1], &[2, 1])), vec![1, 3, 5]);
        let (w, rw) = shape_perm_correspondence(&s(&[3, 3, 2], &[1]), None).unwrap();
        assert_eq!(rw, vec![2, 1, 4, 3, 2, 5, 4]);
        assert_eq!(w, Permutation::of(&[3, 5, 1, 6, 2, 4]));
        let (w, rw) = shape_perm_correspondence(&s(&[4, 3, 2, 1], &[2, 1]), None).unwrap();
        assert_eq!(rw, vec![2, 1, 4, 3, 6, 5, 7]);
        assert_eq!(w.to_string(), "31527486");
    }

    #[test]
    fn skew_shape_recovered() {
        let shape = SkewShape::of(&[4, 3], &[2]);
        let (w, _) = shape_perm_correspondence(&shape, None).unwrap();
        assert_eq!(skewsh(&w).unwrap(), (shape, 0));
        let (shape, off) = skewsh(&Permutation::of(&[1, 3, 2])).unwrap();
        assert_eq!((shape, off), (SkewShape::of(&[1], &[]), 1));
        assert!(skewsh(&Permutation::of(&[3, 2, 1])).is_err());
    }
}
