use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A cell `(row, col)`, both 1-indexed.
pub type Cell = (usize, usize);

/// Weakly decreasing sequence of positive integers.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default, Serialize, Deserialize)]
#[serde(try_from = "Vec<usize>", into = "Vec<usize>")]
pub struct Partition(Vec<usize>);

impl Partition {
    /// Validates; trailing zeros are dropped, other zeros are an error.
    pub fn new(mut parts: Vec<usize>) -> Result<Self> {
        while parts.last() == Some(&0) {
            parts.pop();
        }
        if let Some(i) = parts.windows(2).position(|w| w[0] < w[1]) {
            return Err(Error::Shape(format!(
                "parts not weakly decreasing at index {}: {:?}",
                i + 1,
                parts
            )));
        }
        Ok(Partition(parts))
    }

    /// Panics on invalid input; for literals in code.
    pub fn of(parts: &[usize]) -> Self {
        Self::new(parts.to_vec()).expect("invalid partition literal")
    }

    pub fn empty() -> Self {
        Partition(Vec::new())
    }

    /// `b^a`: `a` rows of length `b`.
    pub fn rectangle(a: usize, b: usize) -> Self {
        if b == 0 {
            return Self::empty();
        }
        Partition(vec![b; a])
    }

    /// `δ_n = (n-1, ..., 2, 1)`.
    pub fn staircase(n: usize) -> Self {
        Partition((1..n).rev().collect())
    }

    pub fn parts(&self) -> &[usize] {
        &self.0
    }

    /// `λ_i`, 1-indexed, zero past the end.
    pub fn part(&self, i: usize) -> usize {
        if i == 0 {
            return 0;
        }
        self.0.get(i - 1).copied().unwrap_or(0)
    }

    /// Number of nonzero parts, `ℓ(λ)`.
    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn size(&self) -> usize {
        self.0.iter().sum()
    }

    pub fn first(&self) -> usize {
        self.part(1)
    }

    pub fn conjugate(&self) -> Partition {
        let w = self.first();
        Partition((1..=w).map(|j| self.0.iter().take_while(|&&p| p >= j).count()).collect())
    }

    pub fn contains_cell(&self, (i, j): Cell) -> bool {
        i >= 1 && j >= 1 && j <= self.part(i)
    }

    /// `μ ⊆ λ` as diagrams.
    pub fn contains(&self, other: &Partition) -> bool {
        other.len() <= self.len() && other.0.iter().zip(&self.0).all(|(a, b)| a <= b)
    }

    /// Cells in row-major order.
    pub fn cells(&self) -> Vec<Cell> {
        let mut out = Vec::with_capacity(self.size());
        for (i, &p) in self.0.iter().enumerate() {
            for j in 1..=p {
                out.push((i + 1, j));
            }
        }
        out
    }

    /// Hook length `λ_i - i + λ'_j - j + 1` of a cell inside `λ`.
    pub fn hook(&self, (i, j): Cell) -> Result<usize> {
        if !self.contains_cell((i, j)) {
            return Err(Error::Domain(format!("cell ({i},{j}) is not in {self}")));
        }
        let col = self.0.iter().take_while(|&&p| p >= j).count();
        Ok(self.part(i) - j + col - i + 1)
    }

    /// Add `k` to every part.
    pub fn plus_each(&self, k: usize) -> Partition {
        Partition(self.0.iter().map(|p| p + k).collect())
    }

    /// All partitions contained in the `rows × cols` rectangle.
    pub fn all_in_box(rows: usize, cols: usize) -> Vec<Partition> {
        let mut out = Vec::new();
        let mut cur = Vec::new();
        fn rec(rows: usize, max: usize, cur: &mut Vec<usize>, out: &mut Vec<Partition>) {
            out.push(Partition::new(cur.clone()).unwrap());
            if cur.len() == rows {
                return;
            }
            for v in 1..=max {
                cur.push(v);
                rec(rows, v, cur, out);
                cur.pop();
            }
        }
        rec(rows, cols, &mut cur, &mut out);
        out.sort();
        out
    }

    /// All partitions of `n`.
    pub fn all_of_size(n: usize) -> Vec<Partition> {
        let mut out = Vec::new();
        fn rec(rem: usize, max: usize, cur: &mut Vec<usize>, out: &mut Vec<Partition>) {
            if rem == 0 {
                out.push(Partition(cur.clone()));
                return;
            }
            for v in (1..=max.min(rem)).rev() {
                cur.push(v);
                rec(rem - v, v, cur, out);
                cur.pop();
            }
        }
        rec(n, n, &mut Vec::new(), &mut out);
        out
    }

    /// All partitions contained in `self`.
    pub fn subpartitions(&self) -> Vec<Partition> {
        let mut out = Vec::new();
        fn rec(outer: &[usize], max: usize, cur: &mut Vec<usize>, out: &mut Vec<Partition>) {
            out.push(Partition::new(cur.clone()).unwrap());
            let i = cur.len();
            if i == outer.len() {
                return;
            }
            for v in 1..=max.min(outer[i]) {
                cur.push(v);
                rec(outer, v, cur, out);
                cur.pop();
            }
        }
        rec(&self.0, self.first(), &mut Vec::new(), &mut out);
        out
    }
}

impl TryFrom<Vec<usize>> for Partition {
    type Error = Error;
    fn try_from(v: Vec<usize>) -> Result<Self> {
        Partition::new(v)
    }
}

impl From<Partition> for Vec<usize> {
    fn from(p: Partition) -> Vec<usize> {
        p.0
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (i, p) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
        }
        write!(f, "]")
    }
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// `λ/μ` with `μ ⊆ λ`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct SkewShape {
    outer: Partition,
    inner: Partition,
}

impl SkewShape {
    pub fn new(outer: Partition, inner: Partition) -> Result<Self> {
        if !outer.contains(&inner) {
            return Err(Error::Shape(format!("inner {inner} is not contained in outer {outer}")));
        }
        Ok(SkewShape { outer, inner })
    }

    /// Panics on invalid input; for literals in code.
    pub fn of(outer: &[usize], inner: &[usize]) -> Self {
        Self::new(Partition::of(outer), Partition::of(inner)).expect("invalid skew shape literal")
    }

    pub fn straight(outer: Partition) -> Self {
        SkewShape { outer, inner: Partition::empty() }
    }

    pub fn outer(&self) -> &Partition {
        &self.outer
    }

    pub fn inner(&self) -> &Partition {
        &self.inner
    }

    /// `|λ/μ|`.
    pub fn size(&self) -> usize {
        self.outer.size() - self.inner.size()
    }

    pub fn contains_cell(&self, c: Cell) -> bool {
        self.outer.contains_cell(c) && !self.inner.contains_cell(c)
    }

    /// Cells of `λ/μ` in row-major order.
    pub fn cells(&self) -> Vec<Cell> {
        let mut out = Vec::with_capacity(self.size());
        for i in 1..=self.outer.len() {
            for j in self.inner.part(i) + 1..=self.outer.part(i) {
                out.push((i, j));
            }
        }
        out
    }

    /// `λ` has `d` parts and `λ_d ≥ μ_1 + d - 1`.
    pub fn is_slim(&self) -> bool {
        let d = self.outer.len();
        d > 0 && self.outer.part(d) + 1 >= self.inner.first() + d
    }

    /// Edge-connectedness of the cell set; the empty shape counts as connected.
    pub fn is_connected(&self) -> bool {
        let cells = self.cells();
        if cells.is_empty() {
            return true;
        }
        let set: std::collections::HashSet<Cell> = cells.iter().copied().collect();
        let mut seen = std::collections::HashSet::new();
        let mut stack = vec![cells[0]];
        seen.insert(cells[0]);
        while let Some((i, j)) = stack.pop() {
            let nbrs = [(i + 1, j), (i, j + 1), (i.wrapping_sub(1), j), (i, j.wrapping_sub(1))];
            for n in nbrs {
                if set.contains(&n) && seen.insert(n) {
                    stack.push(n);
                }
            }
        }
        seen.len() == cells.len()
    }

    /// Number of distinct diagonals `j - i` met by the cells.
    pub fn diagonal_count(&self) -> usize {
        let cells = self.cells();
        let mut ds: Vec<i64> = cells.iter().map(|&(i, j)| j as i64 - i as i64).collect();
        ds.sort();
        ds.dedup();
        ds.len()
    }

    /// Every skew shape `λ/μ` with `|λ| <= n` (including `μ = ∅`).
    pub fn all_up_to(n: usize) -> Vec<SkewShape> {
        let mut out = Vec::new();
        for s in 0..=n {
            for outer in Partition::all_of_size(s) {
                for inner in outer.subpartitions() {
                    out.push(SkewShape { outer: outer.clone(), inner });
                }
            }
        }
        out
    }
}

impl fmt::Display for SkewShape {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.inner.is_empty() {
            write!(f, "{}", self.outer)
        } else {
            write!(f, "{}/{}", self.outer, self.inner)
        }
    }
}

impl fmt::Debug for SkewShape {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

fn parse_list(s: &str, base: usize) -> Result<(Vec<usize>, usize)> {
    // returns parts and the index just past the closing bracket
    let bytes = s.as_bytes();
    let mut i = base;
    let skip_ws = |i: &mut usize| {
        while *i < bytes.len() && (bytes[*i] as char).is_whitespace() {
            *i += 1;
        }
    };
    skip_ws(&mut i);
    if i >= bytes.len() || bytes[i] != b'[' {
        return Err(Error::Parse { pos: i, msg: "expected '['".into() });
    }
    i += 1;
    let mut parts = Vec::new();
    skip_ws(&mut i);
    if i < bytes.len() && bytes[i] == b']' {
        return Ok((parts, i + 1));
    }
    loop {
        skip_ws(&mut i);
        let start = i;
        while i < bytes.len() && bytes[i].is_ascii_digit() {
            i += 1;
        }
        if start == i {
            return Err(Error::Parse { pos: i, msg: "expected a nonnegative integer".into() });
        }
        let v: usize = s[start..i]
            .parse()
            .map_err(|_| Error::Parse { pos: start, msg: "integer out of range".into() })?;
        if let Some(&prev) = parts.last() {
            if v > prev {
                return Err(Error::Parse { pos: start, msg: format!("part {v} exceeds previous part {prev}") });
            }
        }
        parts.push(v);
        skip_ws(&mut i);
        match bytes.get(i) {
            Some(b',') => i += 1,
            Some(b']') => return Ok((parts, i + 1)),
            _ => return Err(Error::Parse { pos: i, msg: "expected ',' or ']'".into() }),
        }
    }
}

/// Parse `"[3,3,2]/[2,1]"`; the `/[...]` part is optional.
pub fn parse_shape(text: &str) -> Result<SkewShape> {
    let (outer, mut i) = parse_list(text, 0)?;
    let bytes = text.as_bytes();
    while i < bytes.len() && (bytes[i] as char).is_whitespace() {
        i += 1;
    }
    let inner = if i < bytes.len() {
        if bytes[i] != b'/' {
            return Err(Error::Parse { pos: i, msg: "expected '/' or end of input".into() });
        }
        let (inner, j) = parse_list(text, i + 1)?;
        i = j;
        while i < bytes.len() && (bytes[i] as char).is_whitespace() {
            i += 1;
        }
        if i < bytes.len() {
            return Err(Error::Parse { pos: i, msg: "trailing input".into() });
        }
        inner
    } else {
        Vec::new()
    };
    let outer = Partition::new(outer)?;
    let inner = Partition::new(inner)?;
    let inner_pos = text.find('/').map_or(0, |p| p + 1);
    SkewShape::new(outer, inner).map_err(|e| Error::Parse { pos: inner_pos, msg: e.to_string() })
}

impl FromStr for SkewShape {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        parse_shape(s)
    }
}

impl FromStr for Partition {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let (parts, end) = parse_list(s, 0)?;
        if !s[end..].trim().is_empty() {
            return Err(Error::Parse { pos: end, msg: "trailing input".into() });
        }
        Partition::new(parts)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_and_print() {
        let s: SkewShape = " [3, 3,2] / [2,1] ".parse().unwrap();
        assert_eq!(s, SkewShape::of(&[3, 3, 2], &[2, 1]));
        assert_eq!(s.to_string(), "[3,3,2]/[2,1]");
        assert!(parse_shape("[2,1]").unwrap().inner().is_empty());
        match parse_shape("[1,2]") {
            Err(Error::Parse { pos, .. }) => assert_eq!(pos, 3),
            other => panic!("{other:?}"),
        }
        assert!(parse_shape("[2]/[3]").is_err());
    }

    #[test]
    fn hooks() {
        let l = Partition::of(&[3, 3, 2]);
        assert_eq!(l.hook((1, 1)).unwrap(), 5);
        assert_eq!(l.hook((2, 3)).unwrap(), 1);
        assert!(l.hook((3, 3)).is_err());
        assert_eq!(l.conjugate(), Partition::of(&[3, 3, 2]));
    }
}
