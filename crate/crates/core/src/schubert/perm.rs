//! Permutations in one-line notation, Rothe diagrams and pattern tests.

use std::collections::BTreeSet;
use std::fmt;

use serde::Serialize;

use crate::error::{domain, precondition, Error, Result};
use crate::shapes::{Cell, Partition};

/// A permutation of `{1..n}` stored as `w_1..w_n`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation(Vec<usize>);

impl Permutation {
    pub fn new(one_line: Vec<usize>) -> Result<Self> {
        let n = one_line.len();
        let mut seen = vec![false; n + 1];
        for &v in &one_line {
            if v == 0 || v > n || seen[v] {
                return Err(domain!("{one_line:?} is not a permutation of 1..{n}"));
            }
            seen[v] = true;
        }
        Ok(Permutation(one_line))
    }

    /// Panics on invalid input; for literals in code.
    pub fn of(one_line: &[usize]) -> Self {
        Self::new(one_line.to_vec()).expect("invalid permutation literal")
    }

    pub fn identity(n: usize) -> Self {
        Permutation((1..=n).collect())
    }

    /// `"1432"` (single digits) or `"3,1,5,10,..."`.
    pub fn parse(text: &str) -> Result<Self> {
        let t = text.trim();
        let values: Vec<usize> = if t.contains(|c: char| c == ',' || c.is_whitespace()) {
            t.split(|c: char| c == ',' || c.is_whitespace())
                .filter(|s| !s.is_empty())
                .map(|s| s.parse().map_err(|_| Error::Parse { pos: 0, msg: format!("bad entry {s:?}") }))
                .collect::<Result<_>>()?
        } else {
            t.chars()
                .enumerate()
                .map(|(pos, c)| {
                    c.to_digit(10)
                        .map(|d| d as usize)
                        .ok_or_else(|| Error::Parse { pos, msg: format!("unexpected {c:?}") })
                })
                .collect::<Result<_>>()?
        };
        Self::new(values)
    }

    pub fn one_line(&self) -> &[usize] {
        &self.0
    }

    pub fn n(&self) -> usize {
        self.0.len()
    }

    /// `w_i`, 1-indexed.
    pub fn at(&self, i: usize) -> usize {
        self.0[i - 1]
    }

    /// Inversion count `ℓ(w)`.
    pub fn length(&self) -> usize {
        let w = &self.0;
        (0..w.len()).map(|i| (i + 1..w.len()).filter(|&j| w[i] > w[j]).count()).sum()
    }

    pub fn is_identity(&self) -> bool {
        self.0.iter().enumerate().all(|(i, &v)| v == i + 1)
    }

    /// Positions `i` with `w_i > w_{i+1}`.
    pub fn descents(&self) -> Vec<usize> {
        (1..self.n()).filter(|&i| self.at(i) > self.at(i + 1)).collect()
    }

    /// `w·s_i`: swap positions `i` and `i+1`.
    pub fn swap(&self, i: usize) -> Self {
        let mut v = self.0.clone();
        v.swap(i - 1, i);
        Permutation(v)
    }

    /// `(self ∘ other)(i) = self(other(i))`; the shorter one is padded with fixed points.
    pub fn compose(&self, other: &Permutation) -> Self {
        let n = self.n().max(other.n());
        let a = self.padded(n);
        let b = other.padded(n);
        Permutation((0..n).map(|i| a[b[i] - 1]).collect())
    }

    fn padded(&self, n: usize) -> Vec<usize> {
        let mut v = self.0.clone();
        v.extend(self.n() + 1..=n);
        v
    }

    pub fn inverse(&self) -> Self {
        let mut v = vec![0; self.n()];
        for (i, &w) in self.0.iter().enumerate() {
            v[w - 1] = i + 1;
        }
        Permutation(v)
    }

    /// `1^c × w = (1, ..., c, c+w_1, ..., c+w_n)`.
    pub fn direct_sum(&self, c: usize) -> Self {
        Permutation((1..=c).chain(self.0.iter().map(|&v| v + c)).collect())
    }

    /// `w ⊗ 1^a`: each entry becomes a block of `a` consecutive values.
    pub fn kron(&self, a: usize) -> Self {
        Permutation(self.0.iter().flat_map(|&v| (1..=a).map(move |k| a * (v - 1) + k)).collect())
    }

    /// Whether some subsequence is order-isomorphic to `pattern`.
    pub fn contains_pattern(&self, pattern: &[usize]) -> bool {
        let k = pattern.len();
        let w = &self.0;
        if k > w.len() {
            return false;
        }
        let mut chosen = Vec::with_capacity(k);
        fn go(w: &[usize], pat: &[usize], start: usize, chosen: &mut Vec<usize>) -> bool {
            let m = chosen.len();
            if m == pat.len() {
                return true;
            }
            for p in start..w.len() {
                // the new value must sit in the same relative order as in the pattern
                let ok = (0..m).all(|q| (w[chosen[q]] < w[p]) == (pat[q] < pat[m]));
                if ok {
                    chosen.push(p);
                    if go(w, pat, p + 1, chosen) {
                        return true;
                    }
                    chosen.pop();
                }
            }
            false
        }
        go(w, pattern, 0, &mut chosen)
    }

    /// Every permutation of `{1..n}` in lexicographic order.
    pub fn all(n: usize) -> Vec<Permutation> {
        let mut out = Vec::new();
        let mut v: Vec<usize> = (1..=n).collect();
        loop {
            out.push(Permutation(v.clone()));
            // next lexicographic permutation
            let Some(i) = (1..v.len()).rev().find(|&i| v[i - 1] < v[i]) else { break };
            let j = (i..v.len()).rev().find(|&j| v[j] > v[i - 1]).unwrap();
            v.swap(i - 1, j);
            v[i..].reverse();
        }
        out
    }
}

impl std::str::FromStr for Permutation {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        Self::parse(s)
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.n() <= 9 {
            for v in &self.0 {
                write!(f, "{v}")?;
            }
            Ok(())
        } else {
            let parts: Vec<String> = self.0.iter().map(|v| v.to_string()).collect();
            write!(f, "{}", parts.join(","))
        }
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl Serialize for Permutation {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.0.serialize(s)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PermDiagram {
    pub cells: BTreeSet<Cell>,
    pub essential: BTreeSet<Cell>,
}

/// `D(w) = {(i, w_j) : i < j, w_i > w_j}` with its essential set.
pub fn rothe_diagram(w: &Permutation) -> PermDiagram {
    let n = w.n();
    let mut cells = BTreeSet::new();
    for i in 1..=n {
        for j in i + 1..=n {
            if w.at(i) > w.at(j) {
                cells.insert((i, w.at(j)));
            }
        }
    }
    debug_assert_eq!(cells.len(), w.length());
    let essential = cells
        .iter()
        .copied()
        .filter(|&(i, j)| {
            !cells.contains(&(i + 1, j)) && !cells.contains(&(i, j + 1)) && !cells.contains(&(i + 1, j + 1))
        })
        .collect();
    PermDiagram { cells, essential }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct Classification {
    /// 2143-avoiding.
    pub vexillary: bool,
    pub avoid321: bool,
    /// 132-avoiding.
    pub dominant: bool,
    /// At most one descent.
    pub grassmannian: bool,
}

pub fn classify(w: &Permutation) -> Classification {
    Classification {
        vexillary: !w.contains_pattern(&[2, 1, 4, 3]),
        avoid321: !w.contains_pattern(&[3, 2, 1]),
        dominant: !w.contains_pattern(&[1, 3, 2]),
        grassmannian: w.descents().len() <= 1,
    }
}

/// `(μ(w), λ(w))`: sorted row lengths of `D(w)`, and the union of the
/// rectangles `[i]×[j]` over essential cells `(i,j)`.
pub fn vexillary_shapes(w: &Permutation) -> Result<(Partition, Partition)> {
    if !classify(w).vexillary {
        return Err(precondition!("{w} contains 2143"));
    }
    let d = rothe_diagram(w);
    let n = w.n();
    let mut rows = vec![0usize; n + 1];
    for &(i, _) in &d.cells {
        rows[i] += 1;
    }
    rows.sort_unstable_by(|a, b| b.cmp(a));
    let mu = Partition::new(rows).expect("sorted row counts");
    let lambda: Vec<usize> = (1..=n)
        .map(|r| d.essential.iter().filter(|&&(i, _)| i >= r).map(|&(_, j)| j).max().unwrap_or(0))
        .collect();
    let lambda = Partition::new(lambda).expect("a union of rectangles is a partition");
    debug_assert!(lambda.contains(&mu));
    Ok((mu, lambda))
}

/// Depth-first stream of the reduced words of `w`, found by stripping a
/// descent from the right end.
pub struct ReducedWords {
    stack: Vec<(Permutation, Vec<usize>)>,
}

impl Iterator for ReducedWords {
    type Item = Vec<usize>;

    fn next(&mut self) -> Option<Vec<usize>> {
        while let Some((w, suffix)) = self.stack.pop() {
            if w.is_identity() {
                return Some(suffix.into_iter().rev().collect());
            }
            for i in w.descents().into_iter().rev() {
                let mut s = suffix.clone();
                s.push(i);
                self.stack.push((w.swap(i), s));
            }
        }
        None
    }
}

pub fn reduced_words_iter(w: &Permutation) -> ReducedWords {
    ReducedWords { stack: vec![(w.clone(), Vec::new())] }
}

pub const REDUCED_WORD_CAP: usize = 10_000_000;

/// All reduced words, or a resource error once more than `cap` are found.
pub fn reduced_words(w: &Permutation, cap: usize) -> Result<Vec<Vec<usize>>> {
    let mut out = Vec::new();
    for word in reduced_words_iter(w) {
        if out.len() == cap {
            return Err(Error::Resource(format!("{w} has more than {cap} reduced words")));
        }
        out.push(word);
    }
    Ok(out)
}

/// One reduced word, found greedily.
pub fn a_reduced_word(w: &Permutation) -> Vec<usize> {
    let mut w = w.clone();
    let mut word = Vec::new();
    while let Some(&i) = w.descents().first() {
        word.push(i);
        w = w.swap(i);
    }
    word.reverse();
    word
}

/// `s_{r_1} s_{r_2} ⋯` applied to the identity of `S_n`, swapping positions.
pub fn word_to_perm(word: &[usize], n: usize) -> Result<Permutation> {
    let mut v: Vec<usize> = (1..=n).collect();
    for &r in word {
        if r == 0 || r >= n {
            return Err(domain!("letter {r} out of range for S_{n}"));
        }
        v.swap(r - 1, r);
    }
    Ok(Permutation(v))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn diagram_and_shapes() {
        let w = Permutation::parse("1432").unwrap();
        let d = rothe_diagram(&w);
        assert_eq!(d.cells.into_iter().collect::<Vec<_>>(), vec![(2, 2), (2, 3), (3, 2)]);
        let (mu, lam) = vexillary_shapes(&w).unwrap();
        assert_eq!((mu, lam), (Partition::of(&[2, 1]), Partition::of(&[3, 3, 2])));
        let (mu, lam) = vexillary_shapes(&Permutation::parse("461532").unwrap()).unwrap();
        assert_eq!((mu, lam), (Partition::of(&[4, 3, 2, 1]), Partition::of(&[5, 5, 3, 3, 2])));
        assert!(vexillary_shapes(&Permutation::parse("2143").unwrap()).is_err());
    }

    #[test]
    fn words() {
        let w = Permutation::parse("1432").unwrap();
        let mut words = reduced_words(&w, 100).unwrap();
        words.sort();
        assert_eq!(words, vec![vec![2, 3, 2], vec![3, 2, 3]]);
        assert_eq!(reduced_words(&Permutation::identity(3), 5).unwrap(), vec![Vec::<usize>::new()]);
        assert!(reduced_words(&Permutation::parse("4321").unwrap(), 3).is_err());
        assert_eq!(word_to_perm(&a_reduced_word(&w), 4).unwrap(), w);
    }

    #[test]
    fn classification() {
        assert!(classify(&Permutation::parse("1432").unwrap()).vexillary);
        assert!(!classify(&Permutation::parse("2143").unwrap()).vexillary);
        assert!(classify(&Permutation::parse("251634").unwrap()).avoid321);
        assert_eq!(Permutation::all(4).len(), 24);
        let w = Permutation::parse("3,1,2").unwrap();
        assert!(w.compose(&w.inverse()).is_identity());
    }
}
