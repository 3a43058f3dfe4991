//! Randomized exact checks of the symmetry and path-flip identities.
//!
//! Both sides of each identity are rational functions, so they are
//! compared exactly at seeded random rational points. Trial `t` draws its
//! point from `SplitMix64::derive(seed, t)`, which makes a report
//! independent of how the trials are scheduled.

use std::fmt;
use std::str::FromStr;

use num_rational::BigRational;
use num_traits::{One, Zero};
use rayon::prelude::*;
use serde::Serialize;

use super::fschur::{factorial_schur, FactorialSchurInput, FsMethod};
use super::sums::{f_from_diagrams, g_from_diagrams};
use super::weights::WeightSpec;
use crate::error::{domain, precondition, Error, Result};
use crate::excited::{enumerate_excited, ExcitedDiagram, Variant};
use crate::exactmath::{rat, rational_string};
use crate::rng::SplitMix64;
use crate::shapes::{Cell, Partition, SkewShape};

/// Numerators and denominators of random points lie in `[-BOUND, BOUND]`.
pub const BOUND: i64 = 1000;
const REDRAWS: usize = 16;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum IdentityKind {
    RectSymmetry,
    SlimSymmetry,
    ThickStrip,
    SlimFlip,
    ReverseHookPath,
}

impl IdentityKind {
    pub const ALL: [IdentityKind; 5] = [
        IdentityKind::RectSymmetry,
        IdentityKind::SlimSymmetry,
        IdentityKind::ThickStrip,
        IdentityKind::SlimFlip,
        IdentityKind::ReverseHookPath,
    ];

    pub fn name(&self) -> &'static str {
        match self {
            IdentityKind::RectSymmetry => "rect_symmetry",
            IdentityKind::SlimSymmetry => "slim_symmetry",
            IdentityKind::ThickStrip => "thick_strip",
            IdentityKind::SlimFlip => "slim_flip",
            IdentityKind::ReverseHookPath => "reverse_hook_path",
        }
    }
}

impl fmt::Display for IdentityKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for IdentityKind {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        IdentityKind::ALL
            .into_iter()
            .find(|k| k.name() == s)
            .ok_or_else(|| domain!("unknown identity kind {s:?}"))
    }
}

/// Shape-based kinds read `shape`; path-based kinds read `a`, `b`, `c`.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct IdentityParams {
    pub shape: Option<SkewShape>,
    pub a: usize,
    pub b: usize,
    pub c: usize,
}

impl IdentityParams {
    pub fn shape(shape: SkewShape) -> Self {
        IdentityParams { shape: Some(shape), ..Default::default() }
    }

    pub fn abc(a: usize, b: usize, c: usize) -> Self {
        IdentityParams { shape: None, a, b, c }
    }

    fn describe(&self) -> String {
        match &self.shape {
            Some(s) => s.to_string(),
            None => format!("a={},b={},c={}", self.a, self.b, self.c),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct IdentityFailure {
    pub check: String,
    pub point: serde_json::Value,
    pub lhs: String,
    pub rhs: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct IdentityReport {
    pub kind: IdentityKind,
    pub params: String,
    pub trials: usize,
    /// Number of exact comparisons made.
    pub checks: usize,
    pub failures: Vec<IdentityFailure>,
    /// Both sides at a fixed integer point, where one exists.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub exact_point: Option<(String, String)>,
}

impl IdentityReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

/// One trial: comparisons `(name, lhs, rhs)` at a given point.
type Checks = Vec<(String, BigRational, BigRational)>;

pub fn verify_identity(kind: IdentityKind, params: &IdentityParams, trials: usize, seed: u64) -> Result<IdentityReport> {
    let plan = Plan::build(kind, params)?;
    let results: Vec<Result<(usize, Vec<IdentityFailure>)>> = (0..trials)
        .into_par_iter()
        .map(|t| {
            let mut rng = SplitMix64::derive(seed, t as u64);
            let mut last = None;
            for _ in 0..REDRAWS {
                let w = WeightSpec::random(&mut rng, plan.rows, plan.cols, BOUND);
                match plan.run(&w) {
                    Ok(checks) => {
                        let n = checks.len();
                        let fails = checks
                            .into_iter()
                            .filter(|(_, l, r)| l != r)
                            .map(|(check, l, r)| IdentityFailure {
                                check,
                                point: w.to_json(),
                                lhs: rational_string(&l),
                                rhs: rational_string(&r),
                            })
                            .collect();
                        return Ok((n, fails));
                    }
                    Err(e @ Error::Singular(_)) => last = Some(e),
                    Err(e) => return Err(e),
                }
            }
            Err(last.unwrap())
        })
        .collect();
    let mut checks = 0;
    let mut failures = Vec::new();
    for r in results {
        let (n, f) = r?;
        checks += n;
        failures.extend(f);
    }
    let exact_point = plan.exact_point()?;
    if let Some((l, r)) = &exact_point {
        checks += 1;
        if l != r {
            failures.push(IdentityFailure {
                check: "integer point".into(),
                point: serde_json::Value::Null,
                lhs: rational_string(l),
                rhs: rational_string(r),
            });
        }
    }
    Ok(IdentityReport {
        kind,
        params: params.describe(),
        trials,
        checks,
        failures,
        exact_point: exact_point.map(|(l, r)| (rational_string(&l), rational_string(&r))),
    })
}

enum Body {
    Rect { diagrams: Vec<ExcitedDiagram>, p: usize, k: usize, ell: usize },
    Slim { diagrams: Vec<ExcitedDiagram>, mu: Partition, d: usize, lambda_d: usize },
    ThickStrip { shape: SkewShape, diagrams: Vec<ExcitedDiagram>, families: Vec<Vec<Cell>> },
    SlimFlip { shape: SkewShape, se: Vec<ExcitedDiagram>, ne: Vec<ExcitedDiagram> },
    HookPath { lhs: Vec<Vec<Cell>>, rhs: Vec<Vec<Cell>> },
}

struct Plan {
    rows: usize,
    cols: usize,
    body: Body,
}

fn need_shape(params: &IdentityParams) -> Result<&SkewShape> {
    params.shape.as_ref().ok_or_else(|| precondition!("this identity needs a shape"))
}

impl Plan {
    fn build(kind: IdentityKind, params: &IdentityParams) -> Result<Plan> {
        match kind {
            IdentityKind::RectSymmetry => {
                let s = need_shape(params)?;
                let mu = s.inner();
                let (p, k) = (mu.first(), mu.len());
                if mu.is_empty() || mu.parts().iter().any(|&v| v != p) || p < k {
                    return Err(precondition!("inner shape must be a rectangle p^k with p >= k"));
                }
                let lam = s.outer();
                let ell = (1..=lam.len())
                    .filter(|&i| lam.part(i) as i64 - i as i64 >= p as i64 - k as i64)
                    .max()
                    .unwrap_or(0);
                Ok(Plan {
                    rows: lam.len(),
                    cols: lam.first(),
                    body: Body::Rect { diagrams: enumerate_excited(s, Variant::SE), p, k, ell },
                })
            }
            IdentityKind::SlimSymmetry => {
                let s = need_shape(params)?;
                if !s.is_slim() {
                    return Err(precondition!("{s} is not slim"));
                }
                let d = s.outer().len();
                Ok(Plan {
                    rows: d,
                    cols: s.outer().first(),
                    body: Body::Slim {
                        diagrams: enumerate_excited(s, Variant::SE),
                        mu: s.inner().clone(),
                        d,
                        lambda_d: s.outer().part(d),
                    },
                })
            }
            IdentityKind::ThickStrip => {
                let IdentityParams { a, b, c, .. } = *params;
                let outer = Partition::rectangle(a + c, b + c);
                let shape = SkewShape::new(outer, Partition::rectangle(a, b))?;
                let ends: Vec<(Cell, Cell)> = (1..=c).map(|p| ((p, 1), (a + p, b + c))).collect();
                Ok(Plan {
                    rows: a + c,
                    cols: b + c,
                    body: Body::ThickStrip {
                        diagrams: enumerate_excited(&shape, Variant::SE),
                        shape,
                        families: non_intersecting_families(&ends, Step::SouthEast),
                    },
                })
            }
            IdentityKind::SlimFlip => {
                let s = need_shape(params)?;
                if !s.is_slim() {
                    return Err(precondition!("{s} is not slim"));
                }
                Ok(Plan {
                    rows: s.outer().len(),
                    cols: s.outer().first(),
                    body: Body::SlimFlip {
                        shape: s.clone(),
                        se: enumerate_excited(s, Variant::SE),
                        ne: enumerate_excited(s, Variant::NE),
                    },
                })
            }
            IdentityKind::ReverseHookPath => {
                let IdentityParams { a, b, .. } = *params;
                if a == 0 || b == 0 {
                    return Err(precondition!("a and b must be positive"));
                }
                Ok(Plan {
                    rows: a,
                    cols: b,
                    body: Body::HookPath {
                        lhs: non_intersecting_families(&[((a, 1), (1, b))], Step::NorthEast),
                        rhs: non_intersecting_families(&[((1, 1), (a, b))], Step::SouthEast),
                    },
                })
            }
        }
    }

    fn run(&self, w: &WeightSpec) -> Result<Checks> {
        for i in 0..self.rows {
            for k in i + 1..self.rows {
                if w.x[i] == w.x[k] {
                    return Err(Error::Singular(format!("x_{} = x_{}", i + 1, k + 1)));
                }
            }
        }
        let mut out = Vec::new();
        match &self.body {
            Body::Rect { diagrams, p, k, ell } => {
                let g = g_from_diagrams(diagrams, w)?;
                for t in 1..*ell {
                    let mut ws = w.clone();
                    ws.x.swap(t - 1, t);
                    out.push((format!("swap x{t},x{}", t + 1), g.clone(), g_from_diagrams(diagrams, &ws)?));
                }
                let input = FactorialSchurInput {
                    mu: Partition::rectangle(*k, *p),
                    d: *ell,
                    x: w.x[..*ell].to_vec(),
                    a: w.y[..(p + ell - k).min(w.y.len())].to_vec(),
                };
                out.push(("factorial schur".into(), g, factorial_schur(&input, FsMethod::Tableaux)?));
            }
            Body::Slim { diagrams, mu, d, lambda_d } => {
                let g = g_from_diagrams(diagrams, w)?;
                for t in 1..*d {
                    let mut ws = w.clone();
                    ws.x.swap(t - 1, t);
                    out.push((format!("swap x{t},x{}", t + 1), g.clone(), g_from_diagrams(diagrams, &ws)?));
                }
                let input = FactorialSchurInput {
                    mu: mu.clone(),
                    d: *d,
                    x: w.x[..*d].to_vec(),
                    a: w.y[..*lambda_d].to_vec(),
                };
                out.push(("factorial schur".into(), g, factorial_schur(&input, FsMethod::Determinant)?));
            }
            Body::ThickStrip { shape, diagrams, families } => {
                let lhs = f_from_diagrams(shape, diagrams, w)?;
                let rhs = path_sum(families, &w.inverse_table(self.rows, self.cols)?);
                out.push(("flipped paths".into(), lhs, rhs));
            }
            Body::SlimFlip { shape, se, ne } => {
                let lhs = f_from_diagrams(shape, se, w)?;
                let rhs = f_from_diagrams(shape, ne, w)?;
                out.push(("NE-excited".into(), lhs, rhs));
            }
            Body::HookPath { lhs, rhs } => {
                let inv = w.inverse_table(self.rows, self.cols)?;
                out.push(("reversed path".into(), path_sum(lhs, &inv), path_sum(rhs, &inv)));
            }
        }
        Ok(out)
    }

    /// For the hook path identity, both sides at `x_i = i`, `y_j = 1 - j`.
    fn exact_point(&self) -> Result<Option<(BigRational, BigRational)>> {
        if let Body::HookPath { lhs, rhs } = &self.body {
            let w = WeightSpec::new(
                (1..=self.rows as i64).map(rat).collect(),
                (1..=self.cols as i64).map(|j| rat(1 - j)).collect(),
            );
            let inv = w.inverse_table(self.rows, self.cols)?;
            return Ok(Some((path_sum(lhs, &inv), path_sum(rhs, &inv))));
        }
        Ok(None)
    }
}

fn path_sum(families: &[Vec<Cell>], inv: &[Vec<BigRational>]) -> BigRational {
    let mut total = BigRational::zero();
    for fam in families {
        let mut p = BigRational::one();
        for &(i, j) in fam {
            p *= &inv[i - 1][j - 1];
        }
        total += p;
    }
    total
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Step {
    /// Each step goes one row down or one column right.
    SouthEast,
    /// Each step goes one row up or one column right.
    NorthEast,
}

/// Every family of pairwise cell-disjoint lattice paths joining the given
/// endpoint pairs; each family is returned as the list of its cells.
pub fn non_intersecting_families(ends: &[(Cell, Cell)], step: Step) -> Vec<Vec<Cell>> {
    let mut out = Vec::new();
    let mut used = Vec::new();
    fn walk(
        ends: &[(Cell, Cell)],
        p: usize,
        cur: Cell,
        step: Step,
        used: &mut Vec<Cell>,
        out: &mut Vec<Vec<Cell>>,
    ) {
        if used.contains(&cur) {
            return;
        }
        used.push(cur);
        let end = ends[p].1;
        if cur == end {
            if p + 1 == ends.len() {
                out.push(used.clone());
            } else {
                walk(ends, p + 1, ends[p + 1].0, step, used, out);
            }
        } else {
            let vertical = match step {
                Step::SouthEast if cur.0 < end.0 => Some((cur.0 + 1, cur.1)),
                Step::NorthEast if cur.0 > end.0 => Some((cur.0 - 1, cur.1)),
                _ => None,
            };
            if let Some(v) = vertical {
                walk(ends, p, v, step, used, out);
            }
            if cur.1 < end.1 {
                walk(ends, p, (cur.0, cur.1 + 1), step, used, out);
            }
        }
        used.pop();
    }
    if !ends.is_empty() {
        walk(ends, 0, ends[0].0, step, &mut used, &mut out);
    } else {
        out.push(Vec::new());
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactmath::ratio;

    #[test]
    fn hook_path_two_by_two() {
        let r = verify_identity(IdentityKind::ReverseHookPath, &IdentityParams::abc(2, 2, 0), 3, 1).unwrap();
        assert!(r.passed());
        assert_eq!(r.exact_point, Some(("1/3".into(), "1/3".into())));
        let _ = ratio(1, 3);
    }

    #[test]
    fn thick_strip_small() {
        let r = verify_identity(IdentityKind::ThickStrip, &IdentityParams::abc(1, 1, 1), 20, 7).unwrap();
        assert!(r.passed(), "{:?}", r.failures);
    }
}
