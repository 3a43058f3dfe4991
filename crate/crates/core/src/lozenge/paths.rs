//! Level paths across a hexagon and their probabilities.
//!
//! A path at level `d` splits the boxed plane partition into the cells
//! whose tiles slid at most `d` (a partition `μ ⊆ a×b`) and the rest; its
//! probability is a product of two determinants over `Z(a,b,c)`.

use num_rational::BigRational;
use num_traits::{One, Zero};
use serde::Serialize;

use super::determinants::{hexagon_product, z_hexagon, z_mu_d};
use super::tiling::{enumerate_tilings, tiling_weight, LozengeTiling, Region, WeightMode};
use crate::error::{domain, precondition, Error, Result};
use crate::exactmath::{factorial, serialize_opt_rational, serialize_rational, superfactorial as phi};
use crate::multivar::WeightSpec;
use crate::shapes::{macmahon_count, rpp_bounded_count, Partition};

/// Heights `d_0, …, d_{a+b}` of a path across `H(a,b,c)`; `d_k - d_0` is the
/// number of cells of `μ` on the diagonal `j - i = k - a`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
pub struct HexPath {
    pub a: usize,
    pub b: usize,
    pub c: usize,
    pub d_seq: Vec<usize>,
}

impl HexPath {
    /// The path at level `d` around `μ`.
    pub fn from_partition(a: usize, b: usize, c: usize, mu: &Partition, level: usize) -> Result<Self> {
        if mu.len() > a || mu.first() > b {
            return Err(domain!("{mu} does not fit in {a}×{b}"));
        }
        if level >= c {
            return Err(domain!("level {level} must be below c = {c}"));
        }
        let mut d_seq = vec![level; a + b + 1];
        for (i, j) in mu.cells() {
            d_seq[(j as i64 - i as i64 + a as i64) as usize] += 1;
        }
        Ok(HexPath { a, b, c, d_seq })
    }

    pub fn parse(a: usize, b: usize, c: usize, text: &str) -> Result<Self> {
        let d_seq = text
            .split(|ch: char| ch == ',' || ch.is_whitespace())
            .filter(|s| !s.is_empty())
            .map(|s| s.parse::<usize>().map_err(|_| domain!("bad path entry {s:?}")))
            .collect::<Result<Vec<_>>>()?;
        let p = HexPath { a, b, c, d_seq };
        p.decode()?;
        Ok(p)
    }

    pub fn level(&self) -> usize {
        self.d_seq.first().copied().unwrap_or(0)
    }

    /// `(μ, μ*)` with `μ*` the complement of `μ` in `a×b`, rotated.
    pub fn decode(&self) -> Result<(Partition, Partition)> {
        let (a, b, c) = (self.a, self.b, self.c);
        if self.d_seq.len() != a + b + 1 {
            return Err(domain!("path across H({a},{b},{c}) needs {} heights, got {}", a + b + 1, self.d_seq.len()));
        }
        let d0 = self.d_seq[0];
        if d0 >= c {
            return Err(domain!("level {d0} must be below c = {c}"));
        }
        if self.d_seq[a + b] != d0 {
            return Err(domain!("path must end at its starting level {d0}"));
        }
        if self.d_seq.windows(2).any(|w| w[0].abs_diff(w[1]) > 1) {
            return Err(domain!("consecutive heights differ by more than 1"));
        }
        if self.d_seq.iter().any(|&v| v < d0) {
            return Err(domain!("path dips below its level {d0}"));
        }
        let count = |i: usize, j: usize| self.d_seq[(j as i64 - i as i64 + a as i64) as usize] - d0;
        let parts: Vec<usize> = (1..=a).map(|i| (1..=b).take_while(|&j| i.min(j) <= count(i, j)).count()).collect();
        let mu = Partition::new(parts.into_iter().filter(|&p| p > 0).collect())
            .map_err(|_| domain!("heights do not describe a partition"))?;
        if HexPath::from_partition(a, b, c, &mu, d0)? != *self {
            return Err(domain!("heights do not describe a partition in {a}×{b}"));
        }
        let star: Vec<usize> = (1..=a).rev().map(|i| b - mu.part(i)).filter(|&p| p > 0).collect();
        Ok((mu, Partition::new(star)?))
    }

    /// Whether the tiling's plane partition passes through this path.
    pub fn contains(&self, t: &LozengeTiling) -> Result<bool> {
        let (mu, _) = self.decode()?;
        let level = self.level();
        for (i, j) in t.base().cells() {
            let inside = mu.contains_cell((i, j));
            if (t.displacement((i, j)) <= level) != inside {
                return Ok(false);
            }
        }
        Ok(true)
    }
}

/// Every path across `H(a,b,c)` at the given level, one per `μ ⊆ a×b`.
pub fn paths_at_level(a: usize, b: usize, c: usize, level: usize) -> Result<Vec<HexPath>> {
    Partition::all_in_box(a, b).iter().map(|mu| HexPath::from_partition(a, b, c, mu, level)).collect()
}

/// `x_i ← x_{a+c+1-i}`, `y_j ← y_{b+c+1-j}`.
fn reversed_weights(a: usize, b: usize, c: usize, w: &WeightSpec) -> Result<WeightSpec> {
    let x = (1..=a + c).map(|i| w.xi(a + c + 1 - i).cloned()).collect::<Result<_>>()?;
    let y = (1..=b + c).map(|j| w.yj(b + c + 1 - j).cloned()).collect::<Result<_>>()?;
    Ok(WeightSpec::new(x, y))
}

fn det_or_one(mu: &Partition, d: usize, w: &WeightSpec) -> Result<BigRational> {
    if mu.is_empty() {
        Ok(BigRational::one())
    } else {
        z_mu_d(mu, d, w)
    }
}

/// `det A(μ,d) · det A*(μ*, c-d-1) / Z(a,b,c)`.
pub fn path_probability(p: &HexPath, w: &WeightSpec) -> Result<BigRational> {
    let (a, b, c) = (p.a, p.b, p.c);
    w.check_covers(a + c, b + c)?;
    if !w.is_positive() {
        return Err(precondition!("path probabilities need min x > max y"));
    }
    let (mu, star) = p.decode()?;
    let d = p.level();
    let z = z_hexagon(a, b, c, w)?;
    if z.is_zero() {
        return Err(Error::Singular(format!("Z({a},{b},{c}) vanishes")));
    }
    let ws = reversed_weights(a, b, c, w)?;
    Ok(det_or_one(&mu, d, w)? * det_or_one(&star, c - d - 1, &ws)? / z)
}

/// The same probability by summing over all tilings of the hexagon.
pub fn path_probability_enumerate(p: &HexPath, mode: &WeightMode) -> Result<BigRational> {
    p.decode()?;
    let region = Region::Hexagon { a: p.a, b: p.b, c: p.c };
    let (mut hit, mut total) = (BigRational::zero(), BigRational::zero());
    for t in enumerate_tilings(&region)? {
        let wt = tiling_weight(&t, mode)?;
        if p.contains(&t)? {
            hit += &wt;
        }
        total += wt;
    }
    Ok(hit / total)
}

/// Closed form for the path around `b^a` at level `c` in `H(a,2b,2c+1)`,
/// weights `x_i = k-i`, `y_j = j`, `k = a+2b+4c+3`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct FrozenRhombi {
    pub a: usize,
    pub b: usize,
    pub c: usize,
    #[serde(serialize_with = "serialize_rational")]
    pub closed_form: BigRational,
    #[serde(serialize_with = "serialize_rational")]
    pub determinant: BigRational,
    pub agree: bool,
}

/// Bounds on the zigzag path probability in `H(2a+1,2a,2a+1)` under hook
/// weights of `(4a+1)^{4a+2}`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ZigzagBounds {
    pub a: usize,
    #[serde(serialize_with = "serialize_rational")]
    pub c_a: BigRational,
    #[serde(serialize_with = "serialize_rational")]
    pub lower: BigRational,
    #[serde(serialize_with = "serialize_rational")]
    pub upper: BigRational,
    /// Weighted probability from the determinants.
    #[serde(serialize_with = "serialize_rational")]
    pub weighted: BigRational,
    /// Weighted probability by listing tilings, only for `a = 1`.
    #[serde(serialize_with = "serialize_opt_rational")]
    pub weighted_enumerated: Option<BigRational>,
    /// Probability under uniform weights.
    #[serde(serialize_with = "serialize_rational")]
    pub uniform: BigRational,
    pub within_bounds: bool,
}

pub fn frozen_rhombi(a: usize, b: usize, c: usize) -> Result<FrozenRhombi> {
    if a == 0 || b == 0 || c == 0 {
        return Err(domain!("frozen rhombi needs a, b, c ≥ 1"));
    }
    let closed_form =
        hexagon_product(a, b, c, 0, 0) * hexagon_product(a, b, c, c + 1, b + c + 1) / hexagon_product(a, 2 * b, 2 * c + 1, 0, 0);
    let k = (a + 2 * b + 4 * c + 3) as i64;
    let (hb, hc) = (2 * b, 2 * c + 1);
    let x: Vec<i64> = (1..=(a + hc) as i64).map(|i| k - i).collect();
    let y: Vec<i64> = (1..=(hb + hc) as i64).collect();
    let w = WeightSpec::from_ints(&x, &y);
    let p = HexPath::from_partition(a, hb, hc, &Partition::rectangle(a, b), c)?;
    let determinant = path_probability(&p, &w)?;
    let agree = determinant == closed_form;
    Ok(FrozenRhombi { a, b, c, closed_form, determinant, agree })
}

/// `C(a) = Φ(8a+3)Φ(4a+2)(4a)!^{2a+1} / (Φ(6a+2)^2 (6a+2)!^{2a+1} (2a)!)`.
pub fn zigzag_constant(a: usize) -> BigRational {
    let a = a as u64;
    let e = (2 * a + 1) as usize;
    BigRational::new(
        phi(8 * a + 3) * phi(4 * a + 2) * num_traits::pow(factorial(4 * a), e),
        num_traits::pow(phi(6 * a + 2), 2) * num_traits::pow(factorial(6 * a + 2), e) * factorial(2 * a),
    )
}

pub fn zigzag_bounds(a: usize) -> Result<ZigzagBounds> {
    if a == 0 {
        return Err(domain!("zigzag bounds need a ≥ 1"));
    }
    let (ha, hb, hc) = (2 * a + 1, 2 * a, 2 * a + 1);
    let lambda = Partition::rectangle(4 * a + 2, 4 * a + 1);
    let w = WeightSpec::hook(&lambda);
    let delta = Partition::staircase(2 * a + 1);
    let p = HexPath::from_partition(ha, hb, hc, &delta, a)?;
    let pp = BigRational::from_integer(macmahon_count(ha, hb, hc));
    let rpp = BigRational::from_integer(rpp_bounded_count(&delta, a));
    let c_a = zigzag_constant(a);
    let lower = &c_a / &pp;
    let upper = &c_a * &rpp * &rpp / &pp;
    let weighted = path_probability(&p, &w)?;
    let weighted_enumerated = if a == 1 { Some(path_probability_enumerate(&p, &WeightMode::Explicit(w))?) } else { None };
    let uniform = &rpp * &rpp / &pp;
    let within_bounds = lower <= weighted && weighted <= upper;
    Ok(ZigzagBounds { a, c_a, lower, upper, weighted, weighted_enumerated, uniform, within_bounds })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactmath::ratio;

    #[test]
    fn decode_example() {
        let p = HexPath::parse(2, 3, 4, "1,2,2,2,2,1").unwrap();
        let (mu, star) = p.decode().unwrap();
        assert_eq!(mu, Partition::of(&[3, 1]));
        assert_eq!(star, Partition::of(&[2]));
        assert!(HexPath::parse(2, 3, 4, "1,2,1,2,2,1").is_err());
        assert!(HexPath::parse(2, 3, 4, "4,4,4,4,4,4").is_err());
    }

    #[test]
    fn zigzag_one() {
        let z = zigzag_bounds(1).unwrap();
        assert_eq!(z.c_a, ratio(54, 35));
        assert_eq!(z.lower, ratio(54, 6125));
        assert_eq!(z.upper, ratio(54, 245));
        assert_eq!(z.weighted, ratio(246, 4375));
        assert_eq!(z.weighted_enumerated, Some(ratio(246, 4375)));
        assert_eq!(z.uniform, ratio(1, 7));
        assert!(z.within_bounds);
    }

    #[test]
    fn frozen() {
        for (a, b, c) in [(1, 1, 1), (1, 2, 1), (2, 1, 1)] {
            assert!(frozen_rhombi(a, b, c).unwrap().agree);
        }
    }
}
