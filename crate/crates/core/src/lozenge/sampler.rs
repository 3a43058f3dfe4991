//! Metropolis chain on tilings.
//!
//! One step: pick a cell of the base uniformly (row-major order), pick a
//! direction ±1 from the top bit of the next draw, and move the cell's
//! tile one step along its diagonal. Invalid moves are rejected; valid ones
//! are accepted with probability `min(1, wt(T')/wt(T))`, compared exactly
//! against a 53-bit dyadic uniform.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::Serialize;

use super::tiling::{enumerate_tilings, tiling_weight, LozengeTiling, Region, WeightMode};
use crate::error::{precondition, Result};
use crate::rng::SplitMix64;
use crate::shapes::Cell;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SamplerConfig {
    pub region: Region,
    pub weights: WeightMode,
    pub steps: u64,
    pub seed: u64,
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
pub struct ChainStats {
    pub steps: u64,
    pub accepted: u64,
    pub rejected_invalid: u64,
    pub rejected_weight: u64,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SampleResult {
    pub tiling: LozengeTiling,
    pub stats: ChainStats,
}

/// Every lozenge position a tile can reach has positive weight.
fn check_weights(region: &Region, w: &WeightMode) -> Result<()> {
    for cell in region.outer().cells() {
        if !w.lozenge(cell)?.is_positive() {
            return Err(precondition!("lozenge weight at {cell:?} is not positive"));
        }
    }
    Ok(())
}

struct Chain<'a> {
    cells: Vec<Cell>,
    weights: &'a WeightMode,
    rng: SplitMix64,
    state: LozengeTiling,
    stats: ChainStats,
}

impl<'a> Chain<'a> {
    fn new(cfg: &'a SamplerConfig) -> Result<Self> {
        check_weights(&cfg.region, &cfg.weights)?;
        let state = LozengeTiling::seed(&cfg.region);
        Ok(Chain {
            cells: state.base().cells(),
            weights: &cfg.weights,
            rng: SplitMix64::new(cfg.seed),
            state,
            stats: ChainStats::default(),
        })
    }

    fn step(&mut self) -> Result<()> {
        self.stats.steps += 1;
        if self.cells.is_empty() {
            return Ok(());
        }
        let (i, j) = self.cells[self.rng.below(self.cells.len() as u64) as usize];
        let delta = if self.rng.next_u64() >> 63 == 1 { 1 } else { -1 };
        let next = match self.state.moved((i, j), delta) {
            Some(n) if n.is_valid() => n,
            _ => {
                self.stats.rejected_invalid += 1;
                return Ok(());
            }
        };
        let t = self.state.displacement((i, j));
        let t2 = next.displacement((i, j));
        let ratio = self.weights.lozenge((i + t2, j + t2))? / self.weights.lozenge((i + t, j + t))?;
        if ratio >= BigRational::one() || accept(&mut self.rng, &ratio) {
            self.state = next;
            self.stats.accepted += 1;
        } else {
            self.stats.rejected_weight += 1;
        }
        Ok(())
    }
}

/// `U < ratio` for `U = k / 2^53`, i.e. `k · den < num · 2^53`.
fn accept(rng: &mut SplitMix64, ratio: &BigRational) -> bool {
    let k = BigInt::from(rng.dyadic53());
    k * ratio.denom() < ratio.numer() << 53
}

pub fn metropolis_sample(cfg: &SamplerConfig) -> Result<SampleResult> {
    let mut chain = Chain::new(cfg)?;
    for _ in 0..cfg.steps {
        chain.step()?;
    }
    Ok(SampleResult { tiling: chain.state, stats: chain.stats })
}

/// Number of steps after which the chain sat in each tiling.
pub fn occupation(cfg: &SamplerConfig) -> Result<BTreeMap<LozengeTiling, u64>> {
    let mut chain = Chain::new(cfg)?;
    let mut counts = BTreeMap::new();
    for _ in 0..cfg.steps {
        chain.step()?;
        *counts.entry(chain.state.clone()).or_insert(0) += 1;
    }
    Ok(counts)
}

/// `P(T → T')` of one step, from the proposal rule.
pub fn transition_probability(from: &LozengeTiling, to: &LozengeTiling, w: &WeightMode) -> Result<BigRational> {
    let cells = from.base().cells();
    if cells.is_empty() {
        return Ok(if from == to { BigRational::one() } else { BigRational::zero() });
    }
    let per_move = BigRational::new(BigInt::one(), BigInt::from(2 * cells.len()));
    let mut leave = BigRational::zero();
    let mut hit = BigRational::zero();
    for &(i, j) in &cells {
        for delta in [-1, 1] {
            let Some(next) = from.moved((i, j), delta).filter(LozengeTiling::is_valid) else { continue };
            let t = from.displacement((i, j));
            let t2 = next.displacement((i, j));
            let ratio = w.lozenge((i + t2, j + t2))? / w.lozenge((i + t, j + t))?;
            let p = &per_move * ratio.min(BigRational::one());
            if next == *to {
                hit += &p;
            }
            leave += p;
        }
    }
    if from == to {
        Ok(BigRational::one() - leave)
    } else {
        Ok(hit)
    }
}

/// Detailed balance `wt(T) P(T→T') = wt(T') P(T'→T)` over all ordered
/// pairs of tilings; returns the number of pairs with `P(T→T') > 0`.
pub fn check_detailed_balance(region: &Region, w: &WeightMode) -> Result<std::result::Result<usize, (LozengeTiling, LozengeTiling)>> {
    check_weights(region, w)?;
    let tilings = enumerate_tilings(region)?;
    let weights: Vec<BigRational> = tilings.iter().map(|t| tiling_weight(t, w)).collect::<Result<_>>()?;
    let mut adjacent = 0;
    for (a, ta) in tilings.iter().enumerate() {
        for (b, tb) in tilings.iter().enumerate() {
            if a == b {
                continue;
            }
            let fwd = transition_probability(ta, tb, w)?;
            let back = transition_probability(tb, ta, w)?;
            if &weights[a] * &fwd != &weights[b] * &back {
                return Ok(Err((ta.clone(), tb.clone())));
            }
            if !fwd.is_zero() {
                adjacent += 1;
            }
        }
    }
    Ok(Ok(adjacent))
}

/// Stationary law `wt(T) / Z` of every tiling.
pub fn stationary_law(region: &Region, w: &WeightMode) -> Result<BTreeMap<LozengeTiling, BigRational>> {
    let tilings = enumerate_tilings(region)?;
    let mut law = BTreeMap::new();
    let mut z = BigRational::zero();
    for t in tilings {
        let wt = tiling_weight(&t, w)?;
        z += &wt;
        law.insert(t, wt);
    }
    for v in law.values_mut() {
        *v /= &z;
    }
    Ok(law)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::multivar::WeightSpec;
    use crate::shapes::Partition;

    #[test]
    fn zero_steps_is_seed() {
        let region = Region::Hexagon { a: 2, b: 2, c: 2 };
        let cfg = SamplerConfig { region: region.clone(), weights: WeightMode::Uniform, steps: 0, seed: 1 };
        assert_eq!(metropolis_sample(&cfg).unwrap().tiling, LozengeTiling::seed(&region));
    }

    #[test]
    fn balance_on_small_regions() {
        let r = Region::MuD { mu: Partition::of(&[1]), d: 1 };
        assert_eq!(check_detailed_balance(&r, &WeightMode::Uniform).unwrap(), Ok(2));
        let w = WeightMode::Explicit(WeightSpec::from_ints(&[9, 7, 5, 4], &[0, 1, 2, 3]));
        let r = Region::MuD { mu: Partition::of(&[2, 2]), d: 2 };
        assert!(check_detailed_balance(&r, &w).unwrap().is_ok());
    }

    #[test]
    fn nonpositive_weights_rejected() {
        let r = Region::MuD { mu: Partition::of(&[1]), d: 1 };
        let cfg = SamplerConfig { region: r, weights: WeightMode::Explicit(WeightSpec::from_ints(&[1, 0], &[0, 0])), steps: 5, seed: 0 };
        assert!(metropolis_sample(&cfg).is_err());
    }
}
