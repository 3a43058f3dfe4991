//! `skewhook lozenge ...`.

use std::path::PathBuf;

use clap::{Args, Subcommand};
use num_bigint::BigInt;
use num_rational::BigRational;
use serde_json::{json, Value};

use super::{parse_triple, rational_json, Reply};
use crate::error::{Error, Result};
use crate::exactmath::parse_rational;
use crate::excited::{count_excited, CountMethod};
use crate::lozenge::{
    enumerate_tilings, frozen_rhombi, metropolis_sample, partition_function, path_probability,
    path_probability_enumerate, qvolume_det, qvolume_enumerate, racah_h, racah_large_h_deviation, racah_random_point,
    racah_verify, render_svg, tiling_weight, zigzag_bounds, HexPath, LozengeTiling, Region, SamplerConfig, SvgStyle,
    WeightMode, ZMethod,
};
use crate::multivar::WeightSpec;
use crate::rng::SplitMix64;
use crate::shapes::{macmahon_count, rpp_bounded_count, Partition};

#[derive(Debug, Args)]
pub struct RegionArgs {
    /// `a,b,c` for the hexagon `H(a,b,c)`.
    #[arg(long)]
    hexagon: Option<String>,
    /// Base partition.
    #[arg(long)]
    mu: Option<Partition>,
    /// Height bound, with `--mu`.
    #[arg(long)]
    d: Option<usize>,
    /// Outer partition, with `--mu`.
    #[arg(long)]
    lambda: Option<Partition>,
}

impl RegionArgs {
    fn region(&self) -> Result<Region> {
        match (&self.hexagon, &self.mu, self.d, &self.lambda) {
            (Some(h), None, None, None) => {
                let (a, b, c) = parse_triple(h)?;
                Ok(Region::Hexagon { a, b, c })
            }
            (None, Some(mu), Some(d), None) => Ok(Region::MuD { mu: mu.clone(), d }),
            (None, Some(mu), None, Some(lambda)) => {
                if !lambda.contains(mu) {
                    return Err(Error::Shape(format!("{mu} is not contained in {lambda}")));
                }
                Ok(Region::BaseMuLambda { lambda: lambda.clone(), mu: mu.clone() })
            }
            _ => Err(Error::Precondition("give --hexagon a,b,c, or --mu with --d, or --mu with --lambda".into())),
        }
    }
}

#[derive(Debug, Subcommand)]
pub enum LozengeCmd {
    /// Weighted sum over all tilings of a region.
    Zf {
        #[command(flatten)]
        region: RegionArgs,
        /// uniform, hook, hook=[λ] or x=..;y=..
        #[arg(long, default_value = "uniform")]
        weights: String,
        /// determinant or enumerate.
        #[arg(long, default_value = "determinant")]
        method: ZMethod,
        /// Also sum over tilings and compare.
        #[arg(long)]
        check: bool,
    },
    /// Probability that a path of height values occurs in a hexagon.
    Prob {
        #[arg(long)]
        hexagon: String,
        /// `d_0,...,d_{a+b}`.
        #[arg(long)]
        path: String,
        #[arg(long, default_value = "hook")]
        weights: String,
        #[arg(long)]
        check: bool,
    },
    /// The zigzag path in `H(2a+1,2a,2a+1)` against its bounds.
    Zigzag {
        #[arg(long)]
        a: usize,
    },
    /// Closed form for the path around a rectangle in `H(a,2b,2c+1)`.
    Frozen {
        /// `a,b,c`.
        #[arg(long)]
        abc: String,
    },
    /// Generating polynomial of tilings of `Ω_{μ,d}` by volume.
    Qvolume {
        #[arg(long)]
        mu: Partition,
        #[arg(long)]
        d: usize,
        #[arg(long)]
        check: bool,
    },
    /// Run the Metropolis chain from the minimal tiling.
    Sample {
        #[command(flatten)]
        region: RegionArgs,
        #[arg(long, default_value = "uniform")]
        weights: String,
        #[arg(long, default_value_t = 10_000)]
        steps: u64,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Also write the final tiling as SVG.
        #[arg(long)]
        svg: Option<PathBuf>,
    },
    /// SVG of a sampled tiling (`--steps 0` draws the minimal one).
    Render {
        #[command(flatten)]
        region: RegionArgs,
        #[arg(long, default_value = "uniform")]
        weights: String,
        #[arg(long, default_value_t = 0)]
        steps: u64,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Write the SVG here instead of embedding it in the output.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// The two-parameter volume identity over boxed plane partitions.
    Racah {
        #[arg(long)]
        abc: String,
        #[arg(long, requires = "u")]
        q: Option<String>,
        #[arg(long, requires = "q")]
        u: Option<String>,
        /// Evaluate the `h` form instead.
        #[arg(long, conflicts_with_all = ["q", "u"])]
        h: Option<String>,
        /// Relative deviation from the product at a large integer `h`.
        #[arg(long, conflicts_with_all = ["q", "u", "h"])]
        large_h: Option<u64>,
        /// Check this many random `(q, u)`.
        #[arg(long, conflicts_with_all = ["q", "u", "h", "large_h"])]
        random: Option<usize>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
}

fn rational(text: &str) -> Result<BigRational> {
    parse_rational(text).ok_or_else(|| Error::Domain(format!("bad rational {text:?}")))
}

/// `hook` alone means hook weights of the outer shape of `region`.
fn weights(text: &str, region: &Region) -> Result<WeightMode> {
    let t = text.trim();
    Ok(match t {
        "uniform" => WeightMode::Uniform,
        "hook" => WeightMode::Explicit(WeightSpec::hook(&region.outer())),
        _ => match t.strip_prefix("hook=") {
            Some(l) => WeightMode::Explicit(WeightSpec::hook(&l.parse::<Partition>()?)),
            None if t.contains('=') => WeightMode::Explicit(WeightSpec::parse(t)?),
            None => return Err(Error::Domain(format!("unknown weights {t:?}; expected uniform, hook, hook=[..] or x=..;y=.."))),
        },
    })
}

fn spec_json(w: &WeightMode) -> Value {
    match w {
        WeightMode::Uniform => json!("uniform"),
        WeightMode::Hook(l) => json!({ "hook": l.to_string() }),
        WeightMode::Explicit(s) => json!({
            "x": s.x.iter().map(rational_json).collect::<Vec<_>>(),
            "y": s.y.iter().map(rational_json).collect::<Vec<_>>(),
        }),
    }
}

fn zf_enumerate(region: &Region, w: &WeightMode) -> Result<BigRational> {
    let mut acc = BigRational::from_integer(0.into());
    for t in enumerate_tilings(region)? {
        acc += tiling_weight(&t, w)?;
    }
    Ok(acc)
}

/// Uniform weights make the `A` matrices singular, so the count comes from
/// the volume polynomial or the excited-diagram determinant instead.
fn zf_formula(region: &Region, w: &WeightMode) -> Result<BigRational> {
    match (w, region) {
        (WeightMode::Uniform, Region::BaseMuLambda { .. }) => {
            Ok(BigRational::from_integer(count_excited(&region.skew_shape()?, CountMethod::Determinant)?))
        }
        (WeightMode::Uniform, _) => Ok(BigRational::from_integer(qvolume_det(&region.base(), region.height())?.eval_at_one())),
        (WeightMode::Explicit(s), _) => partition_function(region, s, ZMethod::Determinant),
        (WeightMode::Hook(l), _) => partition_function(region, &WeightSpec::hook(l), ZMethod::Determinant),
    }
}

fn sample(region: &Region, w: WeightMode, steps: u64, seed: u64) -> Result<(LozengeTiling, Value)> {
    let cfg = SamplerConfig { region: region.clone(), weights: w, steps, seed };
    let r = metropolis_sample(&cfg)?;
    let stats = serde_json::to_value(&r.stats).expect("stats serialize");
    Ok((r.tiling, stats))
}

fn write_file(path: &PathBuf, text: &str) -> Result<()> {
    std::fs::write(path, text).map_err(|e| Error::Resource(format!("cannot write {}: {e}", path.display())))
}

pub fn run(cmd: LozengeCmd) -> Result<Reply> {
    match cmd {
        LozengeCmd::Zf { region, weights: wt, method, check } => {
            let region = region.region()?;
            let w = weights(&wt, &region)?;
            let z = match method {
                ZMethod::Determinant => zf_formula(&region, &w)?,
                ZMethod::Enumerate => zf_enumerate(&region, &w)?,
            };
            let mut value = json!({
                "region": region.to_string(),
                "weights": spec_json(&w),
                "method": method,
                "z": rational_json(&z),
            });
            let mut ok = true;
            if check {
                let other = match method {
                    ZMethod::Determinant => zf_enumerate(&region, &w)?,
                    ZMethod::Enumerate => zf_formula(&region, &w)?,
                };
                ok = other == z;
                value["z_other_method"] = rational_json(&other);
                value["equal"] = json!(ok);
            }
            let prov = if method == ZMethod::Determinant { "formula" } else { "oracle" };
            Ok(Reply::checked(prov, value, ok))
        }
        LozengeCmd::Prob { hexagon, path, weights: wt, check } => {
            let (a, b, c) = parse_triple(&hexagon)?;
            let region = Region::Hexagon { a, b, c };
            let p = HexPath::parse(a, b, c, &path)?;
            let (mu, star) = p.decode()?;
            let w = weights(&wt, &region)?;
            let prob = match &w {
                WeightMode::Uniform => {
                    let rest = (c - 1).checked_sub(p.level()).ok_or_else(|| Error::Domain(format!("level {} ≥ c = {c}", p.level())))?;
                    BigRational::new(
                        rpp_bounded_count(&mu, p.level()) * rpp_bounded_count(&star, rest),
                        macmahon_count(a, b, c),
                    )
                }
                WeightMode::Explicit(s) => path_probability(&p, s)?,
                WeightMode::Hook(l) => path_probability(&p, &WeightSpec::hook(l))?,
            };
            let mut value = json!({
                "region": region.to_string(),
                "path": p.d_seq,
                "level": p.level(),
                "mu": mu.to_string(),
                "mu_star": star.to_string(),
                "weights": spec_json(&w),
                "probability": rational_json(&prob),
            });
            let mut ok = true;
            if check {
                let e = path_probability_enumerate(&p, &w)?;
                ok = e == prob;
                value["enumerated"] = rational_json(&e);
                value["equal"] = json!(ok);
            }
            Ok(Reply::checked("formula", value, ok))
        }
        LozengeCmd::Zigzag { a } => {
            let z = zigzag_bounds(a)?;
            let ok = z.within_bounds && z.weighted_enumerated.as_ref().is_none_or(|e| *e == z.weighted);
            Ok(Reply::checked("formula", serde_json::to_value(&z).expect("report serializes"), ok))
        }
        LozengeCmd::Frozen { abc } => {
            let (a, b, c) = parse_triple(&abc)?;
            let f = frozen_rhombi(a, b, c)?;
            let ok = f.agree;
            Ok(Reply::checked("formula", serde_json::to_value(&f).expect("report serializes"), ok))
        }
        LozengeCmd::Qvolume { mu, d, check } => {
            let p = qvolume_det(&mu, d)?;
            let coeffs = |c: &[BigInt]| c.iter().map(|v| v.to_string()).collect::<Vec<_>>();
            let mut value = json!({ "mu": mu.to_string(), "d": d, "coeffs": coeffs(p.coeffs()), "count": p.eval_at_one().to_string() });
            let mut ok = true;
            if check {
                let e = qvolume_enumerate(&mu, d);
                ok = e == p;
                value["enumerated"] = json!(coeffs(e.coeffs()));
                value["equal"] = json!(ok);
            }
            Ok(Reply::checked("formula", value, ok))
        }
        LozengeCmd::Sample { region, weights: wt, steps, seed, svg } => {
            let region = region.region()?;
            let w = weights(&wt, &region)?;
            let (t, stats) = sample(&region, w.clone(), steps, seed)?;
            let mut value = json!({
                "region": region.to_string(),
                "weights": spec_json(&w),
                "steps": steps,
                "seed": seed,
                "stats": stats,
                "weight": rational_json(&tiling_weight(&t, &w)?),
                "tiling": t.to_json(),
            });
            if let Some(path) = svg {
                write_file(&path, &render_svg(&t, region.height(), &SvgStyle::default()))?;
                value["svg"] = json!(path.display().to_string());
            }
            Ok(Reply::oracle(value))
        }
        LozengeCmd::Render { region, weights: wt, steps, seed, out } => {
            let region = region.region()?;
            let w = weights(&wt, &region)?;
            let (t, _) = sample(&region, w, steps, seed)?;
            let svg = render_svg(&t, region.height(), &SvgStyle::default());
            let mut value = json!({ "region": region.to_string(), "steps": steps, "seed": seed });
            match out {
                Some(path) => {
                    write_file(&path, &svg)?;
                    value["file"] = json!(path.display().to_string());
                }
                None => value["svg"] = json!(svg),
            }
            Ok(Reply::oracle(value))
        }
        LozengeCmd::Racah { abc, q, u, h, large_h, random, seed } => {
            let (a, b, c) = parse_triple(&abc)?;
            if let (Some(q), Some(u)) = (&q, &u) {
                let r = racah_verify(a, b, c, &rational(q)?, &rational(u)?)?;
                let ok = r.holds && r.u_zero_matches_macmahon;
                return Ok(Reply::checked("formula", serde_json::to_value(&r).expect("report serializes"), ok));
            }
            if let Some(h) = h {
                let r = racah_h(a, b, c, &rational(&h)?)?;
                let ok = r.holds;
                return Ok(Reply::checked("formula", serde_json::to_value(&r).expect("report serializes"), ok));
            }
            if let Some(h) = large_h {
                let (dev, bound) = racah_large_h_deviation(a, b, c, h);
                let ok = dev <= bound;
                let value = json!({ "a": a, "b": b, "c": c, "h": h, "deviation": rational_json(&dev), "bound": rational_json(&bound), "within": ok });
                return Ok(Reply::checked("formula", value, ok));
            }
            let n = random.unwrap_or(10);
            let mut rng = SplitMix64::new(seed);
            let mut reports = Vec::with_capacity(n);
            for _ in 0..n {
                let (q, u) = racah_random_point(&mut rng, a, b, c, 20);
                reports.push(racah_verify(a, b, c, &q, &u)?);
            }
            let ok = reports.iter().all(|r| r.holds && r.u_zero_matches_macmahon);
            Ok(Reply::checked("formula", json!({ "a": a, "b": b, "c": c, "seed": seed, "points": reports, "all_hold": ok }), ok))
        }
    }
}
