//! Run the Metropolis chain on a hexagon with hook weights and write the
//! final tiling as SVG.
//!
//! `cargo run --release --example sampler_svg -- out.svg 200000 7`

use skewhook::lozenge::{metropolis_sample, render_svg, Region, SamplerConfig, SvgStyle, WeightMode};
use skewhook::multivar::WeightSpec;

fn main() -> skewhook::Result<()> {
    let mut args = std::env::args().skip(1);
    let out = args.next().unwrap_or_else(|| "tiling.svg".into());
    let steps = args.next().and_then(|s| s.parse().ok()).unwrap_or(50_000);
    let seed = args.next().and_then(|s| s.parse().ok()).unwrap_or(7);

    let region = Region::Hexagon { a: 8, b: 8, c: 8 };
    let cfg = SamplerConfig { weights: WeightMode::Explicit(WeightSpec::hook(&region.outer())), region, steps, seed };
    let r = metropolis_sample(&cfg)?;
    println!("{steps} steps, seed {seed}: {:?}", r.stats);
    let svg = render_svg(&r.tiling, cfg.region.height(), &SvgStyle::default());
    std::fs::write(&out, svg).map_err(|e| skewhook::Error::Resource(e.to_string()))?;
    println!("wrote {out}");
    Ok(())
}
