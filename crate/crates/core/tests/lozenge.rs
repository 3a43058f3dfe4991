use std::collections::BTreeMap;

use num_rational::BigRational;
use num_traits::ToPrimitive;

use skewhook::exactmath::ratio;
use skewhook::lozenge::{
    check_detailed_balance, enumerate_tilings, lozenge_count, metropolis_sample, occupation, render_svg,
    stationary_law, z_mu_d, zigzag_bounds, LozengeTiling, Region, SamplerConfig, SvgStyle, WeightMode,
};
use skewhook::multivar::WeightSpec;
use skewhook::shapes::Partition;

fn golden(name: &str) -> String {
    std::fs::read_to_string(format!("{}/tests/golden/{name}", env!("CARGO_MANIFEST_DIR"))).unwrap()
}

#[test]
fn svg_matches_golden_files() {
    let r = Region::MuD { mu: Partition::of(&[2, 1]), d: 1 };
    let svg = render_svg(&LozengeTiling::seed(&r), 1, &SvgStyle::default());
    assert_eq!(svg, golden("omega_21_d1_seed.svg"));

    let r = Region::Hexagon { a: 2, b: 2, c: 2 };
    let cfg = SamplerConfig { region: r.clone(), weights: WeightMode::Explicit(WeightSpec::hook(&r.outer())), steps: 500, seed: 7 };
    let t = metropolis_sample(&cfg).unwrap().tiling;
    let svg = render_svg(&t, 2, &SvgStyle::default());
    assert_eq!(svg, golden("hexagon_222_seed7.svg"));
    assert_eq!(lozenge_count(&svg), 4 + 4 + 4);
}

#[test]
fn every_drawing_has_the_right_lozenge_count() {
    let r = Region::MuD { mu: Partition::of(&[3, 2, 2]), d: 2 };
    for t in enumerate_tilings(&r).unwrap() {
        assert_eq!(lozenge_count(&render_svg(&t, 2, &SvgStyle::default())), 7 + 2 * 3 + 2 * 3);
    }
}

/// `Ω_{(1),1}`: two tilings, with the horizontal lozenge at `(1,1)` or `(2,2)`.
#[test]
fn two_tiling_region_frequencies() {
    let r = Region::MuD { mu: Partition::of(&[1]), d: 1 };
    let tilings = enumerate_tilings(&r).unwrap();
    assert_eq!(tilings.len(), 2);
    // x = (3, 1), y = (0, 0): weights 3 and 1
    let w = WeightMode::Explicit(WeightSpec::from_ints(&[3, 1], &[0, 0]));
    let law = stationary_law(&r, &w).unwrap();
    assert_eq!(law[&tilings[0]], ratio(3, 4));
    assert_eq!(law[&tilings[1]], ratio(1, 4));
    for (mode, p0) in [(WeightMode::Uniform, 0.5), (w, 0.75)] {
        let cfg = SamplerConfig { region: r.clone(), weights: mode, steps: 100_000, seed: 11 };
        let occ = occupation(&cfg).unwrap();
        let f0 = occ[&tilings[0]] as f64 / 100_000.0;
        assert!((f0 - p0).abs() < 0.02, "{f0} vs {p0}");
    }
}

#[test]
fn chain_is_reversible() {
    let r = Region::MuD { mu: Partition::of(&[2, 2]), d: 2 };
    for w in [
        WeightMode::Uniform,
        WeightMode::Hook(Partition::of(&[4, 4, 4, 4])),
        WeightMode::Explicit(WeightSpec::from_ints(&[9, 7, 5, 4], &[0, 1, 2, 3])),
    ] {
        let adjacent = check_detailed_balance(&r, &w).unwrap().expect("balanced");
        assert!(adjacent > 0);
    }
    let h = Region::Hexagon { a: 2, b: 2, c: 1 };
    assert!(check_detailed_balance(&h, &WeightMode::Uniform).unwrap().is_ok());
}

/// Long-run frequencies on a six-tiling region track the exact law.
#[test]
fn occupation_tracks_stationary_law() {
    let r = Region::MuD { mu: Partition::of(&[2]), d: 2 };
    let w = WeightMode::Explicit(WeightSpec::from_ints(&[7, 5, 4], &[0, 1, 1, 2]));
    let law: BTreeMap<_, BigRational> = stationary_law(&r, &w).unwrap();
    let n = 200_000u64;
    let occ = occupation(&SamplerConfig { region: r.clone(), weights: w, steps: n, seed: 3 }).unwrap();
    for (t, p) in &law {
        let f = occ.get(t).copied().unwrap_or(0) as f64 / n as f64;
        assert!((f - p.to_f64().unwrap()).abs() < 0.02, "{t:?}: {f} vs {p}");
    }
}

#[test]
fn empty_base_has_one_tiling() {
    let w = WeightSpec::from_ints(&[1], &[0]);
    assert_eq!(z_mu_d(&Partition::empty(), 3, &w).unwrap(), ratio(1, 1));
    let r = Region::MuD { mu: Partition::empty(), d: 3 };
    assert_eq!(enumerate_tilings(&r).unwrap().len(), 1);
}

#[test]
fn zigzag_at_one() {
    let z = zigzag_bounds(1).unwrap();
    assert_eq!(z.weighted, ratio(246, 4375));
    assert_eq!(z.weighted_enumerated, Some(ratio(246, 4375)));
    assert!(z.lower <= z.weighted && z.weighted <= z.upper);
}
