use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use proptest::prelude::*;

use skewhook::exactmath::{parse_rational, rational_string};
use skewhook::excited::{
    count_excited, enumerate_excited, excited_to_flagged, excited_to_paths, flagged_to_excited, paths_to_excited,
    is_excited, CountMethod, Variant,
};
use skewhook::lozenge::{
    enumerate_tilings, excited_from_tiling, metropolis_sample, partition_function, path_probability, paths_at_level,
    qvolume_det, qvolume_enumerate, racah_random_point, racah_verify, tiling_from_excited, LozengeTiling, Region,
    SamplerConfig, WeightMode, ZMethod,
};
use skewhook::multivar::{nhlf_count, WeightSpec};
use skewhook::rng::SplitMix64;
use skewhook::schubert::{upsilon, Permutation, UpsilonMethod};
use skewhook::shapes::{syt_count_oracle, Partition, SkewShape, SytMethod};

fn partition_in(rows: usize, cols: usize) -> impl Strategy<Value = Partition> {
    prop::collection::vec(0..=cols, 0..=rows).prop_map(|mut v| {
        v.sort_unstable_by(|a, b| b.cmp(a));
        Partition::new(v).unwrap()
    })
}

/// `λ/μ` with `λ` inside `rows × cols`.
fn skew_in(rows: usize, cols: usize) -> impl Strategy<Value = SkewShape> {
    partition_in(rows, cols).prop_flat_map(|outer| {
        let parts = outer.parts().to_vec();
        let inner = parts.iter().map(|&p| 0..=p).collect::<Vec<_>>().prop_map(|mut v| {
            // clip to a partition below `outer`
            for i in 1..v.len() {
                v[i] = v[i].min(v[i - 1]);
            }
            Partition::new(v).unwrap()
        });
        (Just(outer), inner).prop_map(|(o, i)| SkewShape::new(o, i).unwrap())
    })
}

/// Strictly decreasing `x` above every `y`, so all weights are positive and
/// the `x` are distinct.
fn positive_weights(nx: usize, ny: usize) -> impl Strategy<Value = WeightSpec> {
    (prop::collection::vec(1i64..4, nx), prop::collection::vec(-3i64..3, ny)).prop_map(|(gaps, y)| {
        let top = 4 + gaps.iter().sum::<i64>();
        let mut x = Vec::with_capacity(gaps.len());
        let mut v = top;
        for g in gaps {
            x.push(v);
            v -= g;
        }
        WeightSpec::from_ints(&x, &y)
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn shape_text_round_trip(s in skew_in(5, 5)) {
        let back: SkewShape = s.to_string().parse().unwrap();
        prop_assert_eq!(back, s);
    }

    #[test]
    fn conjugate_is_an_involution(p in partition_in(6, 6)) {
        prop_assert_eq!(p.conjugate().conjugate(), p.clone());
        prop_assert_eq!(p.conjugate().size(), p.size());
    }

    #[test]
    fn rational_text_round_trip(n in -10_000i64..10_000, d in 1i64..10_000) {
        let r = BigRational::new(n.into(), d.into());
        prop_assert_eq!(parse_rational(&rational_string(&r)), Some(r));
    }

    #[test]
    fn excited_counts_agree(s in skew_in(4, 4)) {
        let n = enumerate_excited(&s, Variant::SE).len();
        prop_assert_eq!(count_excited(&s, CountMethod::Determinant).unwrap(), BigInt::from(n));
        for v in [Variant::SE, Variant::NE] {
            for d in enumerate_excited(&s, v) {
                prop_assert!(is_excited(&s, v, d.cells()));
            }
        }
        if s.is_slim() {
            prop_assert_eq!(count_excited(&s, CountMethod::HookContent).unwrap(), BigInt::from(n));
        }
    }

    #[test]
    fn excited_bijections_round_trip(s in skew_in(4, 4)) {
        for d in enumerate_excited(&s, Variant::SE) {
            let t = excited_to_flagged(&d).unwrap();
            prop_assert_eq!(&flagged_to_excited(&s, &t).unwrap(), &d);
            if s.is_connected() {
                let p = excited_to_paths(&d).unwrap();
                prop_assert_eq!(&paths_to_excited(&p).unwrap(), &d);
            }
            let tiling = tiling_from_excited(&d).unwrap();
            prop_assert!(tiling.is_valid());
            prop_assert_eq!(&excited_from_tiling(&tiling).unwrap(), &d);
        }
    }

    #[test]
    fn nhlf_matches_backtracking(s in skew_in(4, 4)) {
        prop_assume!(s.size() <= 10);
        prop_assert_eq!(nhlf_count(&s).unwrap(), syt_count_oracle(&s, SytMethod::Backtrack).unwrap());
    }

    #[test]
    fn tile_moves_are_reversible(mu in partition_in(3, 3), d in 1usize..3, seed in any::<u64>()) {
        let region = Region::MuD { mu: mu.clone(), d };
        let tilings = enumerate_tilings(&region).unwrap();
        let mut rng = SplitMix64::new(seed);
        let t = &tilings[rng.below(tilings.len() as u64) as usize];
        for cell in mu.cells() {
            for delta in [-1, 1] {
                if let Some(n) = t.moved(cell, delta) {
                    prop_assert_eq!(&n.moved(cell, -delta).unwrap(), t);
                }
            }
        }
    }

    #[test]
    fn determinant_matches_enumeration(mu in partition_in(3, 3), d in 0usize..=3, w in positive_weights(6, 6)) {
        let region = Region::MuD { mu, d };
        let det = partition_function(&region, &w, ZMethod::Determinant).unwrap();
        let en = partition_function(&region, &w, ZMethod::Enumerate).unwrap();
        prop_assert_eq!(det, en);
    }

    #[test]
    fn base_lambda_determinant_matches_enumeration(s in skew_in(4, 4), w in positive_weights(4, 4)) {
        let region = Region::BaseMuLambda { lambda: s.outer().clone(), mu: s.inner().clone() };
        let det = partition_function(&region, &w, ZMethod::Determinant).unwrap();
        let en = partition_function(&region, &w, ZMethod::Enumerate).unwrap();
        prop_assert_eq!(det, en);
    }

    #[test]
    fn volume_polynomial_matches_enumeration(mu in partition_in(3, 3), d in 0usize..=3) {
        prop_assert_eq!(qvolume_det(&mu, d).unwrap(), qvolume_enumerate(&mu, d));
    }

    #[test]
    fn path_probabilities_sum_to_one(a in 1usize..3, b in 1usize..3, c in 1usize..3, w in positive_weights(5, 5)) {
        for level in 0..c {
            let mut total = BigRational::zero();
            for p in paths_at_level(a, b, c, level).unwrap() {
                total += path_probability(&p, &w).unwrap();
            }
            prop_assert!(total.is_one(), "level {} sums to {}", level, total);
        }
    }

    #[test]
    fn sampler_is_deterministic(seed in any::<u64>(), steps in 0u64..400) {
        let region = Region::Hexagon { a: 2, b: 2, c: 2 };
        let cfg = SamplerConfig { region: region.clone(), weights: WeightMode::Hook(region.outer()), steps, seed };
        let a = metropolis_sample(&cfg).unwrap();
        let b = metropolis_sample(&cfg).unwrap();
        prop_assert_eq!(&a, &b);
        prop_assert!(a.tiling.is_valid());
        let s = &a.stats;
        prop_assert_eq!(s.accepted + s.rejected_invalid + s.rejected_weight, steps);
        if steps == 0 {
            prop_assert_eq!(a.tiling, LozengeTiling::seed(&region));
        }
    }

    #[test]
    fn racah_identity_at_random_points(a in 1usize..3, b in 1usize..3, c in 1usize..3, seed in any::<u64>()) {
        let mut rng = SplitMix64::new(seed);
        let (q, u) = racah_random_point(&mut rng, a, b, c, 12);
        let r = racah_verify(a, b, c, &q, &u).unwrap();
        prop_assert!(r.holds && r.u_zero_matches_macmahon);
    }

    #[test]
    fn upsilon_methods_agree(perm in Just((1..=5usize).collect::<Vec<_>>()).prop_shuffle()) {
        let w = Permutation::new(perm).unwrap();
        let m = upsilon(&w, UpsilonMethod::Macdonald).unwrap();
        prop_assert_eq!(upsilon(&w, UpsilonMethod::Auto).unwrap(), m.clone());
        prop_assert_eq!(upsilon(&w.inverse(), UpsilonMethod::Macdonald).unwrap(), m);
    }

    #[test]
    fn splitmix_below_is_in_range(seed in any::<u64>(), n in 1u64..1000) {
        let mut rng = SplitMix64::new(seed);
        for _ in 0..20 {
            prop_assert!(rng.below(n) < n);
        }
    }
}
