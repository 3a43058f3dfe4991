use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;

use super::{Level, Tally};
use crate::excited::{count_excited, CountMethod};
use crate::exactmath::{rat, ratio, rational_string};
use crate::lozenge::{
    check_detailed_balance, enumerate_tilings, metropolis_sample, occupation, path_probability, path_probability_enumerate,
    paths_at_level, racah_h, racah_large_h_deviation, racah_random_point, racah_verify, stationary_law, tiling_weight,
    z_base_mu_lambda, z_hexagon, z_mu_d, z_mu_d_x_only, zigzag_bounds, HexPath, LozengeTiling, Region, SamplerConfig,
    WeightMode,
};
use crate::multivar::{nhlf_count, verify_identity, IdentityKind, IdentityParams, WeightSpec};
use crate::products::{
    build_lambda_shape, conjecture_eval, f_corollary, f_lambda_product, q_corollary, q_lambda_product, ConjectureKind,
    CorollaryKind, LambdaParams, QCorollaryKind,
};
use crate::rng::SplitMix64;
use crate::schubert::{
    classify, family, upsilon, upsilon_closed_form, upsilon_shifted, Family, Permutation, UpsilonMethod,
};
use crate::shapes::{
    euler_number, macmahon_count, rpp_bounded_count, ssyt_series_oracle, syt_count_oracle, Partition, SkewShape,
    SytMethod,
};

const SEED: u64 = 0x5EED_2024;

fn eq_check<T: PartialEq + std::fmt::Display>(t: &mut Tally, what: &str, got: Option<T>, want: T) {
    match got {
        Some(g) => {
            let ok = g == want;
            t.check(ok, || format!("{what}: got {g}, want {want}"));
        }
        None => {}
    }
}

fn rat_str(r: &BigRational) -> String {
    rational_string(r)
}

pub fn golden_values(_: Level) -> Tally {
    let mut t = Tally::default();
    let ups = |t: &mut Tally, perm: &str, c: usize, want: i64| {
        let w = Permutation::parse(perm).expect("literal");
        let got = t.result(upsilon_shifted(&w, c, UpsilonMethod::Macdonald), || format!("Υ_{perm}({c})"));
        eq_check(t, &format!("Υ_{perm}({c})"), got, BigInt::from(want));
    };
    ups(&mut t, "1432", 0, 5);
    ups(&mut t, "2143", 0, 3);
    ups(&mut t, "214365", 0, 15);
    let auto = t.result(upsilon(&Permutation::parse("1432").unwrap(), UpsilonMethod::Auto), || "Υ_1432 auto".into());
    eq_check(&mut t, "Υ_1432 (auto)", auto, BigInt::from(5));
    let w0 = family(Family::W0 { n: 3 }).unwrap();
    let got = t.result(upsilon_shifted(&w0, 1, UpsilonMethod::Macdonald), || "Υ_w0(3)(1)".into());
    eq_check(&mut t, "Υ_w0(3)(1)", got, BigInt::from(5));
    let x1 = family(Family::X { n: 1 }).unwrap();
    let got = t.result(upsilon(&x1, UpsilonMethod::Macdonald), || "Υ_x(1)".into());
    eq_check(&mut t, "Υ_x(1)", got, euler_number(3));
    eq_check(&mut t, "E_3", Some(euler_number(3)), BigInt::from(2));
    for (outer, want) in [(&[3, 3, 2][..], 5), (&[4, 4, 4][..], 8)] {
        let shape = SkewShape::of(outer, &[2, 1]);
        for m in [CountMethod::Enumerate, CountMethod::Determinant] {
            let got = t.result(count_excited(&shape, m), || format!("|E({shape})|"));
            eq_check(&mut t, &format!("|E({shape})| {m:?}"), got, BigInt::from(want));
        }
    }
    eq_check(&mut t, "|PP(3,2,3)|", Some(macmahon_count(3, 2, 3)), BigInt::from(175));
    eq_check(&mut t, "|RPP_δ3(1)|", Some(rpp_bounded_count(&Partition::staircase(3), 1)), BigInt::from(5));
    if let Some(z) = t.result(zigzag_bounds(1), || "zigzag a=1".into()) {
        eq_check(&mut t, "C(1)", Some(rat_str(&z.c_a)), "54/35".into());
        eq_check(&mut t, "lower bound", Some(rat_str(&z.lower)), "54/6125".into());
        eq_check(&mut t, "upper bound", Some(rat_str(&z.upper)), "54/245".into());
        eq_check(&mut t, "P_w(1)", Some(rat_str(&z.weighted)), "246/4375".into());
        eq_check(&mut t, "P_w(1) by enumeration", z.weighted_enumerated.as_ref().map(rat_str), "246/4375".into());
        eq_check(&mut t, "P_u(1)", Some(rat_str(&z.uniform)), "1/7".into());
        t.check(z.within_bounds, || "P_w(1) outside its bounds".into());
    }
    let p = HexPath::from_partition(3, 2, 3, &Partition::staircase(3), 1).unwrap();
    let got = t.result(path_probability_enumerate(&p, &WeightMode::Uniform), || "P_u(1) by enumeration".into());
    eq_check(&mut t, "P_u(1) by enumeration", got.as_ref().map(rat_str), "1/7".into());
    t
}

pub fn nhlf_oracle(level: Level) -> Tally {
    let n = if level == Level::Desk { 8 } else { 6 };
    let shapes = SkewShape::all_up_to(n);
    Tally::par(&shapes, |_, s| {
        let mut t = Tally::default();
        let hooks = t.result(nhlf_count(s), || format!("NHLF {s}"));
        let oracle = t.result(syt_count_oracle(s, SytMethod::Backtrack), || format!("oracle {s}"));
        if let (Some(h), Some(o)) = (hooks, oracle) {
            t.check(h == o, || format!("{s}: hook sum {h}, oracle {o}"));
        }
        t
    })
}

fn lambda_grid(level: Level, max_cells: usize) -> Vec<LambdaParams> {
    let max = if level == Level::Desk { 2 } else { 1 };
    LambdaParams::grid(max).into_iter().filter(|&p| build_lambda_shape(p).size() <= max_cells).collect()
}

pub fn product_formula(level: Level) -> Tally {
    let grid = lambda_grid(level, 40);
    Tally::par(&grid, |_, &p| {
        let mut t = Tally::default();
        let shape = build_lambda_shape(p);
        let Some(oracle) = t.result(syt_count_oracle(&shape, SytMethod::Determinant), || format!("oracle Λ({p})")) else {
            return t;
        };
        let f = f_lambda_product(p);
        t.check(f == oracle, || format!("Λ({p}): product {f}, oracle {oracle}"));
        let LambdaParams { a, b, c, d, e, m } = p;
        let mut kinds = Vec::new();
        if m == 0 {
            kinds.push(CorollaryKind::Abcde);
        }
        if m == 1 {
            kinds.push(CorollaryKind::Abcde1);
            if d == 0 && e == 0 {
                kinds.push(CorollaryKind::Abc);
            }
        }
        for k in kinds {
            let v = f_corollary(k, a, b, c, d, e);
            t.check(v == oracle, || format!("{k:?} at Λ({p}): {v}, oracle {oracle}"));
        }
        t
    })
}

pub fn q_formulas(level: Level) -> Tally {
    let order = if level == Level::Desk { 10 } else { 6 };
    let grid = lambda_grid(level, 20);
    Tally::par(&grid, |_, &p| {
        let mut t = Tally::default();
        let shape = build_lambda_shape(p);
        let Some(oracle) = t.result(ssyt_series_oracle(&shape, order), || format!("SSYT series Λ({p})")) else {
            return t;
        };
        if let Some(s) = t.result(q_lambda_product(p, order), || format!("q-product Λ({p})")) {
            t.check(s == oracle, || format!("Λ({p}): q-product {s}, oracle {oracle}"));
        }
        let LambdaParams { a, b, c, d, e, m } = p;
        let mut kinds = Vec::new();
        if m == 0 {
            kinds.push(QCorollaryKind::Abcde);
        }
        if m == 1 {
            kinds.push(QCorollaryKind::Abcde1);
            if d == 0 && e == 0 {
                kinds.push(QCorollaryKind::Abc);
            }
        }
        for k in kinds {
            if let Some(s) = t.result(q_corollary(k, a, b, c, d, e, order), || format!("{k:?} at Λ({p})")) {
                t.check(s == oracle, || format!("{k:?} at Λ({p}): {s}, oracle {oracle}"));
            }
        }
        t
    })
}

pub fn schubert_identities(_: Level) -> Tally {
    let perms = Permutation::all(6);
    let mut t = Tally::par(&perms, |_, w| {
        let mut t = Tally::default();
        let class = classify(w);
        if !class.vexillary && !class.avoid321 {
            return t;
        }
        let Some(m) = t.result(upsilon(w, UpsilonMethod::Macdonald), || format!("Macdonald {w}")) else { return t };
        if class.vexillary {
            if let Some(v) = t.result(upsilon(w, UpsilonMethod::VexillaryExcited), || format!("vexillary {w}")) {
                t.check(v == m, || format!("{w}: vexillary {v}, Macdonald {m}"));
            }
        }
        if class.avoid321 {
            if let Some(v) = t.result(upsilon(w, UpsilonMethod::Skew321), || format!("skew 321 {w}")) {
                t.check(v == m, || format!("{w}: skew shape {v}, Macdonald {m}"));
            }
        }
        t
    });
    let mut cases: Vec<(Family, usize)> = Vec::new();
    for n in 1..=4 {
        cases.extend((0..=3).map(|c| (Family::W0 { n }, c)));
    }
    for a in 1..=3 {
        for b in 1..=3 {
            cases.extend((0..=3).map(|c| (Family::Box { a, b }, c)));
        }
    }
    cases.extend([(Family::V { a: 1 }, 1), (Family::V { a: 1 }, 2), (Family::S { a: 1 }, 0), (Family::T { a: 1 }, 0)]);
    for n in 1..=2 {
        cases.extend([(Family::X { n }, 0), (Family::Y { n }, 0), (Family::Z { n }, 0)]);
    }
    t = t.merge(Tally::par(&cases, |_, &(kind, c)| {
        let mut t = Tally::default();
        let w = family(kind).expect("positive parameters");
        let closed = t.result(upsilon_closed_form(kind, c), || format!("closed form {kind}"));
        let enumerated = t.result(upsilon_shifted(&w, c, UpsilonMethod::Macdonald), || format!("Macdonald {kind}"));
        if let (Some(f), Some(e)) = (closed, enumerated) {
            t.check(f == e, || format!("{kind} at c = {c}: closed form {f}, Macdonald {e}"));
        }
        t
    }));
    t
}

/// Random weights with pairwise distinct `x`.
fn distinct_weights(rng: &mut SplitMix64, nx: usize, ny: usize) -> WeightSpec {
    loop {
        let w = WeightSpec::random(rng, nx, ny, 50);
        let mut xs = w.x.clone();
        xs.sort();
        xs.dedup();
        if xs.len() == w.x.len() {
            return w;
        }
    }
}

/// `x_i ∈ [80, 120]` distinct, `y_j ∈ [-20, 20]`: every weight positive.
fn positive_weights(rng: &mut SplitMix64, nx: usize, ny: usize) -> WeightSpec {
    let base = distinct_weights(rng, nx, ny);
    let x = base.x.iter().map(|v| rat(100) + v * ratio(2, 5)).collect();
    let y = base.y.iter().map(|v| v * ratio(2, 5)).collect();
    WeightSpec::new(x, y)
}

fn enum_sum(tilings: &[LozengeTiling], w: &WeightSpec) -> crate::Result<BigRational> {
    let mode = WeightMode::Explicit(w.clone());
    let mut acc = BigRational::zero();
    for t in tilings {
        acc += tiling_weight(t, &mode)?;
    }
    Ok(acc)
}

pub fn lozenge_determinants(level: Level) -> Tally {
    let points = if level == Level::Desk { 20 } else { 3 };
    let (side, lam_side) = if level == Level::Desk { (3, 4) } else { (2, 3) };
    let mut regions: Vec<Region> = Vec::new();
    for mu in Partition::all_in_box(side, side) {
        for d in 0..=side {
            regions.push(Region::MuD { mu: mu.clone(), d });
        }
    }
    for a in 1..=side {
        for b in 1..=side {
            for c in 1..=side {
                regions.push(Region::Hexagon { a, b, c });
            }
        }
    }
    for lambda in Partition::all_in_box(lam_side, lam_side) {
        for mu in lambda.subpartitions() {
            if mu.len() <= side && mu.first() <= side {
                regions.push(Region::BaseMuLambda { lambda: lambda.clone(), mu });
            }
        }
    }
    let t = Tally::par(&regions, |i, region| {
        let mut t = Tally::default();
        let Some(tilings) = t.result(enumerate_tilings(region), || format!("tilings of {region}")) else { return t };
        let outer = region.outer();
        let (nx, ny) = (outer.len().max(1), outer.first().max(1));
        let mut rng = SplitMix64::derive(SEED, i as u64);
        for _ in 0..points {
            let w = distinct_weights(&mut rng, nx, ny);
            let Some(brute) = t.result(enum_sum(&tilings, &w), || format!("enumeration on {region}")) else { continue };
            let det = match region {
                Region::MuD { mu, d } => z_mu_d(mu, *d, &w),
                Region::Hexagon { a, b, c } => z_hexagon(*a, *b, *c, &w),
                Region::BaseMuLambda { lambda, mu } => z_base_mu_lambda(lambda, mu, &w),
            };
            if let Some(det) = t.result(det, || format!("determinant on {region}")) {
                t.check(det == brute, || format!("{region}: determinant {}, enumeration {}", rat_str(&det), rat_str(&brute)));
            }
            if let Region::MuD { mu, d } = region {
                let w0 = WeightSpec::new(w.x.clone(), vec![BigRational::zero(); ny]);
                let brute0 = enum_sum(&tilings, &w0);
                let det0 = z_mu_d_x_only(mu, *d, &w.x);
                if let (Some(b0), Some(d0)) = (t.result(brute0, || "y = 0 sum".into()), t.result(det0, || "y = 0 det".into())) {
                    t.check(b0 == d0, || format!("{region} at y = 0: {}, enumeration {}", rat_str(&d0), rat_str(&b0)));
                }
            }
        }
        t
    });
    let mut hexes = Vec::new();
    for a in 1..=side {
        for b in 1..=side {
            for c in 1..=side {
                hexes.push((a, b, c));
            }
        }
    }
    let paths = Tally::par(&hexes, |i, &(a, b, c)| {
        let mut t = Tally::default();
        let mut rng = SplitMix64::derive(SEED ^ 0xABCD, i as u64);
        for _ in 0..points {
            let w = positive_weights(&mut rng, a + c, b + c);
            for level in 0..c {
                let mut total = BigRational::zero();
                for p in paths_at_level(a, b, c, level).expect("levels below c") {
                    if let Some(v) = t.result(path_probability(&p, &w), || format!("path {:?} in H({a},{b},{c})", p.d_seq)) {
                        total += v;
                    }
                }
                t.check(total == rat(1), || format!("H({a},{b},{c}) level {level}: probabilities sum to {}", rat_str(&total)));
            }
        }
        // one weighted point against enumeration, every path
        if a + b + c <= 7 {
            let w = positive_weights(&mut rng, a + c, b + c);
            for level in 0..c {
                for p in paths_at_level(a, b, c, level).expect("levels below c") {
                    let det = t.result(path_probability(&p, &w), || "path determinant".into());
                    let brute = t.result(path_probability_enumerate(&p, &WeightMode::Explicit(w.clone())), || "path enumeration".into());
                    if let (Some(d), Some(e)) = (det, brute) {
                        t.check(d == e, || format!("H({a},{b},{c}) path {:?}: {}, enumeration {}", p.d_seq, rat_str(&d), rat_str(&e)));
                    }
                }
            }
        }
        t
    });
    t.merge(paths)
}

pub fn identity_suites(level: Level) -> Tally {
    let points = if level == Level::Desk { 50 } else { 5 };
    let mut abc = Vec::new();
    for a in 1..=3 {
        for b in 1..=3 {
            for c in 1..=3 {
                abc.push((a, b, c));
            }
        }
    }
    let slim: Vec<SkewShape> = Partition::all_in_box(3, 6)
        .into_iter()
        .filter(|l| l.len() == 3)
        .flat_map(|l| l.subpartitions().into_iter().map(move |m| SkewShape::new(l.clone(), m).expect("μ ⊆ λ")))
        .filter(|s| s.is_slim() && s.size() > 0)
        .collect();
    let mut rect = Vec::new();
    for &(a, b, c) in &abc {
        if b >= a {
            rect.push(SkewShape::new(Partition::rectangle(a + c, b + c), Partition::rectangle(a, b)).expect("box inside"));
        }
    }
    let hook: Vec<(usize, usize, usize)> = abc.iter().filter(|p| p.2 == 1).copied().collect();
    let mut t = Tally::default();
    for kind in IdentityKind::ALL {
        let grid: Vec<IdentityParams> = match kind {
            IdentityKind::RectSymmetry => rect.iter().cloned().map(IdentityParams::shape).collect(),
            IdentityKind::SlimSymmetry | IdentityKind::SlimFlip => slim.iter().cloned().map(IdentityParams::shape).collect(),
            IdentityKind::ThickStrip => abc.iter().map(|&(a, b, c)| IdentityParams::abc(a, b, c)).collect(),
            IdentityKind::ReverseHookPath => hook.iter().map(|&(a, b, c)| IdentityParams::abc(a, b, c)).collect(),
        };
        // every grid entry at least once, and at least `points` random points
        let n = points.max(grid.len());
        let jobs: Vec<usize> = (0..n).collect();
        let sub = Tally::par(&jobs, |j, _| {
            let mut t = Tally::default();
            let params = &grid[j % grid.len()];
            let seed = SEED.wrapping_add(1000 * kind as u64 + j as u64);
            if let Some(r) = t.result(verify_identity(kind, params, 1, seed), || format!("{kind} {params:?}")) {
                t.checks += r.checks;
                t.failures.extend(r.failures.iter().map(|f| format!("{kind}: {} lhs {} rhs {}", f.check, f.lhs, f.rhs)));
            }
            t
        });
        t.notes.push(format!("{kind}: {n} points, {} checks", sub.checks));
        t = t.merge(sub);
    }
    t
}

pub fn racah(level: Level) -> Tally {
    let (side, points) = if level == Level::Desk { (3, 10) } else { (2, 2) };
    let mut boxes = Vec::new();
    for a in 1..=side {
        for b in 1..=side {
            for c in 1..=side {
                boxes.push((a, b, c));
            }
        }
    }
    let mut t = Tally::par(&boxes, |i, &(a, b, c)| {
        let mut t = Tally::default();
        let mut rng = SplitMix64::derive(SEED ^ 0x5ACA, i as u64);
        for _ in 0..points {
            let (q, u) = racah_random_point(&mut rng, a, b, c, 9);
            if let Some(r) = t.result(racah_verify(a, b, c, &q, &u), || format!("Racah {a}×{b}×{c}")) {
                t.check(r.holds, || format!("{a}×{b}×{c} at q={q}, u={u}: lhs {}, rhs {}", rat_str(&r.lhs), rat_str(&r.rhs)));
                t.check(r.u_zero_matches_macmahon, || format!("{a}×{b}×{c} at q={q}, u=0 differs from MacMahon"));
            }
        }
        for h in [ratio(7, 2), rat(5), rat(12)] {
            if let Some(r) = t.result(racah_h(a, b, c, &h), || format!("h-form {a}×{b}×{c}")) {
                t.check(r.holds, || format!("h-form {a}×{b}×{c} at h={h}: lhs {}, rhs {}", rat_str(&r.lhs), rat_str(&r.rhs)));
            }
        }
        t
    });
    let (dev, bound) = racah_large_h_deviation(2, 2, 2, 1_000_000);
    t.check(dev <= bound, || format!("h = 10^6: deviation {} exceeds {}", rat_str(&dev), rat_str(&bound)));
    t.notes.push(format!("h = 10^6 on 2×2×2: |ratio - 1| = {:.3e}", approx(&dev)));
    t
}

fn approx(r: &BigRational) -> f64 {
    use num_traits::ToPrimitive;
    r.to_f64().unwrap_or(f64::NAN)
}

/// Empirical frequency of `target` against its stationary probability.
fn frequency_check(t: &mut Tally, cfg: &SamplerConfig, what: &str) {
    let Some(law) = t.result(stationary_law(&cfg.region, &cfg.weights), || format!("law {what}")) else { return };
    let Some(occ) = t.result(occupation(cfg), || format!("chain {what}")) else { return };
    for (tiling, p) in &law {
        let seen = *occ.get(tiling).unwrap_or(&0) as f64 / cfg.steps as f64;
        let exact = approx(p);
        t.check((seen - exact).abs() <= 0.02, || format!("{what}: frequency {seen:.4}, stationary {exact:.4}"));
        t.notes.push(format!("{what}: frequency {seen:.4} vs {}", rat_str(p)));
    }
}

pub fn sampler(_: Level) -> Tally {
    let mut t = Tally::default();
    let one = Region::MuD { mu: Partition::of(&[1]), d: 1 };
    let two = Region::MuD { mu: Partition::of(&[2, 2]), d: 2 };
    let weightings = [
        WeightMode::Uniform,
        WeightMode::Explicit(WeightSpec::from_ints(&[3, 1], &[0, 0])),
        WeightMode::Explicit(WeightSpec::from_ints(&[11, 7, 4, 3], &[-2, 0, 1, 2])),
        WeightMode::Hook(Partition::rectangle(4, 4)),
    ];
    let labels = ["uniform", "3:1", "explicit", "hook 4^4"];
    for region in [&one, &two] {
        for (w, label) in weightings.iter().zip(labels) {
            if let WeightMode::Explicit(s) = w {
                if s.x.len() < region.outer().len() {
                    continue;
                }
            }
            if let Some(r) = t.result(check_detailed_balance(region, w), || format!("balance on {region}")) {
                t.check(r.is_ok(), || format!("detailed balance fails on {region} with {w:?}"));
                if let Ok(pairs) = r {
                    t.notes.push(format!("{region}, {label}: {pairs} adjacent ordered pairs balanced"));
                }
            }
        }
    }
    let steps = 100_000;
    let uniform = SamplerConfig { region: one.clone(), weights: WeightMode::Uniform, steps, seed: 7 };
    frequency_check(&mut t, &uniform, "Ω_{1,1} uniform");
    let skewed = SamplerConfig { weights: weightings[1].clone(), seed: 8, ..uniform.clone() };
    frequency_check(&mut t, &skewed, "Ω_{1,1} weights 3:1");
    let big = SamplerConfig { region: Region::Hexagon { a: 3, b: 3, c: 3 }, weights: WeightMode::Uniform, steps: 20_000, seed: 99 };
    let first = metropolis_sample(&big);
    let second = metropolis_sample(&big);
    if let (Some(a), Some(b)) = (t.result(first, || "resample".into()), t.result(second, || "resample".into())) {
        t.check(a == b, || "same seed gave different chains".into());
        t.check(a.tiling.is_valid(), || "sampled tiling is invalid".into());
    }
    let zero = SamplerConfig { steps: 0, ..big };
    if let Some(r) = t.result(metropolis_sample(&zero), || "zero steps".into()) {
        t.check(r.tiling == LozengeTiling::seed(&zero.region), || "zero steps moved the tiling".into());
    }
    t
}

pub fn conjectures(_: Level) -> Tally {
    let mut t = Tally::default();
    for a in 1..=2 {
        for c in 0..=3 {
            if let Some(r) = t.result(conjecture_eval(ConjectureKind::SchubSkew, a, c), || format!("conjecture a={a} c={c}")) {
                t.checks += 1;
                t.notes.push(format!("{} schub_skew a={a} c={c} {}: {}", r.status, r.shape, if r.equal { "agrees" } else { "DIFFERS" }));
            }
        }
    }
    for a in 1..=3 {
        if let Some(r) = t.result(conjecture_eval(ConjectureKind::Kratt, a, a), || format!("kratt a={a}")) {
            t.checks += 1;
            t.notes.push(format!("{} kratt a=c={a}: {}", r.status, if r.equal { "agrees" } else { "DIFFERS" }));
        }
    }
    t
}
