//! The two-parameter weighted volume identity over boxed plane partitions,
//! at chosen points, random points, and in the large-h limit.

use skewhook::exactmath::{rational_string, ratio};
use skewhook::lozenge::{racah_h, racah_large_h_deviation, racah_random_point, racah_verify};
use skewhook::rng::SplitMix64;

fn main() -> skewhook::Result<()> {
    let r = racah_verify(2, 2, 2, &ratio(2, 1), &ratio(1, 3))?;
    println!("q=2, u=1/3: lhs {} rhs {} (u=0 matches MacMahon: {})", rational_string(&r.lhs), rational_string(&r.rhs), r.u_zero_matches_macmahon);

    let mut rng = SplitMix64::new(17);
    for _ in 0..5 {
        let (q, u) = racah_random_point(&mut rng, 2, 1, 2, 20);
        let r = racah_verify(2, 1, 2, &q, &u)?;
        println!("q={q}, u={u}: {}", r.holds);
    }

    let h = racah_h(2, 2, 1, &ratio(7, 2))?;
    println!("h-form at h=7/2: {}", h.holds);
    for h in [10, 100, 1000] {
        let (dev, bound) = racah_large_h_deviation(1, 1, 1, h);
        println!("h={h}: deviation {} bound {}", rational_string(&dev), rational_string(&bound));
    }
    Ok(())
}
