//! Probabilities of lozenge paths in a hexagon: the zigzag path, the
//! frozen region around a rectangle, and a full distribution at one level.

use skewhook::exactmath::rational_string;
use skewhook::lozenge::{frozen_rhombi, path_probability, paths_at_level, zigzag_bounds};
use skewhook::multivar::WeightSpec;
use skewhook::shapes::Partition;

fn main() -> skewhook::Result<()> {
    let z = zigzag_bounds(1)?;
    println!("zigzag a=1: {} ≤ {} ≤ {}", rational_string(&z.lower), rational_string(&z.weighted), rational_string(&z.upper));
    println!("  uniform weights give {}", rational_string(&z.uniform));

    for (a, b, c) in [(1, 1, 1), (1, 2, 1), (2, 1, 1)] {
        let f = frozen_rhombi(a, b, c)?;
        println!("frozen ({a},{b},{c}): {} (determinant agrees: {})", rational_string(&f.closed_form), f.agree);
    }

    let (a, b, c) = (2, 2, 2);
    let w = WeightSpec::hook(&Partition::rectangle(a + c, b + c));
    println!("paths at level 1 in H({a},{b},{c}):");
    for p in paths_at_level(a, b, c, 1)? {
        let (mu, star) = p.decode()?;
        println!("  {:?}  μ = {mu}, μ* = {star}: {}", p.d_seq, rational_string(&path_probability(&p, &w)?));
    }
    Ok(())
}
