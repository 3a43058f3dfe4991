//! Weighted partition functions of lozenge tilings by determinant and by
//! listing tilings, and the volume generating polynomial.

use skewhook::exactmath::rational_string;
use skewhook::lozenge::{
    hexagon_product, hexagon_product_point, partition_function, qvolume_det, qvolume_enumerate, Region, ZMethod,
};
use skewhook::multivar::WeightSpec;
use skewhook::shapes::{macmahon_count, Partition};

fn main() -> skewhook::Result<()> {
    let regions = [
        Region::MuD { mu: Partition::of(&[2, 1]), d: 2 },
        Region::Hexagon { a: 2, b: 2, c: 2 },
        Region::BaseMuLambda { lambda: Partition::of(&[4, 3, 3]), mu: Partition::of(&[2, 1]) },
    ];
    for r in &regions {
        let w = WeightSpec::hook(&r.outer());
        let det = partition_function(r, &w, ZMethod::Determinant)?;
        let en = partition_function(r, &w, ZMethod::Enumerate)?;
        println!("{r}: Z = {} (listing gives {})", rational_string(&det), rational_string(&en));
    }

    let (a, b, c, d, e) = (2, 1, 2, 1, 0);
    let w = hexagon_product_point(a, b, c, d, e);
    let z = partition_function(&Region::Hexagon { a, b, c }, &w, ZMethod::Determinant)?;
    let closed = hexagon_product(a, b, c, d, e);
    assert_eq!(z, closed);
    println!("H({a},{b},{c}) at the product point: {}", rational_string(&closed));

    let mu = Partition::of(&[3, 2]);
    let p = qvolume_det(&mu, 2)?;
    assert_eq!(p, qvolume_enumerate(&mu, 2));
    println!("volume polynomial of Ω_{{{mu},2}}: {:?}", p.coeffs().iter().map(|c| c.to_string()).collect::<Vec<_>>());

    let box3 = qvolume_det(&Partition::rectangle(3, 3), 3)?;
    assert_eq!(box3.eval_at_one(), macmahon_count(3, 3, 3));
    println!("3×3×3 box: {} plane partitions", box3.eval_at_one());
    Ok(())
}
