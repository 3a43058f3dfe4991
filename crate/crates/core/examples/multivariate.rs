//! The multivariate sums over excited diagrams at rational points, and
//! the symmetry identities checked at seeded random points.

use skewhook::exactmath::rational_string;
use skewhook::multivar::{f_eval, g_eval, verify_identity, GMethod, IdentityKind, IdentityParams, WeightSpec};
use skewhook::shapes::SkewShape;

fn main() -> skewhook::Result<()> {
    let shape: SkewShape = "[3,3,2]/[2,1]".parse()?;
    let w = WeightSpec::parse("x=7,5,4;y=0,1,3")?;
    let sum = g_eval(&shape, &w, GMethod::Sum)?;
    let fs = g_eval(&shape, &w, GMethod::FactorialSchur)?;
    println!("G at x = (7,5,4), y = (0,1,3)");
    println!("  sum over diagrams : {}", rational_string(&sum));
    println!("  factorial Schur   : {}", rational_string(&fs));
    println!("F = {}", rational_string(&f_eval(&shape, &w)?));

    let cases = [
        (IdentityKind::RectSymmetry, IdentityParams::shape("[4,4,4]/[2,2]".parse()?)),
        (IdentityKind::SlimSymmetry, IdentityParams::shape("[5,4,4]/[2,1]".parse()?)),
        (IdentityKind::ThickStrip, IdentityParams::abc(2, 2, 1)),
        (IdentityKind::SlimFlip, IdentityParams::shape("[6,6,6]/[2,1]".parse()?)),
        (IdentityKind::ReverseHookPath, IdentityParams::abc(2, 2, 1)),
    ];
    for (kind, params) in cases {
        match verify_identity(kind, &params, 5, 2024) {
            Ok(r) => println!("{kind:?} on {}: {} checks, {} failures", r.params, r.checks, r.failures.len()),
            Err(e) => println!("{kind:?}: {e}"),
        }
    }
    Ok(())
}
