//! Principal evaluations of Schubert polynomials: Macdonald's sum against
//! the excited diagram and skew tableau shortcuts, and named families.

use skewhook::schubert::{
    classify, family, upsilon, upsilon_closed_form, upsilon_shifted, vexillary_shapes, Family, Permutation,
    UpsilonMethod,
};

fn main() -> skewhook::Result<()> {
    let w = Permutation::parse("1432")?;
    let class = classify(&w);
    println!("{w}: {class:?}");
    let (mu, lambda) = vexillary_shapes(&w)?;
    println!("  shapes λ = {lambda}, μ = {mu}");
    for m in [UpsilonMethod::Macdonald, UpsilonMethod::VexillaryExcited, UpsilonMethod::Auto] {
        println!("  {m:?}: {}", upsilon(&w, m)?);
    }

    for n in 4..=6 {
        let f = Family::W0 { n };
        let p = family(f)?;
        let closed = upsilon_closed_form(f, 2)?;
        let sum = upsilon_shifted(&p, 2, UpsilonMethod::Macdonald)?;
        println!("{f}: Υ(2) = {closed} (Macdonald {sum})");
    }

    // some families only have a closed form without added fixed points
    for (kind, c) in [("v", 2), ("w", 2), ("doublefact", 0), ("x", 0)] {
        let f = Family::from_parts(kind, Some(2), None, None)?;
        let p = family(f)?;
        let closed = upsilon_closed_form(f, c)?;
        assert_eq!(closed, upsilon_shifted(&p, c, UpsilonMethod::Macdonald)?);
        println!("{f} = {p}, length {}, Υ({c}) = {closed}", p.length());
    }
    Ok(())
}
