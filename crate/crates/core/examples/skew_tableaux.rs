//! Counting standard Young tableaux of skew shape three ways, and the
//! principal specialization as a q-series.
//!
//! `cargo run --example skew_tableaux -- "[5,4,3]/[2,1]"`

use skewhook::multivar::{nhlf_count, specialize_hooks, HookMode, HookValue};
use skewhook::shapes::{hlf_count, ssyt_series_oracle, syt_count_oracle, Partition, SkewShape, SytMethod};

fn main() -> skewhook::Result<()> {
    let text = std::env::args().nth(1).unwrap_or_else(|| "[3,3,2]/[2,1]".into());
    let shape: SkewShape = text.parse()?;
    println!("shape {shape}, {} cells", shape.size());

    let excited = nhlf_count(&shape)?;
    let back = syt_count_oracle(&shape, SytMethod::Backtrack)?;
    let det = syt_count_oracle(&shape, SytMethod::Determinant)?;
    println!("f via excited diagrams : {excited}");
    println!("f via backtracking     : {back}");
    println!("f via Jacobi-Trudi     : {det}");
    assert!(excited == back && back == det);

    // straight shapes reduce to the classical hook length formula
    let lambda: Partition = "[4,2,1]".parse()?;
    println!("f^{lambda} = {}", hlf_count(&lambda));

    let order = 12;
    let HookValue::Series(s) = specialize_hooks(&shape, HookMode::QSeries(order))? else { unreachable!() };
    assert_eq!(s, ssyt_series_oracle(&shape, order)?);
    let coeffs: Vec<String> = s.coeffs().iter().map(|c| c.to_string()).collect();
    println!("s(1,q,q^2,...) through q^{order}: [{}]", coeffs.join(", "));
    Ok(())
}
