//! Product formulas for the six-parameter family of skew shapes, checked
//! against the determinant, plus their q-analogues.

use skewhook::products::{
    build_lambda_shape, conjecture_eval, f_corollary, f_lambda_product, q_lambda_product, ConjectureKind,
    CorollaryKind, LambdaParams,
};
use skewhook::shapes::{ssyt_series_oracle, syt_count_oracle, SytMethod};

fn main() -> skewhook::Result<()> {
    for p in [LambdaParams::new(1, 1, 1, 1, 1, 1), LambdaParams::new(2, 1, 2, 1, 0, 1), LambdaParams::new(2, 2, 1, 1, 1, 2)] {
        let shape = build_lambda_shape(p);
        let f = f_lambda_product(p);
        let oracle = syt_count_oracle(&shape, SytMethod::Determinant)?;
        println!("Λ({p}) = {shape}: product {f}, determinant {oracle}");
        assert_eq!(f, oracle);
    }

    let (a, b, c, d, e) = (2, 2, 1, 1, 1);
    for kind in [CorollaryKind::Abcde, CorollaryKind::Abc, CorollaryKind::Abcde1] {
        println!("{kind:?}({a},{b},{c},{d},{e}) = {}", f_corollary(kind, a, b, c, d, e));
    }

    let p = LambdaParams::new(1, 0, 1, 1, 0, 1);
    let order = 20;
    let q = q_lambda_product(p, order)?;
    assert_eq!(q, ssyt_series_oracle(&build_lambda_shape(p), order)?);
    println!("q-series for Λ({p}) agrees with the tableau oracle through q^{order}");

    for a in 1..=3 {
        let r = conjecture_eval(ConjectureKind::SchubSkew, a, 1)?;
        println!("conjectured closed form, a={a}: {} ({})", r.equal, r.status);
    }
    Ok(())
}
