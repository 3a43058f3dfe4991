//! The family `Λ(a,b,c,d,e,m)`: shapes, product formulas for `f^{λ/μ}`,
//! their q-analogues, and conjecture checkers.

pub mod conjecture;
pub mod lambda;
pub mod qformulas;

pub use conjecture::{
    conjecture_eval, schub_skew_shape, verify_syt_identity, ConjectureKind, ConjectureReport, SytIdentityReport,
    CONJECTURAL,
};
pub use lambda::{build_lambda_shape, f_corollary, f_lambda_product, CorollaryKind, LambdaParams};
pub use qformulas::{q_corollary, q_lambda_product, QCorollaryKind};
