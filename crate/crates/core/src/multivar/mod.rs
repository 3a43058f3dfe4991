//! Factorial Schur functions, the multivariate sums `G` and `F`, their
//! hook specializations, and randomized identity checks.

pub mod fschur;
pub mod identities;
pub mod sums;
pub mod weights;

pub use fschur::{factorial_schur, semistandard_tableaux, FactorialSchurInput, FsMethod};
pub use identities::{
    non_intersecting_families, verify_identity, IdentityFailure, IdentityKind, IdentityParams, IdentityReport, Step,
};
pub use sums::{
    f_eval, f_from_diagrams, g_eval, g_from_diagrams, nhlf_count, specialize_hooks, z_sequence, GMethod, HookMode,
    HookValue,
};
pub use weights::WeightSpec;
