//! Exact enumeration of skew standard Young tableaux through excited
//! diagrams, with the surrounding machinery: factorial Schur functions,
//! product formulas, Schubert principal evaluations and weighted lozenge
//! tilings.
//!
//! Every number is an exact big integer or rational; nothing here uses
//! floating point. See `examples/` for one runnable program per capability.

pub mod cli;
pub mod error;
pub mod excited;
pub mod exactmath;
pub mod lozenge;
pub mod multivar;
pub mod products;
pub mod rng;
pub mod schubert;
pub mod shapes;
pub mod verify;

pub use error::{Error, Result};
