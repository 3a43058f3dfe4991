//! Weighted lozenge tilings: determinant partition functions, path
//! probabilities, the Racah identity, a Metropolis sampler and SVG output.

pub mod determinants;
pub mod paths;
pub mod racah;
pub mod sampler;
pub mod svg;
pub mod tiling;

pub use determinants::*;
pub use paths::*;
pub use racah::*;
pub use sampler::*;
pub use svg::*;
pub use tiling::*;
