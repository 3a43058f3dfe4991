//! Excited diagrams in both orientations, flagged tableaux and
//! non-intersecting paths.

pub mod diagrams;
pub mod flagged;
pub mod paths;

pub use diagrams::{count_excited, enumerate_excited, flags, is_excited, seed, CountMethod, ExcitedDiagram, Variant};
pub use flagged::{excited_to_flagged, flagged_to_excited, FlaggedTableau};
pub use paths::{endpoints, excited_to_paths, paths_from_support, paths_to_excited, LatticePath, PathFamily};
