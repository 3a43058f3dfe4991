//! Partitions, skew shapes, hooks, and brute-force counting oracles.

pub mod oracles;
pub mod partition;

pub use oracles::*;
pub use partition::{parse_shape, Cell, Partition, SkewShape};

use crate::error::Result;

/// `h_λ(i,j) = λ_i - i + λ'_j - j + 1`.
pub fn hook_length(lambda: &Partition, cell: Cell) -> Result<usize> {
    lambda.hook(cell)
}
