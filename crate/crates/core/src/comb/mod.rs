//! Compositions, partitions, permutations and the orders between them.

mod composition;
mod orders;
mod permutation;

pub use composition::*;
pub use orders::*;
pub use permutation::*;
