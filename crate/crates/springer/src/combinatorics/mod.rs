//! Partitions, permutations, tableaux, and the fixed-point combinatorics of
//! Springer varieties.

mod nilpotent;
mod partition;
mod permutation;
mod tableau;

pub use nilpotent::BlockNilpotent;
pub use partition::Partition;
pub use permutation::Permutation;
pub use tableau::Tableau;
