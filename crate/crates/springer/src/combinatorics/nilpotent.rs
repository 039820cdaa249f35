//! Basis-index bookkeeping for a nilpotent operator in Jordan form.

use std::collections::BTreeSet;

use super::{Partition, Permutation};

/// A block nilpotent operator of Jordan type `λ`, at the level of basis
/// indices: `pred(i) = i−1` when `i` is not the first index of its block,
/// else 0 (the operator annihilates that basis vector).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BlockNilpotent {
    partition: Partition,
    pred: Vec<usize>,
}

impl BlockNilpotent {
    pub fn new(partition: &Partition) -> Self {
        let n = partition.n();
        let mut pred = vec![0usize; n];
        let mut start = 1;
        for &p in partition.parts() {
            for i in start + 1..start + p {
                pred[i - 1] = i - 1;
            }
            start += p;
        }
        BlockNilpotent {
            partition: partition.clone(),
            pred,
        }
    }

    pub fn partition(&self) -> &Partition {
        &self.partition
    }

    /// `pred(i)`: the image index of basis vector `i`, 0 if annihilated.
    pub fn pred(&self, i: usize) -> usize {
        self.pred[i - 1]
    }

    /// Dimension of the image of the `m`-th power: `Σ_b max(λ_b − m, 0)`.
    pub fn power_image_dim(&self, m: usize) -> usize {
        self.partition
            .parts()
            .iter()
            .map(|&p| p.saturating_sub(m))
            .sum()
    }

    /// Basis indices spanning the image of the `m`-th power:
    /// `∪_b {h_b, …, h_b + λ_b − 1 − m}` with `h_b` the first index of
    /// block `b`.
    pub fn power_image_indices(&self, m: usize) -> BTreeSet<usize> {
        let mut out = BTreeSet::new();
        let mut start = 1;
        for &p in self.partition.parts() {
            for i in start..start + p.saturating_sub(m) {
                out.insert(i);
            }
            start += p;
        }
        out
    }

    /// Checks that `w`'s initial segments track the kernel filtration: for
    /// every `m ≥ 0`, the first `power_image_dim(m)` values of `w` are
    /// exactly `power_image_indices(m)`.
    pub fn is_refined_by(&self, w: &Permutation) -> bool {
        if w.n() != self.partition.n() {
            return false;
        }
        let max_m = self.partition.part(1);
        for m in 0..=max_m {
            let d = self.power_image_dim(m);
            let prefix: BTreeSet<usize> = w.one_line()[..d].iter().copied().collect();
            if prefix != self.power_image_indices(m) {
                return false;
            }
        }
        true
    }
}
