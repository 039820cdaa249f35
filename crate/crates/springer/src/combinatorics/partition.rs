//! Partitions (Jordan types) and their block combinatorics.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigUint;
use num_traits::One;

use super::Permutation;
use crate::error::Error;
use crate::Result;

/// A partition: a weakly decreasing sequence of positive parts.
///
/// Serves as the Jordan type of the nilpotent operator. `n` is the sum of
/// the parts, `ell` the number of parts. The empty partition (of 0) is
/// allowed and is used for empty tableau shapes.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Partition {
    parts: Vec<usize>,
}

impl Partition {
    /// Builds a partition, rejecting non-decreasing or zero parts.
    pub fn new(parts: Vec<usize>) -> Result<Self> {
        for pair in parts.windows(2) {
            if pair[0] < pair[1] {
                return Err(Error::InvalidPartition(format!(
                    "parts must be weakly decreasing, got {:?}",
                    parts
                )));
            }
        }
        if parts.iter().any(|&p| p == 0) {
            return Err(Error::InvalidPartition(format!(
                "parts must be positive, got {:?}",
                parts
            )));
        }
        Ok(Partition { parts })
    }

    /// The single-row partition `(n)`.
    pub fn row(n: usize) -> Self {
        Partition { parts: vec![n] }
    }

    /// The single-column partition `(1,…,1)` with `n` parts.
    pub fn column(n: usize) -> Self {
        Partition { parts: vec![1; n] }
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    /// Total size `n = λ₁ + ⋯ + λ_ℓ`.
    pub fn n(&self) -> usize {
        self.parts.iter().sum()
    }

    /// Number of parts `ℓ`.
    pub fn ell(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// The `k`-th part (1-based), reading parts beyond `ℓ` as 0.
    ///
    /// Zero-padding is the indexing convention used everywhere a sum over
    /// trailing parts appears.
    pub fn part(&self, k: usize) -> usize {
        if k >= 1 && k <= self.parts.len() {
            self.parts[k - 1]
        } else {
            0
        }
    }

    /// The conjugate (transpose) partition: part `i` counts parts of `self`
    /// that are `≥ i`. An involution.
    pub fn conjugate(&self) -> Partition {
        let k = self.part(1);
        let parts = (1..=k)
            .map(|i| self.parts.iter().filter(|&&p| p >= i).count())
            .collect();
        Partition { parts }
    }

    /// Sum of the last `s` entries of the zero-padded length-`n` sequence,
    /// i.e. `λ_{n−s+1} + ⋯ + λ_ℓ`.
    pub fn tail_sum(&self, s: usize, n: usize) -> Result<usize> {
        if s < 1 || s > n {
            return Err(Error::IndexOutOfRange { index: s, bound: n });
        }
        Ok((n - s + 1..=n).map(|k| self.part(k)).sum())
    }

    /// `n!/λ₁!⋯λ_ℓ!`, the number of torus fixed points of the Springer
    /// variety. Exact.
    pub fn multinomial(&self) -> BigUint {
        let mut acc = BigUint::one();
        let mut consumed = 0usize;
        for &p in &self.parts {
            // multiply the binomial (consumed + p choose p) incrementally
            for j in 1..=p {
                consumed += 1;
                acc = acc * BigUint::from(consumed) / BigUint::from(j);
            }
        }
        acc
    }

    /// Index of the Jordan block containing position `i`, i.e. the `k` with
    /// `λ₁+⋯+λ_{k−1}+1 ≤ i ≤ λ₁+⋯+λ_k`.
    pub fn block_of(&self, i: usize) -> Result<usize> {
        let n = self.n();
        if i < 1 || i > n {
            return Err(Error::IndexOutOfRange { index: i, bound: n });
        }
        let mut upper = 0;
        for (k, &p) in self.parts.iter().enumerate() {
            upper += p;
            if i <= upper {
                return Ok(k + 1);
            }
        }
        unreachable!("i <= n is covered by the last block")
    }

    /// First index of block `k` (1-based): `λ₁+⋯+λ_{k−1}+1`.
    pub fn block_start(&self, k: usize) -> usize {
        self.parts[..k - 1].iter().sum::<usize>() + 1
    }

    /// The block-index sequence obtained by concatenating, for `r = 1..ℓ`,
    /// the word `(1,2,…,r)` repeated `λ_r − λ_{r+1}` times.
    ///
    /// Value `j` occurs exactly `λ_j` times, and the sequence equals
    /// [`Partition::block_of`] composed with the refinement permutation.
    /// It selects, slot by slot, which `u`-variable enters the shift
    /// alphabet of the deformed ideal generators.
    pub fn refined_block_sequence(&self) -> Vec<usize> {
        let mut seq = Vec::with_capacity(self.n());
        for r in 1..=self.parts.len() {
            let reps = self.part(r) - self.part(r + 1);
            for _ in 0..reps {
                seq.extend(1..=r);
            }
        }
        seq
    }

    /// All partitions of `n`, in lexicographically decreasing order.
    pub fn all_of(n: usize) -> Vec<Partition> {
        fn rec(remaining: usize, max_part: usize, prefix: &mut Vec<usize>, out: &mut Vec<Partition>) {
            if remaining == 0 {
                out.push(Partition {
                    parts: prefix.clone(),
                });
                return;
            }
            for p in (1..=remaining.min(max_part)).rev() {
                prefix.push(p);
                rec(remaining - p, p, prefix, out);
                prefix.pop();
            }
        }
        let mut out = Vec::new();
        rec(n, n, &mut Vec::new(), &mut out);
        out
    }

    /// Whether the block values of each Jordan block appear in `w`'s
    /// one-line notation as an increasing subsequence.
    pub fn is_fixed_point(&self, w: &Permutation) -> Result<bool> {
        let n = self.n();
        if w.n() != n {
            return Err(Error::SizeMismatch(format!(
                "permutation of {} against partition of {}",
                w.n(),
                n
            )));
        }
        // position_of[v-1] = index at which value v occurs
        let pos = w.positions();
        let mut start = 1;
        for &p in &self.parts {
            for v in start..start + p - 1 {
                if pos[v - 1] > pos[v] {
                    return Ok(false);
                }
            }
            start += p;
        }
        Ok(true)
    }

    /// All torus fixed points, in lexicographic order of one-line notation.
    ///
    /// Enumerated combinatorially as multiset words over the block labels:
    /// the `j`-th occurrence of label `k` receives the `j`-th value of
    /// block `k`. Lexicographic order on words matches lexicographic order
    /// on the resulting one-line notations.
    pub fn fixed_points(&self) -> Vec<Permutation> {
        let n = self.n();
        let ell = self.parts.len();
        let starts: Vec<usize> = (1..=ell).map(|k| self.block_start(k)).collect();

        let mut word: Vec<usize> = Vec::with_capacity(n);
        for (k, &p) in self.parts.iter().enumerate() {
            word.extend(std::iter::repeat(k).take(p));
        }

        let mut out = Vec::new();
        loop {
            let mut seen = vec![0usize; ell];
            let mut oneline = Vec::with_capacity(n);
            for &k in &word {
                oneline.push(starts[k] + seen[k]);
                seen[k] += 1;
            }
            out.push(Permutation::from_one_line(oneline).expect("valid by construction"));
            if !next_multiset_permutation(&mut word) {
                break;
            }
        }
        out
    }

    /// The unique fixed point in the right coset of `w` under the Young
    /// subgroup `S_{λ₁}×⋯×S_{λ_ℓ}`: within each block, the positions where
    /// the block's values occur are kept and the values are reassigned in
    /// increasing order.
    pub fn coset_representative(&self, w: &Permutation) -> Result<Permutation> {
        let n = self.n();
        if w.n() != n {
            return Err(Error::SizeMismatch(format!(
                "permutation of {} against partition of {}",
                w.n(),
                n
            )));
        }
        let pos = w.positions();
        let mut oneline = vec![0usize; n];
        let mut start = 1;
        for &p in &self.parts {
            let mut block_positions: Vec<usize> = (start..start + p).map(|v| pos[v - 1]).collect();
            block_positions.sort_unstable();
            for (j, &q) in block_positions.iter().enumerate() {
                oneline[q - 1] = start + j;
            }
            start += p;
        }
        Permutation::from_one_line(oneline)
    }

    /// The permutation whose flag refines the kernel filtration of the
    /// block nilpotent operator: blockwise one-line notation `J₁⋯J_ℓ`,
    /// where `J_r` concatenates, for `m = 1..λ_r−λ_{r+1}`, the sequence
    /// with `k`-th entry `(λ₁−λ_r) + λ₂+⋯+λ_k + m` for `k = 1..r`.
    pub fn refinement_permutation(&self) -> Permutation {
        let mut oneline = Vec::with_capacity(self.n());
        for r in 1..=self.parts.len() {
            let reps = self.part(r) - self.part(r + 1);
            for m in 1..=reps {
                let mut entry = self.part(1) - self.part(r) + m;
                oneline.push(entry);
                for k in 2..=r {
                    entry += self.part(k);
                    oneline.push(entry);
                }
            }
        }
        Permutation::from_one_line(oneline).expect("blockwise construction is a permutation")
    }
}

/// Advances `word` to its next lexicographic multiset permutation.
/// Returns false when `word` was already the last one.
fn next_multiset_permutation(word: &mut [usize]) -> bool {
    if word.len() < 2 {
        return false;
    }
    let mut i = word.len() - 1;
    while i > 0 && word[i - 1] >= word[i] {
        i -= 1;
    }
    if i == 0 {
        return false;
    }
    let mut j = word.len() - 1;
    while word[j] <= word[i - 1] {
        j -= 1;
    }
    word.swap(i - 1, j);
    word[i..].reverse();
    true
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for p in &self.parts {
            if !first {
                write!(f, ",")?;
            }
            write!(f, "{}", p)?;
            first = false;
        }
        Ok(())
    }
}

impl FromStr for Partition {
    type Err = Error;

    /// Parses comma-separated positive integers, e.g. `"3,2,1"`.
    fn from_str(s: &str) -> Result<Self> {
        let trimmed = s.trim();
        if trimmed.is_empty() {
            return Err(Error::InvalidPartition("empty input".into()));
        }
        let mut parts = Vec::new();
        for tok in trimmed.split(',') {
            let p: usize = tok
                .trim()
                .parse()
                .map_err(|_| Error::InvalidPartition(format!("bad part {:?}", tok)))?;
            parts.push(p);
        }
        Partition::new(parts)
    }
}
