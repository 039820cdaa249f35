//! Exact linear algebra: sparse reduced echelon form over the rationals
//! and fraction-free integer rank.

use std::collections::HashMap;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

/// Sparse vector: `(column, coefficient)` pairs sorted by column with all
/// coefficients nonzero.
pub type SparseVec = Vec<(u32, BigRational)>;

/// `target + scale * other`, merged sparsely.
pub fn add_scaled(target: &SparseVec, other: &SparseVec, scale: &BigRational) -> SparseVec {
    let mut out = Vec::with_capacity(target.len() + other.len());
    let (mut i, mut j) = (0, 0);
    while i < target.len() && j < other.len() {
        match target[i].0.cmp(&other[j].0) {
            std::cmp::Ordering::Less => {
                out.push(target[i].clone());
                i += 1;
            }
            std::cmp::Ordering::Greater => {
                let c = &other[j].1 * scale;
                if !c.is_zero() {
                    out.push((other[j].0, c));
                }
                j += 1;
            }
            std::cmp::Ordering::Equal => {
                let c = &target[i].1 + &other[j].1 * scale;
                if !c.is_zero() {
                    out.push((target[i].0, c));
                }
                i += 1;
                j += 1;
            }
        }
    }
    out.extend_from_slice(&target[i..]);
    for (col, c) in &other[j..] {
        let c = c * scale;
        if !c.is_zero() {
            out.push((*col, c));
        }
    }
    out
}

/// A reduced row echelon accumulator over the rationals.
///
/// Rows are kept mutually reduced: each row has a unique pivot column with
/// coefficient 1, and no row's support meets another row's pivot column.
/// Pivots are chosen as the smallest column index of the reduced row, so
/// with columns listed in descending monomial order the pivot is the
/// leading monomial.
#[derive(Clone, Debug, Default)]
pub struct Echelon {
    rows: Vec<SparseVec>,
    pivot_rows: HashMap<u32, usize>,
}

impl Echelon {
    pub fn new() -> Echelon {
        Echelon::default()
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn is_pivot(&self, col: u32) -> bool {
        self.pivot_rows.contains_key(&col)
    }

    /// Eliminates every pivot column from `v`. The result is supported on
    /// non-pivot columns only.
    pub fn reduce(&self, mut v: SparseVec) -> SparseVec {
        loop {
            let hit = v
                .iter()
                .find_map(|(col, c)| self.pivot_rows.get(col).map(|&r| (r, -c.clone())));
            match hit {
                Some((row_idx, scale)) => {
                    v = add_scaled(&v, &self.rows[row_idx], &scale);
                }
                None => return v,
            }
        }
    }

    /// Reduces `v` and, if nonzero, normalizes and inserts it as a new
    /// pivot row, keeping the echelon fully reduced. Returns whether a new
    /// pivot was created.
    pub fn insert(&mut self, v: SparseVec) -> bool {
        let v = self.reduce(v);
        if v.is_empty() {
            return false;
        }
        let pivot_col = v[0].0;
        let lead = v[0].1.clone();
        let row: SparseVec = v
            .into_iter()
            .map(|(col, c)| (col, c / &lead))
            .collect();
        // clear the new pivot column from existing rows
        for existing in &mut self.rows {
            if let Ok(pos) = existing.binary_search_by_key(&pivot_col, |&(c, _)| c) {
                let scale = -existing[pos].1.clone();
                *existing = add_scaled(existing, &row, &scale);
            }
        }
        let idx = self.rows.len();
        self.rows.push(row);
        self.pivot_rows.insert(pivot_col, idx);
        true
    }
}

/// Exact rank of an integer matrix by fraction-free (Bareiss) elimination.
pub fn integer_rank(mut m: Vec<Vec<BigInt>>) -> usize {
    let rows = m.len();
    if rows == 0 {
        return 0;
    }
    let cols = m[0].len();
    let mut rank = 0;
    let mut prev = BigInt::one();
    for col in 0..cols {
        if rank == rows {
            break;
        }
        let Some(pivot_row) = (rank..rows).find(|&r| !m[r][col].is_zero()) else {
            continue;
        };
        m.swap(rank, pivot_row);
        let pivot = m[rank][col].clone();
        for r in rank + 1..rows {
            let factor = m[r][col].clone();
            for c in col..cols {
                let val = (&pivot * &m[r][c] - &factor * &m[rank][c]) / &prev;
                m[r][c] = val;
            }
        }
        prev = pivot;
        rank += 1;
    }
    rank
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rat(n: i64) -> BigRational {
        BigRational::from_integer(BigInt::from(n))
    }

    fn vec_of(pairs: &[(u32, i64)]) -> SparseVec {
        pairs.iter().map(|&(c, v)| (c, rat(v))).collect()
    }

    #[test]
    fn echelon_ranks_and_reduces() {
        let mut e = Echelon::new();
        assert!(e.insert(vec_of(&[(0, 1), (1, 1), (2, 1)])));
        assert!(e.insert(vec_of(&[(1, 1), (2, 2)])));
        // dependent on the first two
        assert!(!e.insert(vec_of(&[(0, 2), (1, 3), (2, 4)])));
        assert_eq!(e.rank(), 2);
        // reduction leaves only non-pivot support
        let reduced = e.reduce(vec_of(&[(0, 1), (2, 5)]));
        assert!(reduced.iter().all(|&(c, _)| !e.is_pivot(c)));
    }

    #[test]
    fn echelon_stays_reduced() {
        let mut e = Echelon::new();
        e.insert(vec_of(&[(0, 1), (3, 1)]));
        e.insert(vec_of(&[(1, 1), (3, 2)]));
        e.insert(vec_of(&[(3, 1)]));
        assert_eq!(e.rank(), 3);
        let reduced = e.reduce(vec_of(&[(0, 7), (1, -2), (3, 4)]));
        assert!(reduced.is_empty());
    }

    #[test]
    fn bareiss_rank_examples() {
        let m = |rows: &[&[i64]]| {
            rows.iter()
                .map(|r| r.iter().map(|&x| BigInt::from(x)).collect())
                .collect::<Vec<Vec<BigInt>>>()
        };
        assert_eq!(integer_rank(m(&[&[1, 2], &[2, 4]])), 1);
        assert_eq!(integer_rank(m(&[&[1, 2], &[3, 4]])), 2);
        assert_eq!(integer_rank(m(&[&[0, 0], &[0, 0]])), 0);
        assert_eq!(
            integer_rank(m(&[&[1, 1, 1], &[1, 2, 3], &[2, 3, 4]])),
            2
        );
        // the 3x3 Vandermonde-style localization example has full rank
        let (a, b) = (17, 29);
        assert_eq!(
            integer_rank(m(&[&[1, a, b], &[1, b, a], &[1, a, a]])),
            3
        );
    }
}
