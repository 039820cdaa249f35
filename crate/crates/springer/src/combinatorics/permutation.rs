//! Permutations in one-line notation.

use std::fmt;
use std::str::FromStr;

use crate::error::Error;
use crate::Result;

/// A permutation of `{1,…,n}` in one-line notation.
///
/// Ordering is lexicographic on the one-line notation.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    images: Vec<usize>,
}

impl Permutation {
    /// Builds a permutation from one-line notation, checking bijectivity.
    pub fn from_one_line(images: Vec<usize>) -> Result<Self> {
        let n = images.len();
        let mut seen = vec![false; n];
        for &v in &images {
            if v < 1 || v > n || seen[v - 1] {
                return Err(Error::InvalidPermutation(format!(
                    "{:?} is not a bijection of 1..={}",
                    images, n
                )));
            }
            seen[v - 1] = true;
        }
        Ok(Permutation { images })
    }

    pub fn identity(n: usize) -> Self {
        Permutation {
            images: (1..=n).collect(),
        }
    }

    /// The adjacent transposition swapping `i` and `i+1` (1-based).
    pub fn adjacent_transposition(n: usize, i: usize) -> Result<Self> {
        if i < 1 || i >= n {
            return Err(Error::IndexOutOfRange {
                index: i,
                bound: n.saturating_sub(1),
            });
        }
        let mut images: Vec<usize> = (1..=n).collect();
        images.swap(i - 1, i);
        Ok(Permutation { images })
    }

    pub fn n(&self) -> usize {
        self.images.len()
    }

    pub fn one_line(&self) -> &[usize] {
        &self.images
    }

    /// `w(i)` with `i` 1-based.
    pub fn apply(&self, i: usize) -> usize {
        self.images[i - 1]
    }

    /// `positions()[v-1]` is the position at which value `v` occurs.
    pub fn positions(&self) -> Vec<usize> {
        let mut pos = vec![0usize; self.images.len()];
        for (i, &v) in self.images.iter().enumerate() {
            pos[v - 1] = i + 1;
        }
        pos
    }

    pub fn inverse(&self) -> Permutation {
        Permutation {
            images: self.positions(),
        }
    }

    /// Composition `(self·other)(i) = self(other(i))`.
    pub fn compose(&self, other: &Permutation) -> Result<Permutation> {
        if self.n() != other.n() {
            return Err(Error::SizeMismatch(format!(
                "composing permutations of {} and {}",
                self.n(),
                other.n()
            )));
        }
        Ok(Permutation {
            images: (1..=self.n()).map(|i| self.apply(other.apply(i))).collect(),
        })
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &v)| v == i + 1)
    }

    /// All of `S_n` in lexicographic order. Intended for small `n`.
    pub fn all(n: usize) -> Vec<Permutation> {
        let mut images: Vec<usize> = (1..=n).collect();
        let mut out = Vec::new();
        loop {
            out.push(Permutation {
                images: images.clone(),
            });
            if !next_permutation(&mut images) {
                break;
            }
        }
        out
    }
}

fn next_permutation(a: &mut [usize]) -> bool {
    if a.len() < 2 {
        return false;
    }
    let mut i = a.len() - 1;
    while i > 0 && a[i - 1] >= a[i] {
        i -= 1;
    }
    if i == 0 {
        return false;
    }
    let mut j = a.len() - 1;
    while a[j] <= a[i - 1] {
        j -= 1;
    }
    a.swap(i - 1, j);
    a[i..].reverse();
    true
}

impl fmt::Display for Permutation {
    /// Compact digit string for `n ≤ 9`, space-separated otherwise.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.n() <= 9 {
            for v in &self.images {
                write!(f, "{}", v)?;
            }
        } else {
            let mut first = true;
            for v in &self.images {
                if !first {
                    write!(f, " ")?;
                }
                write!(f, "{}", v)?;
                first = false;
            }
        }
        Ok(())
    }
}

impl FromStr for Permutation {
    type Err = Error;

    /// Accepts whitespace- or comma-separated one-line notation, or a
    /// compact digit string for `n ≤ 9`.
    fn from_str(s: &str) -> Result<Self> {
        let trimmed = s.trim();
        if trimmed.is_empty() {
            return Err(Error::InvalidPermutation("empty input".into()));
        }
        let images: Vec<usize> = if trimmed.contains(|c: char| c.is_whitespace() || c == ',') {
            trimmed
                .split(|c: char| c.is_whitespace() || c == ',')
                .filter(|t| !t.is_empty())
                .map(|t| {
                    t.parse()
                        .map_err(|_| Error::InvalidPermutation(format!("bad entry {:?}", t)))
                })
                .collect::<Result<_>>()?
        } else {
            trimmed
                .chars()
                .map(|c| {
                    c.to_digit(10)
                        .filter(|&d| d >= 1)
                        .map(|d| d as usize)
                        .ok_or_else(|| Error::InvalidPermutation(format!("bad digit {:?}", c)))
                })
                .collect::<Result<_>>()?
        };
        Permutation::from_one_line(images)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn validates_bijection() {
        assert!(Permutation::from_one_line(vec![1, 2, 2]).is_err());
        assert!(Permutation::from_one_line(vec![0, 1]).is_err());
        assert!(Permutation::from_one_line(vec![2, 3, 1]).is_ok());
    }

    #[test]
    fn compose_convention() {
        // (w.v)(i) = w(v(i))
        let w: Permutation = "231".parse().unwrap();
        let v: Permutation = "213".parse().unwrap();
        let wv = w.compose(&v).unwrap();
        assert_eq!(wv.one_line(), &[3, 2, 1]);
        assert_eq!(w.compose(&w.inverse()).unwrap(), Permutation::identity(3));
    }

    #[test]
    fn parse_forms() {
        let a: Permutation = "124365".parse().unwrap();
        let b: Permutation = "1 2 4 3 6 5".parse().unwrap();
        let c: Permutation = "1,2,4,3,6,5".parse().unwrap();
        assert_eq!(a, b);
        assert_eq!(b, c);
        let big: Permutation = "1 2 3 8 4 9 5 10 6 11 13 15 7 12 14 16".parse().unwrap();
        assert_eq!(big.n(), 16);
        assert_eq!(big.to_string(), "1 2 3 8 4 9 5 10 6 11 13 15 7 12 14 16");
        assert_eq!(a.to_string(), "124365");
        assert!("10".parse::<Permutation>().is_err());
    }

    #[test]
    fn all_is_lex_sorted() {
        let all = Permutation::all(4);
        assert_eq!(all.len(), 24);
        assert!(all.windows(2).all(|p| p[0] < p[1]));
        assert_eq!(all[0], Permutation::identity(4));
    }
}
