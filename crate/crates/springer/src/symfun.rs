//! Elementary and complete symmetric polynomials, their factorial
//! (shift-alphabet) analogues, and factorial Schur functions as tableau
//! sums.
//!
//! Alphabets are ordered slices of polynomials; order matters and repeated
//! entries are allowed (e.g. the shift alphabet `(u1, u1, u2)`).

use num_bigint::BigInt;

use crate::combinatorics::{Partition, Tableau};
use crate::error::Error;
use crate::polyring::{Poly, Var};
use crate::Result;

/// The `r`-th elementary symmetric polynomial of the alphabet.
/// `e_0 = 1`; `e_r = 0` for `r` past the alphabet length.
pub fn elementary(r: usize, xs: &[Poly]) -> Poly {
    let mut dp = vec![Poly::zero(); r + 1];
    dp[0] = Poly::one();
    for x in xs {
        for j in (1..=r.min(xs.len())).rev() {
            let add = &dp[j - 1] * x;
            dp[j] = &dp[j] + &add;
        }
    }
    dp.pop().expect("dp has r+1 entries")
}

/// The `r`-th complete homogeneous symmetric polynomial of the alphabet.
/// `h_0 = 1` even on the empty alphabet; `h_r = 0` for `r ≥ 1` there.
pub fn complete(r: usize, xs: &[Poly]) -> Poly {
    let mut dp = vec![Poly::zero(); r + 1];
    dp[0] = Poly::one();
    for x in xs {
        for j in 1..=r {
            let add = &dp[j - 1] * x;
            dp[j] = &dp[j] + &add;
        }
    }
    dp.pop().expect("dp has r+1 entries")
}

/// The factorial analogue of the elementary symmetric polynomial:
///
/// ```text
/// e_d(y_1,…,y_s | a) = Σ_{r=0}^{d} (−1)^{d−r} e_r(y_1,…,y_s) h_{d−r}(a_1,…,a_{s+1−d})
/// ```
///
/// Returns 0 when `d > s` (the corresponding column shape does not fit in
/// `s` rows) and 1 when `d = 0`. The shift alphabet must supply at least
/// `s+1−d` entries.
pub fn factorial_elementary(d: usize, ys: &[Poly], shifts: &[Poly]) -> Result<Poly> {
    let s = ys.len();
    if d > s {
        return Ok(Poly::zero());
    }
    let prefix_len = s + 1 - d;
    if shifts.len() < prefix_len {
        return Err(Error::AlphabetTooShort {
            needed: prefix_len,
            got: shifts.len(),
        });
    }
    let prefix = &shifts[..prefix_len];
    let mut acc = Poly::zero();
    for r in 0..=d {
        let term = &elementary(r, ys) * &complete(d - r, prefix);
        if (d - r) % 2 == 1 {
            acc = &acc - &term;
        } else {
            acc = &acc + &term;
        }
    }
    Ok(acc)
}

/// The factorial Schur function of `shape` as a tableau sum:
///
/// ```text
/// s_μ(x_1,…,x_s | a) = Σ_T Π_{α∈μ} (x_{T(α)} − a_{T(α)+c(α)})
/// ```
///
/// summed over semistandard tableaux with entries in `{1,…,s}`, with
/// `c(α) = j − i` the content of cell `α = (i, j)`. The `x`-variables are
/// rendered in the `y` family. Zero when the shape has more than `s` rows;
/// symmetric in the `x`-variables.
pub fn factorial_schur(shape: &Partition, s: usize, shifts: &[Poly]) -> Result<Poly> {
    if shape.ell() > s {
        return Ok(Poly::zero());
    }
    let cells = Tableau::cells(shape);
    let mut acc = Poly::zero();
    for t in Tableau::enumerate_ssyt(shape, s) {
        let mut product = Poly::one();
        for &(i, j) in &cells {
            let entry = t.entry(i, j);
            let shift_index = entry as i64 + Tableau::content(i, j);
            debug_assert!(shift_index >= 1, "entries dominate row index");
            let shift_index = shift_index as usize;
            if shift_index > shifts.len() {
                return Err(Error::AlphabetTooShort {
                    needed: shift_index,
                    got: shifts.len(),
                });
            }
            let factor = &Poly::var(Var::y(entry)) - &shifts[shift_index - 1];
            product = &product * &factor;
        }
        acc = &acc + &product;
    }
    Ok(acc)
}

/// Alphabet `(y_1, …, y_s)`.
pub fn y_alphabet(s: usize) -> Vec<Poly> {
    (1..=s).map(|i| Poly::var(Var::y(i))).collect()
}

/// Alphabet `(t_1, …, t_n)`.
pub fn t_alphabet(n: usize) -> Vec<Poly> {
    (1..=n).map(|i| Poly::var(Var::t(i))).collect()
}

/// The deformation alphabet `(u_{β(1)}, …, u_{β(n)})` where `β` is the
/// refined block sequence of the partition.
pub fn u_shift_alphabet(lambda: &Partition) -> Vec<Poly> {
    lambda
        .refined_block_sequence()
        .into_iter()
        .map(|j| Poly::var(Var::u(j)))
        .collect()
}

/// Alphabet of integer constants, mainly for tests.
pub fn constant_alphabet<C: Into<BigInt> + Clone>(values: &[C]) -> Vec<Poly> {
    values
        .iter()
        .map(|c| Poly::constant::<BigInt>(c.clone().into()))
        .collect()
}

/// `Σ_{r=0}^{d} (−1)^{d−r} e_r(t_1..t_n) h_{d−r}(t_1..t_{n+1−d})`, the full
/// flag combination; identically zero for `1 ≤ d ≤ n` since it equals the
/// elementary polynomial `e_d` of the `d−1` variables `t_{n+2−d},…,t_n`.
pub fn flag_vanishing_combination(d: usize, n: usize) -> Result<Poly> {
    if d < 1 || d > n {
        return Err(Error::IndexOutOfRange { index: d, bound: n });
    }
    factorial_elementary(d, &t_alphabet(n), &t_alphabet(n))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn poly(s: &str) -> Poly {
        s.parse().unwrap()
    }

    fn u_vars(indices: &[usize]) -> Vec<Poly> {
        indices.iter().map(|&j| Poly::var(Var::u(j))).collect()
    }

    #[test]
    fn elementary_examples() {
        assert_eq!(elementary(1, &t_alphabet(3)), poly("t1 + t2 + t3"));
        assert_eq!(elementary(3, &y_alphabet(2)), Poly::zero());
        assert_eq!(elementary(2, &u_vars(&[1, 1])), poly("u1^2"));
        assert_eq!(elementary(0, &[]), Poly::one());
    }

    #[test]
    fn complete_examples() {
        assert_eq!(complete(2, &u_vars(&[1])), poly("u1^2"));
        assert_eq!(complete(1, &u_vars(&[1, 1, 2])), poly("2*u1 + u2"));
        assert_eq!(complete(3, &[]), Poly::zero());
        assert_eq!(complete(0, &[]), Poly::one());
        assert_eq!(complete(2, &y_alphabet(2)), poly("y1^2 + y1*y2 + y2^2"));
    }

    #[test]
    fn factorial_elementary_examples() {
        assert_eq!(
            factorial_elementary(1, &y_alphabet(1), &u_vars(&[1])).unwrap(),
            poly("y1 - u1")
        );
        assert_eq!(
            factorial_elementary(2, &y_alphabet(2), &u_vars(&[1, 1, 2])).unwrap(),
            poly("u1^2 - u1*y1 - u1*y2 + y1*y2")
        );
        assert_eq!(
            factorial_elementary(2, &y_alphabet(2), &u_vars(&[1, 1, 2])).unwrap(),
            poly("(y1-u1)*(y2-u1)")
        );
        assert_eq!(
            factorial_elementary(1, &y_alphabet(3), &u_vars(&[1, 1, 2])).unwrap(),
            poly("y1 + y2 + y3 - 2*u1 - u2")
        );
        // d > s is zero by convention
        assert_eq!(factorial_elementary(3, &y_alphabet(2), &u_vars(&[1])).unwrap(), Poly::zero());
        // d = 0 is 1 (alphabet must still cover the s+1 prefix)
        assert_eq!(factorial_elementary(0, &y_alphabet(2), &t_alphabet(3)).unwrap(), Poly::one());
        assert!(factorial_elementary(1, &y_alphabet(3), &u_vars(&[1, 1])).is_err());
    }

    #[test]
    fn factorial_elementary_vanishes_at_zero_shift() {
        for s in 1..=4 {
            for d in 1..=s {
                let zeros = vec![Poly::zero(); s + 1 - d];
                assert_eq!(
                    factorial_elementary(d, &y_alphabet(s), &zeros).unwrap(),
                    elementary(d, &y_alphabet(s))
                );
            }
        }
    }

    #[test]
    fn factorial_schur_examples() {
        let a = t_alphabet(4);
        assert_eq!(
            factorial_schur(&Partition::new(vec![1]).unwrap(), 2, &a).unwrap(),
            poly("y1 + y2 - t1 - t2")
        );
        assert_eq!(
            factorial_schur(&Partition::new(vec![1, 1, 1]).unwrap(), 2, &a).unwrap(),
            Poly::zero()
        );
        assert_eq!(
            factorial_schur(&Partition::new(vec![1, 1]).unwrap(), 2, &a).unwrap(),
            poly("(y1-t1)*(y2-t1)")
        );
    }

    #[test]
    fn factorial_schur_symmetric_in_x() {
        use crate::polyring::Substitution;
        // swap y1 <-> y2 fixes the tableau sum
        let shape = Partition::new(vec![2, 1]).unwrap();
        let p = factorial_schur(&shape, 3, &t_alphabet(5)).unwrap();
        let swap = Substitution::new()
            .set(Var::y(1), Poly::var(Var::y(2)))
            .set(Var::y(2), Poly::var(Var::y(1)));
        assert_eq!(p.substitute(&swap), p);
    }

    #[test]
    fn column_factorial_schur_matches_factorial_elementary() {
        // the two routes are independent: tableau sum vs the alternating sum
        for s in 1..=5 {
            for k in 0..=s {
                let shape = Partition::new(vec![1; k]).unwrap();
                let alphabet = t_alphabet(s + 1);
                let via_tableaux = factorial_schur(&shape, s, &alphabet).unwrap();
                let via_sum = factorial_elementary(k, &y_alphabet(s), &alphabet).unwrap();
                assert_eq!(via_tableaux, via_sum, "s={s} k={k}");
            }
        }
    }

    #[test]
    fn flag_combination_vanishes() {
        for n in 1..=5 {
            for d in 1..=n {
                assert_eq!(flag_vanishing_combination(d, n).unwrap(), Poly::zero(), "n={n} d={d}");
            }
        }
    }
}
