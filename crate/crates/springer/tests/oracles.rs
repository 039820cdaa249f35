//! Independent brute-force oracles for the combinatorial enumerations and
//! the symmetric-function identities.

use itertools::Itertools;
use num_bigint::BigUint;

use springer::combinatorics::{Partition, Permutation};
use springer::polyring::{Poly, Var};
use springer::symfun::{complete, elementary};

/// Filter oracle: every permutation of S_n, checked against the increasing
/// subsequence condition directly on the one-line word.
fn brute_force_fixed_points(lambda: &Partition) -> Vec<Permutation> {
    let n = lambda.n();
    Permutation::all(n)
        .into_iter()
        .filter(|w| {
            let mut start = 1;
            for &p in lambda.parts() {
                let block: Vec<usize> = (start..start + p).collect();
                let occurrences: Vec<usize> = w
                    .one_line()
                    .iter()
                    .copied()
                    .filter(|v| block.contains(v))
                    .collect();
                if occurrences != block {
                    return false;
                }
                start += p;
            }
            true
        })
        .collect()
}

#[test]
fn combinatorial_enumeration_matches_brute_force() {
    for n in 1..=6 {
        for lambda in Partition::all_of(n) {
            let fast = lambda.fixed_points();
            let brute = brute_force_fixed_points(&lambda);
            assert_eq!(fast, brute, "lambda={lambda}");
        }
    }
}

#[test]
fn brute_force_holds_at_n_seven() {
    // the largest and smallest fibres of S_7
    for parts in [vec![1; 7], vec![7], vec![3, 2, 1, 1], vec![4, 3]] {
        let lambda = Partition::new(parts).unwrap();
        let fast = lambda.fixed_points();
        let brute = brute_force_fixed_points(&lambda);
        assert_eq!(fast, brute, "lambda={lambda}");
        assert_eq!(BigUint::from(fast.len()), lambda.multinomial());
    }
}

#[test]
fn hook_fixed_points_example() {
    let lambda = Partition::new(vec![2, 1]).unwrap();
    let points: Vec<String> = lambda.fixed_points().iter().map(|w| w.to_string()).collect();
    assert_eq!(points, vec!["123", "132", "312"]);
}

#[test]
fn staircase_examples_from_small_cases() {
    let lambda = Partition::new(vec![3, 2, 1]).unwrap();
    let points = lambda.fixed_points();
    assert_eq!(points.len(), 60);
    for text in ["124365", "416253", "612435"] {
        let w: Permutation = text.parse().unwrap();
        assert!(lambda.is_fixed_point(&w).unwrap(), "{text}");
        assert!(points.contains(&w), "{text} enumerated");
    }
    assert_eq!(
        lambda.coset_representative(&"416253".parse().unwrap()).unwrap(),
        "416253".parse().unwrap()
    );
    let not_fixed: Permutation = "213".parse().unwrap();
    assert!(!Partition::new(vec![2, 1]).unwrap().is_fixed_point(&not_fixed).unwrap());
    assert_eq!(
        Partition::new(vec![2, 1]).unwrap().coset_representative(&not_fixed).unwrap(),
        Permutation::identity(3)
    );
}

/// Subset-sum oracle for the elementary symmetric polynomial.
fn elementary_by_subsets(r: usize, xs: &[Poly]) -> Poly {
    if r == 0 {
        return Poly::one();
    }
    let mut acc = Poly::zero();
    for subset in (0..xs.len()).combinations(r) {
        let mut product = Poly::one();
        for i in subset {
            product = &product * &xs[i];
        }
        acc = &acc + &product;
    }
    acc
}

/// Multiset oracle for the complete symmetric polynomial.
fn complete_by_multisets(r: usize, xs: &[Poly]) -> Poly {
    if r == 0 {
        return Poly::one();
    }
    let mut acc = Poly::zero();
    for combo in (0..xs.len()).combinations_with_replacement(r) {
        let mut product = Poly::one();
        for i in combo {
            product = &product * &xs[i];
        }
        acc = &acc + &product;
    }
    acc
}

#[test]
fn symmetric_polynomials_match_subset_oracles() {
    let alphabets: Vec<Vec<Poly>> = vec![
        (1..=4).map(|i| Poly::var(Var::t(i))).collect(),
        vec![
            Poly::var(Var::u(1)),
            Poly::var(Var::u(1)),
            Poly::var(Var::u(2)),
        ],
        vec![
            "y1 - u1".parse().unwrap(),
            "y2 + 1".parse().unwrap(),
            "2".parse().unwrap(),
        ],
    ];
    for xs in &alphabets {
        for r in 0..=xs.len() + 1 {
            assert_eq!(elementary(r, xs), elementary_by_subsets(r, xs));
            assert_eq!(complete(r, xs), complete_by_multisets(r, xs));
        }
    }
}

#[test]
fn refinement_permutation_paper_scale_example() {
    let lambda = Partition::new(vec![7, 5, 2, 2]).unwrap();
    let wn = lambda.refinement_permutation();
    assert_eq!(wn.to_string(), "1 2 3 8 4 9 5 10 6 11 13 15 7 12 14 16");
}

#[test]
fn refinement_permutation_small_cases() {
    assert_eq!(
        Partition::new(vec![4]).unwrap().refinement_permutation(),
        Permutation::identity(4)
    );
    assert_eq!(
        Partition::new(vec![2, 2]).unwrap().refinement_permutation(),
        "1324".parse().unwrap()
    );
}
