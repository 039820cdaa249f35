//! Hilbert function of the classical graded quotient by exact rational
//! elimination.
//!
//! The degree-`d` slice of the ideal is `Σ_i y_i·I_{d−1}` plus the span of
//! the degree-`d` generators, so its rank is computed degree by degree.
//! Each degree keeps a monomial basis `Q_d` of the quotient slice together
//! with the reduction map sending every degree-`d` monomial to its
//! coordinates over `Q_d`. Every monomial off the product set
//! `T = {y_i·q : q ∈ Q_{d−1}}` reduces into `T` in one step through a
//! factorization `x = y_i·m'`, so the elimination at degree `d` runs over
//! at most `n·|Q_{d−1}|` columns instead of the full degree-`d` monomial
//! space; the computed ranks are the same.

use std::collections::HashMap;

use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::One;
use serde_json::{json, Value};

use super::linalg::{Echelon, SparseVec};
use crate::combinatorics::Partition;
use crate::error::Error;
use crate::polyring::{Family, Monomial, Poly, Var};
use crate::presentation::{classical_generators_with_limit, GeneratorKey};
use crate::Result;

/// Soft limit on `n` for Hilbert-function computation.
pub const MAX_HILBERT_N: usize = 6;

/// Exponent vector of a `y`-monomial, one entry per variable.
type Exps = Vec<u8>;

/// Per-degree dimensions of `ℚ[y]/I_λ` for the classical ideal.
///
/// `dims[0] = 1`, trailing zeros are trimmed, and on success the total
/// equals the fixed-point count `n!/∏λᵢ!`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HilbertReport {
    pub lambda: Partition,
    pub dims: Vec<usize>,
    pub total: BigUint,
}

impl HilbertReport {
    pub fn target(&self) -> BigUint {
        self.lambda.multinomial()
    }

    pub fn matches_rank(&self) -> bool {
        self.total == self.target()
    }

    pub fn to_json(&self) -> Value {
        json!({
            "lambda": self.lambda.parts().to_vec(),
            "n": self.lambda.n(),
            "ell": self.lambda.ell(),
            "dims": self.dims,
            "total": self.total.to_string().parse::<u64>().map(Value::from).unwrap_or_else(|_| Value::from(self.total.to_string())),
            "target": self.target().to_string().parse::<u64>().map(Value::from).unwrap_or_else(|_| Value::from(self.target().to_string())),
            "matches": self.matches_rank(),
        })
    }
}

/// All exponent vectors of total degree `d` over `n` variables, in
/// descending lexicographic order (which is descending graded-lex within
/// the fixed degree, priority on the first variable).
fn degree_monomials(n: usize, d: usize) -> Vec<Exps> {
    fn rec(n: usize, d: usize, prefix: &mut Exps, out: &mut Vec<Exps>) {
        if n == 1 {
            prefix.push(d as u8);
            out.push(prefix.clone());
            prefix.pop();
            return;
        }
        for first in (0..=d).rev() {
            prefix.push(first as u8);
            rec(n - 1, d - first, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    rec(n.max(1), d, &mut Vec::new(), &mut out);
    if n == 0 {
        return if d == 0 { vec![Vec::new()] } else { Vec::new() };
    }
    out
}

fn rational(c: &BigInt) -> BigRational {
    BigRational::from_integer(c.clone())
}

/// One homogeneous generator as exponent-vector terms.
struct ExpsGenerator {
    degree: usize,
    terms: Vec<(Exps, BigInt)>,
}

fn poly_to_exps_generator(p: &Poly, n: usize) -> Result<ExpsGenerator> {
    let mut degree = 0usize;
    let mut terms = Vec::new();
    for (m, c) in p.terms() {
        let mut exps = vec![0u8; n];
        for &(v, e) in m.exponents() {
            if v.family != Family::Y {
                return Err(Error::ForbiddenFamily {
                    family: v.family.letter(),
                    context: "Hilbert-function generators must use y-variables only",
                });
            }
            exps[v.index as usize - 1] = e as u8;
        }
        degree = degree.max(m.degree() as usize);
        terms.push((exps, c.clone()));
    }
    Ok(ExpsGenerator { degree, terms })
}

/// State of one computed degree slice.
struct DegreeState {
    mons: Vec<Exps>,
    index: HashMap<Exps, usize>,
    /// Coordinates of every monomial over the slice basis.
    reduction: Vec<SparseVec>,
    /// The slice basis, as indices into `mons`.
    basis: Vec<usize>,
}

/// Result of the degree-by-degree elimination.
pub struct QuotientSlices {
    /// Untrimmed per-degree dimensions, starting at degree 0.
    pub dims: Vec<usize>,
    /// Per-degree canonical monomial bases (greedy in graded-lex order),
    /// present when requested. Within a degree, descending graded-lex.
    pub canonical: Option<Vec<Vec<Exps>>>,
}

/// Runs the elimination for `n` variables against homogeneous generators,
/// through `max_degree` with early stop after two consecutive zero
/// dimensions.
fn quotient_slices(
    n: usize,
    generators: &[ExpsGenerator],
    max_degree: usize,
    with_canonical: bool,
) -> QuotientSlices {
    let unit_exps: Exps = vec![0u8; n];
    let mut state = DegreeState {
        mons: vec![unit_exps.clone()],
        index: HashMap::from([(unit_exps.clone(), 0usize)]),
        reduction: vec![vec![(0u32, BigRational::one())]],
        basis: vec![0],
    };
    let mut dims = vec![1usize];
    let mut canonical = with_canonical.then(|| vec![vec![unit_exps]]);
    debug_assert!(generators.iter().all(|g| g.degree >= 1));

    for d in 1..=max_degree {
        let mons = degree_monomials(n, d);
        let index: HashMap<Exps, usize> =
            mons.iter().enumerate().map(|(i, m)| (m.clone(), i)).collect();

        // product set T = {y_i * q : q in previous basis}, as monomial
        // indices in ascending order (descending graded-lex)
        let mut t_mark = vec![false; mons.len()];
        for &q_idx in &state.basis {
            let q = &state.mons[q_idx];
            for i in 0..n {
                let mut x = q.clone();
                x[i] += 1;
                t_mark[index[&x]] = true;
            }
        }
        let t_mons: Vec<usize> = (0..mons.len()).filter(|&m| t_mark[m]).collect();
        let t_col: HashMap<usize, u32> = t_mons
            .iter()
            .enumerate()
            .map(|(col, &m)| (m, col as u32))
            .collect();

        // position of each previous-basis monomial in basis coordinates
        let basis_pos: HashMap<usize, usize> = state
            .basis
            .iter()
            .enumerate()
            .map(|(pos, &m)| (m, pos))
            .collect();

        // shift of a basis-coordinate vector by y_i, landing in T columns
        let shift = |coords: &SparseVec, i: usize| -> SparseVec {
            let mut out: SparseVec = coords
                .iter()
                .map(|(b, c)| {
                    let mut x = state.mons[state.basis[*b as usize]].clone();
                    x[i] += 1;
                    (t_col[&index[&x]], c.clone())
                })
                .collect();
            out.sort_by_key(|&(col, _)| col);
            out
        };

        // one-step reduction of every monomial outside T into T columns
        let mut red: Vec<Option<SparseVec>> = vec![None; mons.len()];
        for (mi, x) in mons.iter().enumerate() {
            if t_mark[mi] {
                continue;
            }
            let i = x.iter().position(|&e| e > 0).expect("degree >= 1");
            let mut m_prev = x.clone();
            m_prev[i] -= 1;
            let coords = &state.reduction[state.index[&m_prev]];
            red[mi] = Some(shift(coords, i));
        }
        let in_t_or_red = |mi: usize| -> SparseVec {
            match &red[mi] {
                Some(v) => v.clone(),
                None => vec![(t_col[&mi], BigRational::one())],
            }
        };

        // relations: the two reductions of x = y_i * m' must agree
        let mut echelon = Echelon::new();
        for (pm_idx, m_prev) in state.mons.iter().enumerate() {
            if basis_pos.contains_key(&pm_idx) {
                continue; // reduction is the unit vector; rows are trivial
            }
            let coords = &state.reduction[pm_idx];
            for i in 0..n {
                let mut x = m_prev.clone();
                x[i] += 1;
                let mi = index[&x];
                let tail = shift(coords, i);
                let row = super::linalg::add_scaled(
                    &tail,
                    &in_t_or_red(mi),
                    &-BigRational::one(),
                );
                echelon.insert(row);
            }
        }
        // degree-d generators, reduced into T columns
        for g in generators.iter().filter(|g| g.degree == d) {
            let mut acc: HashMap<u32, BigRational> = HashMap::new();
            for (exps, coeff) in &g.terms {
                let mi = index[exps];
                for (col, c) in in_t_or_red(mi) {
                    let entry = acc.entry(col).or_insert_with(|| BigRational::from_integer(0.into()));
                    *entry += c * rational(coeff);
                }
            }
            let mut row: SparseVec = acc
                .into_iter()
                .filter(|(_, c)| !num_traits::Zero::is_zero(c))
                .collect();
            row.sort_by_key(|&(col, _)| col);
            echelon.insert(row);
        }

        let dim = t_mons.len() - echelon.rank();
        dims.push(dim);

        // next basis: non-pivot T columns, then reduction map for all mons
        let basis: Vec<usize> = t_mons
            .iter()
            .enumerate()
            .filter(|&(col, _)| !echelon.is_pivot(col as u32))
            .map(|(_, &mi)| mi)
            .collect();
        let new_pos_of_col: HashMap<u32, u32> = t_mons
            .iter()
            .enumerate()
            .filter(|&(col, _)| !echelon.is_pivot(col as u32))
            .enumerate()
            .map(|(pos, (col, _))| (col as u32, pos as u32))
            .collect();
        let reduction: Vec<SparseVec> = (0..mons.len())
            .map(|mi| {
                let v = echelon.reduce(in_t_or_red(mi));
                v.into_iter()
                    .map(|(col, c)| (new_pos_of_col[&col], c))
                    .collect()
            })
            .collect();

        if let Some(canonical) = canonical.as_mut() {
            // greedy graded-lex selection: walk monomials from smallest to
            // largest, keeping those independent of the previous picks
            let mut picks = Echelon::new();
            let mut selected = Vec::new();
            for mi in (0..mons.len()).rev() {
                if selected.len() == dim {
                    break;
                }
                if picks.insert(reduction[mi].clone()) {
                    selected.push(mons[mi].clone());
                }
            }
            selected.reverse(); // descending graded-lex within the degree
            canonical.push(selected);
        }

        state = DegreeState {
            mons,
            index,
            reduction,
            basis,
        };

        let len = dims.len();
        if len >= 2 && dims[len - 1] == 0 && dims[len - 2] == 0 {
            break;
        }
    }

    QuotientSlices { dims, canonical }
}

fn check_limit(n: usize, max_n: usize) -> Result<()> {
    if n > max_n {
        return Err(Error::SoftLimit {
            n,
            limit: max_n,
            op: "Hilbert-function elimination",
        });
    }
    Ok(())
}

fn classical_exps_generators(lambda: &Partition) -> Result<Vec<ExpsGenerator>> {
    let n = lambda.n();
    // the enumeration limit is governed by the Hilbert limit here
    let presentation = classical_generators_with_limit(lambda, n.max(1))?;
    presentation
        .generators
        .iter()
        .map(|(key, p)| {
            debug_assert!(matches!(key, GeneratorKey::Tagged(_)));
            poly_to_exps_generator(p, n)
        })
        .collect()
}

fn run(lambda: &Partition, max_n: usize, with_canonical: bool) -> Result<QuotientSlices> {
    let n = lambda.n();
    check_limit(n, max_n)?;
    if n == 0 {
        return Err(Error::InvalidPartition("empty partition".into()));
    }
    let generators = classical_exps_generators(lambda)?;
    let cutoff = n * (n - 1) / 2 + 1;
    Ok(quotient_slices(n, &generators, cutoff, with_canonical))
}

/// Per-degree dimensions of `ℚ[y]/I_λ`, degrees up to `n(n−1)/2 + 1` with
/// early stop after two consecutive zeros.
pub fn hilbert_function(lambda: &Partition) -> Result<HilbertReport> {
    hilbert_function_with_limit(lambda, MAX_HILBERT_N)
}

pub fn hilbert_function_with_limit(lambda: &Partition, max_n: usize) -> Result<HilbertReport> {
    let slices = run(lambda, max_n, false)?;
    let mut dims = slices.dims;
    while dims.last() == Some(&0) {
        dims.pop();
    }
    let total = BigUint::from(dims.iter().sum::<usize>());
    Ok(HilbertReport {
        lambda: lambda.clone(),
        dims,
        total,
    })
}

/// A degree-graded monomial basis of `ℚ[y]/I_λ`: per degree, the greedy
/// graded-lex complement of the ideal slice. Degrees ascending, descending
/// graded-lex within a degree; the count equals `n!/∏λᵢ!` on success.
pub fn monomial_basis(lambda: &Partition) -> Result<Vec<Monomial>> {
    monomial_basis_with_limit(lambda, MAX_HILBERT_N)
}

pub fn monomial_basis_with_limit(lambda: &Partition, max_n: usize) -> Result<Vec<Monomial>> {
    let slices = run(lambda, max_n, true)?;
    let canonical = slices.canonical.expect("requested canonical basis");
    let mut out = Vec::new();
    for per_degree in canonical {
        for exps in per_degree {
            out.push(Monomial::from_pairs(
                exps.iter()
                    .enumerate()
                    .filter(|&(_, &e)| e > 0)
                    .map(|(i, &e)| (Var::y(i + 1), e as u32)),
            ));
        }
    }
    Ok(out)
}
