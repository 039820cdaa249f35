//! Rank and Hilbert-function certificates for the ideal presentations.

mod hilbert;
mod linalg;
mod rank;

pub use hilbert::{
    hilbert_function, hilbert_function_with_limit, monomial_basis, monomial_basis_with_limit,
    HilbertReport, MAX_HILBERT_N,
};
pub use linalg::{integer_rank, Echelon, SparseVec};
pub use rank::{rank_certificate, rank_certificate_with_limit, RankCertificate, MAX_RANK_N};

use crate::combinatorics::Partition;
use crate::polyring::{Poly, Var};
use crate::presentation::{validate_tag, GeneratorTag};
use crate::symfun::{complete, elementary, u_shift_alphabet};
use crate::Result;

/// The element of `ℤ[y,u]` congruent to the classical generator
/// `e_d(y_{i_1},…,y_{i_s})` modulo the deformed ideal:
///
/// ```text
/// −Σ_{0≤r<d} (−1)^{d−r} e_r(y_{i_1},…,y_{i_s}) h_{d−r}(u_{β(1)},…,u_{β(s+1−d)})
/// ```
///
/// with `β` the refined block sequence. The difference between the
/// classical generator and this image is exactly the deformed generator,
/// term for term in the alternating sum.
pub fn classical_generator_image(lambda: &Partition, tag: &GeneratorTag) -> Result<Poly> {
    validate_tag(lambda, tag)?;
    let shifts = u_shift_alphabet(lambda);
    let prefix = &shifts[..tag.s + 1 - tag.d];
    let ys: Vec<Poly> = tag.indices.iter().map(|&i| Poly::var(Var::y(i))).collect();
    let mut acc = Poly::zero();
    for r in 0..tag.d {
        let term = &elementary(r, &ys) * &complete(tag.d - r, prefix);
        // negated alternating sum: -(-1)^(d-r) = (-1)^(d-r+1)
        if (tag.d - r) % 2 == 0 {
            acc = &acc - &term;
        } else {
            acc = &acc + &term;
        }
    }
    Ok(acc)
}
