//! Exact symbolic computation with the torus-equivariant cohomology of
//! type-A Springer varieties.
//!
//! The library is organized around the combinatorics of a Jordan type
//! (a partition of `n`), an exact sparse polynomial ring over arbitrary
//! precision integers, and the deformed symmetric-function generators of
//! the equivariant Tanisaki ideal:
//!
//! - [`combinatorics`]: partitions, permutations, semistandard tableaux,
//!   torus fixed points of the Springer variety, and the refinement
//!   permutation of the Jordan kernel filtration.
//! - [`polyring`]: sparse multivariate polynomials over `BigInt` in the
//!   variable families `y`, `u`, `t`, with substitution homomorphisms.
//! - [`symfun`]: elementary/complete symmetric polynomials, their factorial
//!   (shifted) analogues, and factorial Schur functions via tableau sums.
//! - [`presentation`]: generator lists for the equivariant Tanisaki ideal,
//!   its classical specialization, and the flag-variety ideal, with JSON
//!   and CAS-text export.
//! - [`localization`]: restriction of classes to torus fixed points, the
//!   subtorus projection, and the symmetric-group action on classes.
//! - [`verify`]: Hilbert functions of the classical quotient by exact
//!   rational elimination, monomial bases, and localization rank
//!   certificates.
//! - [`suites`]: named verification suites used by the CLI.
//!
//! All values are immutable and all operations are pure and deterministic;
//! everything is `Send + Sync` and safe to share between threads.
//!
//! Cohomological degree conventions: every variable carries algebraic
//! degree 1 (the geometric classes live in degree 2, i.e. cohomological
//! degree is twice the algebraic degree used throughout this crate).

pub mod combinatorics;
pub mod error;
pub mod localization;
pub mod polyring;
pub mod presentation;
pub mod suites;
pub mod symfun;
pub mod verify;

pub use combinatorics::{BlockNilpotent, Partition, Permutation, Tableau};
pub use error::Error;
pub use polyring::{Family, Monomial, Poly, Substitution, Var, VarSpace};
pub use presentation::{GeneratorTag, IdealKind, IdealPresentation};

/// Shorthand for results carrying this crate's [`Error`].
pub type Result<T> = std::result::Result<T, Error>;
