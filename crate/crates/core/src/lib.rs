//! Exact valuative invariants of (a,b)-Catalan matroids.
//!
//! The Catalan matroid `C_n^{a,b}` decomposes, at the level of polytope indicator
//! functions, into a weighted sum of direct sums of uniform matroids indexed by the
//! partitions of `n`. Any valuative invariant therefore reduces to closed forms for
//! uniform matroids:
//!
//! ```text
//! f(C_n^{a,b}) = sum over λ ⊢ n of (1/z_λ) · Π_i f(U_{λ_i b, λ_i (a+b)})
//! ```
//!
//! The crate is organised bottom-up:
//!
//! - [`exactalg`]: rationals and dense/sparse polynomials over big integers.
//! - [`combinat`]: partitions, compositions, gap partitions, Eulerian and Stirling numbers.
//! - [`matroid`]: Schubert, uniform and direct-sum matroids with rank, bases, flats and duality.
//! - [`polytope`]: halfspace systems, membership, lattice-point counting and Ehrhart interpolation.
//! - [`invariants`]: uniform closed forms and the partition-sum combinator.
//! - [`verify`]: brute-force oracles and identity suites producing serializable reports.

pub mod combinat;
pub mod exactalg;
pub mod invariants;
pub mod matroid;
pub mod polytope;
pub mod verify;

use thiserror::Error;

pub use exactalg::{BiPoly, Rational, UniPoly};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("degenerate interpolation: repeated node {0}")]
    DegenerateInterpolation(String),
    #[error("subset must be nonempty")]
    EmptySubset,
    #[error("invalid run encoding: {0}")]
    InvalidRunEncoding(String),
    #[error("element {element} out of range for ground set [{ground}]")]
    OutOfRange { element: usize, ground: usize },
    #[error("enumeration too large: ground size {ground} exceeds cap {cap}")]
    EnumerationTooLarge { ground: usize, cap: usize },
    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },
    #[error("degree hint too small: interpolant of degree {degree} mispredicts t = {node}")]
    DegreeHintTooSmall { degree: usize, node: usize },
    #[error("formula range: {0}")]
    FormulaRange(String),
    #[error("valuative identity violated: {0}")]
    ValuativeIdentityViolated(String),
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
}

pub type Result<T> = std::result::Result<T, Error>;
