//! SU(1,1) as the automorphism group of the Heisenberg algebra `[z, z*] = 1`,
//! realized numerically on a truncated Fock space.
//!
//! The crate builds three layers on top of each other:
//!
//! * [`fock`] — an exact sparse algebra of shifted-diagonal operators on the
//!   truncated number basis `|0⟩ … |N-1⟩`: creation/annihilation, commutators,
//!   falling-factorial diagonals and the trace inner product `(F, G) = tr(F†G)`.
//! * [`grp`] and [`weyl`] — SU(1,1) group elements with their Cartan
//!   factorization `g = k(φ) h(α) k(ψ)`, and the metaplectic (double-valued)
//!   unitary `U(g)` implementing `g·z = U z U⁻¹` on Fock space. Squeeze matrix
//!   elements come in two independent forms: a closed hypergeometric expression
//!   and a Gauss–Hermite quadrature of the oscillator overlap integral.
//! * [`irrep`], [`repmat`] and [`verify`] — the irreducible-representation
//!   content: shifted-diagonal basis operators `D_k^(τ,ε)` with hypergeometric
//!   symbols `f_k`, ladder superoperators `H±, H`, representation matrix
//!   elements `t_kn^(τ,ε)(g)` (Jacobi functions of the Cartan angles), and a
//!   harness that numerically verifies the addition theorems, sandwiched
//!   matrix-element identities, regulated orthogonality, a generating-function
//!   summation formula, and two closing special-function identities.
//!
//! Scalar kernels (terminating and convergent Gauss hypergeometric series,
//! pole-safe gamma ratios, Hermite functions, Legendre polynomials,
//! Gauss–Hermite nodes) live in [`specfun`]; exact-rational twins used as
//! independent oracles live in [`exact`].
//!
//! Every identity check compares operators on an *interior block*: the
//! sub-matrix far enough from the truncation cutoff that the cutoff cannot
//! influence it. Banded computations get an exact exclusion margin from the
//! shifts involved; squeeze conjugations get a padded build dimension derived
//! from the total rapidity (see [`weyl::required_dim`]).
//!
//! See the crate `examples/` directory for one runnable example per major
//! capability, and the `su11` binary for the `table`/`verify` command-line
//! front end.

pub mod cli;
pub mod exact;
pub mod fock;
pub mod grp;
pub mod irrep;
pub mod repmat;
pub mod specfun;
pub mod verify;
pub mod weyl;

use thiserror::Error;

/// Crate-wide error type.
#[derive(Debug, Clone, Error, PartialEq)]
pub enum Error {
    #[error("operators live on different Fock spaces ({0} vs {1})")]
    DimensionMismatch(usize, usize),
    #[error("Fock space dimension must be at least 2, got {0}")]
    InvalidDimension(usize),
    #[error("not an SU(1,1) element: |a|^2 - |b|^2 = {0} must be positive")]
    InvalidGroupElement(f64),
    #[error("gamma ratio hits a pole: factor {factor} vanishes at step {step}")]
    GammaRatioPole { factor: String, step: i64 },
    #[error(
        "hypergeometric lower parameter hits a pole before the series terminates (c + {0} = 0)"
    )]
    HypergeometricPole(i64),
    #[error("hypergeometric argument {0} outside the supported region x < 1")]
    HypergeometricArgument(f64),
    #[error("series failed to converge within {terms} terms (last term {last:.3e})")]
    NonConvergence { terms: usize, last: f64 },
    #[error("index k = {k} outside the invariant subspace {range}")]
    OutOfRange { k: i64, range: String },
    #[error("diagonal shift {shift} does not fit in truncation dimension {dim}")]
    ShiftExceedsTruncation { shift: i64, dim: usize },
    #[error("quadrature order {order} insufficient, need at least {required}")]
    QuadratureOrder { order: usize, required: usize },
    #[error("Hermite index {0} exceeds the supported maximum {1}")]
    HermiteIndex(usize, usize),
    #[error("configuration error: {0}")]
    Config(String),
}

pub type Result<T> = std::result::Result<T, Error>;

pub use fock::{FockOperator, FockSpace, ShiftedDiagonal};
pub use grp::{CartanAngles, CartanDecomposition, GroupElement};
pub use irrep::{DOperator, Epsilon, IrrepLabel, SeriesClass, SeriesKind};
pub use verify::VerificationReport;
pub use weyl::UnitaryBlock;
