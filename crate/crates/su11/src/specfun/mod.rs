//! Scalar special-function kernels.
//!
//! Everything here is a pure function of its arguments: terminating and
//! convergent Gauss hypergeometric series, pole-safe gamma ratios, a complex
//! gamma function, L²-normalized Hermite functions with Gauss–Hermite
//! quadrature, and Legendre polynomials on `[1, ∞)`.

mod gamma;
mod hermite;
mod hyp;
mod legendre;

pub use gamma::{gamma, gamma_ratio_shift, ln_factorial_table};
pub use hermite::{hermite_h_vec, hermite_psi, hermite_psi_flagged, GaussHermite, MAX_HERMITE_N};
pub use hyp::{gauss_value, hyp2f1, hyp2f1_arg2_seq, hyp2f1_terminating, TermSum};
pub use legendre::legendre_p;
