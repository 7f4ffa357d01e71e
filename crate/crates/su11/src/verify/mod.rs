//! The identity-verification harness.
//!
//! Every check builds both sides of one asserted identity — addition
//! theorems, sandwiched matrix-element identities, regulated orthogonality,
//! the generating-function summation formula, and the two closing
//! special-function identities — and reports the residual against a
//! tolerance, together with a truncation tail estimate where an infinite sum
//! was windowed.
//!
//! Checks are pure and independent; [`suite`] iterates them over the
//! documented parameter grids in a deterministic order.

mod checks;
pub mod suite;

pub use checks::{
    check_addition, check_generating_function, check_generating_function_exact,
    check_legendre_identity, check_orthogonality_regulated, check_sandwich_a, check_sandwich_b,
    check_sandwich_c, check_unity_identity, regulated_orthogonality_value,
    unity_identity_exact_residual,
};
pub use suite::{run_suite, Suite, SuiteConfig};

use serde::Serialize;

/// Structured result of one identity check.
#[derive(Debug, Clone, Serialize)]
pub struct VerificationReport {
    pub identity_id: String,
    pub parameters: serde_json::Value,
    pub residual: f64,
    pub tolerance: f64,
    pub tail_estimate: f64,
    pub passed: bool,
}

impl VerificationReport {
    pub fn new(
        identity_id: impl Into<String>,
        parameters: serde_json::Value,
        residual: f64,
        tolerance: f64,
        tail_estimate: f64,
    ) -> Self {
        VerificationReport {
            identity_id: identity_id.into(),
            parameters,
            residual,
            tolerance,
            tail_estimate,
            passed: residual.is_finite() && residual <= tolerance,
        }
    }

    /// One line of the JSON-lines report stream.
    pub fn to_json_line(&self) -> String {
        serde_json::to_string(self).expect("report serialization cannot fail")
    }
}
