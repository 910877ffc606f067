//! Named pass/fail results shared by the verification suites.

use serde::Serialize;

#[derive(Clone, Debug, Serialize)]
pub struct IdentityReport {
    pub name: String,
    pub algebra: String,
    pub max_residual: f64,
    pub tolerance: f64,
    pub pass: bool,
    pub details: String,
}

impl IdentityReport {
    pub fn new(name: impl Into<String>, algebra: impl Into<String>, max_residual: f64, tolerance: f64, details: impl Into<String>) -> Self {
        IdentityReport {
            name: name.into(),
            algebra: algebra.into(),
            max_residual,
            tolerance,
            pass: max_residual.is_finite() && max_residual < tolerance,
            details: details.into(),
        }
    }

    /// A check that does not apply; recorded as passing with a note.
    pub fn skipped(name: impl Into<String>, algebra: impl Into<String>, why: impl Into<String>) -> Self {
        IdentityReport {
            name: name.into(),
            algebra: algebra.into(),
            max_residual: 0.0,
            tolerance: 0.0,
            pass: true,
            details: format!("skipped: {}", why.into()),
        }
    }

    pub fn is_skipped(&self) -> bool {
        self.details.starts_with("skipped:")
    }
}
