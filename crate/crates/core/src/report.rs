use serde::Serialize;

/// One line of a verification run. `worst_margin` is the smallest slack
/// observed; it is nonnegative when the check passes.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct CheckReport {
    pub check: String,
    pub n_samples: usize,
    pub worst_margin: f64,
    pub pass: bool,
}

impl CheckReport {
    pub fn new(check: impl Into<String>, n_samples: usize, worst_margin: f64, pass: bool) -> Self {
        CheckReport { check: check.into(), n_samples, worst_margin, pass }
    }

    /// Pass iff the margin is nonnegative.
    pub fn from_margin(check: impl Into<String>, n_samples: usize, worst_margin: f64) -> Self {
        Self::new(check, n_samples, worst_margin, worst_margin >= 0.0)
    }
}

pub fn all_pass(reports: &[CheckReport]) -> bool {
    !reports.is_empty() && reports.iter().all(|r| r.pass)
}
