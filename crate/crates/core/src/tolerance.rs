//! Comparison tolerances shared by every inequality check.

/// Absolute slack per unit magnitude for inequality checks.
pub const INEQ_TOL: f64 = 1e-12;

/// `lhs ≤ rhs` up to `INEQ_TOL` scaled by the larger magnitude (at least 1).
#[inline]
pub fn le_scaled(lhs: f64, rhs: f64) -> bool {
    lhs <= rhs + INEQ_TOL * lhs.abs().max(rhs.abs()).max(1.0)
}

/// Slack `rhs − lhs` normalized the same way as [`le_scaled`]; nonnegative
/// margins pass.
#[inline]
pub fn scaled_margin(lhs: f64, rhs: f64) -> f64 {
    (rhs - lhs) / lhs.abs().max(rhs.abs()).max(1.0)
}
