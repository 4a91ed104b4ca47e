//! Gauge functions for generalized variation.
//!
//! A gauge is a convex, strictly increasing `φ: [0, ∞) → [0, ∞)` with
//! `φ(0) = 0`. Two families are supported: the power gauge `t ↦ tᵖ` and the
//! log-damped gauge `t ↦ t / log(e + 1/t)^q`.

use std::f64::consts::E;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(try_from = "String", into = "String")]
pub enum PhiSpec {
    /// `t ↦ tᵖ`, `p ≥ 1`.
    Power(f64),
    /// `t ↦ t / log(e + 1/t)^q`, `q ≥ 0`, with value 0 at `t = 0`.
    LogDamped(f64),
}

impl PhiSpec {
    pub fn power(p: f64) -> Result<Self> {
        if !(p.is_finite() && p >= 1.0) {
            return Err(Error::domain(format!("power exponent must be >= 1, got {p}")));
        }
        Ok(PhiSpec::Power(p))
    }

    pub fn log_damped(q: f64) -> Result<Self> {
        if !(q.is_finite() && q >= 0.0) {
            return Err(Error::domain(format!("log exponent must be >= 0, got {q}")));
        }
        Ok(PhiSpec::LogDamped(q))
    }

    /// Evaluates `φ(t)`; negative or NaN `t` is a domain error.
    pub fn eval(&self, t: f64) -> Result<f64> {
        if t.is_nan() || t < 0.0 {
            return Err(Error::domain(format!("gauge argument must be >= 0, got {t}")));
        }
        Ok(self.eval_unchecked(t))
    }

    /// Evaluation without the sign check. Callers pass distances.
    #[inline]
    pub fn eval_unchecked(&self, t: f64) -> f64 {
        match *self {
            PhiSpec::Power(p) => {
                if p == 1.0 {
                    t
                } else if p == 2.0 {
                    t * t
                } else {
                    t.powf(p)
                }
            }
            PhiSpec::LogDamped(q) => {
                if t == 0.0 {
                    0.0
                } else if q == 0.0 {
                    t
                } else {
                    t / (E + 1.0 / t).ln().powf(q)
                }
            }
        }
    }

    /// Midpoint convexity on a logarithmic grid over `[lo, hi]`.
    ///
    /// Compares `φ((a+b)/2)` with `(φ(a)+φ(b))/2` for grid pairs at several
    /// spans. A pair violates convexity when the midpoint value exceeds the
    /// chord value by more than `rel_tol` relative to the chord.
    pub fn convexity_check(&self, lo: f64, hi: f64, points: usize, rel_tol: f64) -> ConvexityCheck {
        let points = points.max(2);
        let (llo, lhi) = (lo.ln(), hi.ln());
        let grid: Vec<f64> = (0..points).map(|i| (llo + (lhi - llo) * i as f64 / (points - 1) as f64).exp()).collect();
        let mut worst = f64::NEG_INFINITY;
        let mut pairs = 0usize;
        let mut violations = 0usize;
        for span in [1usize, 2, 8, 64, 512] {
            for i in 0..grid.len().saturating_sub(span) {
                let (a, b) = (grid[i], grid[i + span]);
                let chord = 0.5 * (self.eval_unchecked(a) + self.eval_unchecked(b));
                let mid = self.eval_unchecked(0.5 * (a + b));
                let excess = (mid - chord) / chord;
                worst = worst.max(excess);
                pairs += 1;
                if excess > rel_tol {
                    violations += 1;
                }
            }
        }
        ConvexityCheck { pairs, violations, worst_relative_excess: worst }
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ConvexityCheck {
    pub pairs: usize,
    pub violations: usize,
    /// Largest `(φ(mid) − chord) / chord`; negative means strictly convex on the grid.
    pub worst_relative_excess: f64,
}

impl ConvexityCheck {
    pub fn holds(&self) -> bool {
        self.violations == 0
    }
}

impl fmt::Display for PhiSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            PhiSpec::Power(p) => write!(f, "pow:{p}"),
            PhiSpec::LogDamped(q) => write!(f, "log:{q}"),
        }
    }
}

impl FromStr for PhiSpec {
    type Err = Error;

    /// Parses `pow:p` or `log:q`.
    fn from_str(s: &str) -> Result<Self> {
        let (kind, val) = s
            .split_once(':')
            .ok_or_else(|| Error::domain(format!("gauge must look like pow:p or log:q, got {s:?}")))?;
        let v: f64 = val.trim().parse().map_err(|_| Error::domain(format!("bad gauge parameter {val:?}")))?;
        match kind.trim() {
            "pow" => PhiSpec::power(v),
            "log" => PhiSpec::log_damped(v),
            other => Err(Error::domain(format!("unknown gauge family {other:?}"))),
        }
    }
}

impl TryFrom<String> for PhiSpec {
    type Error = Error;
    fn try_from(s: String) -> Result<Self> {
        s.parse()
    }
}

impl From<PhiSpec> for String {
    fn from(p: PhiSpec) -> String {
        p.to_string()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn power_eval() {
        assert_eq!(PhiSpec::power(2.0).unwrap().eval(3.0).unwrap(), 9.0);
        assert_eq!(PhiSpec::power(1.0).unwrap().eval(0.0).unwrap(), 0.0);
    }

    #[test]
    fn log_damped_zero_and_one() {
        let phi = PhiSpec::log_damped(1.5).unwrap();
        assert_eq!(phi.eval(0.0).unwrap(), 0.0);
        // 1/log(e+1), computed with 40-digit arithmetic
        let phi1 = PhiSpec::log_damped(1.0).unwrap();
        assert!((phi1.eval(1.0).unwrap() - 0.761_462_859_614_659_9).abs() < 1e-15);
    }

    #[test]
    fn negative_argument_rejected() {
        let phi = PhiSpec::power(2.0).unwrap();
        assert!(matches!(phi.eval(-1e-300), Err(Error::Domain(_))));
        assert!(phi.eval(f64::NAN).is_err());
    }

    #[test]
    fn parameter_domains() {
        assert!(PhiSpec::power(0.5).is_err());
        assert!(PhiSpec::log_damped(-0.1).is_err());
        assert!(PhiSpec::log_damped(f64::INFINITY).is_err());
    }

    #[test]
    fn parse_and_display() {
        let p: PhiSpec = "pow:2".parse().unwrap();
        assert_eq!(p, PhiSpec::Power(2.0));
        let q: PhiSpec = "log:1.5".parse().unwrap();
        assert_eq!(q, PhiSpec::LogDamped(1.5));
        assert_eq!(q.to_string(), "log:1.5");
        assert!("exp:2".parse::<PhiSpec>().is_err());
        assert!("pow".parse::<PhiSpec>().is_err());
    }

    #[test]
    fn strictly_increasing_on_grid() {
        for phi in [PhiSpec::Power(1.0), PhiSpec::Power(3.5), PhiSpec::LogDamped(0.0), PhiSpec::LogDamped(3.0)] {
            let mut prev = phi.eval(0.0).unwrap();
            for i in 0..2000 {
                let t = 1e-9 * 10f64.powf(12.0 * i as f64 / 1999.0);
                let v = phi.eval(t).unwrap();
                assert!(v > prev, "{phi} not increasing at {t}");
                prev = v;
            }
        }
    }

    #[test]
    fn convexity_on_log_grid() {
        let mut phis = vec![PhiSpec::Power(1.0), PhiSpec::Power(1.5), PhiSpec::Power(2.0), PhiSpec::Power(4.0)];
        phis.extend((0..=12).map(|i| PhiSpec::LogDamped(0.25 * i as f64)));
        for phi in phis {
            let check = phi.convexity_check(1e-9, 1e3, 4000, 1e-12);
            assert!(check.holds(), "{phi}: {check:?}");
        }
    }
}
