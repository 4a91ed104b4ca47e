//! Quasisymmetry moduli and an empirical estimator along a line.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::path::SampledPath;

/// A modulus of quasisymmetry, reduced to what the growth lemma consumes:
/// the value `η(1)` and, optionally, an empirical `(ratio, bound)` table.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct QuasisymmetryModulus {
    eta1: f64,
    table: Vec<(f64, f64)>,
}

impl QuasisymmetryModulus {
    pub fn new(eta1: f64) -> Result<Self> {
        if !(eta1 > 0.0 && eta1.is_finite()) {
            return Err(Error::domain(format!("eta(1) must be positive, got {eta1}")));
        }
        Ok(QuasisymmetryModulus { eta1, table: Vec::new() })
    }

    /// Table entries must have positive ratios, increasing, with nondecreasing bounds.
    pub fn with_table(eta1: f64, table: Vec<(f64, f64)>) -> Result<Self> {
        let mut m = Self::new(eta1)?;
        if table.iter().any(|&(r, b)| !(r > 0.0) || !(b >= 0.0)) {
            return Err(Error::domain("table ratios must be positive and bounds nonnegative"));
        }
        if table.windows(2).any(|w| w[0].0 >= w[1].0 || w[0].1 > w[1].1) {
            return Err(Error::domain("table must be increasing in ratio with nondecreasing bounds"));
        }
        m.table = table;
        Ok(m)
    }

    pub fn eta1(&self) -> f64 {
        self.eta1
    }

    pub fn table(&self) -> &[(f64, f64)] {
        &self.table
    }

    /// Estimates the tilted modulus from samples along a line.
    ///
    /// For every pair `(a, b)` the image is tilted by the linear map that
    /// cancels the part of `f(b) − f(a)` orthogonal to the line (the planar
    /// `iλz` tilt, or the imaginary-quaternion tilt in ℝ⁴), leaving an
    /// increment of length `Δ_f(a, b)`. The table records, per ratio bin
    /// `r = |c − a|/|b − a|`, the largest `|f^T(c) − f^T(a)| / Δ_f(a, b)`
    /// seen; `η(1)` is the running maximum up to `r = 1`.
    ///
    /// `direction` is the unit source direction of the line; sample `j` sits
    /// at position `params[j]` along it. Pairs with `Δ_f(a, b) ≤ 0` are
    /// skipped and counted.
    pub fn estimate_on_line(path: &SampledPath, direction: &[f64], bins: &[f64]) -> Result<(Self, EstimateStats)> {
        let d = path.dim();
        if direction.len() != d {
            return Err(Error::domain("direction dimension differs from path dimension"));
        }
        let norm = direction.iter().map(|x| x * x).sum::<f64>().sqrt();
        if (norm - 1.0).abs() > 1e-12 {
            return Err(Error::domain("direction must be a unit vector"));
        }
        if path.len() < 3 {
            return Err(Error::domain("need at least 3 samples to estimate a quasisymmetry modulus"));
        }
        if bins.is_empty() || bins.windows(2).any(|w| w[0] >= w[1]) || bins[0] <= 0.0 {
            return Err(Error::domain("bins must be positive and increasing"));
        }

        let s = path.params();
        let n = path.len();
        let mut best = vec![0.0f64; bins.len()];
        let mut eta1 = 0.0f64;
        let mut stats = EstimateStats::default();
        let mut w_perp = vec![0.0; d];
        let r_max = bins[bins.len() - 1].max(1.0);

        for a in 0..n {
            for b in 0..n {
                if a == b {
                    continue;
                }
                let fa = path.point(a);
                let fb = path.point(b);
                let sign = if s[b] > s[a] { 1.0 } else { -1.0 };
                // Δ_f(a,b) = ⟨f(b) − f(a), (b − a)/|b − a|⟩
                let along: f64 = (0..d).map(|k| (fb[k] - fa[k]) * direction[k]).sum::<f64>() * sign;
                if !(along > 0.0) {
                    stats.skipped_pairs += 1;
                    continue;
                }
                stats.pairs += 1;
                for k in 0..d {
                    w_perp[k] = (fb[k] - fa[k]) - sign * along * direction[k];
                }
                let span = s[b] - s[a];
                for c in 0..n {
                    if c == a || c == b {
                        continue;
                    }
                    let t = (s[c] - s[a]) / span;
                    let r = t.abs();
                    if r > r_max {
                        continue;
                    }
                    let fc = path.point(c);
                    let tilted = (0..d)
                        .map(|k| {
                            let x = fc[k] - fa[k] - t * w_perp[k];
                            x * x
                        })
                        .sum::<f64>()
                        .sqrt();
                    let ratio = tilted / along;
                    stats.triples += 1;
                    if r <= 1.0 {
                        eta1 = eta1.max(ratio);
                    }
                    if let Some(bin) = bins.iter().position(|&edge| r <= edge) {
                        best[bin] = best[bin].max(ratio);
                    }
                }
            }
        }
        if stats.pairs == 0 || eta1 <= 0.0 {
            return Err(Error::domain("no monotone pairs to estimate from"));
        }
        let mut running = 0.0f64;
        let table = bins
            .iter()
            .zip(&best)
            .map(|(&r, &b)| {
                running = running.max(b);
                (r, running)
            })
            .collect();
        Ok((Self::with_table(eta1, table)?, stats))
    }
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize)]
pub struct EstimateStats {
    pub pairs: usize,
    pub skipped_pairs: usize,
    pub triples: usize,
}
