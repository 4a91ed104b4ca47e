//! Discrete φ-variation functionals and the segment lemmas.
//!
//! The true variation is a supremum over every partition of the segment.
//! Here the supremum runs over sub-partitions of the supplied samples only,
//! which is a lower bound and is exact for piecewise-affine traces sampled at
//! their breakpoints.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::path::SampledPath;
use crate::phi::PhiSpec;
use crate::quasisymmetry::QuasisymmetryModulus;
use crate::tolerance::le_scaled;

/// Largest sample count accepted by [`sup_variation`].
pub const MAX_DP_POINTS: usize = 20_000;

/// Result of [`sup_variation`]. Serializes to a flat JSON object.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct VariationReport {
    pub phi: PhiSpec,
    pub consecutive_sum: f64,
    pub dp_supremum: f64,
    pub argmax_indices: Vec<usize>,
}

fn require_two(path: &SampledPath) -> Result<()> {
    if path.len() < 2 {
        return Err(Error::domain(format!("need at least 2 samples, got {}", path.len())));
    }
    Ok(())
}

/// `Σ φ(|p_j − p_{j−1}|)` over consecutive samples.
pub fn phi_sum(phi: PhiSpec, path: &SampledPath) -> Result<f64> {
    require_two(path)?;
    Ok((1..path.len()).map(|j| phi.eval_unchecked(path.dist(j - 1, j))).sum())
}

/// φ-sum over the samples at `indices`, accumulated left to right.
pub fn phi_sum_over(phi: PhiSpec, path: &SampledPath, indices: &[usize]) -> f64 {
    indices.windows(2).fold(0.0, |acc, w| acc + phi.eval_unchecked(path.dist(w[0], w[1])))
}

/// Supremum of the φ-sum over all sub-partitions that keep both endpoints.
///
/// `V[j] = max_{i<j} V[i] + φ(|p_j − p_i|)`, `V[0] = 0`. Exact ties pick the
/// lexicographically smallest index set.
pub fn sup_variation(phi: PhiSpec, path: &SampledPath) -> Result<VariationReport> {
    require_two(path)?;
    let n = path.len();
    if n > MAX_DP_POINTS {
        return Err(Error::Resource(format!("{n} samples exceeds the DP limit of {MAX_DP_POINTS}")));
    }

    let mut value = vec![0.0f64; n];
    let mut pred = vec![0usize; n];
    // Optimal chains form a tree rooted at 0. In post-order with children
    // ascending, position equals lexicographic rank of the chain.
    let mut order: Vec<usize> = Vec::with_capacity(n);
    order.push(0);
    let mut rank = vec![0usize; n];

    for j in 1..n {
        let mut best = 0usize;
        let mut best_v = f64::NEG_INFINITY;
        for i in 0..j {
            let v = value[i] + phi.eval_unchecked(path.dist(i, j));
            if v > best_v || (v == best_v && rank[i] < rank[best]) {
                best = i;
                best_v = v;
            }
        }
        value[j] = best_v;
        pred[j] = best;
        let at = rank[best];
        order.insert(at, j);
        for (pos, &node) in order.iter().enumerate().skip(at) {
            rank[node] = pos;
        }
    }

    let mut argmax = vec![n - 1];
    let mut cur = n - 1;
    while cur != 0 {
        cur = pred[cur];
        argmax.push(cur);
    }
    argmax.reverse();

    Ok(VariationReport { phi, consecutive_sum: phi_sum(phi, path)?, dp_supremum: value[n - 1], argmax_indices: argmax })
}

/// Largest distance between any two image points.
pub fn oscillation(path: &SampledPath) -> Result<f64> {
    if path.is_empty() {
        return Err(Error::domain("oscillation of an empty path"));
    }
    if path.dim() == 1 {
        let (lo, hi) =
            path.points().fold((f64::INFINITY, f64::NEG_INFINITY), |(lo, hi), p| (lo.min(p[0]), hi.max(p[0])));
        return Ok(hi - lo);
    }
    let n = path.len();
    let mut best = 0.0f64;
    for i in 0..n {
        for j in i + 1..n {
            best = best.max(path.dist(i, j));
        }
    }
    Ok(best)
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct UnionBoundReport {
    pub lhs: f64,
    pub rhs: f64,
    pub holds: bool,
    pub pieces: Vec<f64>,
    pub oscillation: f64,
}

/// Checks `var_I ≤ Σ_m var_{I_m} + (M − 1)·φ(osc_I)` for the pieces cut at
/// `breakpoints` (sample indices, increasing, containing `0` and `N`).
///
/// Each straddling increment is bounded by `φ(osc)`, so the oscillation term
/// carries the gauge.
pub fn union_bound_report(phi: PhiSpec, path: &SampledPath, breakpoints: &[usize]) -> Result<UnionBoundReport> {
    require_two(path)?;
    let last = path.len() - 1;
    if breakpoints.len() < 2 || breakpoints[0] != 0 || *breakpoints.last().unwrap() != last {
        return Err(Error::domain(format!("breakpoints must start at 0 and end at {last}")));
    }
    if breakpoints.windows(2).any(|w| w[0] >= w[1]) {
        return Err(Error::domain("breakpoints must be strictly increasing"));
    }
    let lhs = sup_variation(phi, path)?.dp_supremum;
    let pieces = breakpoints
        .windows(2)
        .map(|w| Ok(sup_variation(phi, &path.slice(w[0]..=w[1])?)?.dp_supremum))
        .collect::<Result<Vec<f64>>>()?;
    let osc = oscillation(path)?;
    let crossings = (breakpoints.len() - 2) as f64;
    let rhs = pieces.iter().sum::<f64>() + crossings * phi.eval_unchecked(osc);
    Ok(UnionBoundReport { lhs, rhs, holds: le_scaled(lhs, rhs), pieces, oscillation: osc })
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct GrowthBoundReport {
    pub lhs: f64,
    pub rhs: f64,
    pub holds: bool,
    /// Consecutive-increment sums after 0, 1, …, m rarefactions; the last
    /// entry is `|f(b) − f(a)|`.
    pub chain: Vec<f64>,
}

/// Checks `Σ|f(a_j) − f(a_{j−1})| ≤ |f(b) − f(a)| + 2m·η(1)·Δ_f(a, b)` on a
/// path sampled at `2ᵐ + 1` equally spaced parameters.
pub fn growth_bound_report(path: &SampledPath, delta_ab: f64, eta: &QuasisymmetryModulus) -> Result<GrowthBoundReport> {
    let n = path.len();
    if n < 2 || !(n - 1).is_power_of_two() {
        return Err(Error::domain(format!("growth bound needs 2^m + 1 samples, got {n}")));
    }
    let params = path.params();
    let step = (params[n - 1] - params[0]) / (n - 1) as f64;
    for (j, &t) in params.iter().enumerate() {
        if (t - (params[0] + j as f64 * step)).abs() > 1e-12 {
            return Err(Error::domain(format!("parameter {j} is not on the equally spaced grid")));
        }
    }
    if !(delta_ab >= 0.0) {
        return Err(Error::domain(format!("modulus of monotonicity must be >= 0, got {delta_ab}")));
    }
    let m = (n - 1).trailing_zeros();
    let chain: Vec<f64> = (0..=m)
        .map(|level| {
            let stride = 1usize << level;
            (stride..n).step_by(stride).map(|j| path.dist(j - stride, j)).sum()
        })
        .collect();
    let lhs = chain[0];
    let rhs = path.dist(0, n - 1) + 2.0 * f64::from(m) * eta.eta1() * delta_ab;
    Ok(GrowthBoundReport { lhs, rhs, holds: le_scaled(lhs, rhs), chain })
}

/// `Σ_{j=1}^{N} φ(d_j)` for the extremal sequence `d_j = C·(log(j+1) − log j)`
/// and `φ = LogDamped(q)`. Partial sums of `d_j` equal `C·log(N+1)`.
pub fn extremal_series_sum(c: f64, q: f64, n: u64) -> Result<f64> {
    if !(c > 0.0 && c.is_finite()) {
        return Err(Error::domain(format!("C must be positive, got {c}")));
    }
    if n == 0 {
        return Err(Error::domain("N must be >= 1"));
    }
    let phi = PhiSpec::log_damped(q)?;
    Ok((1..=n).map(|j| phi.eval_unchecked(c * (1.0 / j as f64).ln_1p())).sum())
}

/// `N·φ(V/N)`: by Jensen, a lower bound for the φ-sum of any `N`
/// nonnegative increments totalling `V`, valid wherever φ is convex.
pub fn jensen_floor(phi: PhiSpec, total: f64, n: u64) -> Result<f64> {
    if !(total >= 0.0) {
        return Err(Error::domain(format!("total variation must be >= 0, got {total}")));
    }
    if n == 0 {
        return Err(Error::domain("N must be >= 1"));
    }
    let n = n as f64;
    Ok(n * phi.eval_unchecked(total / n))
}

/// Modulus of monotonicity `⟨f(a) − f(b), (a − b)/|a − b|⟩`, zero when `a = b`.
pub fn delta_modulus(a: &[f64], b: &[f64], fa: &[f64], fb: &[f64]) -> Result<f64> {
    let d = a.len();
    if d == 0 || b.len() != d || fa.len() != d || fb.len() != d {
        return Err(Error::domain("delta_modulus: dimension mismatch"));
    }
    let norm = a.iter().zip(b).map(|(x, y)| (x - y) * (x - y)).sum::<f64>().sqrt();
    if norm == 0.0 {
        return Ok(0.0);
    }
    let dot: f64 = (0..d).map(|k| (fa[k] - fb[k]) * (a[k] - b[k])).sum();
    Ok(dot / norm)
}
