//! δ-monotone maps: the modulus of monotonicity, its quaternionic
//! minimization in ℝ⁴, sampled estimates of δ and the radial stretch.
//!
//! Convention: f is δ-monotone when `⟨f(a) − f(b), a − b⟩ ≥ δ|f(a) − f(b)||a − b|`.

use nalgebra::{DMatrix, Vector4};
use serde::Serialize;

use super::quaternion::QuatMatrix;
use crate::error::{Error, Result};
use crate::variation::delta_modulus;

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct QuatMinimizer {
    /// `Δ_f(a, b) = α|a − b|`
    pub delta_val: f64,
    /// `|(f(a) + Qa) − (f(b) + Qb)|`, equal to `|delta_val|`.
    pub tilted_gap: f64,
    pub q: QuatMatrix,
    /// `(α, β, γ, ζ)` of `f(a) − f(b) = αv + βiv + γjv + ζkv`, `v = a − b`.
    pub coeffs: [f64; 4],
}

/// Expands `f(a) − f(b)` in the orthogonal frame `{v, iv, jv, kv}` and
/// returns the imaginary quaternion `Q = −βi − γj − ζk` cancelling the
/// rotational part, so that `(f + Q)(a) − (f + Q)(b) = αv`.
pub fn quat_minimizer(
    a: &Vector4<f64>,
    b: &Vector4<f64>,
    fa: &Vector4<f64>,
    fb: &Vector4<f64>,
) -> Result<QuatMinimizer> {
    let v = a - b;
    let vv = v.norm_squared();
    if vv == 0.0 {
        return Err(Error::domain("quat_minimizer needs a != b"));
    }
    let w = fa - fb;
    let c = |u: &QuatMatrix| w.dot(&u.apply(&v)) / vv;
    let coeffs = [w.dot(&v) / vv, c(&QuatMatrix::I), c(&QuatMatrix::J), c(&QuatMatrix::K)];
    let q = QuatMatrix::new(0.0, -coeffs[1], -coeffs[2], -coeffs[3]);
    let tilted_gap = (w + q.apply(&v)).norm();
    Ok(QuatMinimizer { delta_val: coeffs[0] * vv.sqrt(), tilted_gap, q, coeffs })
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct MonotonicityProbe {
    /// `min Δ_f(a,b)/|f(a) − f(b)|` over the sampled pairs. Sampling can only
    /// miss bad pairs, so this overestimates the true δ.
    pub delta_hat: f64,
    pub worst_pair: (usize, usize),
    pub pairs: usize,
    /// Pairs with `a = b` or `f(a) = f(b)`.
    pub skipped: usize,
}

pub fn monotonicity_probe(samples: &[(Vec<f64>, Vec<f64>)]) -> Result<MonotonicityProbe> {
    if samples.len() < 2 {
        return Err(Error::domain("monotonicity_probe needs at least 2 samples"));
    }
    let d = samples[0].0.len();
    if d == 0 || samples.iter().any(|(x, y)| x.len() != d || y.len() != d) {
        return Err(Error::domain("monotonicity_probe: inconsistent dimensions"));
    }
    let mut best = f64::INFINITY;
    let mut worst_pair = (0, 0);
    let (mut pairs, mut skipped) = (0, 0);
    for i in 0..samples.len() {
        for j in i + 1..samples.len() {
            let (a, fa) = (&samples[i].0, &samples[i].1);
            let (b, fb) = (&samples[j].0, &samples[j].1);
            let gap = fa.iter().zip(fb).map(|(x, y)| (x - y) * (x - y)).sum::<f64>().sqrt();
            let same = a == b;
            if gap == 0.0 || same {
                skipped += 1;
                continue;
            }
            pairs += 1;
            let ratio = delta_modulus(a, b, fa, fb)? / gap;
            if ratio < best {
                best = ratio;
                worst_pair = (i, j);
            }
        }
    }
    if pairs == 0 {
        return Err(Error::domain("every sampled pair is degenerate"));
    }
    Ok(MonotonicityProbe { delta_hat: best, worst_pair, pairs, skipped })
}

/// `x ↦ |x|^{α−1}x`, with `0 ↦ 0`.
pub fn radial_stretch(alpha: f64, x: &[f64]) -> Vec<f64> {
    let r = x.iter().map(|t| t * t).sum::<f64>().sqrt();
    if r == 0.0 {
        return vec![0.0; x.len()];
    }
    let s = r.powf(alpha - 1.0);
    x.iter().map(|t| s * t).collect()
}

/// Differential of the radial stretch: `|x|^{α−1}(I + (α−1)x̂x̂ᵀ)`.
pub fn radial_stretch_differential(alpha: f64, x: &[f64]) -> Result<DMatrix<f64>> {
    let r = x.iter().map(|t| t * t).sum::<f64>().sqrt();
    if r == 0.0 {
        return Err(Error::domain("radial stretch differential is undefined at the origin"));
    }
    let n = x.len();
    let s = r.powf(alpha - 1.0);
    Ok(DMatrix::from_fn(n, n, |i, j| {
        let id = if i == j { 1.0 } else { 0.0 };
        s * (id + (alpha - 1.0) * x[i] * x[j] / (r * r))
    }))
}
