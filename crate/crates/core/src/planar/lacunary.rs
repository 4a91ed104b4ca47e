//! The lacunary series `f(z) = z + ε Σ_{m≥0} 4^{−m} g(4ᵐz)` and its real
//! trace `h(x) = ε^{−1} im f(x) = Σ 4^{−m} T(4ᵐx)`.

use num_complex::Complex64;
use serde::Serialize;

use super::profile::{g_eval, g_lipschitz, tent_eval};
use super::rademacher::rademacher_eval;
use crate::error::{Error, Result};

/// `max |g|`, attained at the shared diamond vertex.
pub const G_MAX: f64 = 2.0;

/// Default tail tolerance for non-terminating series.
pub const DEFAULT_TAIL_TOL: f64 = 1e-12;

/// Largest depth accepted by [`vn_table`].
pub const MAX_VN_DEPTH: u32 = 12;

const MAX_LEVELS: u32 = 1200;

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub enum Truncation {
    /// Only stop where every later term provably vanishes.
    ExactDyadic,
    /// Stop once the remaining tail is below the tolerance, or earlier when exact.
    TailBound(f64),
}

/// Which stopping rule ended a series evaluation.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum SeriesMode {
    Exact,
    Tail,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct LacunaryParams {
    eps: f64,
    lipschitz: f64,
    truncation: Truncation,
}

impl LacunaryParams {
    /// Requires `0 < ε < 1/(2L)` with `L` the Lipschitz constant of `g`.
    pub fn new(eps: f64) -> Result<Self> {
        Self::with_truncation(eps, Truncation::TailBound(DEFAULT_TAIL_TOL))
    }

    pub fn with_truncation(eps: f64, truncation: Truncation) -> Result<Self> {
        let lipschitz = g_lipschitz();
        if !(eps > 0.0 && eps < 1.0 / (2.0 * lipschitz)) {
            return Err(Error::domain(format!(
                "eps must lie in (0, 1/(2L)) = (0, {}), got {eps}",
                1.0 / (2.0 * lipschitz)
            )));
        }
        if let Truncation::TailBound(tol) = truncation {
            if !(tol > 0.0) {
                return Err(Error::domain("tail tolerance must be positive"));
            }
        }
        Ok(LacunaryParams { eps, lipschitz, truncation })
    }

    pub fn eps(&self) -> f64 {
        self.eps
    }

    pub fn lipschitz(&self) -> f64 {
        self.lipschitz
    }

    pub fn truncation(&self) -> Truncation {
        self.truncation
    }

    /// `k = εL/(1 − εL)`.
    pub fn k(&self) -> f64 {
        let el = self.eps * self.lipschitz;
        el / (1.0 - el)
    }

    /// Bound on the terms after level `m`: `Σ_{m'>m} ε·2·4^{−m'} = 2ε·4^{−m}/3`.
    pub fn tail_after(&self, m: u32) -> f64 {
        self.eps * G_MAX * 4f64.powi(-(m as i32)) / 3.0
    }

    /// Constant `C` with `|Df(z)| ≤ C·log(e + 1/|im z|)`.
    ///
    /// At most `⌊log₄(2/|y|)⌋ + 1` levels are nonzero at height `y`, each
    /// adding at most `εL` to `|f_z| + |f_z̄|`. The ratio of that bound to
    /// `log(e + 1/|y|)` peaks just below the heights `2·4^{−j}`.
    pub fn log_derivative_constant(&self) -> f64 {
        let el = self.eps * self.lipschitz;
        (0..64)
            .map(|j| (1.0 + el * (j as f64 + 1.0)) / (std::f64::consts::E + 4f64.powi(j) / 2.0).ln())
            .fold(1.0, f64::max)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct SeriesValue {
    pub value: Complex64,
    pub mode: SeriesMode,
    /// Number of levels summed.
    pub levels: u32,
}

/// `f(z)`, truncated per `params`.
pub fn f_eval(z: Complex64, params: &LacunaryParams) -> Complex64 {
    f_eval_detailed(z, params).value
}

pub fn f_eval_detailed(z: Complex64, params: &LacunaryParams) -> SeriesValue {
    let mut sum = Complex64::new(0.0, 0.0);
    let mut w = z;
    let mut scale = 1.0;
    for m in 0..MAX_LEVELS {
        if w.im.abs() > 2.0 || (w.im == 0.0 && w.re.rem_euclid(8.0) == 0.0) {
            return SeriesValue { value: z + params.eps * sum, mode: SeriesMode::Exact, levels: m };
        }
        sum += g_eval(w).value * scale;
        if let Truncation::TailBound(tol) = params.truncation {
            if params.tail_after(m) < tol {
                return SeriesValue { value: z + params.eps * sum, mode: SeriesMode::Tail, levels: m + 1 };
            }
        }
        w *= 4.0;
        scale *= 0.25;
    }
    SeriesValue { value: z + params.eps * sum, mode: SeriesMode::Tail, levels: MAX_LEVELS }
}

/// `h(x) = Σ 4^{−m} T(4ᵐx)`. Exact for dyadic rationals `8j/4ᴺ`, otherwise
/// truncated once the tail `Σ_{m'>m} 2·4^{−m'}` drops below `tol`.
pub fn h_eval(x: f64) -> f64 {
    h_eval_detailed(x, DEFAULT_TAIL_TOL).0
}

pub fn h_eval_detailed(x: f64, tol: f64) -> (f64, SeriesMode) {
    let mut sum = 0.0;
    let mut w = x;
    let mut scale = 1.0;
    for m in 0..MAX_LEVELS {
        if w.rem_euclid(8.0) == 0.0 {
            return (sum, SeriesMode::Exact);
        }
        sum += scale * tent_eval(w);
        if G_MAX * 4f64.powi(-(m as i32)) / 3.0 < tol {
            return (sum, SeriesMode::Tail);
        }
        w *= 4.0;
        scale *= 0.25;
    }
    (sum, SeriesMode::Tail)
}

/// Partial sum `h_N(x) = Σ_{m<N} 4^{−m} T(4ᵐx)`.
pub fn h_partial(x: f64, depth: u32) -> f64 {
    let mut sum = 0.0;
    let mut w = x;
    let mut scale = 1.0;
    for _ in 0..depth {
        sum += scale * tent_eval(w);
        w *= 4.0;
        scale *= 0.25;
    }
    sum
}

/// The dyadic grid `x_j = 8j/4ᴺ`, `j = 0..=4ᴺ`.
pub fn dyadic_grid(depth: u32) -> Vec<f64> {
    let n = 1u64 << (2 * depth);
    let step = 8.0 / n as f64;
    (0..=n).map(|j| j as f64 * step).collect()
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum VnMethod {
    /// `Σ_j |h(x_j) − h(x_{j−1})|` on the grid `x_j = 8j/4ᴺ`.
    PartitionSum,
    /// `∫₀⁸ |h_N′|` with `h_N′ = ½ Σ_{m<N} (s_{2m}(x/8) − s_{2m+1}(x/8))`,
    /// enumerated over the `4ᴺ` intervals where it is constant.
    DerivativeIntegral,
}

/// `V_N` for `N = 1..=n_max`.
pub fn vn_table(n_max: u32, method: VnMethod) -> Result<Vec<(u32, f64)>> {
    if n_max > MAX_VN_DEPTH {
        return Err(Error::Resource(format!("V_N enumeration limited to N <= {MAX_VN_DEPTH}, got {n_max}")));
    }
    Ok((1..=n_max).map(|n| (n, vn(n, method))).collect())
}

pub fn vn(depth: u32, method: VnMethod) -> f64 {
    match method {
        VnMethod::PartitionSum => {
            // terms m ≥ N vanish on the grid, so h_N is exact there
            let mut prev = 0.0;
            let mut total = 0.0;
            for (j, x) in dyadic_grid(depth).into_iter().enumerate() {
                let hx = h_partial(x, depth);
                if j > 0 {
                    total += (hx - prev).abs();
                }
                prev = hx;
            }
            total
        }
        VnMethod::DerivativeIntegral => {
            let n = 1u64 << (2 * depth);
            let width = 8.0 / n as f64;
            let mut total = 0.0;
            for j in 0..n {
                let mid = (j as f64 + 0.5) / n as f64;
                let slope: i32 = (0..depth)
                    .map(|m| i32::from(rademacher_eval(2 * m, mid)) - i32::from(rademacher_eval(2 * m + 1, mid)))
                    .sum();
                total += (f64::from(slope) * 0.5).abs() * width;
            }
            total
        }
    }
}

/// The planar tilt `f^λ(z) = f(z) + iλz` that turns `|f^λ(b) − f^λ(a)|`
/// into `|Δ_f(a, b)|`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct PlanarTilt {
    pub lambda: f64,
    pub tilted_gap: f64,
    /// `Δ_f(a, b) = re((f(a) − f(b))/(a − b))·|a − b|`
    pub delta: f64,
}

/// `λ = −im((f(b) − f(a))/(b − a))`.
pub fn tilt_planar(a: Complex64, b: Complex64, fa: Complex64, fb: Complex64) -> Result<PlanarTilt> {
    if a == b {
        return Err(Error::domain("tilt needs distinct points"));
    }
    let q = (fb - fa) / (b - a);
    let lambda = -q.im;
    let i_lambda = Complex64::new(0.0, lambda);
    let tilted_gap = ((fb + i_lambda * b) - (fa + i_lambda * a)).norm();
    let delta = ((fa - fb) / (a - b)).re * (a - b).norm();
    Ok(PlanarTilt { lambda, tilted_gap, delta })
}
