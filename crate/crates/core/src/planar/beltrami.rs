//! Exact derivatives of the truncated series and the reduced Beltrami check.
//!
//! Away from the real axis only the levels with `|im 4ᵐz| ≤ 2` see a nonzero
//! `g`, so `f_z = 1 + ε Σ g_z(4ᵐz)` and `f_z̄ = ε Σ g_z̄(4ᵐz)` are finite sums of
//! per-cell constants.

use num_complex::Complex64;
use serde::Serialize;

use super::lacunary::LacunaryParams;
use super::profile::{g_eval, Cell};
use crate::tolerance::INEQ_TOL;

/// Offset applied to samples that land on a cell edge at some level.
pub const BOUNDARY_NUDGE: f64 = 1e-9;

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct CellDerivative {
    pub z: Complex64,
    /// The level whose cell has `re g_z ≠ 0` or `g_z̄ ≠ 0`, if any.
    pub level: Option<u32>,
    /// All levels with such a cell; the unique-scale property keeps this at most one long.
    pub active_levels: Vec<u32>,
    pub cells: Vec<Cell>,
    pub g_z: Complex64,
    pub g_zbar: Complex64,
    pub f_z: Complex64,
    pub f_zbar: Complex64,
}

impl CellDerivative {
    /// `|Df| = |f_z| + |f_z̄|`.
    pub fn op_norm(&self) -> f64 {
        self.f_z.norm() + self.f_zbar.norm()
    }
}

/// Exact derivative at `z`, or `None` when some level lands on a cell
/// boundary or `z` is real.
pub fn derivative_at(z: Complex64, params: &LacunaryParams) -> Option<CellDerivative> {
    if z.im == 0.0 || !z.im.is_finite() || !z.re.is_finite() {
        return None;
    }
    let eps = params.eps();
    let mut f_z = Complex64::new(1.0, 0.0);
    let mut f_zbar = Complex64::new(0.0, 0.0);
    let mut active_levels = Vec::new();
    let mut cells = Vec::new();
    let (mut g_z_active, mut g_zbar_active) = (Complex64::new(0.0, 0.0), Complex64::new(0.0, 0.0));
    let mut w = z;
    let mut m = 0u32;
    while w.im.abs() <= 2.0 {
        let e = g_eval(w);
        let grad = e.gradient?;
        let (gz, gzb) = (grad.dz(), grad.dzbar());
        f_z += eps * gz;
        f_zbar += eps * gzb;
        if gz.re != 0.0 || gzb != Complex64::new(0.0, 0.0) {
            active_levels.push(m);
            g_z_active = gz;
            g_zbar_active = gzb;
        }
        cells.push(e.cell);
        w *= 4.0;
        m += 1;
    }
    Some(CellDerivative {
        z,
        level: active_levels.first().copied(),
        active_levels,
        cells,
        g_z: g_z_active,
        g_zbar: g_zbar_active,
        f_z,
        f_zbar,
    })
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct BeltramiReport {
    pub n_samples: usize,
    pub evaluated: usize,
    pub skipped_real: usize,
    pub perturbed: usize,
    pub k: f64,
    pub eps_l: f64,
    /// `min (k·re f_z − |f_z̄|)`
    pub worst_reduced_margin: f64,
    /// `min distance of re f_z inside [1 − εL, 1 + εL]`
    pub worst_band_margin: f64,
    pub reduced_violations: usize,
    pub band_violations: usize,
    /// Samples where more than one level is active.
    pub multi_level: usize,
    /// `max |Df(z)| / log(e + 1/|im z|)` over the samples.
    pub log_constant_fit: f64,
    pub log_constant_bound: f64,
    pub pass: bool,
}

/// Checks `|f_z̄| ≤ k·re f_z`, `re f_z ∈ [1 − εL, 1 + εL]`, the single active
/// level, and `|Df| ≤ C log(e + 1/|im z|)` at every sample.
///
/// Real samples are skipped. Samples on a cell edge at some level are nudged
/// by [`BOUNDARY_NUDGE`] (diagonally, up to a few times) and counted.
pub fn beltrami_report(samples: &[Complex64], params: &LacunaryParams) -> BeltramiReport {
    let k = params.k();
    let eps_l = params.eps() * params.lipschitz();
    let c_bound = params.log_derivative_constant();
    let mut rep = BeltramiReport {
        n_samples: samples.len(),
        evaluated: 0,
        skipped_real: 0,
        perturbed: 0,
        k,
        eps_l,
        worst_reduced_margin: f64::INFINITY,
        worst_band_margin: f64::INFINITY,
        reduced_violations: 0,
        band_violations: 0,
        multi_level: 0,
        log_constant_fit: 0.0,
        log_constant_bound: c_bound,
        pass: false,
    };
    for &z0 in samples {
        if z0.im == 0.0 {
            rep.skipped_real += 1;
            continue;
        }
        let mut d = derivative_at(z0, params);
        let mut attempt = 1;
        while d.is_none() && attempt <= 4 {
            let nudge = BOUNDARY_NUDGE * attempt as f64;
            d = derivative_at(z0 + Complex64::new(nudge, 0.7 * nudge), params);
            attempt += 1;
        }
        let Some(d) = d else {
            rep.skipped_real += 1;
            continue;
        };
        if attempt > 1 {
            rep.perturbed += 1;
        }
        rep.evaluated += 1;

        let re = d.f_z.re;
        let reduced = k * re - d.f_zbar.norm();
        rep.worst_reduced_margin = rep.worst_reduced_margin.min(reduced);
        if reduced < -INEQ_TOL {
            rep.reduced_violations += 1;
        }
        let band = (re - (1.0 - eps_l)).min((1.0 + eps_l) - re);
        rep.worst_band_margin = rep.worst_band_margin.min(band);
        if band < -INEQ_TOL {
            rep.band_violations += 1;
        }
        if d.active_levels.len() > 1 {
            rep.multi_level += 1;
        }
        let ratio = d.op_norm() / (std::f64::consts::E + 1.0 / d.z.im.abs()).ln();
        rep.log_constant_fit = rep.log_constant_fit.max(ratio);
    }
    rep.pass = rep.evaluated > 0
        && rep.reduced_violations == 0
        && rep.band_violations == 0
        && rep.multi_level == 0
        && rep.log_constant_fit <= c_bound * (1.0 + INEQ_TOL);
    rep
}
