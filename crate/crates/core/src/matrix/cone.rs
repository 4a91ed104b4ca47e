//! The δ-cones `M_n(δ) = {A : ⟨Av, v⟩ ≥ δ|Av||v| for all v}` and the
//! distortion bounds that follow from membership.

use nalgebra::{DMatrix, Matrix2, Matrix4};
use num_complex::Complex64;
use serde::Serialize;

use super::quaternion::{project_im_quat, QuatMatrix};
use crate::error::{Error, Result};
use crate::tolerance::INEQ_TOL;

/// Grid size for the sphere search in dimensions 3 and 4.
pub const SPHERE_GRID: usize = 10_000;
/// Projected-gradient steps applied to the best grid candidates.
pub const REFINE_STEPS: usize = 50;
const REFINE_CANDIDATES: usize = 8;

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct ConeParams {
    pub n: usize,
    pub delta: f64,
}

impl ConeParams {
    pub fn new(n: usize, delta: f64) -> Result<Self> {
        if !(2..=4).contains(&n) {
            return Err(Error::domain(format!("cone dimension must be 2, 3 or 4, got {n}")));
        }
        if !(delta > 0.0 && delta <= 1.0) {
            return Err(Error::domain(format!("delta must lie in (0, 1], got {delta}")));
        }
        Ok(ConeParams { n, delta })
    }
}

/// `A` acting as `z ↦ α⁺z + α⁻z̄`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct ConformalSplit {
    pub alpha_plus: Complex64,
    pub alpha_minus: Complex64,
}

impl ConformalSplit {
    pub fn apply(&self, z: Complex64) -> Complex64 {
        self.alpha_plus * z + self.alpha_minus * z.conj()
    }

    /// Slack in `|α⁻| + δ|im α⁺| ≤ √(1−δ²)·re α⁺`; nonnegative iff `A ∈ M₂(δ)`.
    pub fn cone_margin(&self, delta: f64) -> f64 {
        (1.0 - delta * delta).max(0.0).sqrt() * self.alpha_plus.re
            - self.alpha_minus.norm()
            - delta * self.alpha_plus.im.abs()
    }
}

pub fn conf_split(a: &Matrix2<f64>) -> ConformalSplit {
    let (a11, a12, a21, a22) = (a[(0, 0)], a[(0, 1)], a[(1, 0)], a[(1, 1)]);
    ConformalSplit {
        alpha_plus: Complex64::new((a11 + a22) / 2.0, (a21 - a12) / 2.0),
        alpha_minus: Complex64::new((a11 - a22) / 2.0, (a21 + a12) / 2.0),
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ConeMembership {
    pub member: bool,
    /// n = 2: closed-form slack; n ≥ 3: `min_{|v|=1} ⟨Av,v⟩ − δ|Av|` found by search.
    pub margin: f64,
    /// Unit vector minimizing `⟨Av,v⟩ − δ|Av|`.
    pub witness: Vec<f64>,
    /// Set for the zero matrix, which belongs to every cone vacuously.
    pub degenerate: bool,
}

/// Decides `A ∈ M_n(δ)`.
///
/// For n = 2 the decision uses the conformal split; the witness comes from an
/// angular search. For n = 3, 4 the margin is the minimum over a
/// low-discrepancy sphere grid of [`SPHERE_GRID`] points refined by
/// [`REFINE_STEPS`] projected-gradient steps.
pub fn cone_membership(a: &DMatrix<f64>, cone: &ConeParams) -> Result<ConeMembership> {
    if a.nrows() != cone.n || a.ncols() != cone.n {
        return Err(Error::domain(format!(
            "matrix is {}x{} but the cone is in dimension {}",
            a.nrows(),
            a.ncols(),
            cone.n
        )));
    }
    let scale = a.abs().max();
    let dense = Dense::from_dmatrix(a);
    let delta = cone.delta;
    let objective = |v: &[f64; 4]| dense.cone_objective(v, delta);
    let (search_min, witness) = sphere_minimize(cone.n, SPHERE_GRID, &objective);
    if scale == 0.0 {
        return Ok(ConeMembership { member: true, margin: 0.0, witness: witness[..cone.n].to_vec(), degenerate: true });
    }
    let margin = if cone.n == 2 {
        let m2 = Matrix2::new(a[(0, 0)], a[(0, 1)], a[(1, 0)], a[(1, 1)]);
        conf_split(&m2).cone_margin(delta)
    } else {
        search_min
    };
    Ok(ConeMembership {
        member: margin >= -INEQ_TOL * scale,
        margin,
        witness: witness[..cone.n].to_vec(),
        degenerate: false,
    })
}

/// `min_{|v|=1} ⟨Av, v⟩ / |Av|`: the largest δ with `A ∈ M_n(δ)` when it is
/// positive. Directions with `Av = 0` are ignored.
pub fn cone_constant(a: &DMatrix<f64>) -> Result<(f64, Vec<f64>)> {
    let n = a.nrows();
    if n != a.ncols() || !(2..=4).contains(&n) {
        return Err(Error::domain("cone_constant needs a square matrix of size 2..4"));
    }
    let dense = Dense::from_dmatrix(a);
    let (v, w) = sphere_minimize(n, SPHERE_GRID, &|v: &[f64; 4]| dense.cone_ratio(v));
    Ok((v, w[..n].to_vec()))
}

/// Minimum of `⟨Av,v⟩ − δ|Av|` over `n_angles` directions in `[0, π)`,
/// refined by golden-section search around the best angle.
pub fn angular_margin(a: &Matrix2<f64>, delta: f64, n_angles: usize) -> (f64, f64) {
    let f = |t: f64| {
        let (c, s) = (t.cos(), t.sin());
        let av = (a[(0, 0)] * c + a[(0, 1)] * s, a[(1, 0)] * c + a[(1, 1)] * s);
        av.0 * c + av.1 * s - delta * (av.0 * av.0 + av.1 * av.1).sqrt()
    };
    let h = std::f64::consts::PI / n_angles as f64;
    let (mut best_t, mut best) = (0.0, f(0.0));
    for k in 1..n_angles {
        let t = k as f64 * h;
        let v = f(t);
        if v < best {
            best = v;
            best_t = t;
        }
    }
    let (mut lo, mut hi) = (best_t - h, best_t + h);
    let g = (5f64.sqrt() - 1.0) / 2.0;
    for _ in 0..80 {
        let (x1, x2) = (hi - g * (hi - lo), lo + g * (hi - lo));
        if f(x1) < f(x2) {
            hi = x2;
        } else {
            lo = x1;
        }
    }
    let t = 0.5 * (lo + hi);
    let v = f(t);
    if v < best {
        (v, t)
    } else {
        (best, best_t)
    }
}

/// `H(δ) = (1 + √(1−δ²)) / (1 − √(1−δ²))`; `∞` at δ = 0 and 1 at δ = 1.
pub fn h_delta(delta: f64) -> Result<f64> {
    if !(0.0..=1.0).contains(&delta) {
        return Err(Error::domain(format!("delta must lie in [0, 1], got {delta}")));
    }
    if delta == 0.0 {
        return Ok(f64::INFINITY);
    }
    let s = (1.0 - delta * delta).sqrt();
    Ok((1.0 + s) / (1.0 - s))
}

/// Bound on `(‖A‖‖A⁻¹‖)²` for `A = B + Q` with `B ∈ M₄(δ)` and `Q` an
/// imaginary quaternion: `2(1 + √(1−δ²))² / (1 − √(1−δ²))³`.
pub fn reduced_distortion_bound_sq(delta: f64) -> Result<f64> {
    if !(delta > 0.0 && delta <= 1.0) {
        return Err(Error::domain(format!("delta must lie in (0, 1], got {delta}")));
    }
    let s = (1.0 - delta * delta).sqrt();
    Ok(2.0 * (1.0 + s).powi(2) / (1.0 - s).powi(3))
}

/// `‖A‖·‖A⁻¹‖` from the singular values.
pub fn cond_ratio(a: &DMatrix<f64>) -> Result<f64> {
    if a.nrows() != a.ncols() || a.nrows() == 0 {
        return Err(Error::domain("cond_ratio needs a nonempty square matrix"));
    }
    let sv = a.clone().svd(false, false).singular_values;
    let max = sv.max();
    let min = sv.min();
    if !(min > max * 1e-15) {
        return Err(Error::domain("matrix is singular"));
    }
    Ok(max / min)
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Reduced4d {
    pub member: bool,
    pub margin: f64,
    pub degenerate: bool,
    /// `im ℍ(A)`
    pub imaginary_part: QuatMatrix,
}

/// Whether `A − im ℍ(A) ∈ M₄(δ)`. A zero remainder (A an imaginary quaternion)
/// is reported as degenerate and not a member.
pub fn reduced4d_membership(a: &Matrix4<f64>, delta: f64) -> Result<Reduced4d> {
    let q = project_im_quat(a);
    let b = a - q.matrix();
    let cone = ConeParams::new(4, delta)?;
    let bd = DMatrix::from_column_slice(4, 4, b.as_slice());
    let m = cone_membership(&bd, &cone)?;
    Ok(Reduced4d { member: m.member && !m.degenerate, margin: m.margin, degenerate: m.degenerate, imaginary_part: q })
}

/// Row-major copy padded to 4×4, for the hot loops of the sphere search.
struct Dense {
    n: usize,
    a: [[f64; 4]; 4],
}

impl Dense {
    fn from_dmatrix(m: &DMatrix<f64>) -> Self {
        let n = m.nrows();
        let mut a = [[0.0; 4]; 4];
        for (i, row) in a.iter_mut().enumerate().take(n) {
            for (j, x) in row.iter_mut().enumerate().take(n) {
                *x = m[(i, j)];
            }
        }
        Dense { n, a }
    }

    fn mul(&self, v: &[f64; 4]) -> [f64; 4] {
        let mut out = [0.0; 4];
        for (i, o) in out.iter_mut().enumerate().take(self.n) {
            *o = (0..self.n).map(|j| self.a[i][j] * v[j]).sum();
        }
        out
    }

    fn mul_t(&self, v: &[f64; 4]) -> [f64; 4] {
        let mut out = [0.0; 4];
        for (j, o) in out.iter_mut().enumerate().take(self.n) {
            *o = (0..self.n).map(|i| self.a[i][j] * v[i]).sum();
        }
        out
    }

    /// `⟨Av,v⟩ − δ|Av|` and its Euclidean gradient.
    fn cone_objective(&self, v: &[f64; 4], delta: f64) -> (f64, [f64; 4]) {
        let av = self.mul(v);
        let atv = self.mul_t(v);
        let quad = dot(&av, v);
        let norm = dot(&av, &av).sqrt();
        let mut grad = [0.0; 4];
        let ataav = self.mul_t(&av);
        for k in 0..self.n {
            grad[k] = av[k] + atv[k];
            if norm > 0.0 {
                grad[k] -= delta * ataav[k] / norm;
            }
        }
        (quad - delta * norm, grad)
    }

    /// `⟨Av,v⟩/|Av|` and its gradient; `+∞` where `Av = 0`.
    fn cone_ratio(&self, v: &[f64; 4]) -> (f64, [f64; 4]) {
        let av = self.mul(v);
        let norm = dot(&av, &av).sqrt();
        if norm == 0.0 {
            return (f64::INFINITY, [0.0; 4]);
        }
        let atv = self.mul_t(v);
        let ataav = self.mul_t(&av);
        let quad = dot(&av, v);
        let mut grad = [0.0; 4];
        for k in 0..self.n {
            grad[k] = (av[k] + atv[k]) / norm - quad * ataav[k] / (norm * norm * norm);
        }
        (quad / norm, grad)
    }
}

fn dot(a: &[f64; 4], b: &[f64; 4]) -> f64 {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

fn normalize(v: &mut [f64; 4]) {
    let n = dot(v, v).sqrt();
    if n > 0.0 {
        v.iter_mut().for_each(|x| *x /= n);
    }
}

/// Deterministic low-discrepancy points on the unit sphere `S^{n−1}`.
pub fn sphere_grid(n: usize, count: usize) -> Vec<[f64; 4]> {
    use std::f64::consts::PI;
    (0..count)
        .map(|k| {
            let mut v = [0.0; 4];
            match n {
                2 => {
                    // v and −v give the same objective, so half a turn suffices
                    let t = PI * k as f64 / count as f64;
                    v[0] = t.cos();
                    v[1] = t.sin();
                }
                3 => {
                    let z = 1.0 - (2 * k + 1) as f64 / count as f64;
                    let r = (1.0 - z * z).sqrt();
                    let phi = k as f64 * PI * (3.0 - 5f64.sqrt());
                    v[0] = r * phi.cos();
                    v[1] = r * phi.sin();
                    v[2] = z;
                }
                _ => {
                    // Halton(2,3,5) pushed through the uniform map onto S³
                    let (u1, u2, u3) = (halton(k + 1, 2), halton(k + 1, 3), halton(k + 1, 5));
                    let (a, b) = ((1.0 - u1).sqrt(), u1.sqrt());
                    v = [
                        a * (2.0 * PI * u2).sin(),
                        a * (2.0 * PI * u2).cos(),
                        b * (2.0 * PI * u3).sin(),
                        b * (2.0 * PI * u3).cos(),
                    ];
                }
            }
            v
        })
        .collect()
}

fn halton(mut i: usize, base: usize) -> f64 {
    let mut f = 1.0;
    let mut r = 0.0;
    while i > 0 {
        f /= base as f64;
        r += f * (i % base) as f64;
        i /= base;
    }
    r
}

/// Grid search followed by projected gradient descent with backtracking on
/// the best few grid points.
fn sphere_minimize<F>(n: usize, grid: usize, f: &F) -> (f64, [f64; 4])
where
    F: Fn(&[f64; 4]) -> (f64, [f64; 4]),
{
    let pts = sphere_grid(n, grid);
    let mut scored: Vec<(f64, usize)> = pts.iter().enumerate().map(|(i, v)| (f(v).0, i)).collect();
    scored.sort_by(|a, b| a.0.total_cmp(&b.0).then(a.1.cmp(&b.1)));

    let mut best_val = scored[0].0;
    let mut best_v = pts[scored[0].1];
    for &(start_val, idx) in scored.iter().take(REFINE_CANDIDATES) {
        let mut v = pts[idx];
        let mut val = start_val;
        let mut step = 0.5;
        for _ in 0..REFINE_STEPS {
            let (_, g) = f(&v);
            let radial = dot(&g, &v);
            let mut pg = [0.0; 4];
            for k in 0..n {
                pg[k] = g[k] - radial * v[k];
            }
            let gnorm = dot(&pg, &pg).sqrt();
            if !(gnorm > 1e-15) {
                break;
            }
            let mut improved = false;
            for _ in 0..40 {
                let mut cand = v;
                for k in 0..n {
                    cand[k] -= step * pg[k] / gnorm;
                }
                normalize(&mut cand);
                let cv = f(&cand).0;
                if cv < val {
                    v = cand;
                    val = cv;
                    improved = true;
                    step *= 2.0;
                    break;
                }
                step *= 0.5;
            }
            if !improved {
                break;
            }
        }
        if val < best_val {
            best_val = val;
            best_v = v;
        }
    }
    (best_val, best_v)
}
