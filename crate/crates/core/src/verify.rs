//! Randomized verification suites. Every suite is deterministic given its
//! seed and returns one [`CheckReport`] per property.
//!
//! For counting checks `worst_margin` is minus the number of violations.

use std::fmt;
use std::str::FromStr;

use nalgebra::{DMatrix, Matrix4, Vector4};
use num_complex::Complex64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::matrix::{
    angular_margin, cond_ratio, cone_constant, cone_membership, conf_split, h_delta, project_im_quat, quat_minimizer,
    radial_stretch_differential, reduced4d_membership, reduced_distortion_bound_sq, ConeParams, QuatMatrix,
};
use crate::path::SampledPath;
use crate::phi::PhiSpec;
use crate::planar::{beltrami_report, build_parallel_map, g_eval, rademacher_eval, scale_hits, LacunaryParams};
use crate::report::CheckReport;
use crate::tolerance::le_scaled;
use crate::variation::{delta_modulus, phi_sum_over, sup_variation};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Suite {
    Beltrami,
    Scales,
    Rademacher,
    VariationDp,
    Cone,
    Quaternion,
    Reduced4d,
    ParallelLines,
}

impl Suite {
    pub const ALL: [Suite; 8] = [
        Suite::Beltrami,
        Suite::Scales,
        Suite::Rademacher,
        Suite::VariationDp,
        Suite::Cone,
        Suite::Quaternion,
        Suite::Reduced4d,
        Suite::ParallelLines,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::Beltrami => "beltrami",
            Suite::Scales => "scales",
            Suite::Rademacher => "rademacher",
            Suite::VariationDp => "variation-dp",
            Suite::Cone => "cone",
            Suite::Quaternion => "quaternion",
            Suite::Reduced4d => "reduced4d",
            Suite::ParallelLines => "parallel-lines",
        }
    }

    pub fn default_samples(self) -> usize {
        match self {
            Suite::Scales => 100_000,
            Suite::VariationDp => 200,
            Suite::ParallelLines => 10,
            _ => 10_000,
        }
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.pad(self.name())
    }
}

impl FromStr for Suite {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Suite::ALL.into_iter().find(|x| x.name() == s).ok_or_else(|| Error::domain(format!("unknown suite {s:?}")))
    }
}

pub fn run_suite(suite: Suite, seed: u64, n: Option<usize>) -> Result<Vec<CheckReport>> {
    let n = n.unwrap_or(suite.default_samples()).max(1);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    match suite {
        Suite::Beltrami => beltrami(n, &mut rng),
        Suite::Scales => Ok(scales(n, &mut rng)),
        Suite::Rademacher => Ok(rademacher(n, &mut rng)),
        Suite::VariationDp => variation_dp(n, &mut rng),
        Suite::Cone => cone(n, &mut rng),
        Suite::Quaternion => quaternion(n, &mut rng),
        Suite::Reduced4d => reduced4d(n, &mut rng),
        Suite::ParallelLines => parallel_lines(n, &mut rng),
    }
}

/// Off-axis points in the strip `|im z| ≤ 2`, half with log-uniform heights.
pub fn strip_samples<R: Rng>(n: usize, rng: &mut R) -> Vec<Complex64> {
    (0..n)
        .map(|i| {
            let x = rng.gen_range(-16.0..16.0);
            let y = if i % 2 == 0 {
                rng.gen_range(-2.0..2.0)
            } else {
                let s = if rng.gen_bool(0.5) { 1.0 } else { -1.0 };
                s * 2.0 * 10f64.powf(-rng.gen_range(0.0..7.0))
            };
            Complex64::new(x, y)
        })
        .collect()
}

fn beltrami<R: Rng>(n: usize, rng: &mut R) -> Result<Vec<CheckReport>> {
    let params = LacunaryParams::new(0.25)?;
    let samples = strip_samples(n, rng);
    let r = beltrami_report(&samples, &params);
    Ok(vec![
        CheckReport::new("reduced-beltrami", r.evaluated, r.worst_reduced_margin, r.reduced_violations == 0),
        CheckReport::new("re-fz-band", r.evaluated, r.worst_band_margin, r.band_violations == 0),
        CheckReport::from_margin("single-active-level", r.evaluated, violations(r.multi_level)),
        CheckReport::from_margin("log-derivative", r.evaluated, r.log_constant_bound - r.log_constant_fit),
    ])
}

/// Margin for counting checks.
fn violations(count: usize) -> f64 {
    if count == 0 {
        0.0
    } else {
        -(count as f64)
    }
}

fn scales<R: Rng>(n: usize, rng: &mut R) -> Vec<CheckReport> {
    let mut most = 0usize;
    for _ in 0..n {
        let z = Complex64::new(rng.gen_range(-16.0..16.0), rng.gen_range(-2.5..2.5));
        most = most.max(scale_hits(z, 12).len());
    }
    let mut real_most = 0usize;
    for _ in 0..n {
        real_most = real_most.max(scale_hits(Complex64::new(rng.gen_range(-16.0..16.0), 0.0), 12).len());
    }
    vec![
        CheckReport::from_margin("at-most-one-scale", n, 1.0 - most as f64),
        CheckReport::from_margin("real-axis-no-scale", n, violations(real_most)),
    ]
}

fn rademacher<R: Rng>(n: usize, rng: &mut R) -> Vec<CheckReport> {
    let mut bad = 0usize;
    let mut done = 0usize;
    while done < n {
        let x: f64 = rng.gen_range(-64.0..64.0);
        let Some(grad) = g_eval(Complex64::new(x, 0.0)).gradient else {
            continue;
        };
        let lhs = -Complex64::i() * grad.gx;
        let rhs = 0.5 * (rademacher_eval(0, x / 8.0) - rademacher_eval(1, x / 8.0)) as f64;
        if lhs != Complex64::new(rhs, 0.0) {
            bad += 1;
        }
        done += 1;
    }
    vec![CheckReport::from_margin("trace-derivative-sign-identity", n, violations(bad))]
}

/// Exhaustive search over index sets keeping both endpoints, with the
/// lexicographically smallest set among exact ties.
pub fn brute_force_sup(phi: PhiSpec, path: &SampledPath) -> (f64, Vec<usize>) {
    let n = path.len();
    let inner = n.saturating_sub(2);
    let mut best = (f64::NEG_INFINITY, Vec::new());
    for mask in 0u64..(1u64 << inner) {
        let mut idx = vec![0];
        idx.extend((0..inner).filter(|b| mask >> b & 1 == 1).map(|b| b + 1));
        idx.push(n - 1);
        let v = phi_sum_over(phi, path, &idx);
        if v > best.0 || (v == best.0 && idx < best.1) {
            best = (v, idx);
        }
    }
    best
}

/// Integer-valued scalar or planar path with `2..=12` samples; small ranges
/// make exact ties common.
pub fn random_integer_path<R: Rng>(rng: &mut R) -> SampledPath {
    let len = rng.gen_range(2..=12);
    let dim = rng.gen_range(1..=2);
    let coords = (0..len * dim).map(|_| rng.gen_range(-3..=3) as f64).collect();
    let params = (0..len).map(|i| i as f64 / (len - 1) as f64).collect();
    SampledPath::new(params, dim, coords).expect("valid path")
}

fn random_phi<R: Rng>(rng: &mut R) -> PhiSpec {
    match rng.gen_range(0..3) {
        0 => PhiSpec::Power(1.0),
        1 => PhiSpec::Power(rng.gen_range(1.0..4.0)),
        _ => PhiSpec::LogDamped(rng.gen_range(0.0..3.0)),
    }
}

fn variation_dp<R: Rng>(n: usize, rng: &mut R) -> Result<Vec<CheckReport>> {
    let (mut value_bad, mut argmax_bad, mut collapse_bad) = (0, 0, 0);
    for _ in 0..n {
        let path = random_integer_path(rng);
        let phi = random_phi(rng);
        let r = sup_variation(phi, &path)?;
        let (v, idx) = brute_force_sup(phi, &path);
        value_bad += usize::from(r.dp_supremum != v);
        argmax_bad += usize::from(r.argmax_indices != idx);
        let r1 = sup_variation(PhiSpec::Power(1.0), &path)?;
        // collinear steps can round differently from the direct jump
        collapse_bad += usize::from(!le_scaled(r1.dp_supremum, r1.consecutive_sum));
    }
    Ok(vec![
        CheckReport::from_margin("dp-equals-brute-force", n, violations(value_bad)),
        CheckReport::from_margin("dp-lexicographic-argmax", n, violations(argmax_bad)),
        CheckReport::from_margin("power1-collapse", n, violations(collapse_bad)),
    ])
}

fn random_dmatrix<R: Rng>(n: usize, rng: &mut R) -> DMatrix<f64> {
    DMatrix::from_fn(n, n, |_, _| rng.gen_range(-1.0..1.0))
}

/// `s·(I + τG)` with uniform `G`: members of some cone are common.
fn near_identity<R: Rng>(n: usize, rng: &mut R) -> DMatrix<f64> {
    let s = rng.gen_range(0.1..3.0);
    let tau = rng.gen_range(0.0..1.2);
    (DMatrix::identity(n, n) + random_dmatrix(n, rng) * tau) * s
}

fn cone<R: Rng>(n: usize, rng: &mut R) -> Result<Vec<CheckReport>> {
    // closed form against angular brute force
    let mut hard = 0usize;
    for _ in 0..n {
        let a = near_identity(2, rng);
        let delta = rng.gen_range(0.01..1.0);
        let m2 = nalgebra::Matrix2::new(a[(0, 0)], a[(0, 1)], a[(1, 0)], a[(1, 1)]);
        let closed = conf_split(&m2).cone_margin(delta) >= 0.0;
        let (ang, _) = angular_margin(&m2, delta, 2000);
        if closed != (ang >= 0.0) && ang.abs() > 1e-9 {
            hard += 1;
        }
    }
    let mut out = vec![CheckReport::from_margin("closed-form-vs-angular", n, violations(hard))];

    // distortion bound on rejection-sampled members
    for dim in 2..=4 {
        let target = if dim == 2 { n } else { (n / 20).max(20) };
        let (mut accepted, mut attempts) = (0usize, 0usize);
        let mut worst = f64::INFINITY;
        while accepted < target && attempts < 50 * target {
            attempts += 1;
            let a = near_identity(dim, rng);
            let delta = rng.gen_range(0.05..0.95);
            let m = cone_membership(&a, &ConeParams::new(dim, delta)?)?;
            if !m.member || m.degenerate || m.margin <= 1e-9 {
                continue;
            }
            accepted += 1;
            let h = h_delta(delta)?;
            worst = worst.min((h + 1e-9 - cond_ratio(&a)?) / h);
        }
        let pass = worst >= 0.0 && accepted == target;
        out.push(CheckReport::new(format!("cond-below-h-delta-n{dim}"), accepted, worst, pass));
    }
    Ok(out)
}

fn random_quat<R: Rng>(rng: &mut R) -> QuatMatrix {
    QuatMatrix::new(
        rng.gen_range(-2.0..2.0),
        rng.gen_range(-2.0..2.0),
        rng.gen_range(-2.0..2.0),
        rng.gen_range(-2.0..2.0),
    )
}

fn random_v4<R: Rng>(rng: &mut R) -> Vector4<f64> {
    Vector4::from_fn(|_, _| rng.gen_range(-2.0..2.0))
}

fn quaternion<R: Rng>(n: usize, rng: &mut R) -> Result<Vec<CheckReport>> {
    let (mut gram, mut iso, mut hom) = (f64::INFINITY, f64::INFINITY, f64::INFINITY);
    for _ in 0..n {
        let q = random_quat(rng);
        let m = q.matrix();
        let n2 = q.norm_squared();
        let err = (m.transpose() * m - Matrix4::identity() * n2).abs().max();
        gram = gram.min(1e-12 * n2.max(1.0) - err);
        let v = random_v4(rng);
        let err = ((m * v).norm() - q.norm() * v.norm()).abs();
        iso = iso.min(1e-12 * (q.norm() * v.norm()).max(1.0) - err);
    }
    for _ in 0..(n / 10).max(1) {
        let (p, q) = (random_quat(rng), random_quat(rng));
        let err = (p.matrix() * q.matrix() - p.mul(&q).matrix()).abs().max();
        hom = hom.min(1e-12 * (p.norm() * q.norm()).max(1.0) - err);
    }
    let ijk = QuatMatrix::I.matrix() * QuatMatrix::J.matrix() - QuatMatrix::K.matrix();
    let ijk_margin = 1e-12 - ijk.abs().max();

    let (mut identity, mut tilt, mut norm) = (f64::INFINITY, f64::INFINITY, f64::INFINITY);
    let instances = (n / 100).max(10);
    for _ in 0..instances {
        let (a, b, fa, fb) = (random_v4(rng), random_v4(rng), random_v4(rng), random_v4(rng));
        let m = quat_minimizer(&a, &b, &fa, &fb)?;
        let dm = delta_modulus(a.as_slice(), b.as_slice(), fa.as_slice(), fb.as_slice())?;
        let scale = (fa - fb).norm().max(1.0);
        identity = identity
            .min(1e-12 * scale - (m.delta_val - dm).abs())
            .min(1e-12 * scale - (m.tilted_gap - m.delta_val.abs()).abs());
        norm = norm.min((fa - fb).norm() / (a - b).norm() * (1.0 + 1e-12) - m.q.norm());
        for _ in 0..100 {
            let q = random_quat(rng).imaginary();
            let gap = ((fa + q.apply(&a)) - (fb + q.apply(&b))).norm();
            tilt = tilt.min(gap - m.delta_val + 1e-9);
        }
    }
    Ok(vec![
        CheckReport::from_margin("gram-identity", n, gram),
        CheckReport::from_margin("isometry", n, iso),
        CheckReport::from_margin("ring-homomorphism", (n / 10).max(1), hom),
        CheckReport::from_margin("i-times-j-is-k", 1, ijk_margin),
        CheckReport::from_margin("minimizer-equals-delta-modulus", instances, identity),
        CheckReport::from_margin("minimizer-beats-random-tilts", instances * 100, tilt),
        CheckReport::from_margin("tilt-norm-bound", instances, norm),
    ])
}

/// Orthogonal factor of the QR decomposition of a uniform random matrix.
fn random_orthogonal<R: Rng>(n: usize, rng: &mut R) -> DMatrix<f64> {
    random_dmatrix(n, rng).qr().q()
}

/// Symmetric `UΛUᵀ` with spectrum in `[λ, κλ]` (both ends attained) and the
/// exact cone constant `2√κ/(1+κ)`.
pub fn spd_with_cone_constant<R: Rng>(n: usize, kappa: f64, rng: &mut R) -> (DMatrix<f64>, f64) {
    let lam = rng.gen_range(0.2..3.0);
    let mut diag: Vec<f64> = (0..n).map(|_| lam * rng.gen_range(1.0..kappa.max(1.0 + 1e-12))).collect();
    diag[0] = lam;
    diag[n - 1] = lam * kappa;
    let u = random_orthogonal(n, rng);
    let b = &u * DMatrix::from_diagonal(&nalgebra::DVector::from_vec(diag)) * u.transpose();
    (b, 2.0 * kappa.sqrt() / (1.0 + kappa))
}

fn to_m4(a: &DMatrix<f64>) -> Matrix4<f64> {
    Matrix4::from_fn(|i, j| a[(i, j)])
}

/// Rotation by `theta` in the plane of coordinates `p < q`.
fn plane_rotation(n: usize, p: usize, q: usize, theta: f64) -> DMatrix<f64> {
    let mut r = DMatrix::identity(n, n);
    let (c, s) = (theta.cos(), theta.sin());
    r[(p, p)] = c;
    r[(q, q)] = c;
    r[(p, q)] = -s;
    r[(q, p)] = s;
    r
}

fn reduced4d<R: Rng>(n: usize, rng: &mut R) -> Result<Vec<CheckReport>> {
    let mut worst = f64::INFINITY;
    for _ in 0..n {
        let kappa = rng.gen_range(1.0..20.0);
        let (b, delta) = spd_with_cone_constant(4, kappa, rng);
        let q = random_quat(rng).imaginary();
        let a = &b + DMatrix::from_column_slice(4, 4, q.matrix().as_slice());
        let bound = reduced_distortion_bound_sq(delta)?;
        let c = cond_ratio(&a)?;
        worst = worst.min((bound - c * c) / bound);
    }

    let mut chain = f64::INFINITY;
    for _ in 0..n {
        let a = to_m4(&(random_dmatrix(4, rng) * rng.gen_range(0.1..5.0)));
        let b = a - project_im_quat(&a).matrix();
        let (af, bf) = (a.norm(), b.norm());
        let dyn_a = DMatrix::from_column_slice(4, 4, a.as_slice());
        let dyn_b = DMatrix::from_column_slice(4, 4, b.as_slice());
        let (a2, b2) = (dyn_a.svd(false, false).singular_values.max(), dyn_b.svd(false, false).singular_values.max());
        let tol = 1e-12 * af.max(1.0);
        chain = chain.min(bf - b2 + tol).min(af - bf + tol).min(2.0 * a2 - af + tol);
    }

    let samples = (n / 50).max(20);
    let mut mono = f64::INFINITY;
    for _ in 0..samples {
        let alpha = rng.gen_range(0.5..3.0);
        let x: Vec<f64> = (0..4).map(|_| rng.gen_range(-2.0..2.0)).collect();
        let p = rng.gen_range(0..3);
        let q = rng.gen_range(p + 1..4);
        let rot = plane_rotation(4, p, q, rng.gen_range(-0.3..0.3));
        let d = rot * radial_stretch_differential(alpha, &x)?;
        let (delta, _) = cone_constant(&d)?;
        if delta <= 0.0 {
            mono = mono.min(delta);
            continue;
        }
        let target = delta / (2.0 * h_delta(delta.min(1.0))?);
        let r = reduced4d_membership(&to_m4(&d), target)?;
        mono = mono.min(if r.member { r.margin.max(0.0) } else { r.margin.min(-f64::MIN_POSITIVE) });
    }
    Ok(vec![
        CheckReport::from_margin("reduced-distortion-bound", n, worst),
        CheckReport::from_margin("projection-norm-chain", n, chain),
        CheckReport::from_margin("monotone-differential-is-reduced", samples, mono),
    ])
}

fn parallel_lines<R: Rng>(n: usize, rng: &mut R) -> Result<Vec<CheckReport>> {
    let params = LacunaryParams::new(0.25)?;
    let mut strict = f64::INFINITY;
    let mut lip = f64::INFINITY;
    let mut lines = 0usize;
    for _ in 0..n {
        let count = rng.gen_range(2..=10);
        let mut heights: Vec<f64> = Vec::with_capacity(count);
        while heights.len() < count {
            let b = rng.gen_range(-5.0..5.0);
            if heights.iter().all(|&h: &f64| (h - b).abs() > 1e-6) {
                heights.push(b);
            }
        }
        let s = build_parallel_map(&heights, count, params)?;
        for m in s.margins() {
            strict = strict.min(m.height).min(m.gap);
        }
        for j in 0..count {
            let r = s.remainder_lipschitz(j, 100, 16.0, 1e-3, rng);
            lines += 1;
            let m = (r.bound - r.empirical) / r.bound.max(1e-300);
            lip = lip.min(if r.holds { m.max(0.0) } else { m.min(-f64::MIN_POSITIVE) });
        }
    }
    Ok(vec![
        CheckReport::new("coefficient-inequalities-strict", n, strict, strict > 0.0),
        CheckReport::from_margin("remainder-lipschitz", lines, lip),
    ])
}
