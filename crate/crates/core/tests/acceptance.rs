//! Acceptance gate: one line per criterion, nonzero exit if any fails.
//! Reference values come from closed forms or brute force written here,
//! independent of the library code paths they check.

use std::process::{Command, ExitCode};
use std::time::Instant;

use nalgebra::{DMatrix, Matrix2, Matrix4, Vector4};
use num_complex::Complex64;
use qcvar::cli::{curve_path, to_json};
use qcvar::matrix::{
    cond_ratio, cone_membership, conf_split, h_delta, quat_minimizer, reduced_distortion_bound_sq, ConeParams,
    QuatMatrix,
};
use qcvar::planar::{
    beltrami_report, build_parallel_map, derivative_at, dyadic_grid, g_eval, h_eval, scale_hits, vn, vn_table,
    LacunaryParams, VnMethod,
};
use qcvar::variation::{delta_modulus, growth_bound_report, jensen_floor, union_bound_report};
use qcvar::verify::spd_with_cone_constant;
use qcvar::{sup_variation, PhiSpec, QuasisymmetryModulus, SampledPath};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

struct Outcome {
    pass: bool,
    detail: String,
}

fn outcome(pass: bool, detail: impl Into<String>) -> Outcome {
    Outcome { pass, detail: detail.into() }
}

/// `V_N = 8N·C(2N, N)/4ᴺ`, the expected absolute value of a sum of `2N`
/// signs halved, scaled to the interval `[0, 8]`.
fn vn_closed_form(n: u64) -> f64 {
    let mut binom: u128 = 1;
    for k in 0..n as u128 {
        binom = binom * (2 * n as u128 - k) / (k + 1);
    }
    (8 * n as u128 * binom) as f64 / 4f64.powi(n as i32)
}

fn c1_exact_dyadic() -> Outcome {
    let t = Instant::now();
    let hs = [h_eval(2.0), h_eval(3.0), h_eval(4.0)];
    let a = vn_table(2, VnMethod::PartitionSum).unwrap();
    let b = vn_table(2, VnMethod::DerivativeIntegral).unwrap();
    let el = t.elapsed().as_secs_f64();
    let pass = hs == [0.0, 1.5, 2.0] && a == vec![(1, 4.0), (2, 6.0)] && b == a && el < 1.0;
    outcome(pass, format!("h(2,3,4) = {hs:?}, V1,V2 = {:?}/{:?}, {el:.3}s", a, b))
}

fn c2_unbounded_variation() -> Outcome {
    let t = Instant::now();
    let a: Vec<f64> = (1..=10).map(|n| vn(n, VnMethod::DerivativeIntegral)).collect();
    let el = t.elapsed().as_secs_f64();
    let b: Vec<f64> = (1..=10).map(|n| vn(n, VnMethod::PartitionSum)).collect();
    let oracle: Vec<f64> = (1..=10).map(vn_closed_form).collect();
    let nondecreasing = a.windows(2).all(|w| w[1] >= w[0]);
    let ratios: Vec<f64> = a.iter().enumerate().map(|(i, v)| v / ((i + 1) as f64).sqrt()).collect();
    // window frozen from the closed form: 4.0 at N = 1 up to 4.4575 at N = 10
    let in_window = ratios.iter().all(|&r| (4.0..=4.46).contains(&r) && r <= 4.0 * 2f64.sqrt());
    let pass = nondecreasing && a[9] >= 2.0 * a[1] && in_window && a == oracle && b == oracle && el < 30.0;
    outcome(
        pass,
        format!(
            "V10 = {} (oracle {}), V10/V2 = {:.4}, ratio range [{:.5}, {:.5}], {el:.2}s",
            a[9],
            oracle[9],
            a[9] / a[1],
            ratios[0],
            ratios[9]
        ),
    )
}

fn c3_reduced_beltrami() -> Outcome {
    let params = LacunaryParams::new(0.25).unwrap();
    let k_expected = 0.25 * 2f64.sqrt() / (1.0 - 0.25 * 2f64.sqrt());
    let mut rng = ChaCha8Rng::seed_from_u64(31);
    let samples: Vec<Complex64> = (0..10_000)
        .map(|i| {
            let y = if i % 2 == 0 { rng.gen_range(0.0..2.0) } else { 2.0 * 10f64.powf(-rng.gen_range(0.0..8.0)) };
            let y = if rng.gen_bool(0.5) { y } else { -y };
            Complex64::new(rng.gen_range(-24.0..24.0), y)
        })
        .filter(|z| z.im != 0.0)
        .collect();
    let r = beltrami_report(&samples, &params);
    // recompute the inequality from the raw per-cell derivatives
    let eps_l = 0.25 * 2f64.sqrt();
    let mut raw_bad = 0;
    for z in &samples {
        if let Some(d) = derivative_at(*z, &params) {
            if d.f_zbar.norm() > k_expected * d.f_z.re + 1e-12 || (d.f_z.re - 1.0).abs() > eps_l + 1e-12 {
                raw_bad += 1;
            }
        }
    }
    let pass = (r.k - k_expected).abs() < 1e-15
        && r.reduced_violations == 0
        && r.band_violations == 0
        && raw_bad == 0
        && r.evaluated + r.skipped_real == samples.len()
        && r.evaluated >= 9_990;
    outcome(
        pass,
        format!(
            "{} evaluated ({} nudged), violations {}+{}+{raw_bad}, worst margins {:.4} / {:.4}",
            r.evaluated,
            r.perturbed,
            r.reduced_violations,
            r.band_violations,
            r.worst_reduced_margin,
            r.worst_band_margin
        ),
    )
}

/// Open square `(2,6)×(−2,2)` minus the closed diamonds, 8-periodic in x.
fn in_b_oracle(z: Complex64) -> bool {
    let x = z.re.rem_euclid(8.0);
    let y = z.im;
    let in_square = x > 2.0 && x < 6.0 && y > -2.0 && y < 2.0;
    let in_d1 = (x - 3.0).abs() + y.abs() <= 1.0;
    let in_d2 = (x - 5.0).abs() + y.abs() <= 1.0;
    in_square && !in_d1 && !in_d2
}

fn c4_unique_scale() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(41);
    let (mut multi, mut mismatch, mut real_hits) = (0, 0, 0);
    for _ in 0..100_000 {
        let z = Complex64::new(rng.gen_range(-32.0..32.0), rng.gen_range(-3.0..3.0));
        let hits = scale_hits(z, 12);
        let oracle: Vec<u32> = (0..=12).filter(|&m| in_b_oracle(z * 4f64.powi(m as i32))).collect();
        multi += usize::from(hits.len() > 1);
        mismatch += usize::from(hits != oracle);
        let x = Complex64::new(rng.gen_range(-32.0..32.0), 0.0);
        real_hits += scale_hits(x, 12).len();
    }
    outcome(
        multi == 0 && mismatch == 0 && real_hits == 0,
        format!("multi-scale {multi}, oracle mismatches {mismatch}, real-axis hits {real_hits}"),
    )
}

fn c5_rademacher() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(51);
    let sign = |m: i32, x: f64| (2f64.powi(m + 1) * std::f64::consts::PI * x).sin().signum();
    let (mut done, mut bad) = (0, 0);
    while done < 10_000 {
        let x: f64 = rng.gen_range(-64.0..64.0);
        // stay away from the lattice 2ℤ where signs change
        if (x / 2.0 - (x / 2.0).round()).abs() < 1e-6 {
            continue;
        }
        let grad = g_eval(Complex64::new(x, 0.0)).gradient.expect("interior point");
        let lhs = -Complex64::i() * grad.gx;
        let rhs = 0.5 * (sign(0, x / 8.0) - sign(1, x / 8.0));
        bad += usize::from(lhs != Complex64::new(rhs, 0.0));
        done += 1;
    }
    outcome(bad == 0, format!("{done} points, {bad} mismatches"))
}

fn trace_path(depth: u32) -> SampledPath {
    let xs = dyadic_grid(depth);
    SampledPath::scalar(&xs.iter().map(|&x| h_eval(x)).collect::<Vec<_>>()).unwrap()
}

fn c6_dichotomy() -> Outcome {
    // frozen from an independent exact-rational run of the same DP
    const PLATEAU: [f64; 6] = [
        3.1653602485669623,
        4.200324953966429,
        4.474066973714618,
        4.548906201227883,
        4.572146378925943,
        4.580158644703615,
    ];
    const FLOORS: [f64; 7] = [
        6.413325132016946,
        6.696091022528129,
        6.935149943658214,
        7.150287855801824,
        7.347913513744712,
        7.531189469414741,
        7.702264361800383,
    ];
    let phi = PhiSpec::LogDamped(1.5);
    let dp: Vec<f64> = (1..=6).map(|n| sup_variation(phi, &trace_path(n)).unwrap().dp_supremum).collect();
    let matches_dp = dp.iter().zip(PLATEAU).all(|(a, b)| (a - b).abs() <= 1e-9 * b);
    let increment = (dp[5] - dp[4]) / dp[4];

    let q = PhiSpec::LogDamped(0.25);
    let floors: Vec<f64> =
        (4..=10).map(|n| jensen_floor(q, vn(n, VnMethod::PartitionSum), 1u64 << (2 * n)).unwrap()).collect();
    let matches_floor = floors.iter().zip(FLOORS).all(|(a, b)| (a - b).abs() <= 1e-12 * b);
    let increasing = floors.windows(2).all(|w| w[1] > w[0]);
    let growth = floors[6] / floors[0];
    let pass = matches_dp && increment < 0.05 && matches_floor && increasing && growth > 1.20;
    outcome(
        pass,
        format!("q=1.5 plateau {:.6} (last step {:.3}%), q=0.25 floors x{growth:.4}", dp[5], 100.0 * increment),
    )
}

/// All chains through both endpoints, summed left to right; lexicographically
/// smallest chain among exact ties.
fn exhaustive(phi: PhiSpec, pts: &[Vec<f64>]) -> (f64, Vec<usize>) {
    fn rec(phi: PhiSpec, pts: &[Vec<f64>], chain: &mut Vec<usize>, acc: f64, best: &mut (f64, Vec<usize>)) {
        let last = *chain.last().unwrap();
        let n = pts.len();
        for next in last + 1..n {
            let d = pts[last].iter().zip(&pts[next]).map(|(a, b)| (a - b) * (a - b)).sum::<f64>().sqrt();
            let v = acc + phi.eval(d).unwrap();
            chain.push(next);
            if next == n - 1 {
                if v > best.0 || (v == best.0 && *chain < best.1) {
                    *best = (v, chain.clone());
                }
            } else {
                rec(phi, pts, chain, v, best);
            }
            chain.pop();
        }
    }
    let mut best = (f64::NEG_INFINITY, Vec::new());
    rec(phi, pts, &mut vec![0], 0.0, &mut best);
    best
}

fn c7_dp_oracle() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(71);
    let (mut value_bad, mut chain_bad, mut collapse_exact, mut collapse_tol) = (0, 0, 0, 0);
    for case in 0..200 {
        let len = rng.gen_range(2..=12);
        let dim = if case % 2 == 0 { 1 } else { 2 };
        let pts: Vec<Vec<f64>> = (0..len).map(|_| (0..dim).map(|_| rng.gen_range(-3..=3) as f64).collect()).collect();
        let phi = match case % 4 {
            0 => PhiSpec::Power(2.0),
            1 => PhiSpec::Power(rng.gen_range(1.0..3.0)),
            2 => PhiSpec::LogDamped(1.5),
            _ => PhiSpec::LogDamped(rng.gen_range(0.0..2.0)),
        };
        let params: Vec<f64> = (0..len).map(|i| i as f64 / (len - 1) as f64).collect();
        let path = SampledPath::from_points(params, &pts).unwrap();
        let r = sup_variation(phi, &path).unwrap();
        let (v, chain) = exhaustive(phi, &pts);
        value_bad += usize::from(r.dp_supremum != v);
        chain_bad += usize::from(r.argmax_indices != chain);
        let r1 = sup_variation(PhiSpec::Power(1.0), &path).unwrap();
        collapse_exact += usize::from(r1.dp_supremum == r1.consecutive_sum);
        collapse_tol += usize::from((r1.dp_supremum - r1.consecutive_sum).abs() <= 1e-12 * r1.consecutive_sum.max(1.0));
    }
    outcome(
        value_bad == 0 && chain_bad == 0 && collapse_tol == 200,
        format!(
            "value mismatches {value_bad}, chain mismatches {chain_bad}, Power(1) collapse {collapse_exact}/200 bitwise, {collapse_tol}/200 within 1e-12"
        ),
    )
}

fn c8_segment_lemmas() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(81);
    let mut union_fail = 0;
    for _ in 0..1000 {
        let len = rng.gen_range(3..40);
        let dim = rng.gen_range(1..=3);
        let coords: Vec<f64> = (0..len * dim).map(|_| rng.gen_range(-5.0..5.0)).collect();
        let params: Vec<f64> = (0..len).map(|i| i as f64 / (len - 1) as f64).collect();
        let path = SampledPath::new(params, dim, coords).unwrap();
        let mut cuts: Vec<usize> = (1..len - 1).filter(|_| rng.gen_bool(0.3)).collect();
        cuts.insert(0, 0);
        cuts.push(len - 1);
        let phi = if rng.gen_bool(0.5) {
            PhiSpec::Power(rng.gen_range(1.0..3.0))
        } else {
            PhiSpec::LogDamped(rng.gen_range(0.0..2.0))
        };
        union_fail += usize::from(!union_bound_report(phi, &path, &cuts).unwrap().holds);
    }

    let mut growth = Vec::new();
    for m in 1..=8u32 {
        // image of [0, 8] under the lacunary map
        let path = curve_path(0.0, 8.0, 0.0, 0, 0.25).unwrap();
        let n = 1usize << m;
        let ts: Vec<f64> = (0..=n).map(|j| j as f64 / n as f64).collect();
        let params = LacunaryParams::new(0.25).unwrap();
        let vals: Vec<Complex64> =
            ts.iter().map(|&t| qcvar::planar::f_eval(Complex64::new(8.0 * t, 0.0), &params)).collect();
        let trace = SampledPath::planar_with_params(ts, &vals).unwrap();
        let (eta, _) = QuasisymmetryModulus::estimate_on_line(&trace, &[1.0, 0.0], &[1.0]).unwrap();
        let delta = delta_modulus(&[0.0, 0.0], &[8.0, 0.0], path.point(0), path.point(1)).unwrap();
        growth.push(growth_bound_report(&trace, delta, &eta).unwrap().holds);
    }
    for offset in [0.0, 0.5] {
        let n = 64;
        let src: Vec<Vec<f64>> = (0..=n).map(|j| vec![1.0 + j as f64 / n as f64, offset]).collect();
        let img: Vec<Vec<f64>> = src.iter().map(|x| qcvar::matrix::radial_stretch(0.5, x)).collect();
        let ts: Vec<f64> = (0..=n).map(|j| j as f64 / n as f64).collect();
        let trace = SampledPath::from_points(ts, &img).unwrap();
        let (eta, _) = QuasisymmetryModulus::estimate_on_line(&trace, &[1.0, 0.0], &[1.0]).unwrap();
        let delta = delta_modulus(&src[0], &src[n], &img[0], &img[n]).unwrap();
        growth.push(growth_bound_report(&trace, delta, &eta).unwrap().holds);
    }
    let growth_ok = growth.iter().all(|&h| h);
    outcome(
        union_fail == 0 && growth_ok,
        format!(
            "union failures {union_fail}/1000, growth bound {}/{} traces",
            growth.iter().filter(|&&h| h).count(),
            growth.len()
        ),
    )
}

/// `min ⟨Av,v⟩ − δ|Av|` over `count` random unit directions.
fn random_direction_margin(a: &DMatrix<f64>, delta: f64, count: usize, rng: &mut ChaCha8Rng) -> f64 {
    let n = a.nrows();
    let mut best = f64::INFINITY;
    for _ in 0..count {
        let v = nalgebra::DVector::from_fn(n, |_, _| rng.gen_range(-1.0..1.0));
        let v = &v / v.norm();
        let av: nalgebra::DVector<f64> = a * &v;
        best = best.min(av.dot(&v) - delta * av.norm());
    }
    best
}

fn c9_cone_distortion() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(91);
    // closed form against a 2000-angle scan refined by ternary search
    let mut disagree = 0;
    for _ in 0..10_000 {
        let s = rng.gen_range(0.1..3.0);
        let a = Matrix2::new(
            s * (1.0 + rng.gen_range(-1.0..1.0)),
            s * rng.gen_range(-1.0..1.0),
            s * rng.gen_range(-1.0..1.0),
            s * (1.0 + rng.gen_range(-1.0..1.0)),
        );
        let delta = rng.gen_range(0.01..1.0);
        let f = |t: f64| {
            let v = nalgebra::Vector2::new(t.cos(), t.sin());
            let av = a * v;
            av.dot(&v) - delta * av.norm()
        };
        let h = std::f64::consts::PI / 2000.0;
        let k = (0..2000).min_by(|&i, &j| f(i as f64 * h).total_cmp(&f(j as f64 * h))).unwrap();
        let (mut lo, mut hi) = ((k as f64 - 1.0) * h, (k as f64 + 1.0) * h);
        for _ in 0..100 {
            let (m1, m2) = (lo + (hi - lo) / 3.0, hi - (hi - lo) / 3.0);
            if f(m1) < f(m2) {
                hi = m2;
            } else {
                lo = m1;
            }
        }
        let brute = f(0.5 * (lo + hi)).min(f(k as f64 * h));
        let closed = conf_split(&a).cone_margin(delta) >= 0.0;
        if closed != (brute >= 0.0) && brute.abs() > 1e-9 {
            disagree += 1;
        }
    }

    let mut h_fail = 0;
    let mut accepted = [0usize; 3];
    for (slot, n) in (2..=4).enumerate() {
        let target = if n == 2 { 2000 } else { 300 };
        let mut tries = 0;
        while accepted[slot] < target && tries < 100 * target {
            tries += 1;
            let s = rng.gen_range(0.1..3.0);
            let tau = rng.gen_range(0.0..1.0);
            let a = (DMatrix::identity(n, n) + DMatrix::from_fn(n, n, |_, _| rng.gen_range(-1.0..1.0)) * tau) * s;
            let delta = rng.gen_range(0.05..0.95);
            let m = cone_membership(&a, &ConeParams::new(n, delta).unwrap()).unwrap();
            if !m.member || m.margin <= 1e-9 || random_direction_margin(&a, delta, 4000, &mut rng) < 0.0 {
                continue;
            }
            accepted[slot] += 1;
            if cond_ratio(&a).unwrap() > h_delta(delta).unwrap() + 1e-9 {
                h_fail += 1;
            }
        }
    }

    let mut reduced_fail = 0;
    for _ in 0..10_000 {
        let kappa = rng.gen_range(1.0..30.0);
        let (b, delta) = spd_with_cone_constant(4, kappa, &mut rng);
        let q = QuatMatrix::new(0.0, rng.gen_range(-3.0..3.0), rng.gen_range(-3.0..3.0), rng.gen_range(-3.0..3.0));
        let a = b + DMatrix::from_column_slice(4, 4, q.matrix().as_slice());
        let c = cond_ratio(&a).unwrap();
        if c * c > reduced_distortion_bound_sq(delta).unwrap() * (1.0 + 1e-12) {
            reduced_fail += 1;
        }
    }
    let full = accepted == [2000, 300, 300];
    outcome(
        disagree == 0 && h_fail == 0 && reduced_fail == 0 && full,
        format!(
            "closed/angular disagreements {disagree}/10000, H bound failures {h_fail} over {accepted:?} members, reduced-4D failures {reduced_fail}/10000"
        ),
    )
}

fn c10_quaternions() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(101);
    let mut r = || rng.gen_range(-2.0..2.0);
    let mut worst = 0.0f64;
    for _ in 0..10_000 {
        let q = QuatMatrix::new(r(), r(), r(), r());
        let m = q.matrix();
        worst = worst.max((m.transpose() * m - Matrix4::identity() * q.norm_squared()).abs().max());
        let v = Vector4::new(r(), r(), r(), r());
        worst = worst.max(((m * v).norm() - q.norm() * v.norm()).abs());
    }
    let ijk = (QuatMatrix::I.matrix() * QuatMatrix::J.matrix() - QuatMatrix::K.matrix()).abs().max();

    let (mut gap_bad, mut tilt_bad, mut norm_bad) = (0, 0, 0);
    let mut tilts = 0;
    for _ in 0..100 {
        let v = |r: &mut dyn FnMut() -> f64| Vector4::new(r(), r(), r(), r());
        let (a, b, fa, fb) = (v(&mut r), v(&mut r), v(&mut r), v(&mut r));
        let m = quat_minimizer(&a, &b, &fa, &fb).unwrap();
        let dm = delta_modulus(a.as_slice(), b.as_slice(), fa.as_slice(), fb.as_slice()).unwrap();
        gap_bad += usize::from((m.delta_val - dm).abs() > 1e-12 * (fa - fb).norm().max(1.0));
        gap_bad += usize::from((m.tilted_gap - dm.abs()).abs() > 1e-12 * (fa - fb).norm().max(1.0));
        norm_bad += usize::from(m.q.norm() > (fa - fb).norm() / (a - b).norm() * (1.0 + 1e-12));
        for _ in 0..100 {
            let q = QuatMatrix::new(0.0, r(), r(), r());
            let g = ((fa + q.apply(&a)) - (fb + q.apply(&b))).norm();
            tilt_bad += usize::from(g < m.delta_val - 1e-9);
            tilts += 1;
        }
    }
    outcome(
        worst <= 1e-12 * 64.0 && ijk <= 1e-12 && gap_bad == 0 && tilt_bad == 0 && norm_bad == 0,
        format!(
            "identity error {worst:.2e}, i*j-k {ijk:.1e}, gap mismatches {gap_bad}, tilts beating minimizer {tilt_bad}/{tilts}, norm violations {norm_bad}"
        ),
    )
}

fn c11_parallel_lines() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(111);
    let params = LacunaryParams::new(0.25).unwrap();
    let (mut strict_fail, mut lip_fail, mut lines) = (0, 0, 0);
    let mut worst = f64::INFINITY;
    for _ in 0..10 {
        let count = rng.gen_range(2..=10);
        let mut hs: Vec<f64> = Vec::new();
        while hs.len() < count {
            let b = rng.gen_range(-5.0..5.0);
            if hs.iter().all(|h: &f64| (h - b).abs() > 1e-3) {
                hs.push(b);
            }
        }
        let s = build_parallel_map(&hs, count, params).unwrap();
        // strict inequalities recomputed from the printed coefficients
        for (m, (&c, (&b, &eps))) in s.coeffs.iter().zip(hs.iter().zip(&s.gaps)).enumerate() {
            let bound = 0.5f64.powi(m as i32 + 1);
            let log_term = (std::f64::consts::E + 1.0 / eps).ln();
            strict_fail += usize::from(!(c * b.abs() < bound && c * log_term < bound));
        }
        for j in 0..count {
            let r = s.remainder_lipschitz(j, 200, 16.0, 1e-3, &mut rng);
            lines += 1;
            lip_fail += usize::from(!r.holds);
            worst = worst.min(r.bound - r.empirical);
        }
    }
    outcome(
        strict_fail == 0 && lip_fail == 0,
        format!("non-strict {strict_fail}, Lipschitz failures {lip_fail}/{lines}, smallest slack {worst:.4}"),
    )
}

fn c12_cli() -> Outcome {
    let exe = env!("CARGO_BIN_EXE_qcvar");
    let run = |args: &[&str]| Command::new(exe).args(args).output().expect("run qcvar");
    let v1 = run(&["verify", "quaternion", "cone", "--n", "300", "--seed", "9"]);
    let v2 = run(&["verify", "quaternion", "cone", "--n", "300", "--seed", "9"]);
    let c1 = run(&["curve", "--depth", "5"]);
    let c2 = run(&["curve", "--depth", "5"]);
    let deterministic =
        v1.status.success() && v1.stdout == v2.stdout && c1.stdout == c2.stdout && !c1.stdout.is_empty();

    let dir = std::env::temp_dir().join(format!("qcvar-acceptance-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let csv = dir.join("curve.csv");
    std::fs::write(&csv, &c1.stdout).unwrap();
    let mut round_trip = true;
    for phi in ["pow:1", "pow:2", "log:1.5"] {
        let out = run(&["variation", csv.to_str().unwrap(), "--phi", phi]);
        let direct = sup_variation(phi.parse().unwrap(), &curve_path(0.0, 8.0, 0.0, 5, 0.25).unwrap()).unwrap();
        round_trip &= out.status.success() && out.stdout == to_json(&direct).unwrap();
    }
    std::fs::remove_dir_all(&dir).ok();
    outcome(
        deterministic && round_trip,
        format!("byte-identical reruns {deterministic}, curve->variation exact {round_trip}"),
    )
}

type Criterion = (&'static str, fn() -> Outcome);

fn main() -> ExitCode {
    let criteria: [Criterion; 12] = [
        ("exact dyadic values", c1_exact_dyadic),
        ("unbounded variation signature", c2_unbounded_variation),
        ("reduced Beltrami inequality", c3_reduced_beltrami),
        ("unique scale", c4_unique_scale),
        ("Rademacher identity", c5_rademacher),
        ("phi-variation dichotomy", c6_dichotomy),
        ("DP oracle equivalence", c7_dp_oracle),
        ("concatenation and growth lemmas", c8_segment_lemmas),
        ("cone and distortion", c9_cone_distortion),
        ("quaternion identities and minimization", c10_quaternions),
        ("parallel-lines coefficients", c11_parallel_lines),
        ("CLI determinism and round trips", c12_cli),
    ];
    let mut failed = 0;
    for (i, (name, check)) in criteria.iter().enumerate() {
        let t = Instant::now();
        let o = check();
        println!(
            "criterion {:>2} {:<40} {}  ({:.2}s) {}",
            i + 1,
            name,
            if o.pass { "PASS" } else { "FAIL" },
            t.elapsed().as_secs_f64(),
            o.detail
        );
        failed += usize::from(!o.pass);
    }
    println!("{} of {} criteria passed", criteria.len() - failed, criteria.len());
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
