//! The map `F(z) = Σ c_m f(z − i b_m)` whose image of every horizontal
//! line `L_j = {im z = b_j}` is nowhere locally rectifiable.

use std::f64::consts::E;

use num_complex::Complex64;
use rand::Rng;
use serde::Serialize;

use super::lacunary::{f_eval, LacunaryParams, G_MAX};
use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SumConstruction {
    pub heights: Vec<f64>,
    /// `ε_m = min_{j<ℓ≤m} |b_j − b_ℓ|`; infinite for `m = 1`.
    pub gaps: Vec<f64>,
    pub coeffs: Vec<f64>,
    pub m_trunc: usize,
    #[serde(skip)]
    params: LacunaryParams,
}

/// Slack in the two coefficient conditions for line `m` (1-based).
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct CoefficientMargins {
    pub m: usize,
    /// `2^{−m} − c_m |b_m|`
    pub height: f64,
    /// `2^{−m} − c_m log(e + 1/ε_m)`
    pub gap: f64,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct RemainderLipschitz {
    pub line: usize,
    pub pairs: usize,
    pub empirical: f64,
    pub bound: f64,
    pub holds: bool,
}

/// Builds the coefficients `c_m = 2^{−m−1}/(1 + |b_m| + log(e + 1/ε_m))`.
pub fn build_parallel_map(heights: &[f64], m_trunc: usize, params: LacunaryParams) -> Result<SumConstruction> {
    if heights.is_empty() {
        return Err(Error::domain("need at least one line height"));
    }
    if heights.iter().any(|b| !b.is_finite()) {
        return Err(Error::domain("line heights must be finite"));
    }
    let mut gaps = Vec::with_capacity(heights.len());
    let mut gap = f64::INFINITY;
    for (m, &b) in heights.iter().enumerate() {
        for &prev in &heights[..m] {
            let d = (b - prev).abs();
            if d == 0.0 {
                return Err(Error::domain(format!("duplicate line height {b}")));
            }
            gap = gap.min(d);
        }
        gaps.push(gap);
    }
    let coeffs = heights
        .iter()
        .zip(&gaps)
        .enumerate()
        .map(|(i, (&b, &eps))| {
            let m = i as i32 + 1;
            2f64.powi(-m - 1) / (1.0 + b.abs() + (E + 1.0 / eps).ln())
        })
        .collect();
    Ok(SumConstruction { heights: heights.to_vec(), gaps, coeffs, m_trunc: m_trunc.min(heights.len()), params })
}

impl SumConstruction {
    pub fn params(&self) -> &LacunaryParams {
        &self.params
    }

    pub fn margins(&self) -> Vec<CoefficientMargins> {
        self.coeffs
            .iter()
            .zip(self.heights.iter().zip(&self.gaps))
            .enumerate()
            .map(|(i, (&c, (&b, &eps)))| {
                let bound = 2f64.powi(-(i as i32 + 1));
                CoefficientMargins { m: i + 1, height: bound - c * b.abs(), gap: bound - c * (E + 1.0 / eps).ln() }
            })
            .collect()
    }

    /// Whether every coefficient condition holds strictly.
    pub fn strict(&self) -> bool {
        self.margins().iter().all(|m| m.height > 0.0 && m.gap > 0.0)
    }

    /// `M` with `|f(z)| ≤ |z| + M`.
    pub fn growth_constant(&self) -> f64 {
        self.params.eps() * G_MAX * 4.0 / 3.0
    }

    /// `Σ_{m ≤ M_trunc} c_m f(z − i b_m)`.
    pub fn eval(&self, z: Complex64) -> Complex64 {
        self.partial(z, None)
    }

    /// Bound on the omitted terms `m > M_trunc`: `2^{−M_trunc}(|z| + 1 + M)`.
    pub fn tail_bound(&self, z: Complex64) -> f64 {
        if self.m_trunc >= self.heights.len() {
            return 0.0;
        }
        2f64.powi(-(self.m_trunc as i32)) * (z.norm() + 1.0 + self.growth_constant())
    }

    /// `R_j(z) = Σ_{m ≠ j} c_m f(z − i b_m)` (0-based `j`).
    pub fn remainder(&self, j: usize, z: Complex64) -> Complex64 {
        self.partial(z, Some(j))
    }

    fn partial(&self, z: Complex64, skip: Option<usize>) -> Complex64 {
        self.coeffs[..self.m_trunc]
            .iter()
            .zip(&self.heights)
            .enumerate()
            .filter(|(m, _)| Some(*m) != skip)
            .map(|(_, (&c, &b))| c * f_eval(z - Complex64::new(0.0, b), &self.params))
            .sum()
    }

    /// `Σ_{m≠j} c_m C log(e + 1/|b_m − b_j|)` with `C` from the derivative bound.
    pub fn remainder_lipschitz_bound(&self, j: usize) -> f64 {
        let cst = self.params.log_derivative_constant();
        self.coeffs[..self.m_trunc]
            .iter()
            .zip(&self.heights)
            .enumerate()
            .filter(|(m, _)| *m != j)
            .map(|(_, (&c, &b))| c * cst * (E + 1.0 / (b - self.heights[j]).abs()).ln())
            .sum()
    }

    /// Largest difference quotient of `R_j` over random pairs on `L_j` with
    /// real parts in `[-span, span]` and separation at least `min_sep`.
    pub fn remainder_lipschitz<R: Rng>(
        &self,
        j: usize,
        pairs: usize,
        span: f64,
        min_sep: f64,
        rng: &mut R,
    ) -> RemainderLipschitz {
        let b = self.heights[j];
        let mut empirical = 0.0f64;
        let mut slack = 0.0f64;
        let mut done = 0;
        while done < pairs {
            let x1 = rng.gen_range(-span..span);
            let x2 = rng.gen_range(-span..span);
            if (x1 - x2).abs() < min_sep {
                continue;
            }
            let r1 = self.remainder(j, Complex64::new(x1, b));
            let r2 = self.remainder(j, Complex64::new(x2, b));
            let sep = (x1 - x2).abs();
            empirical = empirical.max((r1 - r2).norm() / sep);
            // rounding in the two evaluations
            slack = slack.max(1e-12 * (r1.norm() + r2.norm() + 1.0) / sep);
            done += 1;
        }
        let bound = self.remainder_lipschitz_bound(j);
        RemainderLipschitz { line: j, pairs, empirical, bound, holds: empirical <= bound + slack }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    fn params() -> LacunaryParams {
        LacunaryParams::new(0.25).unwrap()
    }

    #[test]
    fn single_line() {
        let s = build_parallel_map(&[0.0], 1, params()).unwrap();
        assert!(s.gaps[0].is_infinite());
        assert_eq!(s.coeffs[0], 0.25 / 2.0);
        let m = s.margins();
        assert_eq!(m[0].height, 0.5);
        assert!(m[0].gap > 0.0);
        let z = Complex64::new(1.3, 0.4);
        assert_eq!(s.eval(z), s.coeffs[0] * f_eval(z, &params()));
        assert_eq!(s.remainder(0, z), Complex64::new(0.0, 0.0));
    }

    #[test]
    fn two_lines() {
        let s = build_parallel_map(&[0.0, 1.0], 2, params()).unwrap();
        assert_eq!(s.gaps[1], 1.0);
        assert!(s.coeffs[0] < 0.5 && s.coeffs[1] < 0.25);
        // c₂ = 2^{-3}/(1 + 1 + log(e+1))
        assert!((s.coeffs[1] - 0.125 / (2.0 + (E + 1.0).ln())).abs() < 1e-16);
        assert!(s.strict());
    }

    #[test]
    fn duplicates_rejected() {
        assert!(build_parallel_map(&[0.0, 1.0, 0.0], 3, params()).is_err());
        assert!(build_parallel_map(&[], 0, params()).is_err());
    }

    #[test]
    fn remainder_lipschitz_on_lines() {
        let s = build_parallel_map(&[0.0, 0.3, -1.2, 2.0], 4, params()).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for j in 0..4 {
            let r = s.remainder_lipschitz(j, 300, 10.0, 1e-3, &mut rng);
            assert!(r.holds, "{r:?}");
        }
    }

    #[test]
    fn truncation_tail() {
        let s = build_parallel_map(&[0.0, 1.0, 2.0, 3.0], 2, params()).unwrap();
        let z = Complex64::new(0.5, 0.5);
        let full = build_parallel_map(&[0.0, 1.0, 2.0, 3.0], 4, params()).unwrap();
        assert!((full.eval(z) - s.eval(z)).norm() <= s.tail_bound(z));
        assert_eq!(full.tail_bound(z), 0.0);
    }
}
