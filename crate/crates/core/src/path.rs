use num_complex::Complex64;

use crate::error::{Error, Result};

/// Samples of a map along a segment `[a, b]`: image points `f(a + tⱼ(b − a))`
/// at strictly increasing parameters `tⱼ ∈ [0, 1]`.
///
/// Points are stored flat, `dim` coordinates each.
#[derive(Debug, Clone, PartialEq)]
pub struct SampledPath {
    params: Vec<f64>,
    dim: usize,
    coords: Vec<f64>,
}

impl SampledPath {
    pub fn new(params: Vec<f64>, dim: usize, coords: Vec<f64>) -> Result<Self> {
        if dim == 0 {
            return Err(Error::domain("path dimension must be positive"));
        }
        if coords.len() != params.len() * dim {
            return Err(Error::domain(format!(
                "{} parameters but {} coordinates in dimension {dim}",
                params.len(),
                coords.len()
            )));
        }
        for (i, w) in params.windows(2).enumerate() {
            if !(w[0] < w[1]) {
                return Err(Error::domain(format!("parameters not strictly increasing at index {}", i + 1)));
            }
        }
        if let (Some(&first), Some(&last)) = (params.first(), params.last()) {
            if !(first >= 0.0 && last <= 1.0) {
                return Err(Error::domain("parameters must lie in [0, 1]"));
            }
        }
        if coords.iter().any(|c| !c.is_finite()) {
            return Err(Error::domain("non-finite coordinate"));
        }
        Ok(SampledPath { params, dim, coords })
    }

    pub fn from_points(params: Vec<f64>, points: &[Vec<f64>]) -> Result<Self> {
        let dim = points.first().map_or(1, Vec::len);
        if points.iter().any(|p| p.len() != dim) {
            return Err(Error::domain("points have mixed dimensions"));
        }
        Self::new(params, dim, points.concat())
    }

    /// Scalar samples at uniform parameters `j/N`.
    pub fn scalar(values: &[f64]) -> Result<Self> {
        Self::new(uniform_params(values.len()), 1, values.to_vec())
    }

    /// Planar samples at uniform parameters `j/N`.
    pub fn planar(values: &[Complex64]) -> Result<Self> {
        Self::planar_with_params(uniform_params(values.len()), values)
    }

    pub fn planar_with_params(params: Vec<f64>, values: &[Complex64]) -> Result<Self> {
        let coords = values.iter().flat_map(|z| [z.re, z.im]).collect();
        Self::new(params, 2, coords)
    }

    pub fn len(&self) -> usize {
        self.params.len()
    }

    pub fn is_empty(&self) -> bool {
        self.params.is_empty()
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn params(&self) -> &[f64] {
        &self.params
    }

    pub fn point(&self, i: usize) -> &[f64] {
        &self.coords[i * self.dim..(i + 1) * self.dim]
    }

    pub fn points(&self) -> impl Iterator<Item = &[f64]> {
        self.coords.chunks_exact(self.dim)
    }

    /// Euclidean distance between image points `i` and `j`.
    #[inline]
    pub fn dist(&self, i: usize, j: usize) -> f64 {
        let (p, q) = (self.point(i), self.point(j));
        if self.dim == 1 {
            return (p[0] - q[0]).abs();
        }
        p.iter().zip(q).map(|(a, b)| (a - b) * (a - b)).sum::<f64>().sqrt()
    }

    /// The samples with indices in `range`, keeping their original parameters.
    pub fn slice(&self, range: std::ops::RangeInclusive<usize>) -> Result<Self> {
        let (s, e) = (*range.start(), *range.end());
        if s > e || e >= self.len() {
            return Err(Error::domain(format!("slice {s}..={e} out of bounds for {} samples", self.len())));
        }
        Ok(SampledPath {
            params: self.params[s..=e].to_vec(),
            dim: self.dim,
            coords: self.coords[s * self.dim..(e + 1) * self.dim].to_vec(),
        })
    }

    /// The samples at the given (increasing) indices.
    pub fn select(&self, indices: &[usize]) -> Result<Self> {
        let mut params = Vec::with_capacity(indices.len());
        let mut coords = Vec::with_capacity(indices.len() * self.dim);
        for &i in indices {
            if i >= self.len() {
                return Err(Error::domain(format!("index {i} out of bounds")));
            }
            params.push(self.params[i]);
            coords.extend_from_slice(self.point(i));
        }
        Self::new(params, self.dim, coords)
    }
}

pub(crate) fn uniform_params(n: usize) -> Vec<f64> {
    match n {
        0 => Vec::new(),
        1 => vec![0.0],
        _ => (0..n).map(|j| j as f64 / (n - 1) as f64).collect(),
    }
}
