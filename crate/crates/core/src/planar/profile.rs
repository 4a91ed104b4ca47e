//! The Lipschitz building block `g` on the period-8 strip.
//!
//! On the closed square `Q̄ = [2,6]×[−2,2]` the block is `i(z − 2)` on the
//! diamond `Q₁ = {|x−3|+|y| ≤ 1}`, `i(6 − z)` on `Q₂ = {|x−5|+|y| ≤ 1}`,
//! and affine on twelve triangles filling the rest, with value 0 on `∂Q`.
//! It repeats with period 8 along the real axis and vanishes off the
//! translates of `Q̄`.

use num_complex::Complex64;
use serde::Serialize;

const I: Complex64 = Complex64::new(0.0, 1.0);

/// Barycentric slack for deciding that a point lies on a cell edge.
const EDGE_TOL: f64 = 1e-12;

/// Which piece of the profile a point falls in.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum Cell {
    Diamond1,
    Diamond2,
    /// Index into [`triangles`]; 0..6 upper half, 6..12 lower half.
    Triangle(u8),
    /// Outside every translate of `Q̄`.
    Outside,
}

/// Constant derivative of `g` on one cell, stored as the complex partials
/// `∂g/∂x` and `∂g/∂y`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct Gradient {
    pub gx: Complex64,
    pub gy: Complex64,
}

impl Gradient {
    pub const ZERO: Gradient = Gradient { gx: Complex64::new(0.0, 0.0), gy: Complex64::new(0.0, 0.0) };

    /// `g_z = (g_x − i g_y)/2`
    pub fn dz(&self) -> Complex64 {
        (self.gx - I * self.gy) * 0.5
    }

    /// `g_z̄ = (g_x + i g_y)/2`
    pub fn dzbar(&self) -> Complex64 {
        (self.gx + I * self.gy) * 0.5
    }

    /// Operator norm of the real 2×2 Jacobian, `|g_z| + |g_z̄|`.
    pub fn op_norm(&self) -> f64 {
        self.dz().norm() + self.dzbar().norm()
    }

    /// Real Jacobian `[[∂u/∂x, ∂u/∂y], [∂v/∂x, ∂v/∂y]]` for `g = u + iv`.
    pub fn jacobian(&self) -> [[f64; 2]; 2] {
        [[self.gx.re, self.gy.re], [self.gx.im, self.gy.im]]
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct GEval {
    pub value: Complex64,
    pub cell: Cell,
    /// `None` when the point sits on a cell boundary.
    pub gradient: Option<Gradient>,
}

impl GEval {
    pub fn on_boundary(&self) -> bool {
        self.gradient.is_none()
    }
}

/// A triangle of the extension: vertices and the prescribed vertex values.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Triangle {
    pub vertices: [(f64, f64); 3],
    pub values: [Complex64; 3],
}

impl Triangle {
    pub fn gradient(&self) -> Gradient {
        let [(x0, y0), (x1, y1), (x2, y2)] = self.vertices;
        let (a, b, c, d) = (x1 - x0, y1 - y0, x2 - x0, y2 - y0);
        let det = a * d - b * c;
        let r1 = self.values[1] - self.values[0];
        let r2 = self.values[2] - self.values[0];
        Gradient { gx: (r1 * d - r2 * b) / det, gy: (r2 * a - r1 * c) / det }
    }

    fn barycentric(&self, x: f64, y: f64) -> [f64; 3] {
        let [(x0, y0), (x1, y1), (x2, y2)] = self.vertices;
        let det = (x1 - x0) * (y2 - y0) - (x2 - x0) * (y1 - y0);
        let l1 = ((x - x0) * (y2 - y0) - (x2 - x0) * (y - y0)) / det;
        let l2 = ((x1 - x0) * (y - y0) - (x - x0) * (y1 - y0)) / det;
        [1.0 - l1 - l2, l1, l2]
    }
}

fn c(re: f64, im: f64) -> Complex64 {
    Complex64::new(re, im)
}

/// The twelve triangles covering `Q̄ ∖ (Q₁ ∪ Q₂)`.
pub fn triangles() -> [Triangle; 12] {
    let z = c(0.0, 0.0);
    let upper = [
        ([(2.0, 0.0), (3.0, 1.0), (2.0, 2.0)], [z, c(-1.0, 1.0), z]),
        ([(3.0, 1.0), (4.0, 2.0), (2.0, 2.0)], [c(-1.0, 1.0), z, z]),
        ([(3.0, 1.0), (4.0, 0.0), (4.0, 2.0)], [c(-1.0, 1.0), c(0.0, 2.0), z]),
        ([(4.0, 0.0), (5.0, 1.0), (4.0, 2.0)], [c(0.0, 2.0), c(1.0, 1.0), z]),
        ([(5.0, 1.0), (6.0, 2.0), (4.0, 2.0)], [c(1.0, 1.0), z, z]),
        ([(5.0, 1.0), (6.0, 0.0), (6.0, 2.0)], [c(1.0, 1.0), z, z]),
    ];
    let mut out = [Triangle { vertices: [(0.0, 0.0); 3], values: [z; 3] }; 12];
    for (k, (v, _)) in upper.iter().enumerate() {
        out[k] = Triangle { vertices: *v, values: [0, 1, 2].map(|i| diamond_or_zero(v[i].0, v[i].1)) };
        let mirrored = [0, 1, 2].map(|i| (v[i].0, -v[i].1));
        out[k + 6] =
            Triangle { vertices: mirrored, values: [0, 1, 2].map(|i| diamond_or_zero(mirrored[i].0, mirrored[i].1)) };
    }
    debug_assert!(upper.iter().enumerate().all(|(k, (_, vals))| out[k].values == *vals));
    out
}

/// Vertex values: the diamond formulas where they apply, else 0 (on `∂Q`).
fn diamond_or_zero(x: f64, y: f64) -> Complex64 {
    let z = c(x, y);
    if (x - 3.0).abs() + y.abs() <= 1.0 {
        I * (z - 2.0)
    } else if (x - 5.0).abs() + y.abs() <= 1.0 {
        I * (6.0 - z)
    } else {
        c(0.0, 0.0)
    }
}

const DIAMOND1_GRAD: Gradient = Gradient { gx: Complex64::new(0.0, 1.0), gy: Complex64::new(-1.0, 0.0) };
const DIAMOND2_GRAD: Gradient = Gradient { gx: Complex64::new(0.0, -1.0), gy: Complex64::new(1.0, 0.0) };

/// Evaluates `g` with its cell and per-cell gradient.
pub fn g_eval(z: Complex64) -> GEval {
    let x = z.re.rem_euclid(8.0);
    let y = z.im;
    let local = c(x, y);

    if !((2.0..=6.0).contains(&x) && y.abs() <= 2.0) {
        return GEval { value: c(0.0, 0.0), cell: Cell::Outside, gradient: Some(Gradient::ZERO) };
    }
    let on_square_edge = x <= 2.0 + EDGE_TOL || x >= 6.0 - EDGE_TOL || y.abs() >= 2.0 - EDGE_TOL;

    let d1 = (x - 3.0).abs() + y.abs();
    if d1 <= 1.0 + EDGE_TOL {
        let boundary = d1 >= 1.0 - EDGE_TOL;
        return GEval {
            value: I * (local - 2.0),
            cell: Cell::Diamond1,
            gradient: (!boundary).then_some(DIAMOND1_GRAD),
        };
    }
    let d2 = (x - 5.0).abs() + y.abs();
    if d2 <= 1.0 + EDGE_TOL {
        let boundary = d2 >= 1.0 - EDGE_TOL;
        return GEval {
            value: I * (6.0 - local),
            cell: Cell::Diamond2,
            gradient: (!boundary).then_some(DIAMOND2_GRAD),
        };
    }

    for (k, tri) in triangles().iter().enumerate() {
        let l = tri.barycentric(x, y);
        if l.iter().all(|&li| li >= -EDGE_TOL) {
            let grad = tri.gradient();
            let (x0, y0) = tri.vertices[0];
            let value = tri.values[0] + grad.gx * (x - x0) + grad.gy * (y - y0);
            let boundary = on_square_edge || l.iter().any(|&li| li <= EDGE_TOL);
            return GEval { value, cell: Cell::Triangle(k as u8), gradient: (!boundary).then_some(grad) };
        }
    }
    unreachable!("triangles cover the square minus the diamonds: ({x}, {y})")
}

/// Lipschitz constant of `g`: the largest per-cell operator norm.
pub fn g_lipschitz() -> f64 {
    triangles()
        .iter()
        .map(|t| t.gradient().op_norm())
        .chain([DIAMOND1_GRAD.op_norm(), DIAMOND2_GRAD.op_norm()])
        .fold(0.0, f64::max)
}

/// The real trace `T(x) = −i·g(x)`: 8-periodic tent with peak 2 at `x = 4`.
pub fn tent_eval(x: f64) -> f64 {
    let r = x.rem_euclid(8.0);
    if (2.0..=4.0).contains(&r) {
        r - 2.0
    } else if r > 4.0 && r <= 6.0 {
        6.0 - r
    } else {
        0.0
    }
}

/// Membership in `B = ⋃ [Q ∖ (Q₁ ∪ Q₂)] + 8ℓ` (open square, closed diamonds removed).
pub fn in_b(z: Complex64) -> bool {
    let x = z.re.rem_euclid(8.0);
    let y = z.im.abs();
    x > 2.0 && x < 6.0 && y < 2.0 && (x - 3.0).abs() + y > 1.0 && (x - 5.0).abs() + y > 1.0
}

/// All `m ≤ m_max` with `4ᵐz ∈ B`.
pub fn scale_hits(z: Complex64, m_max: u32) -> Vec<u32> {
    let mut hits = Vec::new();
    let mut w = z;
    for m in 0..=m_max {
        if in_b(w) {
            hits.push(m);
        }
        w *= 4.0;
    }
    hits
}
