//! Quaternions as 4×4 real matrices (left multiplication).

use nalgebra::{Matrix4, Vector4};
use serde::Serialize;

/// `α + βi + γj + ζk`, identified with the matrix
///
/// ```text
/// α −β −γ −ζ
/// β  α −ζ  γ
/// γ  ζ  α −β
/// ζ −γ  β  α
/// ```
#[derive(Debug, Clone, Copy, PartialEq, Default, Serialize)]
pub struct QuatMatrix {
    pub alpha: f64,
    pub beta: f64,
    pub gamma: f64,
    pub zeta: f64,
}

impl QuatMatrix {
    pub const I: QuatMatrix = QuatMatrix { alpha: 0.0, beta: 1.0, gamma: 0.0, zeta: 0.0 };
    pub const J: QuatMatrix = QuatMatrix { alpha: 0.0, beta: 0.0, gamma: 1.0, zeta: 0.0 };
    pub const K: QuatMatrix = QuatMatrix { alpha: 0.0, beta: 0.0, gamma: 0.0, zeta: 1.0 };

    pub fn new(alpha: f64, beta: f64, gamma: f64, zeta: f64) -> Self {
        QuatMatrix { alpha, beta, gamma, zeta }
    }

    pub fn matrix(&self) -> Matrix4<f64> {
        let (a, b, g, z) = (self.alpha, self.beta, self.gamma, self.zeta);
        Matrix4::new(
            a, -b, -g, -z, //
            b, a, -z, g, //
            g, z, a, -b, //
            z, -g, b, a,
        )
    }

    /// Absolute value of the quaternion, equal to the operator norm of the matrix.
    pub fn norm(&self) -> f64 {
        self.norm_squared().sqrt()
    }

    pub fn norm_squared(&self) -> f64 {
        self.alpha * self.alpha + self.beta * self.beta + self.gamma * self.gamma + self.zeta * self.zeta
    }

    pub fn imaginary(&self) -> QuatMatrix {
        QuatMatrix { alpha: 0.0, ..*self }
    }

    pub fn is_pure_imaginary(&self) -> bool {
        self.alpha == 0.0
    }

    pub fn conj(&self) -> QuatMatrix {
        QuatMatrix { alpha: self.alpha, beta: -self.beta, gamma: -self.gamma, zeta: -self.zeta }
    }

    /// Hamilton product `self · rhs`.
    pub fn mul(&self, rhs: &QuatMatrix) -> QuatMatrix {
        let (a1, b1, c1, d1) = (self.alpha, self.beta, self.gamma, self.zeta);
        let (a2, b2, c2, d2) = (rhs.alpha, rhs.beta, rhs.gamma, rhs.zeta);
        QuatMatrix {
            alpha: a1 * a2 - b1 * b2 - c1 * c2 - d1 * d2,
            beta: a1 * b2 + b1 * a2 + c1 * d2 - d1 * c2,
            gamma: a1 * c2 - b1 * d2 + c1 * a2 + d1 * b2,
            zeta: a1 * d2 + b1 * c2 - c1 * b2 + d1 * a2,
        }
    }

    pub fn apply(&self, v: &Vector4<f64>) -> Vector4<f64> {
        self.matrix() * v
    }
}

pub fn quat_embed(alpha: f64, beta: f64, gamma: f64, zeta: f64) -> Matrix4<f64> {
    QuatMatrix::new(alpha, beta, gamma, zeta).matrix()
}

/// Frobenius-orthogonal projection onto the imaginary quaternions:
/// `Σ_{u ∈ {i,j,k}} (⟨A, M_u⟩_F / 4)·M_u`.
pub fn project_im_quat(a: &Matrix4<f64>) -> QuatMatrix {
    let coeff = |u: QuatMatrix| a.dot(&u.matrix()) / 4.0;
    QuatMatrix { alpha: 0.0, beta: coeff(QuatMatrix::I), gamma: coeff(QuatMatrix::J), zeta: coeff(QuatMatrix::K) }
}

/// Frobenius-orthogonal projection onto all quaternions.
pub fn project_quat(a: &Matrix4<f64>) -> QuatMatrix {
    QuatMatrix { alpha: a.trace() / 4.0, ..project_im_quat(a) }
}
