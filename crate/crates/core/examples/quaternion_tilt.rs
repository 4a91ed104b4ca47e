// Quaternions as 4×4 matrices, and the imaginary quaternion that turns an
// increment `f(a) − f(b)` into a multiple of `a − b`.

use nalgebra::Vector4;
use qcvar::matrix::{project_im_quat, quat_minimizer, QuatMatrix};

pub fn run() -> qcvar::Result<()> {
    let (i, j, k) = (QuatMatrix::I, QuatMatrix::J, QuatMatrix::K);
    println!("i*j = k: {}", i.matrix() * j.matrix() == k.matrix());
    let q = QuatMatrix::new(0.5, -1.0, 2.0, 0.25);
    let gram = q.matrix().transpose() * q.matrix() - nalgebra::Matrix4::identity() * q.norm_squared();
    println!("|Q^T Q - |Q|^2 I| = {:e}", gram.abs().max());

    let mut e12 = nalgebra::Matrix4::zeros();
    e12[(0, 1)] = 1.0;
    println!("im H(E12) = {:?}", project_im_quat(&e12));

    let (a, b) = (Vector4::new(1.0, 0.0, 2.0, -1.0), Vector4::new(0.0, 1.0, 0.0, 0.5));
    let (fa, fb) = (Vector4::new(2.0, 1.0, 0.0, 3.0), Vector4::new(-1.0, 0.0, 1.0, 0.0));
    let m = quat_minimizer(&a, &b, &fa, &fb)?;
    println!("coefficients {:?}", m.coeffs);
    println!(
        "delta {:.6}, tilted gap {:.6}, |Q| {:.6} <= {:.6}",
        m.delta_val,
        m.tilted_gap,
        m.q.norm(),
        (fa - fb).norm() / (a - b).norm()
    );
    Ok(())
}

#[allow(dead_code)]
fn main() {
    run().expect("quaternion_tilt example failed");
}
