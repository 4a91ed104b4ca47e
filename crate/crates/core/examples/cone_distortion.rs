// Matrix cones `M_n(δ)`, the distortion bound `H(δ)`, the reduced
// four-dimensional condition, and δ estimated from samples of a map.

use nalgebra::{DMatrix, Matrix2, Matrix4};
use qcvar::matrix::{
    cond_ratio, cone_constant, cone_membership, conf_split, h_delta, monotonicity_probe, radial_stretch,
    reduced4d_membership, ConeParams, QuatMatrix,
};

pub fn run() -> qcvar::Result<()> {
    let a = Matrix2::new(1.0, 0.0, 0.0, 0.5);
    let s = conf_split(&a);
    println!("diag(1, 1/2): alpha+ = {}, alpha- = {}", s.alpha_plus, s.alpha_minus);
    for delta in [0.9, 0.95] {
        let m = cone_membership(&DMatrix::from_row_slice(2, 2, a.as_slice()), &ConeParams::new(2, delta)?)?;
        println!("  in M_2({delta}): {} (margin {:.4})", m.member, m.margin);
    }

    let b = DMatrix::from_row_slice(3, 3, &[2.0, 0.3, 0.0, -0.2, 1.0, 0.1, 0.0, 0.4, 1.5]);
    let (delta, _) = cone_constant(&b)?;
    println!("3x3 example: best delta {delta:.6}, cond {:.6} <= H {:.6}", cond_ratio(&b)?, h_delta(delta)?);

    let a4 = Matrix4::identity() * 2.0 + QuatMatrix::new(0.0, 1.0, -3.0, 0.5).matrix();
    let r = reduced4d_membership(&a4, 0.9)?;
    println!("2I + imaginary quaternion: reduced member {} (margin {:.4})", r.member, r.margin);

    let mut samples = Vec::new();
    for i in 0..21 {
        for j in 0..21 {
            let x = vec![-1.0 + i as f64 / 10.0, -1.0 + j as f64 / 10.0];
            samples.push((x.clone(), radial_stretch(3.0, &x)));
        }
    }
    let p = monotonicity_probe(&samples)?;
    println!("radial stretch |x|^2 x: sampled delta {:.6} over {} pairs", p.delta_hat, p.pairs);
    Ok(())
}

#[allow(dead_code)]
fn main() {
    run().expect("cone_distortion example failed");
}
