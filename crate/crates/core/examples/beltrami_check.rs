// Per-cell derivatives of the lacunary map and the reduced Beltrami
// inequality `|f_z̄| ≤ k·re f_z` on random samples.

use num_complex::Complex64;
use qcvar::planar::{beltrami_report, derivative_at, LacunaryParams};
use qcvar::verify::strip_samples;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

pub fn run() -> qcvar::Result<()> {
    let params = LacunaryParams::new(0.25)?;
    println!("eps = {}, L = {:.6}, k = {:.6}", params.eps(), params.lipschitz(), params.k());

    let z = Complex64::new(2.6, 0.35);
    if let Some(d) = derivative_at(z, &params) {
        println!("at {z}: f_z = {}, f_zbar = {}, cells {:?}", d.f_z, d.f_zbar, d.cells);
    }

    let mut rng = ChaCha8Rng::seed_from_u64(1);
    let samples = strip_samples(5000, &mut rng);
    let r = beltrami_report(&samples, &params);
    println!(
        "{} samples: reduced margin {:.4}, band margin {:.4}, violations {}/{}, log constant {:.4} <= {:.4}",
        r.evaluated,
        r.worst_reduced_margin,
        r.worst_band_margin,
        r.reduced_violations,
        r.band_violations,
        r.log_constant_fit,
        r.log_constant_bound
    );
    assert!(r.pass);
    Ok(())
}

#[allow(dead_code)]
fn main() {
    run().expect("beltrami_check example failed");
}
