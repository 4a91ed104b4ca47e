// Sub-partition φ-variation of a sampled path under several gauges.

use qcvar::planar::{dyadic_grid, h_eval};
use qcvar::variation::{jensen_floor, phi_sum};
use qcvar::{sup_variation, PhiSpec, SampledPath};

pub fn run() -> qcvar::Result<()> {
    let path = SampledPath::scalar(&[0.0, 1.0, 3.0, 2.0, 5.0])?;
    for phi in ["pow:1", "pow:2", "log:0.5", "log:2"] {
        let phi: PhiSpec = phi.parse()?;
        let r = sup_variation(phi, &path)?;
        println!(
            "{phi:>8}  consecutive {:>9.5}  sup {:>9.5}  chain {:?}",
            r.consecutive_sum, r.dp_supremum, r.argmax_indices
        );
    }

    // the real trace of the lacunary map, sampled at its dyadic breakpoints
    let xs = dyadic_grid(5);
    let trace = SampledPath::scalar(&xs.iter().map(|&x| h_eval(x)).collect::<Vec<_>>())?;
    let phi = PhiSpec::LogDamped(1.5);
    let r = sup_variation(phi, &trace)?;
    println!("trace depth 5, {phi}: consecutive {:.6}  sup {:.6}", r.consecutive_sum, r.dp_supremum);
    let total = phi_sum(PhiSpec::Power(1.0), &trace)?;
    println!("Jensen floor {:.6}", jensen_floor(phi, total, (xs.len() - 1) as u64)?);
    Ok(())
}

#[allow(dead_code)]
fn main() {
    run().expect("phi_variation example failed");
}
