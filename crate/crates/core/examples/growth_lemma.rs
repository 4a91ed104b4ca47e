// Concatenation and growth estimates for a path: the union bound over a
// split, and the growth bound driven by an estimated quasisymmetry modulus.

use qcvar::cli::curve_path;
use qcvar::variation::{delta_modulus, growth_bound_report, union_bound_report};
use qcvar::{PhiSpec, QuasisymmetryModulus};

pub fn run() -> qcvar::Result<()> {
    let path = curve_path(0.0, 8.0, 0.0, 4, 0.25)?;
    let phi = PhiSpec::LogDamped(1.0);
    let u = union_bound_report(phi, &path, &[0, 64, 128, 256])?;
    println!("union bound: {:.6} <= {:.6}: {}", u.lhs, u.rhs, u.holds);

    let n = path.len();
    let (eta, stats) = QuasisymmetryModulus::estimate_on_line(&path, &[1.0, 0.0], &[0.25, 0.5, 1.0])?;
    println!("eta(1) ~ {:.4} from {} triples", eta.eta1(), stats.triples);
    // source points on the line sit at 8t
    let delta = delta_modulus(&[0.0, 0.0], &[8.0, 0.0], path.point(0), path.point(n - 1))?;
    let g = growth_bound_report(&path, delta, &eta)?;
    println!("growth bound: {:.6} <= {:.6}: {}", g.lhs, g.rhs, g.holds);
    println!("rarefaction chain {:?}", g.chain);
    Ok(())
}

#[allow(dead_code)]
fn main() {
    run().expect("growth_lemma example failed");
}
