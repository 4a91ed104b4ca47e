// A single map whose image of each of several horizontal lines is
// non-rectifiable: coefficients, their margins, and the Lipschitz bound on
// the part of the sum that does not belong to a given line.

use qcvar::planar::{build_parallel_map, LacunaryParams};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

pub fn run() -> qcvar::Result<()> {
    let heights = [0.0, 1.0, -0.5, 0.25, 3.0];
    let s = build_parallel_map(&heights, heights.len(), LacunaryParams::new(0.25)?)?;
    for (m, (c, margin)) in s.coeffs.iter().zip(s.margins()).enumerate() {
        println!("line {m}: b = {:>5}, c = {c:.6e}, margins {:.3e} / {:.3e}", heights[m], margin.height, margin.gap);
    }
    println!("all strict: {}", s.strict());

    let mut rng = ChaCha8Rng::seed_from_u64(5);
    for j in 0..heights.len() {
        let r = s.remainder_lipschitz(j, 200, 16.0, 1e-3, &mut rng);
        println!("R_{j}: empirical {:.5} <= bound {:.5}: {}", r.empirical, r.bound, r.holds);
    }
    Ok(())
}

#[allow(dead_code)]
fn main() {
    run().expect("parallel_lines example failed");
}
