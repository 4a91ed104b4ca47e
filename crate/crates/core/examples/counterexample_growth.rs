// The trace `h` of the lacunary map has variation `V_N` on the `4ᴺ`-grid
// growing like `√N`, so `h` is not of bounded variation.

use qcvar::cli::counterexample_table;
use qcvar::planar::{h_eval, vn, VnMethod};

pub fn run() -> qcvar::Result<()> {
    for x in [2.0, 3.0, 4.0, 0.5, 1.0] {
        println!("h({x}) = {}", h_eval(x));
    }
    let table = counterexample_table(8, 0.25)?;
    println!("{:>3} {:>14} {:>10} {:>12} {:>12}", "N", "V_N", "V_N/sqrt N", "floor q=1/4", "floor q=3/2");
    for r in &table.rows {
        println!(
            "{:>3} {:>14.9} {:>10.6} {:>12.6} {:>12.6}",
            r.n, r.v_n, r.v_n_over_sqrt_n, r.jensen_floor_q0_25, r.jensen_floor_q1_5
        );
        assert!(r.methods_agree);
    }
    println!("V_10 = {}", vn(10, VnMethod::DerivativeIntegral));
    Ok(())
}

#[allow(dead_code)]
fn main() {
    run().expect("counterexample_growth example failed");
}
