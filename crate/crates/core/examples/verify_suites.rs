// Runs every verification suite at a reduced sample count.

use qcvar::verify::{run_suite, Suite};

pub fn run() -> qcvar::Result<()> {
    for suite in Suite::ALL {
        let n = (suite.default_samples() / 20).max(2);
        for r in run_suite(suite, 11, Some(n))? {
            println!(
                "{:<16} {:<36} n={:<6} margin {:>12.4e}  {}",
                suite,
                r.check,
                r.n_samples,
                r.worst_margin,
                if r.pass { "ok" } else { "FAIL" }
            );
        }
    }
    Ok(())
}

#[allow(dead_code)]
fn main() {
    run().expect("verify_suites example failed");
}
