// Samples the lacunary map along `[0, 8]` and along a raised line and
// writes both image curves as one SVG document.

use num_complex::Complex64;
use qcvar::cli::curve_path;
use qcvar::svg::{polylines_svg, SvgOptions};

pub fn run() -> qcvar::Result<()> {
    let curves: Vec<Vec<(f64, f64)>> = [0.0, 0.5]
        .iter()
        .map(|&height| curve_path(0.0, 8.0, height, 5, 0.25).map(|p| p.points().map(|q| (q[0], q[1])).collect()))
        .collect::<qcvar::Result<_>>()?;
    let svg = polylines_svg(&curves, &SvgOptions { height: 300.0, ..SvgOptions::default() });

    let out = std::env::temp_dir().join("qcvar_curve.svg");
    std::fs::write(&out, &svg)?;
    println!("wrote {} ({} bytes, {} points per curve)", out.display(), svg.len(), curves[0].len());

    let top = curves[1].iter().map(|p| Complex64::new(p.0, p.1)).fold(0.0f64, |m, w| m.max(w.im));
    println!("highest point of the raised image: {top:.6}");
    Ok(())
}

#[allow(dead_code)]
fn main() {
    run().expect("curve_svg example failed");
}
