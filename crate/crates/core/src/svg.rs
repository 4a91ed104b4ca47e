//! Minimal SVG output: one polyline per curve.

use std::fmt::Write;

#[derive(Debug, Clone, PartialEq)]
pub struct SvgOptions {
    pub width: f64,
    pub height: f64,
    pub margin: f64,
    pub stroke: String,
    pub stroke_width: f64,
}

impl Default for SvgOptions {
    fn default() -> Self {
        SvgOptions { width: 800.0, height: 400.0, margin: 10.0, stroke: "black".into(), stroke_width: 1.0 }
    }
}

/// Twelve significant digits.
pub fn fmt12(x: f64) -> String {
    let rounded: f64 = format!("{x:.11e}").parse().unwrap_or(x);
    format!("{rounded}")
}

/// Renders the curves (y up) into one document, each as its own polyline.
/// Non-finite points are dropped.
pub fn polylines_svg(curves: &[Vec<(f64, f64)>], opts: &SvgOptions) -> String {
    let pts = curves.iter().flatten().filter(|(x, y)| x.is_finite() && y.is_finite());
    let (mut x0, mut x1, mut y0, mut y1) = (f64::INFINITY, f64::NEG_INFINITY, f64::INFINITY, f64::NEG_INFINITY);
    for &(x, y) in pts {
        x0 = x0.min(x);
        x1 = x1.max(x);
        y0 = y0.min(y);
        y1 = y1.max(y);
    }
    let sx = if x1 > x0 { (opts.width - 2.0 * opts.margin) / (x1 - x0) } else { 1.0 };
    let sy = if y1 > y0 { (opts.height - 2.0 * opts.margin) / (y1 - y0) } else { 1.0 };

    let mut s = String::new();
    let _ = writeln!(
        s,
        r#"<svg xmlns="http://www.w3.org/2000/svg" width="{}" height="{}" viewBox="0 0 {} {}">"#,
        fmt12(opts.width),
        fmt12(opts.height),
        fmt12(opts.width),
        fmt12(opts.height)
    );
    for curve in curves {
        let mut attr = String::new();
        for &(x, y) in curve.iter().filter(|(x, y)| x.is_finite() && y.is_finite()) {
            let px = opts.margin + (x - x0) * sx;
            let py = opts.height - opts.margin - (y - y0) * sy;
            if !attr.is_empty() {
                attr.push(' ');
            }
            let _ = write!(attr, "{},{}", fmt12(px), fmt12(py));
        }
        let _ = writeln!(
            s,
            r#"  <polyline fill="none" stroke="{}" stroke-width="{}" points="{}"/>"#,
            opts.stroke,
            fmt12(opts.stroke_width),
            attr
        );
    }
    s.push_str("</svg>\n");
    s
}

pub fn polyline_svg(points: &[(f64, f64)], opts: &SvgOptions) -> String {
    polylines_svg(&[points.to_vec()], opts)
}
