//! Command implementations behind the `qcvar` binary. Each returns the bytes
//! it would write, so outputs can be compared directly.

use std::fmt;
use std::io::Write;
use std::str::FromStr;

use num_complex::Complex64;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::io::{fmt_exact, write_path_csv};
use crate::path::SampledPath;
use crate::phi::PhiSpec;
use crate::planar::lacunary::MAX_VN_DEPTH;
use crate::planar::{build_parallel_map, f_eval, vn, CoefficientMargins, LacunaryParams, SumConstruction, VnMethod};
use crate::report::{all_pass, CheckReport};
use crate::svg::{polylines_svg, SvgOptions};
use crate::variation::{jensen_floor, sup_variation, VariationReport};
use crate::verify::{run_suite, Suite};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Format {
    Csv,
    Json,
    Svg,
}

impl FromStr for Format {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "csv" => Ok(Format::Csv),
            "json" => Ok(Format::Json),
            "svg" => Ok(Format::Svg),
            _ => Err(Error::domain(format!("unknown format {s:?}, expected csv, json or svg"))),
        }
    }
}

impl fmt::Display for Format {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Format::Csv => "csv",
            Format::Json => "json",
            Format::Svg => "svg",
        })
    }
}

fn unsupported(cmd: &str, format: Format) -> Error {
    Error::domain(format!("{cmd} does not support --format {format}"))
}

pub fn to_json<T: Serialize>(value: &T) -> Result<Vec<u8>> {
    let mut out = serde_json::to_vec_pretty(value)?;
    out.push(b'\n');
    Ok(out)
}

/// Writes to the file at `out`, or to standard output for `-`.
pub fn write_output(out: &str, bytes: &[u8]) -> Result<()> {
    if out == "-" {
        let mut stdout = std::io::stdout().lock();
        stdout.write_all(bytes)?;
        stdout.flush()?;
    } else {
        std::fs::write(out, bytes)?;
    }
    Ok(())
}

/// `f` on the horizontal segment from `start + i·height` to `end + i·height`
/// at `4ᴺ + 1` equally spaced points. Parameters are `j/4ᴺ`.
pub fn curve_path(start: f64, end: f64, height: f64, depth: u32, eps: f64) -> Result<SampledPath> {
    if depth > MAX_VN_DEPTH {
        return Err(Error::Resource(format!("depth {depth} exceeds {MAX_VN_DEPTH}")));
    }
    if !(start.is_finite() && end.is_finite() && height.is_finite()) || start >= end {
        return Err(Error::domain("need finite start < end"));
    }
    let params = LacunaryParams::new(eps)?;
    let n = 1u64 << (2 * depth);
    let mut ts = Vec::with_capacity(n as usize + 1);
    let mut vals = Vec::with_capacity(n as usize + 1);
    for j in 0..=n {
        let s = j as f64 / n as f64;
        let x = if j == n { end } else { start + (end - start) * s };
        ts.push(s);
        vals.push(f_eval(Complex64::new(x, height), &params));
    }
    SampledPath::planar_with_params(ts, &vals)
}

fn path_polyline(path: &SampledPath) -> Vec<(f64, f64)> {
    path.points().map(|p| (p[0], p.get(1).copied().unwrap_or(0.0))).collect()
}

pub fn cmd_curve(start: f64, end: f64, height: f64, depth: u32, eps: f64, format: Format) -> Result<Vec<u8>> {
    let path = curve_path(start, end, height, depth, eps)?;
    match format {
        Format::Csv => {
            let mut buf = Vec::new();
            write_path_csv(&path, &mut buf)?;
            Ok(buf)
        }
        Format::Svg => Ok(polylines_svg(&[path_polyline(&path)], &SvgOptions::default()).into_bytes()),
        Format::Json => unsupported("curve", format).into_err(),
    }
}

pub fn cmd_variation(path: &SampledPath, phi: PhiSpec, format: Format) -> Result<Vec<u8>> {
    let report: VariationReport = sup_variation(phi, path)?;
    match format {
        Format::Json => to_json(&report),
        _ => unsupported("variation", format).into_err(),
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct CounterexampleRow {
    pub n: u32,
    pub v_n: f64,
    pub v_n_over_sqrt_n: f64,
    /// `4ᴺ·φ(V_N/4ᴺ)` for `φ = LogDamped(0.25)`
    pub jensen_floor_q0_25: f64,
    /// `4ᴺ·φ(V_N/4ᴺ)` for `φ = LogDamped(1.5)`
    pub jensen_floor_q1_5: f64,
    pub methods_agree: bool,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct CounterexampleTable {
    pub eps: f64,
    /// `V_N` is the variation of the trace `h`; `im f = ε·h` on the real line.
    pub rows: Vec<CounterexampleRow>,
}

pub fn counterexample_table(n_max: u32, eps: f64) -> Result<CounterexampleTable> {
    if n_max > MAX_VN_DEPTH {
        return Err(Error::Resource(format!("N_max {n_max} exceeds {MAX_VN_DEPTH}")));
    }
    LacunaryParams::new(eps)?;
    let mut rows = Vec::new();
    for n in 1..=n_max {
        let a = vn(n, VnMethod::PartitionSum);
        let b = vn(n, VnMethod::DerivativeIntegral);
        let count = 1u64 << (2 * n);
        rows.push(CounterexampleRow {
            n,
            v_n: a,
            v_n_over_sqrt_n: a / (n as f64).sqrt(),
            jensen_floor_q0_25: jensen_floor(PhiSpec::LogDamped(0.25), a, count)?,
            jensen_floor_q1_5: jensen_floor(PhiSpec::LogDamped(1.5), a, count)?,
            methods_agree: a == b,
        });
    }
    Ok(CounterexampleTable { eps, rows })
}

pub fn cmd_counterexample(n_max: u32, eps: f64, format: Format) -> Result<Vec<u8>> {
    let table = counterexample_table(n_max, eps)?;
    match format {
        Format::Json => to_json(&table),
        Format::Csv => {
            let mut w = csv::Writer::from_writer(Vec::new());
            let csv_err = |e: csv::Error| Error::domain(e.to_string());
            w.write_record(["n", "v_n", "v_n_over_sqrt_n", "jensen_floor_q0_25", "jensen_floor_q1_5", "methods_agree"])
                .map_err(csv_err)?;
            for r in &table.rows {
                w.write_record([
                    r.n.to_string(),
                    fmt_exact(r.v_n),
                    fmt_exact(r.v_n_over_sqrt_n),
                    fmt_exact(r.jensen_floor_q0_25),
                    fmt_exact(r.jensen_floor_q1_5),
                    r.methods_agree.to_string(),
                ])
                .map_err(csv_err)?;
            }
            w.into_inner().map_err(|e| Error::domain(e.to_string()))
        }
        Format::Svg => unsupported("counterexample", format).into_err(),
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct VerifyOutput {
    pub seed: u64,
    pub pass: bool,
    pub reports: Vec<CheckReport>,
}

/// Runs the named suites (`all` for every suite) in order.
pub fn verify(suites: &[String], seed: u64, n: Option<usize>) -> Result<VerifyOutput> {
    let mut list = Vec::new();
    for s in suites {
        if s == "all" {
            list.extend(Suite::ALL);
        } else {
            list.push(s.parse::<Suite>()?);
        }
    }
    if list.is_empty() {
        return Err(Error::domain("no suite given"));
    }
    let mut reports = Vec::new();
    for suite in list {
        for mut r in run_suite(suite, seed, n)? {
            r.check = format!("{suite}/{}", r.check);
            reports.push(r);
        }
    }
    Ok(VerifyOutput { seed, pass: all_pass(&reports), reports })
}

pub fn cmd_verify(suites: &[String], seed: u64, n: Option<usize>, format: Format) -> Result<(Vec<u8>, bool)> {
    if format != Format::Json {
        return unsupported("verify", format).into_err();
    }
    let out = verify(suites, seed, n)?;
    Ok((to_json(&out)?, out.pass))
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ConstructOutput {
    pub heights: Vec<f64>,
    pub gaps: Vec<f64>,
    pub coeffs: Vec<f64>,
    pub m_trunc: usize,
    pub margins: Vec<CoefficientMargins>,
    pub strict: bool,
    pub growth_constant: f64,
}

impl From<&SumConstruction> for ConstructOutput {
    fn from(s: &SumConstruction) -> Self {
        ConstructOutput {
            heights: s.heights.clone(),
            gaps: s.gaps.clone(),
            coeffs: s.coeffs.clone(),
            m_trunc: s.m_trunc,
            margins: s.margins(),
            strict: s.strict(),
            growth_constant: s.growth_constant(),
        }
    }
}

/// Images `F(L_j)` of the segments `[0, 8] + i b_j`, one polyline each.
pub fn construct_images(s: &SumConstruction, depth: u32) -> Vec<Vec<(f64, f64)>> {
    let n = 1u64 << (2 * depth.min(8));
    s.heights
        .iter()
        .map(|&b| {
            (0..=n)
                .map(|j| {
                    let w = s.eval(Complex64::new(8.0 * j as f64 / n as f64, b));
                    (w.re, w.im)
                })
                .collect()
        })
        .collect()
}

pub fn cmd_construct(heights: &[f64], m_trunc: Option<usize>, eps: f64, depth: u32, format: Format) -> Result<Vec<u8>> {
    let params = LacunaryParams::new(eps)?;
    let s = build_parallel_map(heights, m_trunc.unwrap_or(heights.len()), params)?;
    match format {
        Format::Json => to_json(&ConstructOutput::from(&s)),
        Format::Svg => Ok(polylines_svg(&construct_images(&s, depth), &SvgOptions::default()).into_bytes()),
        Format::Csv => unsupported("construct", format).into_err(),
    }
}

trait IntoErr<T> {
    fn into_err(self) -> Result<T>;
}

impl<T> IntoErr<T> for Error {
    fn into_err(self) -> Result<T> {
        Err(self)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::io::read_path_csv;

    #[test]
    fn curve_depth_one() {
        let p = curve_path(0.0, 8.0, 0.0, 1, 0.25).unwrap();
        let ys: Vec<f64> = p.points().map(|q| q[1]).collect();
        assert_eq!(ys, vec![0.0, 0.0, 0.5, 0.0, 0.0]);
        let p = curve_path(0.0, 8.0, 0.0, 0, 0.25).unwrap();
        assert_eq!(p.len(), 2);
        assert!(curve_path(0.0, 8.0, 0.0, 13, 0.25).is_err());
    }

    #[test]
    fn curve_csv_round_trip() {
        let bytes = cmd_curve(0.0, 8.0, 0.0, 3, 0.25, Format::Csv).unwrap();
        assert!(bytes.starts_with(b"t,x,y\n"));
        let back = read_path_csv(&bytes[..]).unwrap();
        assert_eq!(back, curve_path(0.0, 8.0, 0.0, 3, 0.25).unwrap());
    }

    #[test]
    fn variation_example() {
        let p = SampledPath::scalar(&[0.0, 1.0, 3.0]).unwrap();
        let out = cmd_variation(&p, PhiSpec::Power(2.0), Format::Json).unwrap();
        let v: serde_json::Value = serde_json::from_slice(&out).unwrap();
        assert_eq!(v["dp_supremum"], 9.0);
        assert_eq!(v["phi"], "pow:2");
    }

    #[test]
    fn counterexample_rows() {
        let t = counterexample_table(2, 0.25).unwrap();
        assert_eq!(t.rows[0].v_n, 4.0);
        assert_eq!(t.rows[1].v_n, 6.0);
        assert!(t.rows.iter().all(|r| r.methods_agree));
        assert!(counterexample_table(13, 0.25).is_err());
    }

    #[test]
    fn construct_examples() {
        let out = cmd_construct(&[0.0, 1.0], None, 0.25, 2, Format::Json).unwrap();
        let v: serde_json::Value = serde_json::from_slice(&out).unwrap();
        assert_eq!(v["strict"], true);
        assert!(cmd_construct(&[0.0, 0.0], None, 0.25, 2, Format::Json).is_err());
        let svg = String::from_utf8(cmd_construct(&[0.0, 1.0, 2.5], None, 0.25, 2, Format::Svg).unwrap()).unwrap();
        assert_eq!(svg.matches("<polyline").count(), 3);
    }

    #[test]
    fn verify_unknown_suite() {
        assert!(verify(&["bogus".into()], 0, None).is_err());
    }
}
