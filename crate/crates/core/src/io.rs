//! CSV and JSON readers and writers for paths and matrices.

use std::io::{Read, Write};

use nalgebra::DMatrix;

use crate::error::{Error, Result};
use crate::path::SampledPath;

/// Column names for a path of dimension `dim`: `t,x` / `t,x,y` / `t,x1,..,xd`.
pub fn path_header(dim: usize) -> Vec<String> {
    let mut h = vec!["t".to_string()];
    match dim {
        1 => h.push("x".into()),
        2 => h.extend(["x".into(), "y".into()]),
        _ => h.extend((1..=dim).map(|k| format!("x{k}"))),
    }
    h
}

/// Seventeen significant digits, enough to read back the same `f64`.
pub fn fmt_exact(x: f64) -> String {
    format!("{x:.16e}")
}

pub fn write_path_csv<W: Write>(path: &SampledPath, out: W) -> Result<()> {
    let mut w = csv::Writer::from_writer(out);
    w.write_record(path_header(path.dim())).map_err(csv_err)?;
    for (i, &t) in path.params().iter().enumerate() {
        let mut row = vec![fmt_exact(t)];
        row.extend(path.point(i).iter().map(|&x| fmt_exact(x)));
        w.write_record(&row).map_err(csv_err)?;
    }
    w.flush()?;
    Ok(())
}

/// Reads `t,x1,..,xd` rows after a header line.
pub fn read_path_csv<R: Read>(input: R) -> Result<SampledPath> {
    let mut rdr = csv::ReaderBuilder::new().has_headers(true).trim(csv::Trim::All).from_reader(input);
    let width = rdr.headers().map_err(csv_err)?.len();
    if width < 2 {
        return Err(Error::Parse { line: 1, msg: "expected a header with t and at least one coordinate".into() });
    }
    let mut params = Vec::new();
    let mut coords = Vec::new();
    for rec in rdr.records() {
        let rec = rec.map_err(csv_err)?;
        let line = rec.position().map_or(0, |p| p.line());
        if rec.len() != width {
            return Err(Error::Parse { line, msg: format!("expected {width} fields, found {}", rec.len()) });
        }
        for (k, field) in rec.iter().enumerate() {
            let v: f64 = field.parse().map_err(|_| Error::Parse { line, msg: format!("not a number: {field:?}") })?;
            if k == 0 {
                params.push(v);
            } else {
                coords.push(v);
            }
        }
    }
    SampledPath::new(params, width - 1, coords)
}

/// Row-major numeric CSV without a header.
pub fn read_matrix_csv<R: Read>(input: R) -> Result<DMatrix<f64>> {
    let mut rdr = csv::ReaderBuilder::new().has_headers(false).trim(csv::Trim::All).from_reader(input);
    let mut rows: Vec<Vec<f64>> = Vec::new();
    for rec in rdr.records() {
        let rec = rec.map_err(csv_err)?;
        let line = rec.position().map_or(0, |p| p.line());
        let row = rec
            .iter()
            .map(|f| f.parse::<f64>().map_err(|_| Error::Parse { line, msg: format!("not a number: {f:?}") }))
            .collect::<Result<Vec<_>>>()?;
        rows.push(row);
    }
    rows_to_matrix(rows)
}

/// A JSON array of rows.
pub fn read_matrix_json<R: Read>(input: R) -> Result<DMatrix<f64>> {
    let rows: Vec<Vec<f64>> = serde_json::from_reader(input)?;
    rows_to_matrix(rows)
}

pub fn matrix_to_rows(m: &DMatrix<f64>) -> Vec<Vec<f64>> {
    m.row_iter().map(|r| r.iter().copied().collect()).collect()
}

fn rows_to_matrix(rows: Vec<Vec<f64>>) -> Result<DMatrix<f64>> {
    let n = rows.len();
    let m = rows.first().map_or(0, Vec::len);
    if n == 0 || m == 0 {
        return Err(Error::Parse { line: 1, msg: "empty matrix".into() });
    }
    if let Some(i) = rows.iter().position(|r| r.len() != m) {
        return Err(Error::Parse {
            line: i as u64 + 1,
            msg: format!("row has {} entries, expected {m}", rows[i].len()),
        });
    }
    Ok(DMatrix::from_row_iterator(n, m, rows.into_iter().flatten()))
}

/// Reads one number per line, skipping blanks and `#` comments.
pub fn read_numbers<R: Read>(mut input: R) -> Result<Vec<f64>> {
    let mut text = String::new();
    input.read_to_string(&mut text)?;
    let mut out = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        for tok in line.split(|c: char| c == ',' || c.is_whitespace()).filter(|t| !t.is_empty()) {
            out.push(
                tok.parse().map_err(|_| Error::Parse { line: i as u64 + 1, msg: format!("not a number: {tok:?}") })?,
            );
        }
    }
    Ok(out)
}

fn csv_err(e: csv::Error) -> Error {
    let line = e.position().map_or(0, |p| p.line());
    match e.into_kind() {
        csv::ErrorKind::Io(io) => Error::Io(io),
        other => Error::Parse { line, msg: format!("{other:?}") },
    }
}
