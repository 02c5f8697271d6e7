use std::fmt::Write as _;
use std::path::Path;

use commlab::models::{extremal_vector, Extremal, ExtremalVector};
use commlab::Report;

use crate::error::CliResult;
use crate::output::{csv_bytes, emit, fmt_float};

pub const VECTORS_HEADER: [&str; 7] = ["m", "max_re", "max_im", "max_modulus", "min_re", "min_im", "min_modulus"];

#[derive(Debug, Clone)]
pub struct VectorPair {
    pub report: Report,
    pub max: ExtremalVector<f64>,
    pub min: ExtremalVector<f64>,
}

pub fn extremal_pair(report: Report) -> CliResult<VectorPair> {
    let max = extremal_vector(&report, Extremal::Max)?;
    let min = extremal_vector(&report, Extremal::Min)?;
    Ok(VectorPair { report, max, min })
}

pub fn vectors_csv(pair: &VectorPair) -> Vec<u8> {
    csv_bytes(
        &VECTORS_HEADER,
        pair.max.weights.iter().enumerate().map(|(i, m)| {
            let (x, y) = (pair.max.coefficients[i], pair.min.coefficients[i]);
            vec![
                m.to_f64().to_string(),
                fmt_float(x.re),
                fmt_float(x.im),
                fmt_float(x.norm()),
                fmt_float(y.re),
                fmt_float(y.im),
                fmt_float(y.norm()),
            ]
        }),
    )
}

/// Bar plot of `|c_m|` for the top vector with the bottom one as a polyline.
pub fn vectors_svg(pair: &VectorPair) -> String {
    let (w, h, pad) = (800.0, 400.0, 40.0);
    let len = pair.max.coefficients.len();
    let top = pair
        .max
        .coefficients
        .iter()
        .chain(&pair.min.coefficients)
        .map(|z| z.norm())
        .fold(0.0f64, f64::max)
        .max(1e-300);
    let slot = (w - 2.0 * pad) / len as f64;
    let ypos = |v: f64| h - pad - v / top * (h - 2.0 * pad);
    let mut s = String::new();
    let _ = writeln!(s, r#"<svg xmlns="http://www.w3.org/2000/svg" width="{w}" height="{h}" viewBox="0 0 {w} {h}">"#);
    let _ = writeln!(s, r#"<rect width="{w}" height="{h}" fill="white"/>"#);
    let _ = writeln!(
        s,
        r#"<line x1="{pad}" y1="{y}" x2="{x2}" y2="{y}" stroke="black"/>"#,
        y = h - pad,
        x2 = w - pad
    );
    for (i, z) in pair.max.coefficients.iter().enumerate() {
        let y = ypos(z.norm());
        let _ = writeln!(
            s,
            r##"<rect x="{:.2}" y="{y:.2}" width="{:.2}" height="{:.2}" fill="#4878a8"/>"##,
            pad + i as f64 * slot,
            (slot * 0.8).max(0.5),
            h - pad - y
        );
    }
    let pts: Vec<String> = pair
        .min
        .coefficients
        .iter()
        .enumerate()
        .map(|(i, z)| format!("{:.2},{:.2}", pad + (i as f64 + 0.4) * slot, ypos(z.norm())))
        .collect();
    let _ = writeln!(s, r##"<polyline points="{}" fill="none" stroke="#c04040"/>"##, pts.join(" "));
    let (first, last) = (pair.max.weights.first(), pair.max.weights.last());
    if let (Some(f), Some(l)) = (first, last) {
        let _ = writeln!(s, r#"<text x="{pad}" y="{}" font-size="12">m = {f}</text>"#, h - pad / 3.0);
        let _ = writeln!(s, r#"<text x="{}" y="{}" font-size="12" text-anchor="end">m = {l}</text>"#, w - pad, h - pad / 3.0);
    }
    s.push_str("</svg>\n");
    s
}

pub fn cmd_vectors(report: Report, out: Option<&Path>, svg: Option<&Path>) -> CliResult<VectorPair> {
    let pair = extremal_pair(report)?;
    emit(out, &vectors_csv(&pair))?;
    if let Some(p) = svg {
        emit(Some(p), vectors_svg(&pair).as_bytes())?;
    }
    Ok(pair)
}
