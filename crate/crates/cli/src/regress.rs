use std::path::Path;

use serde::{Deserialize, Serialize};

use crate::error::{contract, CliError, CliResult};

/// Norms within this distance of 1/2 count as exactly 1/2.
pub const HALF_TOL: f64 = 1e-10;

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct RegressionResult {
    pub slope: f64,
    pub intercept: f64,
    pub r2: f64,
    pub points_used: usize,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
#[serde(untagged)]
pub enum RegressOutcome {
    Fit(RegressionResult),
    /// Every selected norm is 1/2, so `ln(1/2 - norm)` is undefined.
    Degenerate { degenerate: String, points: usize },
}

#[derive(Debug, Clone, Default)]
pub struct RegressFilter {
    pub residue: Option<usize>,
    pub family: Option<String>,
    pub n_min: Option<usize>,
    pub n_max: Option<usize>,
}

#[derive(Debug, Deserialize)]
struct Row {
    family: String,
    n: usize,
    norm: f64,
}

pub fn read_points(path: &Path, filter: &RegressFilter) -> CliResult<Vec<(usize, f64)>> {
    let mut rdr = csv::Reader::from_path(path).map_err(|e| csv_error(path, e))?;
    let mut pts = Vec::new();
    for rec in rdr.deserialize() {
        let row: Row = rec.map_err(|e| csv_error(path, e))?;
        let keep = filter.residue.is_none_or(|r| row.n % 4 == r)
            && filter.family.as_ref().is_none_or(|f| *f == row.family)
            && filter.n_min.is_none_or(|m| row.n >= m)
            && filter.n_max.is_none_or(|m| row.n <= m);
        if keep {
            pts.push((row.n, row.norm));
        }
    }
    Ok(pts)
}

fn csv_error(path: &Path, e: csv::Error) -> CliError {
    if e.is_io_error() {
        match e.into_kind() {
            csv::ErrorKind::Io(io) => CliError::io(path, io),
            _ => unreachable!(),
        }
    } else {
        CliError::Contract(format!("{}: {e}", path.display()))
    }
}

/// Least squares of `ln(1/2 - norm)` against `ln n`.
pub fn regress(points: &[(usize, f64)]) -> CliResult<RegressOutcome> {
    if points.is_empty() {
        return contract("no rows left after filtering");
    }
    let usable: Vec<(f64, f64)> = points
        .iter()
        .filter(|&&(_, norm)| norm < 0.5 - HALF_TOL)
        .map(|&(n, norm)| ((n as f64).ln(), (0.5 - norm).ln()))
        .collect();
    if usable.is_empty() {
        return Ok(RegressOutcome::Degenerate { degenerate: "exact half".into(), points: points.len() });
    }
    if usable.len() < 2 {
        return contract(format!("need at least 2 rows with norm < 1/2, have {}", usable.len()));
    }
    let k = usable.len() as f64;
    let mx = usable.iter().map(|p| p.0).sum::<f64>() / k;
    let my = usable.iter().map(|p| p.1).sum::<f64>() / k;
    let sxx: f64 = usable.iter().map(|p| (p.0 - mx).powi(2)).sum();
    let sxy: f64 = usable.iter().map(|p| (p.0 - mx) * (p.1 - my)).sum();
    let syy: f64 = usable.iter().map(|p| (p.1 - my).powi(2)).sum();
    if sxx == 0.0 {
        return contract("all selected rows share the same n");
    }
    let slope = sxy / sxx;
    let intercept = my - slope * mx;
    let ss_res: f64 = usable.iter().map(|p| (p.1 - intercept - slope * p.0).powi(2)).sum();
    let r2 = if syy == 0.0 { 1.0 } else { (1.0 - ss_res / syy).clamp(0.0, 1.0) };
    Ok(RegressOutcome::Fit(RegressionResult { slope, intercept, r2, points_used: usable.len() }))
}

pub fn cmd_regress(path: &Path, filter: &RegressFilter) -> CliResult<RegressOutcome> {
    regress(&read_points(path, filter)?)
}
