use std::cmp::Ordering;
use std::time::{Instant, SystemTime, UNIX_EPOCH};

use commlab::linalg::NormOptions;
use commlab::models::{
    heisenberg_commutator_with, ring_commutator_with, ring_window, se2_commutator_with, su2_caps_commutator_with,
    su2_commutator_with, Family,
};
use commlab::Report;
use rayon::prelude::*;
use serde_json::json;

use crate::error::{CliError, CliResult};
use crate::output::{csv_bytes, emit, fmt_float, fmt_opt, sidecar_path};
use crate::spec::{Point, SweepSpec};

pub const NORMS_HEADER: [&str; 7] = ["family", "n", "a", "b", "norm", "n_mod_4", "wall_ms"];

#[derive(Debug, Clone, PartialEq)]
pub struct NormRow {
    pub family: Family,
    pub n: usize,
    pub a: Option<f64>,
    pub b: Option<f64>,
    pub norm: f64,
    pub wall_ms: f64,
}

fn opt_cmp(x: Option<f64>, y: Option<f64>) -> Ordering {
    match (x, y) {
        (Some(x), Some(y)) => x.total_cmp(&y),
        _ => x.is_some().cmp(&y.is_some()),
    }
}

/// Builds one commutator. `big_n` sizes the ring window.
pub fn build_report(family: Family, p: Point, big_n: Option<usize>, opts: &NormOptions) -> CliResult<Report> {
    let a = p.a.unwrap_or(0.0);
    Ok(match family {
        Family::Su2 => su2_commutator_with(p.n, 0.0, 1.0, opts)?,
        Family::Su2Interval => su2_commutator_with(p.n, a, p.b.unwrap_or(1.0), opts)?,
        Family::Su2Caps => su2_caps_commutator_with(p.n, a, opts)?,
        Family::Ring => {
            let big_n = big_n.ok_or_else(|| CliError::Contract("ring needs N".into()))?;
            ring_commutator_with(p.n, ring_window(p.n, big_n, a), a, opts)?
        }
        Family::Heisenberg => heisenberg_commutator_with(p.n, a, opts)?,
        Family::Se2 => se2_commutator_with(p.n, opts)?,
    })
}

pub fn evaluate(family: Family, p: Point, big_n: Option<usize>, opts: &NormOptions) -> CliResult<f64> {
    Ok(build_report(family, p, big_n, opts)?.norm)
}

/// Evaluates every point on `spec.jobs` threads and sorts by `(n, a, b)`.
pub fn run_sweep(spec: &SweepSpec, opts: &NormOptions) -> CliResult<Vec<NormRow>> {
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(spec.jobs)
        .build()
        .map_err(|e| CliError::Contract(format!("thread pool: {e}")))?;
    let mut rows = pool.install(|| {
        spec.points()
            .into_par_iter()
            .map(|p| {
                let t = Instant::now();
                let norm = evaluate(spec.family, p, spec.big_n, opts)?;
                let wall_ms = t.elapsed().as_secs_f64() * 1e3;
                Ok(NormRow { family: spec.family, n: p.n, a: p.a, b: p.b, norm, wall_ms })
            })
            .collect::<CliResult<Vec<_>>>()
    })?;
    rows.sort_by(|x, y| x.n.cmp(&y.n).then(opt_cmp(x.a, y.a)).then(opt_cmp(x.b, y.b)));
    Ok(rows)
}

/// CSV bytes; `wall_ms` is written as 0 unless `wall_clock` is set, so that
/// reruns are byte-identical.
pub fn norms_csv(rows: &[NormRow], wall_clock: bool) -> Vec<u8> {
    csv_bytes(
        &NORMS_HEADER,
        rows.iter().map(|r| {
            vec![
                r.family.to_string(),
                r.n.to_string(),
                fmt_opt(r.a),
                fmt_opt(r.b),
                fmt_float(r.norm),
                (r.n % 4).to_string(),
                if wall_clock { format!("{:.3}", r.wall_ms) } else { "0".into() },
            ]
        }),
    )
}

/// Runs the sweep and writes the CSV, plus `<out>.meta.json` with timings
/// when writing to a file.
pub fn cmd_norms(spec: &SweepSpec, opts: &NormOptions, wall_clock: bool) -> CliResult<Vec<NormRow>> {
    let t = Instant::now();
    let rows = run_sweep(spec, opts)?;
    emit(spec.output.as_deref(), &norms_csv(&rows, wall_clock))?;
    if let Some(out) = &spec.output {
        let meta = json!({
            "schema": 1,
            "command": "norms",
            "family": spec.family.as_str(),
            "points": rows.len(),
            "jobs": spec.jobs,
            "seed": opts.seed,
            "created_unix": SystemTime::now().duration_since(UNIX_EPOCH).map(|d| d.as_secs()).unwrap_or(0),
            "total_wall_ms": t.elapsed().as_secs_f64() * 1e3,
            "row_wall_ms": rows.iter().map(|r| r.wall_ms).collect::<Vec<_>>(),
        });
        let side = sidecar_path(out);
        let text = serde_json::to_string_pretty(&meta).expect("plain JSON") + "\n";
        emit(Some(&side), text.as_bytes())?;
    }
    Ok(rows)
}
