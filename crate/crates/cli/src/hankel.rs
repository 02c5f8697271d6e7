use std::path::Path;

use commlab::hankel::{nehari_bound, power_essential_radius, truncated_norm, ArcSymbol};
use rayon::prelude::*;

use crate::error::{contract, CliError, CliResult};
use crate::output::{csv_bytes, emit, fmt_float};

pub const HANKEL_HEADER: [&str; 5] = ["N", "a", "truncated_norm", "nehari_upper", "power_lower"];

#[derive(Debug, Clone, PartialEq)]
pub struct HankelRow {
    pub big_n: usize,
    pub a: f64,
    pub truncated_norm: f64,
    pub nehari_upper: f64,
    pub power_lower: f64,
}

/// Truncated norms `||[H_{E_a}]_N||` with the two certificates, ordered by `(a, N)`.
pub fn hankel_rows(sizes: &[usize], shifts: &[f64], jobs: usize) -> CliResult<Vec<HankelRow>> {
    if sizes.is_empty() || shifts.is_empty() {
        return contract("hankel needs at least one N and one a");
    }
    if sizes.contains(&0) {
        return contract("N must be >= 1");
    }
    let mut sizes = sizes.to_vec();
    sizes.sort_unstable();
    sizes.dedup();
    let mut work = Vec::new();
    for &a in shifts {
        let sym = ArcSymbol::<f64>::new(a)?;
        for &n in &sizes {
            work.push((sym, n));
        }
    }
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(jobs.max(1))
        .build()
        .map_err(|e| CliError::Contract(format!("thread pool: {e}")))?;
    let rows = pool.install(|| {
        work.into_par_iter()
            .map(|(sym, n)| {
                Ok(HankelRow {
                    big_n: n,
                    a: sym.a,
                    truncated_norm: truncated_norm(&sym, n)?,
                    nehari_upper: nehari_bound(&sym),
                    power_lower: power_essential_radius(&sym),
                })
            })
            .collect::<CliResult<Vec<_>>>()
    })?;
    Ok(rows)
}

pub fn hankel_csv(rows: &[HankelRow]) -> Vec<u8> {
    csv_bytes(
        &HANKEL_HEADER,
        rows.iter().map(|r| {
            vec![
                r.big_n.to_string(),
                fmt_float(r.a),
                fmt_float(r.truncated_norm),
                fmt_float(r.nehari_upper),
                fmt_float(r.power_lower),
            ]
        }),
    )
}

pub fn cmd_hankel(sizes: &[usize], shifts: &[f64], jobs: usize, out: Option<&Path>) -> CliResult<Vec<HankelRow>> {
    let rows = hankel_rows(sizes, shifts, jobs)?;
    emit(out, &hankel_csv(&rows))?;
    Ok(rows)
}
