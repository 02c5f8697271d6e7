use std::fs;
use std::path::{Path, PathBuf};

use commlab::linalg::DEFAULT_SEED;
use commlab::models::Family;
use serde::Deserialize;

use crate::error::{contract, CliError, CliResult};

pub const CONFIG_SCHEMA: u32 = 1;
/// Largest `n` accepted in a sweep.
pub const MAX_N: usize = 2048;
pub const SEED_ENV: &str = "LAB_SEED";

/// Sweep settings read from `--config`; command-line flags take precedence.
#[derive(Debug, Clone, Default, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Config {
    pub schema: u32,
    pub family: Option<String>,
    pub n_start: Option<usize>,
    pub n_stop: Option<usize>,
    pub n_step: Option<usize>,
    pub a: Option<Vec<f64>>,
    pub b: Option<Vec<f64>>,
    #[serde(rename = "N")]
    pub big_n: Option<usize>,
    pub out: Option<PathBuf>,
    pub jobs: Option<usize>,
}

pub fn load_config(path: &Path) -> CliResult<Config> {
    let text = fs::read_to_string(path).map_err(|e| CliError::io(path, e))?;
    let cfg: Config = serde_json::from_str(&text)
        .map_err(|e| CliError::Contract(format!("{}: {e}", path.display())))?;
    if cfg.schema != CONFIG_SCHEMA {
        return contract(format!("{}: unsupported schema {} (expected {CONFIG_SCHEMA})", path.display(), cfg.schema));
    }
    Ok(cfg)
}

/// Seed for the norm estimator: `LAB_SEED` (decimal or `0x` hex) or the default.
pub fn seed_from_env() -> CliResult<u64> {
    match std::env::var(SEED_ENV) {
        Ok(s) => parse_seed(&s),
        Err(_) => Ok(DEFAULT_SEED),
    }
}

pub fn parse_seed(s: &str) -> CliResult<u64> {
    let s = s.trim();
    let parsed = match s.strip_prefix("0x").or_else(|| s.strip_prefix("0X")) {
        Some(hex) => u64::from_str_radix(hex, 16),
        None => s.parse(),
    };
    parsed.map_err(|_| CliError::Contract(format!("{SEED_ENV}={s:?} is not an unsigned integer")))
}

/// One parameter point of a sweep.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Point {
    pub n: usize,
    pub a: Option<f64>,
    pub b: Option<f64>,
}

#[derive(Debug, Clone, PartialEq)]
pub struct SweepSpec {
    pub family: Family,
    /// Inclusive `(start, stop, step)`. For `se2` this ranges over the window `K`.
    pub n_range: (usize, usize, usize),
    pub a: Vec<f64>,
    pub b: Vec<f64>,
    pub big_n: Option<usize>,
    pub output: Option<PathBuf>,
    pub jobs: usize,
}

impl SweepSpec {
    /// Checks ranges and that the parameter lists fit the family; fills in
    /// `a = [0]` where a shift is optional.
    pub fn validated(mut self) -> CliResult<Self> {
        let (start, stop, step) = self.n_range;
        let min_n = if self.family == Family::Se2 { 1 } else { 2 };
        if step == 0 || start > stop {
            return contract(format!("empty n range {start}..={stop} step {step}"));
        }
        if start < min_n {
            return contract(format!("{} needs n >= {min_n}", self.family));
        }
        if stop > MAX_N {
            return contract(format!("n_stop {stop} exceeds the cap {MAX_N}"));
        }
        if self.jobs == 0 {
            return contract("jobs must be >= 1");
        }
        let (needs_a, allows_a, needs_b) = match self.family {
            Family::Su2 | Family::Se2 => (false, false, false),
            Family::Su2Interval => (true, true, true),
            Family::Su2Caps => (true, true, false),
            Family::Ring | Family::Heisenberg => (false, true, false),
        };
        if !allows_a && !self.a.is_empty() {
            return contract(format!("{} takes no a parameter", self.family));
        }
        if needs_a && self.a.is_empty() {
            return contract(format!("{} needs at least one a value", self.family));
        }
        if allows_a && self.a.is_empty() {
            self.a.push(0.0);
        }
        match (needs_b, self.b.is_empty()) {
            (true, true) => return contract(format!("{} needs at least one b value", self.family)),
            (false, false) => return contract(format!("{} takes no b parameter", self.family)),
            _ => {}
        }
        if let Some(&bad) = self.a.iter().find(|a| !(**a >= 0.0 && **a < 1.0)) {
            return contract(format!("a = {bad} outside [0, 1)"));
        }
        if let Some(&bad) = self.b.iter().find(|b| !(**b > 0.0 && **b <= 1.0)) {
            return contract(format!("b = {bad} outside (0, 1]"));
        }
        match (self.family, self.big_n) {
            (Family::Ring, None) => return contract("ring needs --N to size the Fourier window"),
            (Family::Ring, Some(0)) => return contract("N must be >= 1"),
            _ => {}
        }
        Ok(self)
    }

    pub fn ns(&self) -> impl Iterator<Item = usize> {
        let (start, stop, step) = self.n_range;
        (start..=stop).step_by(step)
    }

    pub fn points(&self) -> Vec<Point> {
        let opt = |v: &[f64]| -> Vec<Option<f64>> {
            if v.is_empty() {
                vec![None]
            } else {
                v.iter().copied().map(Some).collect()
            }
        };
        let (avals, bvals) = (opt(&self.a), opt(&self.b));
        let mut pts = Vec::new();
        for n in self.ns() {
            for &a in &avals {
                for &b in &bvals {
                    pts.push(Point { n, a, b });
                }
            }
        }
        pts
    }
}
