//! Command-line front end: parameter sweeps, truncated Hankel norms,
//! regression of the approach to 1/2, extremal vectors and validation.

pub mod error;
pub mod hankel;
pub mod norms;
pub mod output;
pub mod regress;
pub mod spec;
pub mod validate;
pub mod vectors;

use std::path::PathBuf;

use clap::{Args, Parser, Subcommand};
use commlab::linalg::NormOptions;
use commlab::models::Family;

pub use error::{CliError, CliResult};
use spec::{load_config, seed_from_env, Config, SweepSpec};

#[derive(Debug, Parser)]
#[command(name = "commlab", version, about = "Norms of commutators of spectral projections")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Sweep commutator norms over n (and a, b) and write CSV.
    Norms(NormsArgs),
    /// Truncated Hankel norms with the Nehari and Power certificates.
    Hankel(HankelArgs),
    /// Fit ln(1/2 - norm) against ln n from a norms CSV.
    Regress(RegressArgs),
    /// Extremal eigenvectors of one commutator.
    Vectors(VectorsArgs),
    /// Run the invariant suites and print a JSON report.
    Validate(ValidateArgs),
}

#[derive(Debug, Clone, Default, Args)]
pub struct SweepArgs {
    /// su2, su2_interval, su2_caps, ring, heisenberg or se2 (default su2).
    #[arg(long)]
    pub family: Option<String>,
    #[arg(long)]
    pub n_start: Option<usize>,
    #[arg(long)]
    pub n_stop: Option<usize>,
    #[arg(long)]
    pub n_step: Option<usize>,
    /// Comma-separated thresholds.
    #[arg(long, value_delimiter = ',', allow_hyphen_values = true)]
    pub a: Vec<f64>,
    #[arg(long, value_delimiter = ',', allow_hyphen_values = true)]
    pub b: Vec<f64>,
    /// Extraction size; sizes the ring Fourier window.
    #[arg(long = "N")]
    pub big_n: Option<usize>,
    #[arg(long)]
    pub out: Option<PathBuf>,
    #[arg(long)]
    pub jobs: Option<usize>,
    /// JSON file with the same keys; flags override it.
    #[arg(long)]
    pub config: Option<PathBuf>,
}

#[derive(Debug, Clone, Args)]
pub struct NormsArgs {
    #[command(flatten)]
    pub sweep: SweepArgs,
    /// Write measured per-point times into wall_ms instead of 0.
    #[arg(long)]
    pub wall_clock: bool,
}

#[derive(Debug, Clone, Args)]
pub struct HankelArgs {
    /// Comma-separated truncation sizes (default 1..=64).
    #[arg(long = "N", value_delimiter = ',')]
    pub sizes: Vec<usize>,
    #[arg(long, value_delimiter = ',')]
    pub a: Vec<f64>,
    #[arg(long)]
    pub out: Option<PathBuf>,
    #[arg(long)]
    pub jobs: Option<usize>,
}

#[derive(Debug, Clone, Args)]
pub struct RegressArgs {
    /// CSV written by `norms`.
    pub csv: PathBuf,
    /// Keep rows with n = r mod 4.
    #[arg(long, alias = "mod4")]
    pub residue: Option<usize>,
    #[arg(long)]
    pub family: Option<String>,
    #[arg(long)]
    pub n_start: Option<usize>,
    #[arg(long)]
    pub n_stop: Option<usize>,
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Clone, Args)]
pub struct VectorsArgs {
    #[arg(long, default_value = "su2")]
    pub family: String,
    #[arg(long, default_value_t = 101)]
    pub n: usize,
    #[arg(long)]
    pub a: Option<f64>,
    #[arg(long)]
    pub b: Option<f64>,
    #[arg(long = "N")]
    pub big_n: Option<usize>,
    #[arg(long)]
    pub out: Option<PathBuf>,
    /// Also write a bar plot of the coefficient moduli.
    #[arg(long)]
    pub svg: Option<PathBuf>,
}

#[derive(Debug, Clone, Args)]
pub struct ValidateArgs {
    #[arg(long)]
    pub out: Option<PathBuf>,
    #[arg(long, hide = true)]
    pub inject_sign_flip: Option<usize>,
}

fn default_jobs() -> usize {
    std::thread::available_parallelism().map(|n| n.get()).unwrap_or(1)
}

pub fn parse_family(s: &str) -> CliResult<Family> {
    s.parse::<Family>().map_err(|e| CliError::Contract(e.to_string()))
}

impl SweepArgs {
    /// Merges flags over the optional config file and validates.
    pub fn resolve(&self) -> CliResult<SweepSpec> {
        let cfg = match &self.config {
            Some(p) => load_config(p)?,
            None => Config::default(),
        };
        let family = parse_family(self.family.as_deref().or(cfg.family.as_deref()).unwrap_or("su2"))?;
        let start = self.n_start.or(cfg.n_start).unwrap_or(if family == Family::Se2 { 1 } else { 2 });
        let stop = self.n_stop.or(cfg.n_stop).unwrap_or(start.max(64));
        let step = self.n_step.or(cfg.n_step).unwrap_or(1);
        let pick = |flag: &Vec<f64>, c: Option<Vec<f64>>| if flag.is_empty() { c.unwrap_or_default() } else { flag.clone() };
        SweepSpec {
            family,
            n_range: (start, stop, step),
            a: pick(&self.a, cfg.a),
            b: pick(&self.b, cfg.b),
            big_n: self.big_n.or(cfg.big_n),
            output: self.out.clone().or(cfg.out),
            jobs: self.jobs.or(cfg.jobs).unwrap_or_else(default_jobs),
        }
        .validated()
    }
}

pub fn run(cli: Cli) -> CliResult<()> {
    let norm = NormOptions::with_seed(seed_from_env()?);
    match cli.command {
        Command::Norms(args) => {
            norms::cmd_norms(&args.sweep.resolve()?, &norm, args.wall_clock)?;
        }
        Command::Hankel(args) => {
            let sizes = if args.sizes.is_empty() { (1..=64).collect() } else { args.sizes };
            let shifts = if args.a.is_empty() { vec![0.0] } else { args.a };
            hankel::cmd_hankel(&sizes, &shifts, args.jobs.unwrap_or_else(default_jobs), args.out.as_deref())?;
        }
        Command::Regress(args) => {
            let filter = regress::RegressFilter {
                residue: args.residue,
                family: args.family,
                n_min: args.n_start,
                n_max: args.n_stop,
            };
            if filter.residue.is_some_and(|r| r > 3) {
                return Err(CliError::Contract("residue must be 0..=3".into()));
            }
            let outcome = regress::cmd_regress(&args.csv, &filter)?;
            let text = serde_json::to_string_pretty(&outcome).expect("plain JSON") + "\n";
            output::emit(args.out.as_deref(), text.as_bytes())?;
        }
        Command::Vectors(args) => {
            let family = parse_family(&args.family)?;
            let point = spec::Point { n: args.n, a: args.a, b: args.b };
            let report = norms::build_report(family, point, args.big_n, &norm)?;
            vectors::cmd_vectors(report, args.out.as_deref(), args.svg.as_deref())?;
        }
        Command::Validate(args) => {
            let opts = validate::ValidateOptions { norm, inject_sign_flip: args.inject_sign_flip };
            validate::cmd_validate(&opts, args.out.as_deref())?;
        }
    }
    Ok(())
}
