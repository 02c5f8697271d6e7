//! Frozen oracle values and reporting helpers for the acceptance suite.
//!
//! Each fixture was computed once by an independent high-precision
//! reference (mpmath / numpy) and is committed here unchanged.

use std::time::Duration;

/// Central entries of the `J_x` projection: `(m', m)`, limit and oracle
/// errors at `n = 101, 401, 1601`.
pub const CENTRAL_ENTRIES: [((i64, i64), f64, [f64; 3]); 3] = [
    ((1, 0), std::f64::consts::FRAC_1_PI, [3.1199e-5, 1.9795e-6, 1.2418e-7]),
    ((2, -1), -1.0 / (3.0 * std::f64::consts::PI), [3.1230e-5, 1.9796e-6, 1.2418e-7]),
    ((1, 1), 0.5, [0.0, 0.0, 0.0]),
];
pub const CENTRAL_NS: [usize; 3] = [101, 401, 1601];
/// Final-error tolerance for the central entries.
pub const CENTRAL_TOL: f64 = 1.3e-7;
/// Errors below this are rounding noise and count as converged.
pub const CENTRAL_NOISE_FLOOR: f64 = 1e-11;

/// Lower fixture for the truncated half-plane Hankel norm at `N = 4096`.
pub const HANKEL_T_STAR: f64 = 0.465_920_551_19;

/// Sup-normalized Szego errors for `(m', m) = (1, 0)` over
/// `theta in [0.01, pi/2]`, 400 samples, at `j = 20, 40, 80`.
pub const SZEGO_ERRORS: [f64; 3] = [1.637_478_838_7e-3, 5.896_750_525_8e-4, 2.104_256_342_1e-4];
pub const SZEGO_THETA: (f64, f64) = (0.01, std::f64::consts::FRAC_PI_2);
pub const SZEGO_SAMPLES: usize = 400;

/// Prints the one-line verdict for a criterion and returns `pass`.
pub fn verdict(id: u32, title: &str, pass: bool, detail: &str, elapsed: Duration) -> bool {
    let tag = if pass { "PASS" } else { "FAIL" };
    println!("[{tag}] criterion {id:>2}: {title} ({detail}; {:.2}s)", elapsed.as_secs_f64());
    pass
}
