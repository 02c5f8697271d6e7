//! Special functions: Bessel `J_p`, Jacobi polynomials, log-gamma, quadrature,
//! and the closed-form Hilbert/Hankel transform values used by the models.

mod bessel;
pub(crate) mod dd;
mod gamma;
mod jacobi;
mod quadrature;

pub use bessel::{bessel_j, bessel_j_integral, bessel_j_series, MAX_ORDER, SERIES_CROSSOVER, TRAPEZOID_NODES};
pub use gamma::{ln_binomial, ln_factorial, ln_gamma};
pub use jacobi::jacobi_p;
pub use quadrature::{gauss_legendre, integrate, trapezoid};

use crate::error::{contract, Result};
use crate::scalar::Real;

/// Hilbert transform on the line of `J_p` at the origin,
/// `-(1 - (-1)^p) / (pi p)`.
pub fn hilbert_bessel_at_zero<R: Real>(p: i32) -> Result<R> {
    if p == 0 {
        return contract("hilbert_bessel_at_zero is undefined for p = 0");
    }
    if p % 2 == 0 {
        Ok(R::zero())
    } else {
        Ok(-R::lit(2.0) / (R::PI() * R::of(p as i64)))
    }
}

/// `(1/pi) int_0^pi sin(x sin t - p t) dt`, the integral form of the same
/// transform, by Gauss-Legendre quadrature.
pub fn hilbert_bessel_integral<R: Real>(p: i32, x: R, nodes: usize) -> Result<R> {
    let pr = R::of(p as i64);
    Ok(integrate(|t: R| (x * t.sin() - pr * t).sin(), R::zero(), R::PI(), nodes)? / R::PI())
}

/// `int_0^inf sin(a x) J_p(x) / x dx`-family closed forms:
/// `arcsin a` for `p = 0`, `sin(p arcsin a) / p` for even `p`,
/// `cos(p arcsin a) / p` for odd `p`.
pub fn cap_integral<R: Real>(a: R, p: i32) -> Result<R> {
    if !(a >= R::zero() && a < R::one()) {
        return contract(format!("cap_integral needs 0 <= a < 1, got {a}"));
    }
    let s = a.asin();
    if p == 0 {
        return Ok(s);
    }
    let pr = R::of(p as i64);
    if p % 2 == 0 {
        Ok((pr * s).sin() / pr)
    } else {
        Ok((pr * s).cos() / pr)
    }
}
