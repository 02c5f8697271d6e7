use super::halfint::HalfInt;
use super::wigner::wigner_d_jacobi;
use crate::error::{contract, Result};
use crate::scalar::Real;
use crate::specfun::{bessel_j, ln_factorial};

/// Distance kept from `theta = pi`.
pub const SZEGO_DELTA: f64 = 0.2;

/// Bessel main term of `d^j_{m', m}(theta)`:
/// `C sqrt(theta / sin theta) J_{m-m'}((j + 1/2) theta)` with
/// `C = sqrt((j-m')!(j+m)! / ((j-m)!(j+m')!)) / (j + 1/2)^(m-m')`.
/// Returns `(approximation, C)`.
pub fn szego_approximation<R: Real>(j: HalfInt, m_prime: HalfInt, m: HalfInt, theta: R) -> Result<(R, R)> {
    let Some(p) = m.int_diff(m_prime) else {
        return contract(format!("weights {m_prime} and {m} are on different lattices"));
    };
    if p < -1 {
        return contract(format!("m - m' = {p} is below -1"));
    }
    if m.abs() > j || m_prime.abs() > j || j.int_diff(m).is_none() {
        return contract(format!("weights ({m_prime}, {m}) not in the spin-{j} lattice"));
    }
    if !(theta > R::zero() && theta <= R::PI() - R::lit(SZEGO_DELTA)) {
        return contract(format!("theta = {theta} outside (0, pi - {SZEGO_DELTA}]"));
    }
    let f = |h: HalfInt| ln_factorial::<R>(h.as_int().expect("integer") as u64);
    let jh = j.value::<R>() + R::lit(0.5);
    let ln_c = (f(j - m_prime) + f(j + m) - f(j - m) - f(j + m_prime)) / R::lit(2.0) - R::of(p) * jh.ln();
    let c = ln_c.exp();
    let approx = c * (theta / theta.sin()).sqrt() * bessel_j(p as i32, jh * theta)?;
    Ok((approx, c))
}

/// `sup |d^j_{m', m}(theta) - approx| / sqrt(theta)` over `samples` equally
/// spaced points of `[lo, hi]`.
pub fn szego_sup_error<R: Real>(j: HalfInt, m_prime: HalfInt, m: HalfInt, lo: R, hi: R, samples: usize) -> Result<R> {
    if samples < 2 {
        return contract("need at least two samples");
    }
    let step = (hi - lo) / R::of(samples as i64 - 1);
    let mut worst = R::zero();
    for i in 0..samples {
        let theta = lo + step * R::of(i as i64);
        let (approx, _) = szego_approximation(j, m_prime, m, theta)?;
        let d = wigner_d_jacobi(j, m_prime, m, theta)?;
        worst = worst.max((d - approx).abs() / theta.sqrt());
    }
    Ok(worst)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn h(t: i64) -> HalfInt {
        HalfInt::from_twice(t)
    }

    #[test]
    fn constant_is_one_on_the_diagonal() {
        let (_, c) = szego_approximation(h(41), h(3), h(3), 0.5f64).unwrap();
        assert!((c - 1.0).abs() < 1e-14);
        let (approx, _) = szego_approximation(h(40), h(0), h(0), 1e-9f64).unwrap();
        assert!((approx - 1.0).abs() < 1e-12);
    }

    #[test]
    fn constant_tends_to_one() {
        let c = |tj| szego_approximation(h(tj), h(2), h(0), 0.5f64).unwrap().1;
        assert!((c(2000) - 1.0).abs() < (c(200) - 1.0).abs());
        assert!((c(2000) - 1.0).abs() < 1e-2);
    }

    #[test]
    fn window_checks() {
        assert!(szego_approximation(h(20), h(2), h(-2), 0.5f64).is_err());
        assert!(szego_approximation(h(20), h(0), h(0), 3.0f64).is_err());
        assert!(szego_approximation(h(20), h(0), h(0), 0.0f64).is_err());
    }

    #[test]
    fn error_is_small() {
        let e = szego_sup_error(h(40), h(2), h(0), 0.01f64, std::f64::consts::FRAC_PI_2, 400).unwrap();
        assert!(e < 5e-3, "{e}");
    }
}
