use num_complex::Complex;

use super::halfint::HalfInt;
use super::projection::projection_x;
use super::rep::SpinRep;
use super::wigner::{wigner_d_pi_half, wigner_d_sum};
use crate::error::{contract, Result};
use crate::scalar::Real;

/// Largest dimension for which the Fourier coefficients come from the sum
/// formula; larger representations use the eigenvector path.
pub const SUM_PATH_MAX_DIM: usize = 31;

/// Expansion `d^j_{m', m}(theta) = i^(m - m') sum_mu c_mu e^(-i mu theta)`
/// with `c_mu = d_{m, mu}(pi/2) d_{m', mu}(pi/2)`.
#[derive(Debug, Clone)]
pub struct FourierExpansion<R: Real> {
    pub m_prime: HalfInt,
    pub m: HalfInt,
    /// `(mu, c_mu)` for `mu = j, ..., -j`.
    pub coeffs: Vec<(HalfInt, R)>,
}

fn i_pow<R: Real>(k: i64) -> Complex<R> {
    match k.rem_euclid(4) {
        0 => Complex::new(R::one(), R::zero()),
        1 => Complex::new(R::zero(), R::one()),
        2 => Complex::new(-R::one(), R::zero()),
        _ => Complex::new(R::zero(), -R::one()),
    }
}

impl<R: Real> FourierExpansion<R> {
    fn phase(&self) -> Complex<R> {
        i_pow(self.m.int_diff(self.m_prime).expect("same lattice"))
    }

    pub fn coeff(&self, mu: HalfInt) -> R {
        self.coeffs.iter().find(|(w, _)| *w == mu).map_or(R::zero(), |&(_, c)| c)
    }

    pub fn eval(&self, theta: R) -> Complex<R> {
        let s: Complex<R> = self
            .coeffs
            .iter()
            .map(|&(mu, c)| Complex::from_polar(c, -mu.value::<R>() * theta))
            .sum();
        self.phase() * s
    }

    /// Mean over the period, `<d, 1>`; vanishes for half-integer `j`.
    pub fn mean(&self) -> Complex<R> {
        self.phase() * self.coeff(HalfInt::ZERO)
    }

    /// Periodic Hilbert transform at `theta = 0`.  In the variable
    /// `e^(i theta/2)` the weight `mu` is the frequency `p = -2 mu`, and the
    /// transform multiplies frequency `p` by `-i sgn p`.
    pub fn hilbert_at_zero(&self) -> Complex<R> {
        let s: R = self.coeffs.iter().map(|&(mu, c)| R::of(mu.twice().signum()) * c).sum();
        self.phase() * Complex::new(R::zero(), s)
    }

    /// `sum_{mu > 0} c_mu`.
    pub fn positive_sum(&self) -> R {
        self.coeffs.iter().filter(|(mu, _)| mu.twice() > 0).map(|&(_, c)| c).sum()
    }
}

pub fn fourier_expansion_d<R: Real>(rep: SpinRep, m_prime: HalfInt, m: HalfInt) -> Result<FourierExpansion<R>> {
    let (r, c) = (rep.require_index(m_prime)?, rep.require_index(m)?);
    let coeffs = if rep.dim() <= SUM_PATH_MAX_DIM {
        let half_pi = R::FRAC_PI_2();
        rep.weights()
            .map(|mu| {
                let a = wigner_d_sum(rep.j(), m, mu, half_pi)?;
                let b = wigner_d_sum(rep.j(), m_prime, mu, half_pi)?;
                Ok((mu, a * b))
            })
            .collect::<Result<Vec<_>>>()?
    } else {
        let d = wigner_d_pi_half::<R>(rep)?;
        (0..rep.dim()).map(|k| (rep.weight(k), d.entries[(c, k)] * d.entries[(r, k)])).collect()
    };
    Ok(FourierExpansion { m_prime, m, coeffs })
}

/// Checks `P_{m', m} = i^(m'-m) (delta - <d, 1> - i H(d)(0)) / 2` entrywise
/// against the eigen-path projection, with the even/odd `m' - m` case split.
/// Returns the largest residual.
pub fn verify_hilbert_formula<R: Real>(rep: SpinRep) -> Result<R> {
    if rep.dim() > SUM_PATH_MAX_DIM {
        return contract(format!("verify_hilbert_formula needs n <= {SUM_PATH_MAX_DIM}"));
    }
    let p = projection_x(rep, R::zero())?;
    let half = R::lit(0.5);
    let mut worst = R::zero();
    for mp in rep.weights() {
        for m in rep.weights() {
            let f = fourier_expansion_d::<R>(rep, mp, m)?;
            let k = mp.int_diff(m).expect("same lattice");
            let rhs = if k % 2 == 0 {
                let delta = if k == 0 { R::one() } else { R::zero() };
                i_pow::<R>(k) * (Complex::new(delta, R::zero()) - f.mean()) * half
            } else {
                i_pow::<R>(k) * Complex::new(R::zero(), -R::one()) * f.hilbert_at_zero() * half
            };
            let lhs = p.get(mp, m)?;
            worst = worst.max((rhs - Complex::new(lhs, R::zero())).norm());
        }
    }
    Ok(worst)
}
