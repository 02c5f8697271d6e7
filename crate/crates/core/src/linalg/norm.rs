use num_complex::Complex;
use num_traits::{Float, One, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::eigen::{hermitian_eigvals, sym_eigvals};
use super::matrix::DenseMatrix;
use crate::error::{Error, Result};
use crate::scalar::{Real, Scalar};

/// Seed used for the start-vector perturbation when none is given.
pub const DEFAULT_SEED: u64 = 0x5EED_C0DE;

/// Tuning knobs for [`operator_norm_with`].
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct NormOptions {
    /// Relative stopping tolerance on the Rayleigh quotient of `A^H A`.
    pub tol: f64,
    /// Iteration cap is `iter_factor * max(rows, cols)`.
    pub iter_factor: usize,
    pub seed: u64,
    /// Amplitude of the pseudo-random perturbation of the all-ones start.
    pub perturbation: f64,
}

impl Default for NormOptions {
    fn default() -> Self {
        NormOptions { tol: 1e-13, iter_factor: 50, seed: DEFAULT_SEED, perturbation: 1e-3 }
    }
}

impl NormOptions {
    pub fn with_seed(seed: u64) -> Self {
        NormOptions { seed, ..Self::default() }
    }
}

/// How a norm was obtained.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum NormMethod {
    Zero,
    Diagonal,
    RankOne,
    PowerIteration,
    /// Iteration cap reached (or predicted to be); exact eigensolve used.
    Eigensolve,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct NormEstimate<R> {
    pub value: R,
    pub method: NormMethod,
    pub iterations: usize,
}

/// Largest singular value of `a` with default options.
///
/// Non-finite input yields NaN.
pub fn operator_norm<T: Scalar>(a: &DenseMatrix<T>) -> T::Real {
    operator_norm_with(a, &NormOptions::default()).value
}

pub fn operator_norm_with<T: Scalar>(a: &DenseMatrix<T>, opts: &NormOptions) -> NormEstimate<T::Real> {
    let zero = T::Real::zero();
    if !a.is_finite() {
        return NormEstimate { value: T::Real::nan(), method: NormMethod::Zero, iterations: 0 };
    }
    let max = a.max_abs();
    if max == zero {
        return NormEstimate { value: zero, method: NormMethod::Zero, iterations: 0 };
    }
    if a.rows() == 1 || a.cols() == 1 {
        return NormEstimate { value: a.frobenius(), method: NormMethod::RankOne, iterations: 0 };
    }
    if a.is_diagonal() {
        return NormEstimate { value: max, method: NormMethod::Diagonal, iterations: 0 };
    }
    match power_iteration(a, opts) {
        Some((value, iterations)) => NormEstimate { value, method: NormMethod::PowerIteration, iterations },
        None => NormEstimate {
            value: exact_norm(a),
            method: NormMethod::Eigensolve,
            iterations: opts.iter_factor * a.rows().max(a.cols()),
        },
    }
}

fn normalize<T: Scalar>(v: &mut [T]) -> T::Real {
    let norm = v.iter().map(|x| x.abs_sqr()).sum::<T::Real>().sqrt();
    if norm > T::Real::zero() {
        let inv = T::Real::one() / norm;
        for x in v.iter_mut() {
            *x = x.scale(inv);
        }
    }
    norm
}

fn vec_norm<T: Scalar>(v: &[T]) -> T::Real {
    v.iter().map(|x| x.abs_sqr()).sum::<T::Real>().sqrt()
}

/// Returns `None` when the iteration cap is hit or predicted to be hit.
fn power_iteration<T: Scalar>(a: &DenseMatrix<T>, opts: &NormOptions) -> Option<(T::Real, usize)> {
    let cap = opts.iter_factor * a.rows().max(a.cols());
    let tol = T::Real::lit(opts.tol);
    let mut rng = ChaCha8Rng::seed_from_u64(opts.seed);
    let mut x: Vec<T> = (0..a.cols())
        .map(|_| {
            let r: f64 = rng.gen_range(-1.0..1.0);
            T::from_real(T::Real::lit(1.0 + opts.perturbation * r))
        })
        .collect();
    normalize(&mut x);

    let mut rho_prev = T::Real::zero();
    let mut delta_prev = T::Real::infinity();
    let mut settled = 0;
    for it in 1..=cap {
        let y = a.matvec(&x);
        let rho = y.iter().map(|v| v.abs_sqr()).sum::<T::Real>();
        let mut z = a.adjoint_matvec(&y);
        if normalize(&mut z) == T::Real::zero() {
            // start vector fell into the null space
            return None;
        }
        x = z;

        let delta = (rho - rho_prev).abs();
        let q = if delta_prev.is_finite() && delta_prev > T::Real::zero() {
            delta / delta_prev
        } else {
            T::Real::one()
        };
        let converged = delta <= tol * rho
            && (delta == T::Real::zero() || (q < T::Real::one() && delta * q / (T::Real::one() - q) <= tol * rho));
        if converged {
            settled += 1;
            if settled >= 2 {
                return Some((two_sided(a, &x), it));
            }
        } else {
            settled = 0;
        }
        // a steady contraction factor lets us predict the remaining sweeps
        if it > 20 && q < T::Real::one() && q > T::Real::lit(0.5) && delta > T::Real::zero() {
            let needed = ((tol * rho / delta).ln() / q.ln()).to_f64_lossy();
            if needed.is_finite() && needed > (cap - it) as f64 {
                return None;
            }
        }
        rho_prev = rho;
        delta_prev = delta;
    }
    None
}

/// Both `||A v||` and `||A^H u||` (with `u = Av/||Av||`) are lower bounds
/// for the top singular value; keep the larger.
fn two_sided<T: Scalar>(a: &DenseMatrix<T>, v: &[T]) -> T::Real {
    let mut u = a.matvec(v);
    let forward = normalize(&mut u);
    let backward = vec_norm(&a.adjoint_matvec(&u));
    forward.max(backward)
}

fn as_complex<T: Scalar>(a: &DenseMatrix<T>) -> DenseMatrix<Complex<T::Real>> {
    a.map(|x| Complex::new(x.re(), x.im()))
}

fn exact_norm<T: Scalar>(a: &DenseMatrix<T>) -> T::Real {
    let spectral_radius = |vals: Vec<T::Real>| vals.into_iter().fold(T::Real::zero(), |m, v| m.max(v.abs()));
    if a.is_square() {
        if a.is_hermitian() {
            let vals = if T::COMPLEX {
                hermitian_eigvals(&as_complex(a))
            } else {
                sym_eigvals(&a.map(|x| x.re()))
            };
            if let Ok(vals) = vals {
                return spectral_radius(vals);
            }
        }
        let tol = super::matrix::hermitian_tol::<T::Real>() * T::Real::one().max(a.max_abs());
        if a.anti_hermitian_defect() <= tol {
            // i A is Hermitian with the same singular values
            let ia = as_complex(a).map(|z| Complex::new(-z.im, z.re));
            if let Ok(vals) = hermitian_eigvals(&ia) {
                return spectral_radius(vals);
            }
        }
    }
    let g = a.gram();
    let vals = if T::COMPLEX {
        hermitian_eigvals(&as_complex(&g))
    } else {
        sym_eigvals(&g.map(|x| x.re()))
    };
    match vals {
        Ok(vals) => spectral_radius(vals).max(T::Real::zero()).sqrt(),
        Err(_) => T::Real::nan(),
    }
}

/// `AB - BA`.
pub fn commutator<T: Scalar>(a: &DenseMatrix<T>, b: &DenseMatrix<T>) -> Result<DenseMatrix<T>> {
    if !a.is_square() || !b.is_square() || a.rows() != b.rows() {
        return Err(Error::Contract(format!(
            "commutator needs square matrices of equal size, got {}x{} and {}x{}",
            a.rows(),
            a.cols(),
            b.rows(),
            b.cols()
        )));
    }
    a.matmul(b)?.sub(&b.matmul(a)?)
}
