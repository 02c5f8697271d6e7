use super::halfint::HalfInt;
use super::rep::SpinRep;
use crate::error::{contract, Error, Result};
use crate::linalg::{tridiag_eigh, DenseMatrix};
use crate::scalar::Real;
use crate::specfun::{jacobi_p, ln_binomial, ln_factorial};

/// Largest spin for which the explicit sum is trusted to full accuracy.
pub const SUM_FORMULA_MAX_TWICE_J: i64 = 30;

/// Wigner small-d matrix `d^j(theta)`; rows `m'` and columns `m` both run
/// over `j, j-1, ..., -j`.
#[derive(Debug, Clone)]
pub struct WignerDMatrix<R: Real> {
    pub j: HalfInt,
    pub theta: R,
    pub entries: DenseMatrix<R>,
}

impl<R: Real> WignerDMatrix<R> {
    pub fn rep(&self) -> SpinRep {
        SpinRep::from_spin(self.j).expect("valid spin")
    }

    /// `d^j_{m', m}(theta)`.
    pub fn get(&self, m_prime: HalfInt, m: HalfInt) -> Result<R> {
        let rep = self.rep();
        Ok(self.entries[(rep.require_index(m_prime)?, rep.require_index(m)?)])
    }

    /// Largest entry of `|D^T D - I|`.
    pub fn orthogonality_defect(&self) -> R {
        let d = &self.entries;
        let g = d.transpose().matmul(d).expect("square");
        g.sub(&DenseMatrix::identity(d.rows())).expect("same shape").max_abs()
    }
}

fn check_indices(j: HalfInt, m_prime: HalfInt, m: HalfInt) -> Result<()> {
    if j.twice() < 0 {
        return contract(format!("negative spin {j}"));
    }
    for w in [m_prime, m] {
        if w.abs() > j || j.int_diff(w).is_none() {
            return contract(format!("weight {w} not in the spin-{j} lattice"));
        }
    }
    Ok(())
}

fn uint(h: HalfInt) -> u64 {
    h.as_int().expect("integer by construction") as u64
}

/// `d^j_{m', m}(theta)` from the explicit finite sum
///
/// `sum_s (-1)^(m'-m+s) sqrt((j+m')!(j-m')!(j+m)!(j-m)!) /
///  ((j+m-s)! s! (m'-m+s)! (j-m'-s)!) cos(theta/2)^(2j+m-m'-2s) sin(theta/2)^(m'-m+2s)`.
///
/// Cancellation grows with `j`; beyond `j = 15` prefer [`wigner_d_jacobi`].
pub fn wigner_d_sum<R: Real>(j: HalfInt, m_prime: HalfInt, m: HalfInt, theta: R) -> Result<R> {
    check_indices(j, m_prime, m)?;
    let jpm = uint(j + m);
    let jmm = uint(j - m);
    let jpmp = uint(j + m_prime);
    let jmmp = uint(j - m_prime);
    let k = m_prime.int_diff(m).expect("same lattice");
    let half = theta / R::lit(2.0);
    let (c, s) = (half.cos(), half.sin());
    let prefactor = (ln_factorial::<R>(jpm) + ln_factorial::<R>(jmm) + ln_factorial::<R>(jpmp)
        + ln_factorial::<R>(jmmp))
        / R::lit(2.0);
    let s_lo = (-k).max(0) as u64;
    let s_hi = jpm.min(jmmp);
    let mut acc = R::zero();
    for t in s_lo..=s_hi {
        let kt = (k + t as i64) as u64;
        let ln = prefactor
            - ln_factorial::<R>(jpm - t)
            - ln_factorial::<R>(t)
            - ln_factorial::<R>(kt)
            - ln_factorial::<R>(jmmp - t);
        let cos_pow = (jpm - t) + (jmmp - t);
        let sin_pow = kt + t;
        let sign = if (k + t as i64).rem_euclid(2) == 1 { -R::one() } else { R::one() };
        acc += sign * ln.exp() * c.powi(cos_pow as i32) * s.powi(sin_pow as i32);
    }
    Ok(acc)
}

/// `d^j_{m', m}(theta)` through a Jacobi polynomial of degree
/// `min(j +- m, j +- m')`; stable for large `j`.
pub fn wigner_d_jacobi<R: Real>(j: HalfInt, m_prime: HalfInt, m: HalfInt, theta: R) -> Result<R> {
    check_indices(j, m_prime, m)?;
    let cands = [uint(j + m), uint(j - m), uint(j + m_prime), uint(j - m_prime)];
    let k = *cands.iter().min().expect("nonempty");
    let diff = m_prime.int_diff(m).expect("same lattice");
    let (a, lambda) = if k == cands[0] {
        (diff, diff)
    } else if k == cands[1] || k == cands[2] {
        (-diff, 0)
    } else {
        (diff, diff)
    };
    let a = a as u64;
    let two_j = j.twice() as u64;
    let b = two_j - 2 * k - a;
    let ln_ratio = ln_binomial::<R>(two_j - k, k + a) - ln_binomial::<R>(k + b, b);
    let half = theta / R::lit(2.0);
    let p = jacobi_p(k as u32, R::of(a as i64), R::of(b as i64), theta.cos())?;
    let sign = if lambda.rem_euclid(2) == 1 { -R::one() } else { R::one() };
    Ok(sign * (ln_ratio / R::lit(2.0)).exp() * half.sin().powi(a as i32) * half.cos().powi(b as i32) * p)
}

/// Dense `d^j(theta)` assembled entrywise from [`wigner_d_sum`].
pub fn wigner_d_matrix_sum<R: Real>(rep: SpinRep, theta: R) -> Result<WignerDMatrix<R>> {
    let n = rep.dim();
    let mut d = DenseMatrix::zeros(n, n);
    for r in 0..n {
        for c in 0..n {
            d[(r, c)] = wigner_d_sum(rep.j(), rep.weight(r), rep.weight(c), theta)?;
        }
    }
    Ok(WignerDMatrix { j: rep.j(), theta, entries: d })
}

/// Dense `d^j(theta)` assembled entrywise from [`wigner_d_jacobi`].
pub fn wigner_d_matrix_jacobi<R: Real>(rep: SpinRep, theta: R) -> Result<WignerDMatrix<R>> {
    let n = rep.dim();
    let mut d = DenseMatrix::zeros(n, n);
    for r in 0..n {
        for c in 0..n {
            d[(r, c)] = wigner_d_jacobi(rep.j(), rep.weight(r), rep.weight(c), theta)?;
        }
    }
    Ok(WignerDMatrix { j: rep.j(), theta, entries: d })
}

/// Knobs for the column-sign calibration of [`wigner_d_pi_half_with`].
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct DCalibration {
    /// Use the top-row recurrence even where the sum formula is available.
    pub force_recurrence: bool,
    /// Flip the sign of this column after calibration (mutation testing).
    #[doc(hidden)]
    pub inject_sign_flip: Option<usize>,
}

/// `d^j(pi/2)` from the eigenvectors of `J_x`.
pub fn wigner_d_pi_half<R: Real>(rep: SpinRep) -> Result<WignerDMatrix<R>> {
    wigner_d_pi_half_with(rep, &DCalibration::default())
}

pub fn wigner_d_pi_half_with<R: Real>(rep: SpinRep, cal: &DCalibration) -> Result<WignerDMatrix<R>> {
    let n = rep.dim();
    let ed = tridiag_eigh(&vec![R::zero(); n], &rep.jx_offdiag::<R>())?;
    let mut d = DenseMatrix::zeros(n, n);
    let mut col = vec![R::zero(); n];
    for c in 0..n {
        // eigenvalues ascend, so mu = j - c sits at position n - 1 - c
        let e = n - 1 - c;
        let mu = rep.weight(c);
        let snapped = (ed.eigenvalues[e] * R::lit(2.0)).round();
        if snapped != R::of(mu.twice()) {
            return Err(Error::SignCalibration {
                column: c,
                reason: format!("eigenvalue {} does not snap to weight {mu}", ed.eigenvalues[e]),
            });
        }
        for (k, v) in col.iter_mut().enumerate() {
            *v = ed.eigenvectors[(k, e)];
        }
        let mut sign = if rep.j().twice() <= SUM_FORMULA_MAX_TWICE_J && !cal.force_recurrence {
            sign_from_sum(rep, c, &col)?
        } else {
            sign_from_recurrence(rep, c, &col)?
        };
        if cal.inject_sign_flip == Some(c) {
            sign = -sign;
        }
        for (k, &v) in col.iter().enumerate() {
            d[(k, c)] = sign * v;
        }
    }
    Ok(WignerDMatrix { j: rep.j(), theta: R::FRAC_PI_2(), entries: d })
}

fn significance<R: Real>() -> R {
    R::lit(1e-13).max(R::epsilon() * R::lit(1e3))
}

fn sign_from_sum<R: Real>(rep: SpinRep, c: usize, col: &[R]) -> Result<R> {
    let tol = significance::<R>();
    let mu = rep.weight(c);
    for (k, &v) in col.iter().enumerate() {
        if v.abs() < tol {
            continue;
        }
        let reference: R = wigner_d_sum(rep.j(), rep.weight(k), mu, R::FRAC_PI_2())?;
        if reference.abs() >= tol {
            return Ok(if (v * reference) > R::zero() { R::one() } else { -R::one() });
        }
    }
    Err(Error::SignCalibration { column: c, reason: "no row with a significant entry".into() })
}

/// Sign pattern of a `J_x` eigenvector from the integer recurrence
/// `W_{k+1} = 2 mu W_k - k (2j - k + 1) W_{k-1}`, `W_0 = 1`, which satisfies
/// `sign d_{m_k, mu}(pi/2) = (-1)^(j - mu) sign W_k`.
fn sign_from_recurrence<R: Real>(rep: SpinRep, c: usize, col: &[R]) -> Result<R> {
    let tol = significance::<R>();
    let two_mu = R::of(rep.weight(c).twice());
    let n = rep.dim() as i64;
    let top_sign = if c % 2 == 1 { -R::one() } else { R::one() };
    let huge = R::lit(1e100).min(R::max_value().sqrt());
    let (mut w_prev, mut w) = (R::zero(), R::one());
    for (k, &v) in col.iter().enumerate() {
        if v.abs() >= tol {
            if w == R::zero() {
                break;
            }
            let expected = top_sign * w.signum();
            return Ok(if v * expected > R::zero() { R::one() } else { -R::one() });
        }
        let k = k as i64;
        let next = two_mu * w - R::of(k * (n - k)) * w_prev;
        w_prev = w;
        w = next;
        if w.abs() > huge {
            w_prev /= huge;
            w /= huge;
        }
    }
    Err(Error::SignCalibration { column: c, reason: "recurrence found no usable row".into() })
}
