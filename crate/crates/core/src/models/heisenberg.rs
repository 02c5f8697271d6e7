use num_complex::Complex;

use super::ring::{check_window, grid_membership};
use super::{CommutatorMatrix, CommutatorReport, Family};
use crate::error::{contract, Result};
use crate::linalg::{operator_norm_with, DenseMatrix, NormOptions};
use crate::scalar::Real;

/// Rows of the `e_k`-basis matrix checked against the closed form when `n`
/// is too large for a full check.
const SAMPLED_ROWS: usize = 32;
const FULL_CHECK_MAX_N: usize = 64;

/// Twiddles `e^{-2 pi i t / n}`, `t = 0..n`.
fn twiddles<R: Real>(n: usize) -> Vec<Complex<R>> {
    (0..n)
        .map(|t| {
            let th = -R::TAU() * R::of(t as i64) / R::of(n as i64);
            Complex::new(th.cos(), th.sin())
        })
        .collect()
}

/// Unitary DFT `(F x)_k = n^{-1/2} sum_l e^{-2 pi i k l / n} x_l`; `inverse` conjugates the kernel.
fn dft<R: Real>(x: &[Complex<R>], w: &[Complex<R>], inverse: bool) -> Vec<Complex<R>> {
    let n = x.len();
    let s = R::one() / R::of(n as i64).sqrt();
    (0..n)
        .map(|k| {
            let acc = x.iter().enumerate().fold(Complex::new(R::zero(), R::zero()), |acc, (l, &xl)| {
                let t = w[(k * l) % n];
                acc + xl * if inverse { t.conj() } else { t }
            });
            acc * s
        })
        .collect()
}

fn indicator<R: Real>(n: usize, a: R) -> Vec<bool> {
    (0..n).map(|m| grid_membership(n, m as i64, a)).collect()
}

/// `Pi_1 = F^{-1} Pi_2 F` applied to `delta_0`. `Pi_1` commutes with the
/// cyclic shift, so this column determines it.
fn pi1_column<R: Real>(d: &[bool], w: &[Complex<R>]) -> Vec<Complex<R>> {
    let n = d.len();
    let mut delta = vec![Complex::new(R::zero(), R::zero()); n];
    delta[0] = Complex::new(R::one(), R::zero());
    let mut y = dft(&delta, w, false);
    for (v, &inside) in y.iter_mut().zip(d) {
        if !inside {
            *v = Complex::new(R::zero(), R::zero());
        }
    }
    dft(&y, w, true)
}

/// `[Pi_1, Pi_2]` in the delta basis.
fn heisenberg_matrix<R: Real>(n: usize, a: R) -> DenseMatrix<Complex<R>> {
    let d = indicator(n, a);
    let w = twiddles::<R>(n);
    let g = pi1_column(&d, &w);
    let one = |b: bool| if b { R::one() } else { R::zero() };
    DenseMatrix::from_fn(n, n, |r, s| g[(r + n - s) % n] * (one(d[s]) - one(d[r])))
}

/// `<A_n(1_{E_a}), A_n(z^p)>_n = (1/n) sum_m 1_{E_a}(2 pi m / n) e^{-2 pi i p m / n}`.
///
/// The arc is symmetric, so the sum is real.
pub fn heisenberg_pairing<R: Real>(n: usize, p: i64, a: R) -> R {
    let nn = n as i64;
    let s: R = (0..nn)
        .filter(|&m| grid_membership(n, m, a))
        .map(|m| (R::TAU() * R::of((p * m).rem_euclid(nn)) / R::of(nn)).cos())
        .sum();
    s / R::of(nn)
}

/// Closed-form `e`-basis entry `(1_E(lambda_k) - 1_E(lambda_l)) <A_n(1_E), A_n(z^{k-l})>_n`.
pub fn heisenberg_closed_form<R: Real>(n: usize, k: i64, l: i64, a: R) -> R {
    let one = |b: bool| if b { R::one() } else { R::zero() };
    (one(grid_membership(n, k, a)) - one(grid_membership(n, l, a))) * heisenberg_pairing(n, k - l, a)
}

/// Row `k` of `U^H C U` where `U` holds the vectors `e_k = F^{-1} delta_k`.
fn e_basis_row<R: Real>(c: &DenseMatrix<Complex<R>>, w: &[Complex<R>], k: usize) -> Vec<Complex<R>> {
    let n = c.rows();
    // e_k^H has entries e^{-2 pi i k m / n} / sqrt(n)
    let ek_h: Vec<Complex<R>> = (0..n).map(|m| w[(k * m) % n]).collect();
    let row = c.adjoint_matvec(&ek_h.iter().map(|z| z.conj()).collect::<Vec<_>>());
    // row is C^H e_k; (e_k^H C)_m = conj(row_m)
    let row: Vec<Complex<R>> = row.into_iter().map(|z| z.conj()).collect();
    let s = R::one() / R::of(n as i64);
    (0..n)
        .map(|l| {
            let acc = row.iter().enumerate().fold(Complex::new(R::zero(), R::zero()), |acc, (m, &v)| {
                acc + v * w[(l * m) % n].conj()
            });
            acc * s
        })
        .collect()
}

/// The finite Heisenberg commutator `[Pi_1, Pi_2]` on `l^2(Z_n)`.
pub fn heisenberg_commutator<R: Real>(n: usize) -> Result<CommutatorReport<R>> {
    heisenberg_commutator_with(n, R::zero(), &NormOptions::default())
}

pub fn heisenberg_commutator_shifted<R: Real>(n: usize, a: R) -> Result<CommutatorReport<R>> {
    heisenberg_commutator_with(n, a, &NormOptions::default())
}

/// Also checks the `e`-basis matrix against [`heisenberg_closed_form`]; the
/// largest deviation goes to `block_check` (all rows for small `n`, a sample otherwise).
pub fn heisenberg_commutator_with<R: Real>(n: usize, a: R, opts: &NormOptions) -> Result<CommutatorReport<R>> {
    if n < 2 {
        return contract(format!("group size must be >= 2, got {n}"));
    }
    if !(a >= R::zero() && a < R::one()) {
        return contract(format!("threshold a must lie in [0, 1), got {a}"));
    }
    let c = heisenberg_matrix(n, a);
    let w = twiddles::<R>(n);
    let rows: Vec<usize> = if n <= FULL_CHECK_MAX_N {
        (0..n).collect()
    } else {
        (0..SAMPLED_ROWS).map(|i| i * n / SAMPLED_ROWS).collect()
    };
    let mut residual = R::zero();
    for k in rows {
        for (l, z) in e_basis_row(&c, &w, k).into_iter().enumerate() {
            let expected = heisenberg_closed_form(n, k as i64, l as i64, a);
            residual = residual.max((z - Complex::new(expected, R::zero())).norm());
        }
    }
    let est = operator_norm_with(&c, opts);
    let mut report = CommutatorReport::new(Family::Heisenberg, CommutatorMatrix::Complex(c), est.value, est.method);
    if residual > R::lit(1e-12).max(R::lit(8.0) * R::of(n as i64) * R::epsilon()) {
        report.diagnostics.push(format!("closed-form residual {residual}"));
    }
    report.n = Some(n);
    report.a = Some(a);
    report.block_check = Some(residual);
    Ok(report)
}

/// `(c_{q-k, q+l-1})_{k,l = 1..N}` of the `e`-basis commutator, `q = ceil(n/4)`.
pub fn heisenberg_submatrix<R: Real>(n: usize, big_n: usize) -> Result<DenseMatrix<Complex<R>>> {
    heisenberg_submatrix_shifted(n, big_n, R::zero())
}

pub fn heisenberg_submatrix_shifted<R: Real>(n: usize, big_n: usize, a: R) -> Result<DenseMatrix<Complex<R>>> {
    let q = check_window(n, big_n, a)? as usize;
    let c = heisenberg_matrix(n, a);
    let w = twiddles::<R>(n);
    let mut out = DenseMatrix::zeros(big_n, big_n);
    for k in 1..=big_n {
        let row = e_basis_row(&c, &w, q - k);
        for l in 1..=big_n {
            out[(k - 1, l - 1)] = row[q + l - 1];
        }
    }
    Ok(out)
}
