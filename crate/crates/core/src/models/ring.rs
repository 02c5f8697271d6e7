use super::{CommutatorMatrix, CommutatorReport, Family};
use crate::error::{contract, Result};
use crate::hankel::ArcSymbol;
use crate::linalg::{operator_norm_with, DenseMatrix, NormOptions};
use crate::scalar::Real;

/// Whether `Re e^{2 pi i k / n} > a`.
///
/// For `a = 0` this is decided exactly on `r = k mod n`: `4r < n` or `4r > 3n`.
/// Otherwise the cosine is compared in floating point and grid points within
/// `4 eps` of the threshold count as on the boundary, hence excluded.
pub fn grid_membership<R: Real>(n: usize, k: i64, a: R) -> bool {
    let n = n as i64;
    let r = k.rem_euclid(n);
    if a == R::zero() {
        return 4 * r < n || 4 * r > 3 * n;
    }
    let c = (R::TAU() * R::of(r) / R::of(n)).cos();
    c > a && (c - a).abs() > R::lit(4.0) * R::epsilon()
}

/// First `r >= 0` whose grid point lies outside the arc; `ceil(n/4)` when `a = 0`.
pub fn window_start<R: Real>(n: usize, a: R) -> usize {
    (0..n).find(|&r| !grid_membership(n, r as i64, a)).unwrap_or(n)
}

/// Fourier window `K` large enough to hold an `N`-extraction at `n`.
pub fn ring_window<R: Real>(n: usize, big_n: usize, a: R) -> usize {
    (4 * big_n + 8).max(window_start(n, a) + big_n)
}

/// The ring commutator on Fourier modes `-K..=K`.
pub fn ring_commutator<R: Real>(n: usize, k: usize) -> Result<CommutatorReport<R>> {
    ring_commutator_with(n, k, R::zero(), &NormOptions::default())
}

/// As [`ring_commutator`] with the arc `Re z > a`.
pub fn ring_commutator_shifted<R: Real>(n: usize, k: usize, a: R) -> Result<CommutatorReport<R>> {
    ring_commutator_with(n, k, a, &NormOptions::default())
}

pub fn ring_commutator_with<R: Real>(n: usize, k: usize, a: R, opts: &NormOptions) -> Result<CommutatorReport<R>> {
    if n < 2 {
        return contract(format!("ring size must be >= 2, got {n}"));
    }
    if k < 1 {
        return contract("Fourier window K must be >= 1");
    }
    let c = ring_matrix(n, k, a)?;
    let est = operator_norm_with(&c, opts);
    let mut report = CommutatorReport::new(Family::Ring, CommutatorMatrix::Real(c), est.value, est.method);
    report.n = Some(n);
    report.a = Some(a);
    report.k = Some(k);
    Ok(report)
}

fn ring_matrix<R: Real>(n: usize, k: usize, a: R) -> Result<DenseMatrix<R>> {
    let sym = ArcSymbol::new(a)?;
    let dim = 2 * k + 1;
    let mode = |i: usize| i as i64 - k as i64;
    let inside: Vec<bool> = (0..dim).map(|i| grid_membership(n, mode(i), a)).collect();
    let coeff: Vec<R> = (0..2 * dim).map(|p| sym.fourier_coeff(p as i64 - dim as i64)).collect();
    Ok(DenseMatrix::from_fn(dim, dim, |r, s| {
        match (inside[s], inside[r]) {
            (true, false) => coeff[(r as i64 - s as i64 + dim as i64) as usize],
            (false, true) => -coeff[(r as i64 - s as i64 + dim as i64) as usize],
            _ => R::zero(),
        }
    }))
}

/// `(c_{q-k, q+l-1})_{k,l = 1..N}` with `q = ceil(n/4)`; equals `-[H_E]_N`.
pub fn ring_submatrix<R: Real>(n: usize, big_n: usize) -> Result<DenseMatrix<R>> {
    ring_submatrix_shifted(n, big_n, R::zero())
}

/// As [`ring_submatrix`] for the arc `Re z > a`, with `q` the first grid
/// index outside the arc.
pub fn ring_submatrix_shifted<R: Real>(n: usize, big_n: usize, a: R) -> Result<DenseMatrix<R>> {
    let q = check_window(n, big_n, a)?;
    let k = ring_window(n, big_n, a);
    let c = ring_matrix(n, k, a)?;
    let row = |mode: i64| (mode + k as i64) as usize;
    Ok(DenseMatrix::from_fn(big_n, big_n, |i, j| {
        let (kk, ll) = (i as i64 + 1, j as i64 + 1);
        c[(row(q - kk), row(q + ll - 1))]
    }))
}

/// Checks `n > 4N` and that the extraction rows sit inside the arc and the
/// columns outside it; returns `q`.
pub(super) fn check_window<R: Real>(n: usize, big_n: usize, a: R) -> Result<i64> {
    if big_n == 0 || n <= 4 * big_n {
        return contract(format!("extraction of size {big_n} needs n > 4N, got n = {n}"));
    }
    let q = window_start(n, a) as i64;
    let big = big_n as i64;
    let rows_in = (1..=big).all(|k| grid_membership(n, q - k, a));
    let cols_out = (1..=big).all(|l| !grid_membership(n, q + l - 1, a));
    if !(rows_in && cols_out) {
        return contract(format!("n = {n} too small for an N = {big_n} extraction at a = {a}"));
    }
    Ok(q)
}
