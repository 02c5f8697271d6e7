//! Symmetric eigensolvers.
//!
//! Householder reduction to tridiagonal form followed by the implicit-shift
//! QL iteration, after the EISPACK routines `tred2` / `tql2`.  The QL driver
//! can accumulate only a chosen subset of eigenvector rows, which is what the
//! spin models need for large dimensions: a few central rows of the
//! eigenvector matrix of `J_x` cost `O(n^2)` instead of `O(n^3)`.

use num_complex::Complex;

use super::matrix::DenseMatrix;
use crate::error::{Error, Result};
use crate::scalar::Real;

/// QL sweeps allowed per eigenvalue before giving up.
const MAX_SWEEPS: usize = 60;

/// Spectral decomposition of a real symmetric matrix.
///
/// Eigenvalues are ascending; column `k` of `eigenvectors` belongs to
/// `eigenvalues[k]`.
#[derive(Debug, Clone)]
pub struct EigenDecomposition<T: Real> {
    pub eigenvalues: Vec<T>,
    pub eigenvectors: DenseMatrix<T>,
}

impl<T: Real> EigenDecomposition<T> {
    pub fn len(&self) -> usize {
        self.eigenvalues.len()
    }

    pub fn is_empty(&self) -> bool {
        self.eigenvalues.is_empty()
    }

    /// `Q diag(lambda) Q^T`.
    pub fn reconstruct(&self) -> DenseMatrix<T> {
        let n = self.len();
        let q = &self.eigenvectors;
        DenseMatrix::from_fn(n, n, |i, j| {
            (0..n).map(|k| q[(i, k)] * self.eigenvalues[k] * q[(j, k)]).sum()
        })
    }
}

/// Eigenvalues together with selected rows of the eigenvector matrix.
#[derive(Debug, Clone)]
pub struct PartialEigenvectors<T: Real> {
    pub eigenvalues: Vec<T>,
    /// Requested row indices, in the order they were asked for.
    pub row_indices: Vec<usize>,
    /// `rows[r][k]` is component `row_indices[r]` of eigenvector `k`.
    pub rows: Vec<Vec<T>>,
}

fn check_tridiagonal<T: Real>(diag: &[T], offdiag: &[T]) -> Result<()> {
    if diag.is_empty() {
        return Err(Error::Contract("empty tridiagonal matrix".into()));
    }
    if offdiag.len() + 1 != diag.len() {
        return Err(Error::Contract(format!(
            "offdiag has {} entries, expected {}",
            offdiag.len(),
            diag.len() - 1
        )));
    }
    if diag.iter().chain(offdiag).any(|x| !x.is_finite()) {
        return Err(Error::Contract("non-finite tridiagonal entry".into()));
    }
    Ok(())
}

/// Full eigendecomposition of the symmetric tridiagonal matrix with the given
/// diagonal and first off-diagonal.
pub fn tridiag_eigh<T: Real>(diag: &[T], offdiag: &[T]) -> Result<EigenDecomposition<T>> {
    check_tridiagonal(diag, offdiag)?;
    let n = diag.len();
    let rows: Vec<usize> = (0..n).collect();
    let part = tridiag_eigh_rows(diag, offdiag, &rows)?;
    let mut q = DenseMatrix::zeros(n, n);
    for (r, row) in part.rows.iter().enumerate() {
        for (k, &v) in row.iter().enumerate() {
            q[(r, k)] = v;
        }
    }
    Ok(EigenDecomposition { eigenvalues: part.eigenvalues, eigenvectors: q })
}

/// Eigenvalues of a symmetric tridiagonal matrix, ascending.
pub fn tridiag_eigvals<T: Real>(diag: &[T], offdiag: &[T]) -> Result<Vec<T>> {
    check_tridiagonal(diag, offdiag)?;
    let mut d = diag.to_vec();
    let mut e = offdiag.to_vec();
    e.push(T::zero());
    tql2(&mut d, &mut e, &mut [])?;
    d.sort_by(|a, b| a.partial_cmp(b).expect("finite eigenvalues"));
    Ok(d)
}

/// Eigenvalues plus the eigenvector components at `rows` only.
pub fn tridiag_eigh_rows<T: Real>(
    diag: &[T],
    offdiag: &[T],
    rows: &[usize],
) -> Result<PartialEigenvectors<T>> {
    check_tridiagonal(diag, offdiag)?;
    let n = diag.len();
    if let Some(&bad) = rows.iter().find(|&&r| r >= n) {
        return Err(Error::Contract(format!("row {bad} out of range for dimension {n}")));
    }
    let mut d = diag.to_vec();
    let mut e = offdiag.to_vec();
    e.push(T::zero());
    let mut z: Vec<Vec<T>> = rows
        .iter()
        .map(|&r| {
            let mut v = vec![T::zero(); n];
            v[r] = T::one();
            v
        })
        .collect();
    tql2(&mut d, &mut e, &mut z)?;
    let order = ascending_order(&d);
    let eigenvalues = order.iter().map(|&k| d[k]).collect();
    let rows_out = z.iter().map(|row| order.iter().map(|&k| row[k]).collect()).collect();
    Ok(PartialEigenvectors { eigenvalues, row_indices: rows.to_vec(), rows: rows_out })
}

fn ascending_order<T: Real>(d: &[T]) -> Vec<usize> {
    let mut order: Vec<usize> = (0..d.len()).collect();
    // stable sort keeps the output deterministic for tied eigenvalues
    order.sort_by(|&a, &b| d[a].partial_cmp(&d[b]).expect("finite eigenvalues"));
    order
}

/// Implicit QL on `(d, e)` where `e[i]` couples `i` and `i + 1` and
/// `e[n - 1] == 0`.  Every row of `z` is rotated along with the iteration.
fn tql2<T: Real>(d: &mut [T], e: &mut [T], z: &mut [Vec<T>]) -> Result<()> {
    let n = d.len();
    let eps = T::epsilon();
    let two = T::lit(2.0);
    let mut f = T::zero();
    let mut tst1 = T::zero();
    for l in 0..n {
        tst1 = tst1.max(d[l].abs() + e[l].abs());
        let mut m = l;
        while m < n - 1 && e[m].abs() > eps * tst1 {
            m += 1;
        }
        if m > l {
            let mut iter = 0;
            loop {
                iter += 1;
                if iter > MAX_SWEEPS {
                    return Err(Error::NoConvergence { index: l, iterations: MAX_SWEEPS });
                }
                // implicit shift
                let g = d[l];
                let mut p = (d[l + 1] - g) / (two * e[l]);
                let mut r = p.hypot(T::one());
                if p < T::zero() {
                    r = -r;
                }
                d[l] = e[l] / (p + r);
                d[l + 1] = e[l] * (p + r);
                let dl1 = d[l + 1];
                let h = g - d[l];
                for di in d.iter_mut().take(n).skip(l + 2) {
                    *di -= h;
                }
                f += h;

                p = d[m];
                let mut c = T::one();
                let mut c2 = c;
                let mut c3 = c;
                let el1 = e[l + 1];
                let mut s = T::zero();
                let mut s2 = T::zero();
                for i in (l..m).rev() {
                    c3 = c2;
                    c2 = c;
                    s2 = s;
                    let g = c * e[i];
                    let h = c * p;
                    r = p.hypot(e[i]);
                    e[i + 1] = s * r;
                    s = e[i] / r;
                    c = p / r;
                    p = c * d[i] - s * g;
                    d[i + 1] = h + s * (c * g + s * d[i]);
                    for row in z.iter_mut() {
                        let hk = row[i + 1];
                        row[i + 1] = s * row[i] + c * hk;
                        row[i] = c * row[i] - s * hk;
                    }
                }
                p = -s * s2 * c3 * el1 * e[l] / dl1;
                e[l] = s * p;
                d[l] = c * p;
                if e[l].abs() <= eps * tst1 {
                    break;
                }
            }
        }
        d[l] += f;
        e[l] = T::zero();
    }
    Ok(())
}

/// Householder reduction of a symmetric matrix to tridiagonal form.
///
/// `w` holds the matrix in column-major order (`w[c * n + r]`), which for a
/// symmetric input is the same as row-major.  Returns `(diag, offdiag)`;
/// with `want_vectors` the orthogonal transform is left in `w`, again
/// column-major.
fn tred2<T: Real>(n: usize, w: &mut [T], want_vectors: bool) -> (Vec<T>, Vec<T>) {
    // v(r, c) == w[c * n + r]
    let idx = |r: usize, c: usize| c * n + r;
    let mut d: Vec<T> = (0..n).map(|j| w[idx(n - 1, j)]).collect();
    let mut e = vec![T::zero(); n];

    for i in (1..n).rev() {
        let mut scale = T::zero();
        let mut h = T::zero();
        for dk in d.iter().take(i) {
            scale += dk.abs();
        }
        if scale == T::zero() {
            e[i] = d[i - 1];
            for j in 0..i {
                d[j] = w[idx(i - 1, j)];
                w[idx(i, j)] = T::zero();
                w[idx(j, i)] = T::zero();
            }
        } else {
            for dk in d.iter_mut().take(i) {
                *dk /= scale;
                h += *dk * *dk;
            }
            let mut f = d[i - 1];
            let mut g = h.sqrt();
            if f > T::zero() {
                g = -g;
            }
            e[i] = scale * g;
            h -= f * g;
            d[i - 1] = f - g;
            for ej in e.iter_mut().take(i) {
                *ej = T::zero();
            }
            for j in 0..i {
                f = d[j];
                w[idx(j, i)] = f;
                let col = j * n;
                g = e[j] + w[col + j] * f;
                for k in (j + 1)..i {
                    let vkj = w[col + k];
                    g += vkj * d[k];
                    e[k] += vkj * f;
                }
                e[j] = g;
            }
            f = T::zero();
            for j in 0..i {
                e[j] /= h;
                f += e[j] * d[j];
            }
            let hh = f / (h + h);
            for j in 0..i {
                e[j] -= hh * d[j];
            }
            for j in 0..i {
                f = d[j];
                g = e[j];
                let col = j * n;
                for k in j..i {
                    w[col + k] -= f * e[k] + g * d[k];
                }
                d[j] = w[idx(i - 1, j)];
                w[idx(i, j)] = T::zero();
            }
        }
        d[i] = h;
    }

    if !want_vectors {
        let diag: Vec<T> = (0..n).map(|i| w[idx(i, i)]).collect();
        let off: Vec<T> = e[1..].to_vec();
        return (diag, off);
    }

    for i in 0..n - 1 {
        w[idx(n - 1, i)] = w[idx(i, i)];
        w[idx(i, i)] = T::one();
        let h = d[i + 1];
        if h != T::zero() {
            let ci = (i + 1) * n;
            for k in 0..=i {
                d[k] = w[ci + k] / h;
            }
            for j in 0..=i {
                let cj = j * n;
                let mut g = T::zero();
                for k in 0..=i {
                    g += w[ci + k] * w[cj + k];
                }
                for k in 0..=i {
                    w[cj + k] -= g * d[k];
                }
            }
        }
        for k in 0..=i {
            w[idx(k, i + 1)] = T::zero();
        }
    }
    for j in 0..n {
        d[j] = w[idx(n - 1, j)];
        w[idx(n - 1, j)] = T::zero();
    }
    w[idx(n - 1, n - 1)] = T::one();
    let off: Vec<T> = e[1..].to_vec();
    (d, off)
}

fn check_symmetric<T: Real>(a: &DenseMatrix<T>) -> Result<()> {
    if !a.is_square() {
        return Err(Error::Dimension(format!("{}x{} is not square", a.rows(), a.cols())));
    }
    if !a.is_finite() {
        return Err(Error::Contract("non-finite matrix entry".into()));
    }
    if !a.is_hermitian() {
        return Err(Error::Contract("matrix is not symmetric".into()));
    }
    Ok(())
}

/// Eigenvalues of a dense real symmetric matrix, ascending.
pub fn sym_eigvals<T: Real>(a: &DenseMatrix<T>) -> Result<Vec<T>> {
    check_symmetric(a)?;
    let n = a.rows();
    let mut w = a.as_slice().to_vec();
    let (d, off) = tred2(n, &mut w, false);
    tridiag_eigvals(&d, &off)
}

/// Full eigendecomposition of a dense real symmetric matrix.
pub fn sym_eigh<T: Real>(a: &DenseMatrix<T>) -> Result<EigenDecomposition<T>> {
    check_symmetric(a)?;
    let n = a.rows();
    let mut w = a.as_slice().to_vec();
    let (mut d, off) = tred2(n, &mut w, true);
    let mut e = off;
    e.push(T::zero());
    // rows of the transform, i.e. z[r][c] = v(r, c) = w[c * n + r]
    let mut z: Vec<Vec<T>> = (0..n).map(|r| (0..n).map(|c| w[c * n + r]).collect()).collect();
    tql2(&mut d, &mut e, &mut z)?;
    let order = ascending_order(&d);
    let eigenvalues = order.iter().map(|&k| d[k]).collect();
    let q = DenseMatrix::from_fn(n, n, |i, k| z[i][order[k]]);
    Ok(EigenDecomposition { eigenvalues, eigenvectors: q })
}

/// Complex Hermitian eigenproblem via the real symmetric embedding
/// `[[X, -Y], [Y, X]]` of `H = X + iY`.
#[derive(Debug, Clone)]
pub struct HermitianEigen<T: Real> {
    pub eigenvalues: Vec<T>,
    /// Column `k` belongs to `eigenvalues[k]`; orthonormality is only
    /// guaranteed between distinct eigenvalues.
    pub eigenvectors: DenseMatrix<Complex<T>>,
}

fn embed<T: Real>(h: &DenseMatrix<Complex<T>>) -> DenseMatrix<T> {
    let n = h.rows();
    DenseMatrix::from_fn(2 * n, 2 * n, |i, j| {
        let z = h[(i % n, j % n)];
        match (i < n, j < n) {
            (true, true) | (false, false) => z.re,
            (true, false) => -z.im,
            (false, true) => z.im,
        }
    })
}

pub fn hermitian_eigvals<T: Real>(h: &DenseMatrix<Complex<T>>) -> Result<Vec<T>> {
    if !h.is_square() || !h.is_hermitian() {
        return Err(Error::Contract("matrix is not Hermitian".into()));
    }
    let all = sym_eigvals(&embed(h))?;
    // every eigenvalue of H appears twice in the embedding
    Ok(all.chunks(2).map(|p| (p[0] + p[1]) / T::lit(2.0)).collect())
}

pub fn hermitian_eigh<T: Real>(h: &DenseMatrix<Complex<T>>) -> Result<HermitianEigen<T>> {
    if !h.is_square() || !h.is_hermitian() {
        return Err(Error::Contract("matrix is not Hermitian".into()));
    }
    let n = h.rows();
    let full = sym_eigh(&embed(h))?;
    let mut eigenvalues = Vec::with_capacity(n);
    let mut vecs = DenseMatrix::zeros(n, n);
    for k in 0..n {
        let col = 2 * k + 1;
        eigenvalues.push(full.eigenvalues[col]);
        let mut v: Vec<Complex<T>> = (0..n)
            .map(|i| Complex::new(full.eigenvectors[(i, col)], full.eigenvectors[(i + n, col)]))
            .collect();
        let norm = v.iter().map(|z| z.norm_sqr()).sum::<T>().sqrt();
        for z in &mut v {
            *z /= norm;
        }
        for (i, z) in v.into_iter().enumerate() {
            vecs[(i, k)] = z;
        }
    }
    Ok(HermitianEigen { eigenvalues, eigenvectors: vecs })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn close(a: f64, b: f64, tol: f64) -> bool {
        (a - b).abs() <= tol
    }

    #[test]
    fn pauli_x_over_two() {
        let ed = tridiag_eigh(&[0.0, 0.0], &[0.5]).unwrap();
        assert!(close(ed.eigenvalues[0], -0.5, 1e-15));
        assert!(close(ed.eigenvalues[1], 0.5, 1e-15));
    }

    #[test]
    fn spin_one_jx() {
        let s = 0.5f64.sqrt();
        let ed = tridiag_eigh(&[0.0, 0.0, 0.0], &[s, s]).unwrap();
        for (got, want) in ed.eigenvalues.iter().zip([-1.0, 0.0, 1.0]) {
            assert!(close(*got, want, 1e-14), "{got} vs {want}");
        }
    }

    #[test]
    fn one_by_one() {
        let ed = tridiag_eigh(&[5.0f64], &[]).unwrap();
        assert_eq!(ed.eigenvalues, vec![5.0]);
        assert_eq!(ed.eigenvectors[(0, 0)].abs(), 1.0f64);
    }

    #[test]
    fn bad_lengths_and_nans() {
        assert!(tridiag_eigh(&[1.0, 2.0], &[]).is_err());
        assert!(tridiag_eigh(&[f64::NAN], &[]).is_err());
        assert!(tridiag_eigh::<f64>(&[], &[]).is_err());
        assert!(tridiag_eigh_rows(&[1.0, 2.0], &[1.0], &[2]).is_err());
    }

    #[test]
    fn partial_rows_match_full() {
        let n = 40;
        let d: Vec<f64> = (0..n).map(|i| (i as f64 * 0.37).sin()).collect();
        let e: Vec<f64> = (0..n - 1).map(|i| 1.0 + (i as f64 * 0.11).cos()).collect();
        let full = tridiag_eigh(&d, &e).unwrap();
        let part = tridiag_eigh_rows(&d, &e, &[3, 17, 39]).unwrap();
        assert_eq!(full.eigenvalues, part.eigenvalues);
        for (r, &row) in part.row_indices.iter().enumerate() {
            for k in 0..n {
                assert_eq!(part.rows[r][k], full.eigenvectors[(row, k)]);
            }
        }
    }

    #[test]
    fn dense_symmetric_reconstructs() {
        let n = 12;
        let a = DenseMatrix::from_fn(n, n, |i, j| ((i * 7 + j * 7 + i * j) % 11) as f64 - 5.0);
        let ed = sym_eigh(&a).unwrap();
        let r = ed.reconstruct();
        assert!(r.max_abs_diff(&a).unwrap() < 1e-12);
        let vals = sym_eigvals(&a).unwrap();
        for (x, y) in vals.iter().zip(&ed.eigenvalues) {
            assert!(close(*x, *y, 1e-12));
        }
    }

    #[test]
    fn hermitian_embedding() {
        let i = Complex::new(0.0, 1.0);
        let one = Complex::new(1.0, 0.0);
        let h = DenseMatrix::from_rows(&[vec![one * 0.0, -i * 0.5], vec![i * 0.5, one * 0.0]]).unwrap();
        let he = hermitian_eigh(&h).unwrap();
        assert!(close(he.eigenvalues[0], -0.5, 1e-15));
        assert!(close(he.eigenvalues[1], 0.5, 1e-15));
        let v: Vec<_> = he.eigenvectors.column(1);
        let hv = h.matvec(&v);
        for (a, b) in hv.iter().zip(&v) {
            assert!((a - b * 0.5).norm() < 1e-14);
        }
    }

    #[test]
    fn works_in_single_precision() {
        let ed = tridiag_eigh(&[0.0f32, 0.0, 0.0], &[0.5f32.sqrt(), 0.5f32.sqrt()]).unwrap();
        assert!((ed.eigenvalues[2] - 1.0).abs() < 1e-6);
    }
}
