use std::collections::BTreeMap;

use super::halfint::HalfInt;
use super::rep::SpinRep;
use super::wigner::wigner_d_sum;
use crate::error::{contract, Result};
use crate::linalg::{tridiag_eigh, tridiag_eigh_rows, DenseMatrix};
use crate::scalar::Real;

/// Spectral projection `1_{(a(j+1/2), inf)}(J_x)` in the `J_z` basis.
#[derive(Debug, Clone)]
pub struct ProjectionMatrix<R: Real> {
    pub rep: SpinRep,
    pub a: R,
    pub entries: DenseMatrix<R>,
    /// Number of selected eigenvalues.
    pub rank: usize,
}

impl<R: Real> ProjectionMatrix<R> {
    pub fn get(&self, m_prime: HalfInt, m: HalfInt) -> Result<R> {
        Ok(self.entries[(self.rep.require_index(m_prime)?, self.rep.require_index(m)?)])
    }

    pub fn trace(&self) -> R {
        self.entries.trace()
    }

    /// Largest entry of `|P^2 - P|`.
    pub fn idempotency_defect(&self) -> R {
        let p = &self.entries;
        p.matmul(p).expect("square").sub(p).expect("same shape").max_abs()
    }
}

fn check_a<R: Real>(a: R) -> Result<()> {
    if !(a >= R::zero() && a < R::one()) {
        return contract(format!("threshold a must lie in [0, 1), got {a}"));
    }
    Ok(())
}

/// Twice the lattice point nearest to `lambda`.
fn snap<R: Real>(lambda: R) -> i64 {
    (lambda * R::lit(2.0)).round().to_i64().expect("finite eigenvalue")
}

/// Eigen-path projection: eigendecompose the tridiagonal `J_x`, snap each
/// eigenvalue to the weight lattice and keep those above `a (j + 1/2)`.
pub fn projection_x<R: Real>(rep: SpinRep, a: R) -> Result<ProjectionMatrix<R>> {
    check_a(a)?;
    let n = rep.dim();
    let ed = tridiag_eigh(&vec![R::zero(); n], &rep.jx_offdiag::<R>())?;
    let selected: Vec<usize> = (0..n)
        .filter(|&e| rep.above(HalfInt::from_twice(snap(ed.eigenvalues[e])), a))
        .collect();
    let q = &ed.eigenvectors;
    let mut p = DenseMatrix::zeros(n, n);
    for r in 0..n {
        for s in r..n {
            let v: R = selected.iter().map(|&e| q[(r, e)] * q[(s, e)]).sum();
            p[(r, s)] = v;
            p[(s, r)] = v;
        }
    }
    Ok(ProjectionMatrix { rep, a, entries: p, rank: selected.len() })
}

/// Selected entries `P_{m', m}` of [`projection_x`], accumulating only the
/// eigenvector rows that are needed.
pub fn projection_x_entries<R: Real>(rep: SpinRep, a: R, pairs: &[(HalfInt, HalfInt)]) -> Result<Vec<R>> {
    check_a(a)?;
    let mut rows: BTreeMap<usize, usize> = BTreeMap::new();
    let mut idx = Vec::with_capacity(pairs.len());
    for &(mp, m) in pairs {
        let (r, c) = (rep.require_index(mp)?, rep.require_index(m)?);
        idx.push((r, c));
        let next = rows.len();
        rows.entry(r).or_insert(next);
        let next = rows.len();
        rows.entry(c).or_insert(next);
    }
    let mut wanted = vec![0; rows.len()];
    for (&row, &slot) in &rows {
        wanted[slot] = row;
    }
    let n = rep.dim();
    let part = tridiag_eigh_rows(&vec![R::zero(); n], &rep.jx_offdiag::<R>(), &wanted)?;
    let selected: Vec<usize> = (0..n)
        .filter(|&e| rep.above(HalfInt::from_twice(snap(part.eigenvalues[e])), a))
        .collect();
    Ok(idx
        .into_iter()
        .map(|(r, c)| {
            let (vr, vc) = (&part.rows[rows[&r]], &part.rows[rows[&c]]);
            selected.iter().map(|&e| vr[e] * vc[e]).sum()
        })
        .collect())
}

/// Sum-path projection `P_{m', m} = sum_{mu > a(j+1/2)} d_{m, mu}(pi/2) d_{m', mu}(pi/2)`
/// built from [`wigner_d_sum`]; intended for `n <= 31`.
pub fn projection_x_sum<R: Real>(rep: SpinRep, a: R) -> Result<ProjectionMatrix<R>> {
    check_a(a)?;
    let n = rep.dim();
    let j = rep.j();
    let mut d = DenseMatrix::zeros(n, n);
    for r in 0..n {
        for c in 0..n {
            d[(r, c)] = wigner_d_sum(j, rep.weight(r), rep.weight(c), R::FRAC_PI_2())?;
        }
    }
    let selected: Vec<usize> = (0..n).filter(|&c| rep.above(rep.weight(c), a)).collect();
    let p = DenseMatrix::from_fn(n, n, |r, s| selected.iter().map(|&c| d[(r, c)] * d[(s, c)]).sum());
    Ok(ProjectionMatrix { rep, a, entries: p, rank: selected.len() })
}

/// `1_{(0, b(j+1/2)]}(J_z)`: selects the weights `0 < m <= b (j + 1/2)`.
pub fn projection_z_interval<R: Real>(rep: SpinRep, b: R) -> Result<DenseMatrix<R>> {
    if !(b > R::zero() && b <= R::one()) {
        return contract(format!("interval bound b must lie in (0, 1], got {b}"));
    }
    let n = R::of(rep.dim() as i64);
    let diag: Vec<R> = rep
        .weights()
        .map(|m| if m.twice() > 0 && R::of(m.twice()) <= b * n { R::one() } else { R::zero() })
        .collect();
    Ok(DenseMatrix::diagonal(&diag))
}

/// `1_{(a(j+1/2), inf)}(J_z)`.
pub fn projection_z_above<R: Real>(rep: SpinRep, a: R) -> Result<DenseMatrix<R>> {
    check_a(a)?;
    let diag: Vec<R> = rep.weights().map(|m| if rep.above(m, a) { R::one() } else { R::zero() }).collect();
    Ok(DenseMatrix::diagonal(&diag))
}
