use super::{CommutatorMatrix, CommutatorReport, Family};
use crate::error::{contract, Result};
use crate::linalg::{commutator, operator_norm_with, DenseMatrix, NormOptions};
use crate::scalar::Real;
use crate::spinrep::{projection_x, projection_x_entries, projection_z_above, projection_z_interval, HalfInt, SpinRep};

/// `[1_{(a(j+1/2), inf)}(J_x), 1_{(0, b(j+1/2)]}(J_z)]` in the `J_z` basis.
pub fn su2_commutator<R: Real>(n: usize, a: R, b: R) -> Result<CommutatorReport<R>> {
    su2_commutator_with(n, a, b, &NormOptions::default())
}

pub fn su2_commutator_with<R: Real>(n: usize, a: R, b: R, opts: &NormOptions) -> Result<CommutatorReport<R>> {
    let rep = SpinRep::new(n)?;
    let p = projection_x(rep, a)?;
    let q = projection_z_interval(rep, b)?;
    let c = commutator(&p.entries, &q)?;
    let standard = a == R::zero() && b == R::one();

    let mut report = if standard {
        // positive weights come first: C = [[0, -P2], [P2^T, 0]]
        let pos = rep.weights().filter(|m| m.twice() > 0).count();
        let p2 = p.entries.submatrix(0..pos, pos..n);
        let est = operator_norm_with(&p2, opts);
        let mut r = CommutatorReport::new(Family::Su2, CommutatorMatrix::Real(c.clone()), est.value, est.method);
        r.block_check = Some(block_residual(&c, &p2, pos));
        r
    } else {
        let est = operator_norm_with(&c, opts);
        CommutatorReport::new(Family::Su2Interval, CommutatorMatrix::Real(c), est.value, est.method)
    };
    report.n = Some(n);
    report.a = Some(a);
    report.b = Some(b);
    Ok(report)
}

fn block_residual<R: Real>(c: &DenseMatrix<R>, p2: &DenseMatrix<R>, pos: usize) -> R {
    let n = c.rows();
    let mut res = R::zero();
    for i in 0..n {
        for k in 0..n {
            let expected = match (i < pos, k < pos) {
                (true, false) => -p2[(i, k - pos)],
                (false, true) => p2[(k, i - pos)],
                _ => R::zero(),
            };
            res = res.max((c[(i, k)] - expected).abs());
        }
    }
    res
}

/// Both projections thresholded at `a (j + 1/2)`.
pub fn su2_caps_commutator<R: Real>(n: usize, a: R) -> Result<CommutatorReport<R>> {
    su2_caps_commutator_with(n, a, &NormOptions::default())
}

pub fn su2_caps_commutator_with<R: Real>(n: usize, a: R, opts: &NormOptions) -> Result<CommutatorReport<R>> {
    let rep = SpinRep::new(n)?;
    let p = projection_x(rep, a)?;
    let q = projection_z_above(rep, a)?;
    let c = commutator(&p.entries, &q)?;
    let est = operator_norm_with(&c, opts);
    let mut report = CommutatorReport::new(Family::Su2Caps, CommutatorMatrix::Real(c), est.value, est.method);
    report.n = Some(n);
    report.a = Some(a);
    Ok(report)
}

/// The `N x N` block `c_{k,l} = P_{k, 1-l}` (odd `n`) or `P_{k-1/2, 1/2-l}`
/// (even `n`) of the `J_x` projection, `1 <= k, l <= N`.
pub fn su2_submatrix<R: Real>(n: usize, big_n: usize) -> Result<DenseMatrix<R>> {
    let rep = SpinRep::new(n)?;
    if big_n == 0 || rep.j().twice() <= 2 * big_n as i64 {
        return contract(format!("submatrix size {big_n} needs 1 <= N < j = {}", rep.j()));
    }
    let shift = if n % 2 == 1 { 0 } else { 1 };
    let mut pairs = Vec::with_capacity(big_n * big_n);
    for k in 1..=big_n as i64 {
        for l in 1..=big_n as i64 {
            pairs.push((HalfInt::from_twice(2 * k - shift), HalfInt::from_twice(2 - 2 * l - shift)));
        }
    }
    let vals = projection_x_entries(rep, R::zero(), &pairs)?;
    DenseMatrix::from_vec(big_n, big_n, vals)
}
