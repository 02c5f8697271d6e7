use crate::error::Result;
use crate::linalg::tridiag_eigh;
use crate::scalar::Real;

/// Gauss-Legendre nodes and weights on `[-1, 1]` (Golub-Welsch).
pub fn gauss_legendre<R: Real>(n: usize) -> Result<(Vec<R>, Vec<R>)> {
    if n == 0 {
        return crate::error::contract("quadrature needs at least one node");
    }
    let diag = vec![R::zero(); n];
    let off: Vec<R> = (1..n)
        .map(|k| {
            let k = R::of(k as i64);
            k / (R::lit(4.0) * k * k - R::one()).sqrt()
        })
        .collect();
    let ed = tridiag_eigh(&diag, &off)?;
    let weights = (0..n).map(|i| R::lit(2.0) * ed.eigenvectors[(0, i)].powi(2)).collect();
    Ok((ed.eigenvalues, weights))
}

/// `int_a^b f` with an `n`-point Gauss-Legendre rule.
pub fn integrate<R: Real>(f: impl Fn(R) -> R, a: R, b: R, n: usize) -> Result<R> {
    let (x, w) = gauss_legendre::<R>(n)?;
    let half = (b - a) / R::lit(2.0);
    let mid = (b + a) / R::lit(2.0);
    Ok(x.iter().zip(&w).map(|(&xi, &wi)| wi * f(mid + half * xi)).sum::<R>() * half)
}

/// Composite trapezoid rule with `n` intervals.
pub fn trapezoid<R: Real>(f: impl Fn(R) -> R, a: R, b: R, n: usize) -> R {
    let h = (b - a) / R::of(n as i64);
    let mut acc = (f(a) + f(b)) / R::lit(2.0);
    for i in 1..n {
        acc += f(a + h * R::of(i as i64));
    }
    acc * h
}
