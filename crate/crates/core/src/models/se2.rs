use super::{CommutatorMatrix, CommutatorReport, Family};
use crate::error::{contract, Result};
use crate::hankel::{hankel_truncation, ArcSymbol};
use crate::linalg::{operator_norm_with, DenseMatrix, NormOptions};
use crate::scalar::Real;

/// `[M_{1_E}, Pi_T]` on Fourier modes `-K..=K`, with `M` the Toeplitz matrix
/// of `1_E` and `Pi_T` the projection onto modes `>= 0`.
pub fn se2_commutator<R: Real>(k: usize) -> Result<CommutatorReport<R>> {
    se2_commutator_with(k, &NormOptions::default())
}

/// `block_check` holds the largest deviation from `H_E (+) (-H_E)^*`.
pub fn se2_commutator_with<R: Real>(k: usize, opts: &NormOptions) -> Result<CommutatorReport<R>> {
    if k < 1 {
        return contract("Fourier window K must be >= 1");
    }
    let sym = ArcSymbol::<R>::half_plane();
    let dim = 2 * k + 1;
    let mode = |i: usize| i as i64 - k as i64;
    let proj = |i: usize| if mode(i) >= 0 { R::one() } else { R::zero() };
    let c = DenseMatrix::from_fn(dim, dim, |r, s| sym.fourier_coeff(mode(r) - mode(s)) * (proj(s) - proj(r)));

    // negative mode -k' pairs with Hankel index k', mode l'-1 with index l'
    let h = hankel_truncation(&sym, k + 1)?.entries;
    let hidx = |i: usize| if mode(i) < 0 { (-mode(i)) as usize } else { mode(i) as usize + 1 };
    let mut residual = R::zero();
    for r in 0..dim {
        for s in 0..dim {
            let expected = match (mode(r) < 0, mode(s) < 0) {
                (true, false) => h[(hidx(r) - 1, hidx(s) - 1)],
                (false, true) => -h[(hidx(s) - 1, hidx(r) - 1)],
                _ => R::zero(),
            };
            residual = residual.max((c[(r, s)] - expected).abs());
        }
    }

    let est = operator_norm_with(&c, opts);
    let mut report = CommutatorReport::new(Family::Se2, CommutatorMatrix::Real(c), est.value, est.method);
    report.k = Some(k);
    report.block_check = Some(residual);
    Ok(report)
}
