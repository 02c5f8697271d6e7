//! Hankel operators with arc-indicator symbols on the Hardy space.

use crate::error::{contract, Result};
use crate::linalg::{sym_eigvals, DenseMatrix};
use crate::scalar::Real;

/// Indicator of the arc `E_a = { z : Re z > a }`, `0 <= a < 1`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ArcSymbol<R> {
    pub a: R,
    /// Half-opening `arccos a`.
    pub alpha: R,
}

impl<R: Real> ArcSymbol<R> {
    pub fn new(a: R) -> Result<Self> {
        if !(a >= R::zero() && a < R::one()) {
            return contract(format!("arc parameter a must lie in [0, 1), got {a}"));
        }
        Ok(ArcSymbol { a, alpha: a.acos() })
    }

    /// The right half circle.
    pub fn half_plane() -> Self {
        ArcSymbol { a: R::zero(), alpha: R::FRAC_PI_2() }
    }

    pub fn is_half_plane(&self) -> bool {
        self.a == R::zero()
    }

    /// Symbol value at `e^{i theta}`.
    pub fn value_at(&self, theta: R) -> R {
        if theta.cos() > self.a {
            R::one()
        } else {
            R::zero()
        }
    }

    /// Fourier coefficient: `alpha/pi` at `p = 0`, `sin(p alpha)/(pi p)` otherwise.
    /// For `a = 0` the sine is evaluated exactly from `p mod 4`.
    pub fn fourier_coeff(&self, p: i64) -> R {
        if p == 0 {
            return self.alpha / R::PI();
        }
        let pr = R::of(p);
        if self.is_half_plane() {
            return match p.rem_euclid(4) {
                1 => R::one() / (R::PI() * pr),
                3 => -R::one() / (R::PI() * pr),
                _ => R::zero(),
            };
        }
        (pr * self.alpha).sin() / (R::PI() * pr)
    }

    /// Jump points `e^{i theta}` with `phi_theta = (phi(theta+) - phi(theta-)) / 2`.
    pub fn jumps(&self) -> Vec<(R, R)> {
        let t = R::lit(1e-9).max(R::epsilon().sqrt());
        [self.alpha, -self.alpha]
            .into_iter()
            .map(|th| (th, (self.value_at(th + t) - self.value_at(th - t)) / R::lit(2.0)))
            .filter(|&(_, j)| j != R::zero())
            .collect()
    }
}

pub fn fourier_coeff<R: Real>(sym: &ArcSymbol<R>, p: i64) -> R {
    sym.fourier_coeff(p)
}

/// Leading `N x N` block `h_{k,l} = phi^(1 - k - l)`, `1 <= k, l <= N`.
#[derive(Debug, Clone)]
pub struct HankelTruncation<R: Real> {
    pub symbol: ArcSymbol<R>,
    pub entries: DenseMatrix<R>,
}

impl<R: Real> HankelTruncation<R> {
    pub fn size(&self) -> usize {
        self.entries.rows()
    }
}

pub fn hankel_truncation<R: Real>(sym: &ArcSymbol<R>, n: usize) -> Result<HankelTruncation<R>> {
    if n == 0 {
        return contract("Hankel truncation size must be >= 1");
    }
    // coefficient at 1 - k - l for 0-based k, l is at -1 - (k + l)
    let coeffs: Vec<R> = (0..2 * n - 1).map(|s| sym.fourier_coeff(-1 - s as i64)).collect();
    Ok(HankelTruncation { symbol: *sym, entries: DenseMatrix::from_fn(n, n, |k, l| coeffs[k + l]) })
}

/// Spectral norm of the `N x N` truncation, from an exact symmetric
/// eigensolve.  For `a = 0` the odd and even index sets decouple (entries
/// vanish unless `k + l` is even) and are solved separately.
pub fn truncated_norm<R: Real>(sym: &ArcSymbol<R>, n: usize) -> Result<R> {
    let h = hankel_truncation(sym, n)?;
    let radius = |m: &DenseMatrix<R>| -> Result<R> {
        Ok(sym_eigvals(m)?.into_iter().fold(R::zero(), |acc, v| acc.max(v.abs())))
    };
    if !sym.is_half_plane() || n == 1 {
        return radius(&h.entries);
    }
    let mut best = R::zero();
    for parity in 0..2 {
        let idx: Vec<usize> = (parity..n).step_by(2).collect();
        let block = DenseMatrix::from_fn(idx.len(), idx.len(), |r, c| h.entries[(idx[r], idx[c])]);
        best = best.max(radius(&block)?);
    }
    Ok(best)
}

/// Upper certificate `inf_c || 1_{E_a} - c ||_inf`: the Hankel operator only
/// sees negative frequencies, so shifting the symbol by a constant is free,
/// and the indicator's two values are balanced by `c = 1/2`.
pub fn nehari_bound<R: Real>(_sym: &ArcSymbol<R>) -> R {
    let (lo, hi) = (R::zero(), R::one());
    let c = (lo + hi) / R::lit(2.0);
    (hi - c).max(c - lo)
}

/// Radius of the essential spectrum from the symbol's jumps: a conjugate
/// pair `zeta, conj(zeta)` contributes `sqrt(-phi_zeta phi_conj(zeta))`, a
/// jump at `+-1` contributes `|phi_{+-1}|`.
pub fn power_essential_radius<R: Real>(sym: &ArcSymbol<R>) -> R {
    let jumps = sym.jumps();
    let eps = R::lit(1e-12);
    let mut radius = R::zero();
    for (i, &(th, phi)) in jumps.iter().enumerate() {
        let real_point = th.sin().abs() < eps;
        if real_point {
            radius = radius.max(phi.abs());
            continue;
        }
        for &(th2, phi2) in &jumps[i + 1..] {
            if (th + th2).abs() < eps {
                radius = radius.max((-(phi * phi2)).max(R::zero()).sqrt());
            }
        }
    }
    radius
}
