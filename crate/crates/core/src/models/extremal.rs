use num_complex::Complex;

use super::{CommutatorReport, Family};
use crate::error::Result;
use crate::linalg::hermitian_eigh;
use crate::scalar::Real;
use crate::spinrep::{HalfInt, SpinRep};

/// Eigenvalue gap below which the extremal space counts as degenerate.
pub const DEGENERACY_GAP: f64 = 1e-10;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Extremal {
    Max,
    Min,
}

#[derive(Debug, Clone)]
pub struct ExtremalVector<R: Real> {
    /// Basis labels: `J_z` weights `j, ..., -j` for SU(2), Fourier modes
    /// `-K..=K` for ring and SE(2), grid points `0..n` for Heisenberg.
    pub weights: Vec<HalfInt>,
    /// Unit vector, phased so its largest entry is real and positive.
    pub coefficients: Vec<Complex<R>>,
    /// Eigenvalue of `iC` (anti-Hermitian case) or singular value of `C`.
    pub value: R,
    /// `||C v||`.
    pub attained: R,
    pub degenerate: bool,
    pub diagnostics: Vec<String>,
}

/// Unit vector realizing the largest (`Max`) or smallest (`Min`) eigenvalue of
/// `iC` when `C` is anti-Hermitian, or the corresponding singular value otherwise.
pub fn extremal_vector<R: Real>(report: &CommutatorReport<R>, which: Extremal) -> Result<ExtremalVector<R>> {
    let c = report.matrix.to_complex();
    let n = c.rows();
    let tol = R::lit(1e-12) * R::one().max(c.max_abs());
    let anti = c.anti_hermitian_defect() <= tol;
    let h = if anti { c.map(|z| Complex::new(-z.im, z.re)) } else { c.gram() };
    let eig = hermitian_eigh(&h)?;
    let pick = match which {
        Extremal::Max => n - 1,
        Extremal::Min => 0,
    };
    let neighbour = match which {
        Extremal::Max => n.checked_sub(2),
        Extremal::Min => (n > 1).then_some(1),
    };
    let degenerate =
        neighbour.is_some_and(|o| (eig.eigenvalues[pick] - eig.eigenvalues[o]).abs() < R::lit(DEGENERACY_GAP));
    let mut v = eig.eigenvectors.column(pick);
    phase_fix(&mut v);
    let attained = norm2(&c.matvec(&v));
    let value = if anti { eig.eigenvalues[pick] } else { eig.eigenvalues[pick].max(R::zero()).sqrt() };
    let mut diagnostics = Vec::new();
    if degenerate {
        diagnostics.push("extremal eigenvalue is degenerate; returned vector is one of several".to_string());
    }
    Ok(ExtremalVector { weights: labels(report, n), coefficients: v, value, attained, degenerate, diagnostics })
}

fn norm2<R: Real>(v: &[Complex<R>]) -> R {
    v.iter().map(|z| z.norm_sqr()).sum::<R>().sqrt()
}

fn phase_fix<R: Real>(v: &mut [Complex<R>]) {
    let big = v.iter().copied().fold(Complex::new(R::zero(), R::zero()), |b, z| if z.norm() > b.norm() { z } else { b });
    if big.norm() > R::zero() {
        let phase = big.conj() / big.norm();
        for z in v.iter_mut() {
            *z *= phase;
        }
    }
}

fn labels<R: Real>(report: &CommutatorReport<R>, n: usize) -> Vec<HalfInt> {
    match report.family {
        Family::Su2 | Family::Su2Interval | Family::Su2Caps => {
            SpinRep::new(n).map(|rep| rep.weights().collect()).unwrap_or_default()
        }
        Family::Ring | Family::Se2 => {
            let k = (n / 2) as i64;
            (-k..=k).map(HalfInt::int).collect()
        }
        Family::Heisenberg => (0..n as i64).map(HalfInt::int).collect(),
    }
}


#[cfg(test)]
mod tests {
    use super::*;
    use crate::models::{heisenberg_commutator, se2_commutator, su2_caps_commutator, su2_commutator};

    #[test]
    fn spin_half() {
        let r = su2_commutator::<f64>(2, 0.0, 1.0).unwrap();
        let v = extremal_vector(&r, Extremal::Max).unwrap();
        for z in &v.coefficients {
            assert!((z.norm() - std::f64::consts::FRAC_1_SQRT_2).abs() < 1e-12);
        }
        assert_eq!(v.weights, vec![HalfInt::HALF, -HalfInt::HALF]);
        assert!((v.attained - 0.5).abs() < 1e-12);
    }

    #[test]
    fn realizes_the_norm() {
        let reports = vec![
            su2_commutator::<f64>(21, 0.0, 1.0).unwrap(),
            su2_commutator::<f64>(30, 0.2, 0.6).unwrap(),
            heisenberg_commutator::<f64>(17).unwrap(),
            se2_commutator::<f64>(6).unwrap(),
        ];
        for r in &reports {
            for which in [Extremal::Max, Extremal::Min] {
                let v = extremal_vector(r, which).unwrap();
                assert!((v.attained - r.norm).abs() < 1e-9, "{:?}", r.family);
                assert!((norm2(&v.coefficients) - 1.0).abs() < 1e-12);
                assert_eq!(v.weights.len(), r.dim);
            }
        }
    }

    #[test]
    fn zero_commutator_is_degenerate() {
        let r = su2_caps_commutator::<f64>(2, 0.9).unwrap();
        let v = extremal_vector(&r, Extremal::Max).unwrap();
        assert!(v.degenerate && !v.diagnostics.is_empty());
        assert_eq!(v.attained, 0.0);
    }
}
