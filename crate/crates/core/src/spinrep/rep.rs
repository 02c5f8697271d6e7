use num_complex::Complex;

use super::halfint::HalfInt;
use crate::error::{contract, Result};
use crate::linalg::DenseMatrix;
use crate::scalar::Real;

/// Irreducible representation of dimension `n`, spin `j = (n - 1)/2`.
///
/// Basis index `k` carries the weight `m = j - k`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub struct SpinRep {
    n: usize,
}

impl SpinRep {
    pub fn new(n: usize) -> Result<Self> {
        if n < 2 {
            return contract(format!("representation dimension must be >= 2, got {n}"));
        }
        Ok(SpinRep { n })
    }

    pub fn from_spin(j: HalfInt) -> Result<Self> {
        if j.twice() < 1 {
            return contract(format!("spin must be >= 1/2, got {j}"));
        }
        Self::new(j.twice() as usize + 1)
    }

    #[inline]
    pub fn dim(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn j(&self) -> HalfInt {
        HalfInt::from_twice(self.n as i64 - 1)
    }

    /// Weight of basis index `k`.
    #[inline]
    pub fn weight(&self, k: usize) -> HalfInt {
        debug_assert!(k < self.n);
        HalfInt::from_twice(self.n as i64 - 1 - 2 * k as i64)
    }

    /// `m = j, j-1, ..., -j`.
    pub fn weights(&self) -> impl Iterator<Item = HalfInt> + '_ {
        (0..self.n).map(|k| self.weight(k))
    }

    /// Basis index of weight `m`, if `m` is on the lattice.
    pub fn index(&self, m: HalfInt) -> Option<usize> {
        let off = self.j().twice() - m.twice();
        (off >= 0 && off % 2 == 0 && ((off / 2) as usize) < self.n).then_some((off / 2) as usize)
    }

    pub(crate) fn require_index(&self, m: HalfInt) -> Result<usize> {
        match self.index(m) {
            Some(k) => Ok(k),
            None => contract(format!("weight {m} is not in the spin-{} lattice", self.j())),
        }
    }

    /// `2 m > a n`, i.e. `m > a (j + 1/2)`, decided on the twice-lattice.
    #[inline]
    pub fn above<R: Real>(&self, m: HalfInt, a: R) -> bool {
        R::of(m.twice()) > a * R::of(self.n as i64)
    }

    /// Number of weights with `m > a (j + 1/2)`.
    pub fn count_above<R: Real>(&self, a: R) -> usize {
        self.weights().filter(|&m| self.above(m, a)).count()
    }

    /// Off-diagonal of `J_x`: `sqrt((k + 1)(n - 1 - k)) / 2`.
    pub fn jx_offdiag<R: Real>(&self) -> Vec<R> {
        let n = self.n as i64;
        (0..n - 1).map(|k| R::of((k + 1) * (n - 1 - k)).sqrt() / R::lit(2.0)).collect()
    }
}

/// Dense spin operators in the `J_z` eigenbasis.
#[derive(Debug, Clone)]
pub struct SpinOperators<R: Real> {
    pub rep: SpinRep,
    pub jx: DenseMatrix<R>,
    pub jz: DenseMatrix<R>,
    /// `<m + 1| J_+ |m>` for `m = j - 1, ..., -j` (basis rows `0..n-1`).
    pub ladder: Vec<R>,
}

impl<R: Real> SpinOperators<R> {
    /// `J_y = (J_+ - J_-) / 2i`.
    pub fn jy(&self) -> DenseMatrix<Complex<R>> {
        let n = self.rep.dim();
        let mut m = DenseMatrix::zeros(n, n);
        for (k, &c) in self.ladder.iter().enumerate() {
            let h = c / R::lit(2.0);
            m[(k, k + 1)] = Complex::new(R::zero(), -h);
            m[(k + 1, k)] = Complex::new(R::zero(), h);
        }
        m
    }
}

pub fn build_spin_operators<R: Real>(rep: SpinRep) -> SpinOperators<R> {
    let n = rep.dim();
    let off: Vec<R> = rep.jx_offdiag();
    let ladder: Vec<R> = off.iter().map(|&e| e * R::lit(2.0)).collect();
    let mut jx = DenseMatrix::zeros(n, n);
    for (k, &e) in off.iter().enumerate() {
        jx[(k, k + 1)] = e;
        jx[(k + 1, k)] = e;
    }
    let jz = DenseMatrix::diagonal(&rep.weights().map(|m| m.value::<R>()).collect::<Vec<_>>());
    SpinOperators { rep, jx, jz, ladder }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::{commutator, tridiag_eigvals};

    #[test]
    fn small_reps() {
        let ops = build_spin_operators::<f64>(SpinRep::new(2).unwrap());
        assert_eq!(ops.jz, DenseMatrix::diagonal(&[0.5, -0.5]));
        assert_eq!(ops.jx, DenseMatrix::from_rows(&[vec![0.0, 0.5], vec![0.5, 0.0]]).unwrap());
        let s = SpinRep::new(3).unwrap().jx_offdiag::<f64>();
        assert!((s[0] - 0.5f64.sqrt()).abs() < 1e-16 && (s[1] - 0.5f64.sqrt()).abs() < 1e-16);
        assert!(SpinRep::new(1).is_err());
    }

    #[test]
    fn weights_and_indices() {
        let r = SpinRep::new(4).unwrap();
        let w: Vec<String> = r.weights().map(|m| m.to_string()).collect();
        assert_eq!(w, ["3/2", "1/2", "-1/2", "-3/2"]);
        assert_eq!(r.index(HalfInt::from_twice(-1)), Some(2));
        assert_eq!(r.index(HalfInt::int(0)), None);
        assert_eq!(r.index(HalfInt::from_twice(5)), None);
        assert_eq!(r.index(HalfInt::from_twice(-5)), None);
        assert_eq!(r.count_above(0.0), 2);
    }

    #[test]
    fn commutation_relation() {
        for n in [2, 3, 6, 11] {
            let ops = build_spin_operators::<f64>(SpinRep::new(n).unwrap());
            let jx = ops.jx.map(|x| Complex::new(x, 0.0));
            let jz = ops.jz.map(|x| Complex::new(x, 0.0));
            let c = commutator(&jx, &ops.jy()).unwrap();
            let r = c.sub(&jz.scaled(Complex::new(0.0, 1.0))).unwrap();
            assert!(r.max_abs() < 1e-12);
        }
    }

    #[test]
    fn jx_spectrum_is_the_lattice() {
        for n in [2, 5, 40, 101] {
            let r = SpinRep::new(n).unwrap();
            let vals = tridiag_eigvals(&vec![0.0f64; n], &r.jx_offdiag()).unwrap();
            for (k, v) in vals.iter().enumerate() {
                let want = r.weight(n - 1 - k).to_f64();
                assert!((v - want).abs() < 1e-10, "n={n}: {v} vs {want}");
            }
        }
    }
}
