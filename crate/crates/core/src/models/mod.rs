//! Commutator families: SU(2) spin, ring, finite Heisenberg and SE(2).

mod extremal;
mod heisenberg;
mod ring;
mod se2;
mod su2;

use std::fmt;
use std::str::FromStr;

use num_complex::Complex;

use crate::error::Error;
use crate::linalg::{DenseMatrix, NormMethod};
use crate::scalar::Real;

pub use extremal::{extremal_vector, Extremal, ExtremalVector, DEGENERACY_GAP};
pub use heisenberg::{
    heisenberg_closed_form, heisenberg_commutator, heisenberg_commutator_shifted, heisenberg_commutator_with,
    heisenberg_pairing, heisenberg_submatrix, heisenberg_submatrix_shifted,
};
pub use ring::{
    grid_membership, ring_commutator, ring_commutator_shifted, ring_commutator_with, ring_submatrix,
    ring_submatrix_shifted, ring_window, window_start,
};
pub use se2::{se2_commutator, se2_commutator_with};
pub use su2::{
    su2_caps_commutator, su2_caps_commutator_with, su2_commutator, su2_commutator_with, su2_submatrix,
};

/// Slack on the universal bound `||[P, Q]|| <= 1/2`.
pub const NORM_BOUND_SLACK: f64 = 1e-10;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Family {
    Su2,
    Su2Interval,
    Su2Caps,
    Ring,
    Heisenberg,
    Se2,
}

impl Family {
    pub const ALL: [Family; 6] =
        [Family::Su2, Family::Su2Interval, Family::Su2Caps, Family::Ring, Family::Heisenberg, Family::Se2];

    pub fn as_str(self) -> &'static str {
        match self {
            Family::Su2 => "su2",
            Family::Su2Interval => "su2_interval",
            Family::Su2Caps => "su2_caps",
            Family::Ring => "ring",
            Family::Heisenberg => "heisenberg",
            Family::Se2 => "se2",
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for Family {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self, Error> {
        Family::ALL
            .into_iter()
            .find(|f| f.as_str() == s)
            .ok_or_else(|| Error::Contract(format!("unknown family {s:?}")))
    }
}

/// The commutator itself, real or complex depending on the family.
#[derive(Debug, Clone)]
pub enum CommutatorMatrix<R: Real> {
    Real(DenseMatrix<R>),
    Complex(DenseMatrix<Complex<R>>),
}

impl<R: Real> CommutatorMatrix<R> {
    pub fn dim(&self) -> usize {
        match self {
            CommutatorMatrix::Real(m) => m.rows(),
            CommutatorMatrix::Complex(m) => m.rows(),
        }
    }

    pub fn to_complex(&self) -> DenseMatrix<Complex<R>> {
        match self {
            CommutatorMatrix::Real(m) => m.map(|x| Complex::new(x, R::zero())),
            CommutatorMatrix::Complex(m) => m.clone(),
        }
    }
}

#[derive(Debug, Clone)]
pub struct CommutatorReport<R: Real> {
    pub family: Family,
    pub n: Option<usize>,
    pub a: Option<R>,
    pub b: Option<R>,
    /// Fourier window `-K..=K` for the infinite-dimensional models.
    pub k: Option<usize>,
    pub norm: R,
    pub norm_method: NormMethod,
    pub dim: usize,
    pub matrix: CommutatorMatrix<R>,
    pub submatrix: Option<DenseMatrix<R>>,
    /// Residual of the structural identity checked while building.
    pub block_check: Option<R>,
    pub diagnostics: Vec<String>,
}

impl<R: Real> CommutatorReport<R> {
    fn new(family: Family, matrix: CommutatorMatrix<R>, norm: R, norm_method: NormMethod) -> Self {
        let mut diagnostics = Vec::new();
        if norm > R::lit(0.5 + NORM_BOUND_SLACK) {
            diagnostics.push(format!("norm {norm} exceeds the projection-commutator bound 1/2"));
        }
        CommutatorReport {
            family,
            n: None,
            a: None,
            b: None,
            k: None,
            norm,
            norm_method,
            dim: matrix.dim(),
            matrix,
            submatrix: None,
            block_check: None,
            diagnostics,
        }
    }
}
