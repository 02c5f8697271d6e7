//! Dense linear algebra: matrices, symmetric eigensolvers and the spectral norm.

mod eigen;
mod matrix;
mod norm;

pub use eigen::{
    hermitian_eigh, hermitian_eigvals, sym_eigh, sym_eigvals, tridiag_eigh, tridiag_eigh_rows, tridiag_eigvals,
    EigenDecomposition, HermitianEigen, PartialEigenvectors,
};
pub use matrix::DenseMatrix;
pub use norm::{commutator, operator_norm, operator_norm_with, NormEstimate, NormMethod, NormOptions, DEFAULT_SEED};
