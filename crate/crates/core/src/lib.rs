//! Numerical laboratory for norms of commutators of spectral projections.
//!
//! Everything is generic over [`scalar::Real`] (`f32` or `f64`); the aliases
//! below fix `f64`.

pub mod error;
pub mod hankel;
pub mod linalg;
pub mod models;
pub mod scalar;
pub mod specfun;
pub mod spinrep;

pub use error::{Error, Result};
pub use num_complex::{Complex, Complex64};

pub type Matrix = linalg::DenseMatrix<f64>;
pub type ComplexMatrix = linalg::DenseMatrix<Complex64>;
pub type Report = models::CommutatorReport<f64>;
pub type Projection = spinrep::ProjectionMatrix<f64>;
pub type WignerD = spinrep::WignerDMatrix<f64>;
pub type Arc = hankel::ArcSymbol<f64>;
