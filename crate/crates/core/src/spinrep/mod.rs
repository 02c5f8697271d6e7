//! Irreducible SU(2) representations: weights, spin operators, Wigner
//! d-functions and spectral projections of `J_x` and `J_z`.

mod fourier;
mod halfint;
mod projection;
mod rep;
mod szego;
mod wigner;

pub use fourier::{fourier_expansion_d, verify_hilbert_formula, FourierExpansion, SUM_PATH_MAX_DIM};
pub use halfint::HalfInt;
pub use projection::{
    projection_x, projection_x_entries, projection_x_sum, projection_z_above, projection_z_interval,
    ProjectionMatrix,
};
pub use rep::{build_spin_operators, SpinOperators, SpinRep};
pub use szego::{szego_approximation, szego_sup_error, SZEGO_DELTA};
pub use wigner::{
    wigner_d_jacobi, wigner_d_matrix_jacobi, wigner_d_matrix_sum, wigner_d_pi_half, wigner_d_pi_half_with,
    wigner_d_sum, DCalibration, WignerDMatrix, SUM_FORMULA_MAX_TWICE_J,
};
