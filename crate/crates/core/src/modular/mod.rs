//! Numerical evaluation on the upper half plane and pointwise verification of
//! the transformation laws: Eichler integrals, the eta function, period
//! Laurent polynomials, completed (real-analytic) objects, the quantum-modular
//! cocycle in three representations, and the finite-difference hyperbolic
//! Laplacian.

pub mod cocycle;
pub mod eval;
pub mod laplacian;
pub mod point;
pub mod transform;

pub use cocycle::{cocycle_contour, cocycle_double_sum, cocycle_eichler_diff};
pub use eval::{
    eichler_value, eta_value, eval_truncated, h_star_value, m_value, maass_e0, maass_e_neg,
    period_poly, period_poly_coeffs, psi_value,
};
pub use laplacian::{laplacian_fd, DEFAULT_FD_STEP};
pub use point::{UpperHalfPoint, DEFAULT_Y_FLOOR};
pub use transform::{
    cocycle_grid, fmt_complex, fmt_f64, generic_grid, m_shift_defect, verify_transformations,
    PointResidual, TransformCheck, TransformReport,
};
