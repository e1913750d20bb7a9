//! The dual `X` of the positive Borel part, the quantum double `D = X ⋈ B+`,
//! the projection `χ: D → Ū`, and the universal R-matrix.

mod dual;
mod quantum_double;
mod rmatrix;

pub use dual::{dual_consistency_check, dual_eval, mulx_expansion, Dual, Functional, A_E1, A_E2, A_E3, A_K1, A_K2};
pub use quantum_double::{chi, double_check, double_mul, DoubleElement};
pub use rmatrix::{
    exp_q2, k_factor, r_canonical, r_coefficient, r_inverse, r_multiplicative, r_tilde, verify_quasitriangular, RForm,
    RMatrix, RMatrixJson,
};
