//! Dense complex matrix arithmetic, density-matrix validation, eigenvalues,
//! and the canonical two-qubit state factories.
//!
//! All values are immutable after construction and every operation is a pure
//! function, so everything here is safe to share across threads.

mod density;
mod eigen;
mod mat;
mod xstate;

pub use density::{
    validate_density, DensityMatrix, ValidityReport, HERMITICITY_TOL, MIN_EIGENVALUE_FLOOR,
    TRACE_TOL,
};
pub use eigen::{eigenvalues, hermitian_eigenvalues};
pub use mat::{sigma_y, sigma_z, tensor_product, Mat2, Mat4, C64};
pub use xstate::{
    asymptotic_decay_demo, bell_state, sudden_death_demo, werner_state, BellState, XState,
    X_STATE_TOL,
};
