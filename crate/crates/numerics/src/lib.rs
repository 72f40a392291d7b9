//! Dense complex matrix kernel for small problems (dims up to a few hundred).
//!
//! Everything here is plain double-precision arithmetic on row-major
//! `Vec<Complex64>` storage, with explicit tolerance contracts:
//!
//! - [`herm_eig`]: cyclic Jacobi eigendecomposition of Hermitian matrices,
//! - [`general_eig`]: Hessenberg + shifted-QR Schur form with eigenvector
//!   extraction for diagonalizable matrices,
//! - [`matrix_exp`] / [`matrix_log_principal`]: exponential by Padé
//!   scaling-and-squaring (eigendecomposition path for Hermitian and
//!   skew-Hermitian inputs), principal logarithm by inverse scaling via
//!   Denman–Beavers square roots,
//! - [`matrix_log_posdef_metric`]: logarithm of an operator that is
//!   self-adjoint positive with respect to a Hermitian positive definite
//!   metric, reduced by Cholesky congruence to the standard Hermitian case,
//! - [`lu_solve`] / [`cholesky`] and friends.
//!
//! All operations are pure functions on immutable values and keep no global
//! state, so they are safe to call from multiple threads.

mod eig;
mod expm;
pub mod io;
mod matrix;
mod solve;

pub use eig::{general_eig, herm_eig, ComplexEig, HermitianEig};
pub use expm::{
    herm_exp_scaled, matrix_exp, matrix_log_posdef_metric, matrix_log_principal,
    metric_log_with_exp, MetricLog,
};
pub use matrix::{vec_axpy, vec_dot, vec_norm, vec_scale, vec_sub, Matrix, C64};
pub use solve::{cholesky, inverse, lu_solve, lu_solve_matrix, solve_lower_tri, solve_upper_tri};

/// Default relative tolerance for algebraic residual checks.
pub const DEFAULT_TOL: f64 = 1e-9;

/// Absolute floor below which a spectrum is treated as non-positive by the
/// metric logarithm. Relative floors would wrongly reject well-conditioned
/// logs of matrices with honestly small eigenvalues (e.g. `e^{-2t}` factors
/// along a flow), so this one is absolute.
pub const POSITIVITY_FLOOR: f64 = 1e-12;

/// Errors produced by the matrix kernel.
#[derive(Debug, Clone, thiserror::Error)]
pub enum NumericsError {
    #[error("matrix is not Hermitian: relative symmetry residual {residual:.3e} exceeds {tol:.3e}")]
    NotHermitian { residual: f64, tol: f64 },

    #[error("iteration did not converge within {0} sweeps")]
    NoConvergence(usize),

    #[error("matrix is singular: pivot magnitude {pivot:.3e} below threshold {threshold:.3e}")]
    Singular { pivot: f64, threshold: f64 },

    #[error("matrix is not positive definite (Cholesky breakdown at index {0})")]
    NotPositiveDefinite(usize),

    #[error("operator is not self-adjoint in the given metric: relative residual {residual:.3e}")]
    NotMetricSelfAdjoint { residual: f64 },

    #[error("spectrum is not strictly positive: found eigenvalue {0:.3e}")]
    NonPositiveSpectrum(f64),

    #[error("matrix is not diagonalizable within tolerance: {0}")]
    NotDiagonalizable(&'static str),

    #[error("principal logarithm unavailable: {0}")]
    LogBranch(&'static str),

    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),

    #[error("non-finite value encountered")]
    NonFinite,
}

pub type Result<T> = std::result::Result<T, NumericsError>;
