//! Numerics for a spinorial Caffarelli-Kohn-Nirenberg inequality on R^3.
//!
//! The library works in logarithmic coordinates, where the inequality lives on
//! the cylinder R x S^2 and is parametrized by a weight exponent `alpha` and an
//! integrability exponent `p` in (2, 6). It provides:
//!
//! * scalar spherical harmonics and product quadrature on S^2 ([`sphere_math`]),
//! * spinor spherical harmonics and the spin-orbit operator algebra
//!   ([`spinor_harmonics`]),
//! * every closed-form constant of the problem: sharp symmetric constants,
//!   Hardy and coercivity constants, Lieb-Thirring constants, sphere
//!   interpolation constants ([`closed_forms`]),
//! * the symmetry / symmetry-breaking phase diagram ([`regions`]),
//! * numerical minimization of the cylinder Rayleigh quotient, per-channel
//!   stability solves and 1D ground-state machinery ([`solver`]).

pub mod closed_forms;
pub mod regions;
pub mod solver;
pub mod sphere_math;
pub mod spinor_harmonics;
pub mod verify;

/// Errors shared across the library.
#[derive(Debug, thiserror::Error)]
pub enum Error {
    /// An input lies outside the mathematical domain of an operation.
    #[error("domain error: {0}")]
    Domain(String),
    /// An iterative solve failed to reach its tolerance.
    #[error("solver failed to converge (residual {residual:.3e})")]
    NonConvergence { residual: f64 },
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn domain_err<T>(msg: impl Into<String>) -> Result<T> {
    Err(Error::Domain(msg.into()))
}
