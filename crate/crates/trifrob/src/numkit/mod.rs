//! Numerical plumbing shared by every other module.
//!
//! Everything here is double precision and pure. Tolerances are absolute
//! unless stated otherwise.

mod branch;
mod diff;
mod elliptic;
mod matrix;
mod ode;
mod path;
mod quad;
mod roots;

pub use branch::{pow_near, sqrt_near, PowTracker};
pub use diff::{central_diff, central_diff5, default_step};
pub use elliptic::carlson_rf;
pub use matrix::CMatrix;
pub use ode::{ode_flow, ode_flow_linear, OdeOptions};
pub use path::CPath;
pub use quad::{contour_quadrature, contour_quadrature_with};
pub use roots::{cubic_roots, poly_eval, quartic_roots};

use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum NumError {
    #[error("step size underflow at parameter {at} (pole proximity?)")]
    StepUnderflow { at: f64 },
    #[error("non-finite value encountered{0}")]
    NonFinite(String),
    #[error("quadrature did not converge: estimated error {estimate:e} > {tol:e}")]
    NoConvergence { estimate: f64, tol: f64 },
    #[error("degenerate input: {0}")]
    Degenerate(&'static str),
    #[error("singular matrix")]
    Singular,
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
    #[error("invalid path: {0}")]
    InvalidPath(&'static str),
}

pub type Result<T> = std::result::Result<T, NumError>;

pub(crate) fn ensure_finite(xs: &[crate::C64], ctx: &str) -> Result<()> {
    if xs.iter().all(|z| z.re.is_finite() && z.im.is_finite()) {
        Ok(())
    } else {
        Err(NumError::NonFinite(format!(" in {ctx}")))
    }
}
