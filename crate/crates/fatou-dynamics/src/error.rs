//! Error types for dynamical computations.

use fatou_core::{Complex64, MapError, RootError, SpherePoint};
use thiserror::Error;

/// Errors produced by the operations in this crate.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum DynamicsError {
    /// A structural problem with the map itself (degree cap, degeneracy, ...).
    #[error(transparent)]
    Map(#[from] MapError),

    /// The polynomial root finder did not converge.
    #[error(transparent)]
    Roots(#[from] RootError),

    /// The map is the identity, so every point of the sphere is fixed and no
    /// finite listing of fixed points exists.
    #[error("the map is the identity: every point is fixed")]
    IdentityMap,

    /// A point handed to `multiplier` (or a related operation) is not fixed
    /// to within the requested tolerance.
    #[error("point {point} is not fixed: image differs by {defect:.3e} (chordal)")]
    NotFixed { point: SpherePoint, defect: f64 },

    /// The operation requires a larger degree than the map has.
    #[error("operation requires degree >= {required}, but the map has degree {actual}")]
    DegreeTooLow { required: usize, actual: usize },

    /// Koenigs linearization requires a multiplier with 0 < |lambda| < 1.
    #[error(
        "Koenigs linearization needs a multiplier with 0 < |lambda| < 1, got |lambda| = {modulus:.3e}"
    )]
    NotLinearizable { multiplier: Complex64, modulus: f64 },

    /// Koenigs linearization is computed in a finite coordinate chart; move
    /// the fixed point away from infinity by conjugation first.
    #[error("fixed point at infinity: conjugate the map to move it to a finite point first")]
    FixedPointAtInfinity,

    /// Building the n-th iterate explicitly would exceed the degree cap.
    #[error(
        "iterate degree {degree} exceeds the cap {cap}; use orbit-based cycle detection instead"
    )]
    IterateTooLarge { degree: u128, cap: u128 },

    /// A computed quantity failed its consistency check.
    #[error("numerical consistency check failed: {context} (defect {defect:.3e})")]
    Inconsistent { context: &'static str, defect: f64 },
}

/// Per-point failure markers for Koenigs coordinate evaluation. A batch call
/// reports these per input point instead of failing as a whole.
#[derive(Debug, Clone, Copy, PartialEq, Error)]
pub enum KoenigsPointError {
    /// The orbit of the point left the basin (hit infinity or a pole chain).
    #[error("orbit escaped the basin after {iterations} iterations")]
    Escaped { iterations: usize },

    /// The defining product did not settle within the iteration budget.
    #[error("linearizing product did not converge within {iterations} iterations")]
    NoConvergence { iterations: usize },

    /// The functional-equation residual check failed after convergence.
    #[error("functional equation residual {residual:.3e} exceeds tolerance {tolerance:.3e}")]
    ResidualTooLarge { residual: f64, tolerance: f64 },
}
