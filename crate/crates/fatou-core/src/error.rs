//! Error types for map construction, parsing, and root finding.

use num_complex::Complex64;
use thiserror::Error;

/// Construction-time failures for rational maps and Möbius transformations.
#[derive(Clone, Debug, Error, PartialEq)]
pub enum MapError {
    /// After reduction the map has degree zero, i.e. it is constant; constant
    /// maps have no dynamics and are rejected.
    #[error("map is constant after reduction; degree must be at least 1")]
    ConstantMap,
    /// The denominator is identically zero.
    #[error("denominator is identically zero")]
    ZeroDenominator,
    /// An iterate would exceed the supported degree cap.
    #[error("iterate degree {degree} exceeds the cap of {cap}")]
    DegreeCap { degree: u128, cap: u128 },
    /// The matrix of a Möbius transformation is numerically singular.
    #[error("Möbius coefficients are degenerate (|ad - bc| = {det_norm:.3e})")]
    DegenerateMobius { det_norm: f64 },
    /// A Möbius transformation through three points needs them distinct.
    #[error("the three points defining a Möbius transformation must be distinct")]
    CoincidentPoints,
}

/// Failure of the polynomial root finder.
#[derive(Clone, Debug, Error, PartialEq)]
pub enum RootError {
    /// Iteration stalled: after `sweeps` full updates some root candidate
    /// still has residual `max_residual` (relative to the coefficient scale).
    #[error("root finding did not converge after {sweeps} sweeps (max residual {max_residual:.3e})")]
    NonConvergence {
        sweeps: usize,
        max_residual: f64,
        /// Best candidates found, for diagnostics.
        best: Vec<Complex64>,
    },
}

/// Failure to parse a map expression, with the byte offset of the offending
/// character in the input.
#[derive(Clone, Debug, Error, PartialEq)]
#[error("parse error at position {position}: {message}")]
pub struct ParseError {
    pub position: usize,
    pub message: String,
}

impl ParseError {
    pub fn new(position: usize, message: impl Into<String>) -> ParseError {
        ParseError { position, message: message.into() }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn messages_carry_context() {
        let e = MapError::DegreeCap { degree: 16384, cap: 4096 };
        assert!(e.to_string().contains("16384"));
        let e = ParseError::new(7, "expected digit");
        assert!(e.to_string().contains("position 7"));
    }
}
