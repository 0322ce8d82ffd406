//! Errors raised by the dilatation algebra and the grid solver.

use std::io;
use std::path::PathBuf;
use thiserror::Error;

/// Failure modes of the quasiconformal layer.
#[derive(Debug, Error)]
pub enum BeltramiError {
    /// A Wirtinger pair with `f_z = 0`, where the complex dilatation
    /// `f_zbar / f_z` is undefined.
    #[error("degenerate derivative: f_z = 0, complex dilatation undefined")]
    DegenerateDerivative,

    /// A Wirtinger pair with `|f_zbar| >= |f_z|`: the sample does not come
    /// from an orientation-preserving map and the axis ratio
    /// `(1+|mu|)/(1-|mu|)` is not a dilatation.
    #[error("orientation not preserved: |mu| = {mu_abs} >= 1")]
    OrientationReversing { mu_abs: f64 },

    /// A grid whose geometry cannot carry samples.
    #[error("invalid grid: size {size}, spacing {spacing}")]
    InvalidGrid { size: usize, spacing: f64 },

    /// Two fields that were expected to share one grid.
    #[error("grid mismatch: {left}x{left} vs {right}x{right} samples")]
    GridMismatch { left: usize, right: usize },

    /// A dilatation field whose sup norm reaches 1, outside the
    /// quasiconformal regime.
    #[error("dilatation bound violated: max |mu| = {max_abs} >= 1")]
    DilatationTooLarge { max_abs: f64 },

    /// A support or vanishing radius that is not a positive finite length.
    #[error("invalid support radius {radius}")]
    InvalidSupportRadius { radius: f64 },

    /// Nonzero dilatation samples beyond the declared support radius.
    #[error(
        "{count} samples are nonzero outside the declared support radius \
         {support_radius}"
    )]
    SupportViolated { count: usize, support_radius: f64 },

    /// A grid window too small for the declared support: the solver needs
    /// margin at least the support radius on every side.
    #[error(
        "window half-side {half_side} is below twice the support radius \
         {support_radius}; the quadrature needs margin around the support"
    )]
    InsufficientMargin { half_side: f64, support_radius: f64 },

    /// An integrand with nonzero samples on the outermost ring of its grid,
    /// i.e. support that is not compactly contained in the window.
    #[error(
        "{count} nonzero samples on the grid boundary ring; the transform \
         requires compact support inside the window"
    )]
    SupportTouchesBoundary { count: usize },

    /// The fixed-point iteration did not reach the increment tolerance.
    #[error(
        "no convergence after {iterations} sweeps; last increment {last}",
        last = increments.last().copied().unwrap_or(f64::NAN)
    )]
    NotConverged {
        iterations: usize,
        increments: Vec<f64>,
    },

    /// A solution value at the normalization point too close to 0 for
    /// rescaling.
    #[error("cannot normalize: |f(1)| = {value_abs} is below 1e-12")]
    DegenerateNormalization { value_abs: f64 },

    /// The normalization point 1 lies outside the solution's grid window.
    #[error("cannot normalize: the point 1 lies outside the grid window")]
    NormalizationPointOutsideGrid,

    /// Samples near 0 where a field to be reflected at infinity must vanish.
    #[error(
        "{count} samples are nonzero inside the vanishing radius \
         {vanishing_radius}; reflection at infinity needs mu = 0 near 0"
    )]
    NonvanishingNearZero { count: usize, vanishing_radius: f64 },

    /// A malformed serialized field.
    #[error("malformed field file: {message}")]
    Format { message: String },

    /// Reading or writing a field file failed.
    #[error("accessing {path}: {source}")]
    Io {
        path: PathBuf,
        #[source]
        source: io::Error,
    },
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn not_converged_message_reports_last_increment() {
        let e = BeltramiError::NotConverged {
            iterations: 3,
            increments: vec![0.5, 0.25, 0.125],
        };
        let text = e.to_string();
        assert!(text.contains('3'), "{text}");
        assert!(text.contains("0.125"), "{text}");
    }

    #[test]
    fn margin_message_shows_both_lengths() {
        let e = BeltramiError::InsufficientMargin {
            half_side: 1.5,
            support_radius: 1.0,
        };
        let text = e.to_string();
        assert!(text.contains("1.5"), "{text}");
        assert!(text.contains("margin"), "{text}");
    }
}
