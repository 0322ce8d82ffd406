//! Errors raised while sampling Julia sets and rasterizing basins.

use fatou_core::SpherePoint;
use fatou_dynamics::DynamicsError;
use std::io;
use std::path::PathBuf;
use thiserror::Error;

/// Failure modes of the Julia/Fatou approximation layer.
#[derive(Debug, Error)]
pub enum JuliaError {
    /// An underlying dynamical computation failed.
    #[error(transparent)]
    Dynamics(#[from] DynamicsError),

    /// The requested backward-orbit seed is an exceptional point, whose
    /// backward orbit never leaves a one- or two-point set and therefore
    /// cannot accumulate on the Julia set.
    #[error(
        "seed {seed} is exceptional for this map; exceptional set {{{}}}",
        format_points(exceptional)
    )]
    ExceptionalSeed {
        seed: SpherePoint,
        exceptional: Vec<SpherePoint>,
    },

    /// A view rectangle with no area (or non-finite corners).
    #[error("degenerate window {re_min}:{re_max}:{im_min}:{im_max} has no area")]
    DegenerateWindow {
        re_min: f64,
        re_max: f64,
        im_min: f64,
        im_max: f64,
    },

    /// A raster with zero pixels.
    #[error("raster dimensions {width}x{height} contain no pixels")]
    EmptyRaster { width: usize, height: usize },

    /// The backward orbit kept landing at infinity and could not collect
    /// the requested number of finite samples within the pull budget.
    #[error(
        "backward orbit stalled after {pulled} pulls with {collected} of \
         {requested} finite samples"
    )]
    ChainStalled {
        pulled: usize,
        collected: usize,
        requested: usize,
    },

    /// Writing an output file failed.
    #[error("writing {path}: {source}")]
    Io {
        path: PathBuf,
        #[source]
        source: io::Error,
    },
}

fn format_points(points: &[SpherePoint]) -> String {
    points
        .iter()
        .map(|p| p.to_string())
        .collect::<Vec<_>>()
        .join(", ")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn exceptional_seed_message_lists_the_set() {
        let e = JuliaError::ExceptionalSeed {
            seed: SpherePoint::ZERO,
            exceptional: vec![SpherePoint::ZERO, SpherePoint::Infinity],
        };
        let text = e.to_string();
        assert!(text.contains("exceptional"), "{text}");
        assert!(text.contains("inf"), "{text}");
    }

    #[test]
    fn degenerate_window_message_shows_bounds() {
        let e = JuliaError::DegenerateWindow {
            re_min: 1.0,
            re_max: 1.0,
            im_min: -2.0,
            im_max: 2.0,
        };
        assert!(e.to_string().contains("1:1:-2:2"), "{e}");
    }
}
