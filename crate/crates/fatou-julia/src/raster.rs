//! Basin-of-attraction rasters.

use crate::{JuliaError, Window};
use fatou_core::{RationalMap, SpherePoint};
use fatou_dynamics::PeriodicOrbit;
use rayon::prelude::*;

/// Number of consecutive iterates that must stay near the same attractor
/// before a pixel is committed to its basin. Guards against orbits that
/// merely pass close to a cycle on their way elsewhere.
pub const CONFIRM_STEPS: u32 = 3;

/// Per-pixel basin labels and decision times over a window.
///
/// Labels are 1-based indices into the attractor list the raster was built
/// from; label 0 means the pixel never settled within the iteration budget
/// (Julia set, rotation domains, parabolic basins, or just slow escape).
/// Pixel `(0, 0)` is the top-left corner: row 0 has the largest imaginary
/// part.
#[derive(Clone, Debug)]
pub struct BasinRaster {
    width: usize,
    height: usize,
    window: Window,
    attractor_count: usize,
    labels: Vec<usize>,
    iterations: Vec<u32>,
}

impl BasinRaster {
    /// Assembles a raster from precomputed parts (crate-internal, used by
    /// tests that need exact label patterns).
    #[cfg(test)]
    pub(crate) fn from_parts(
        width: usize,
        height: usize,
        window: Window,
        attractor_count: usize,
        labels: Vec<usize>,
        iterations: Vec<u32>,
    ) -> BasinRaster {
        assert_eq!(labels.len(), width * height);
        assert_eq!(iterations.len(), width * height);
        BasinRaster {
            width,
            height,
            window,
            attractor_count,
            labels,
            iterations,
        }
    }

    pub fn width(&self) -> usize {
        self.width
    }

    pub fn height(&self) -> usize {
        self.height
    }

    pub fn window(&self) -> &Window {
        &self.window
    }

    /// Number of attractors the labels index into.
    pub fn attractor_count(&self) -> usize {
        self.attractor_count
    }

    /// Basin label of pixel `(x, y)`: 0 undecided, otherwise 1-based.
    pub fn label(&self, x: usize, y: usize) -> usize {
        self.labels[y * self.width + x]
    }

    /// Iteration at which pixel `(x, y)` was decided (the step that
    /// completed the confirmation run), or the full budget if undecided.
    pub fn iterations_at(&self, x: usize, y: usize) -> u32 {
        self.iterations[y * self.width + x]
    }

    /// All labels in row-major order.
    pub fn labels(&self) -> &[usize] {
        &self.labels
    }

    /// Center of pixel `(x, y)` in the complex plane.
    pub fn pixel_center(&self, x: usize, y: usize) -> fatou_core::Complex64 {
        self.window.pixel_center(self.width, self.height, x, y)
    }

    /// Pixel containing the point `z`, if it lies inside the window.
    pub fn locate(&self, z: fatou_core::Complex64) -> Option<(usize, usize)> {
        self.window.locate(self.width, self.height, z)
    }

    /// Fraction of pixels carrying a nonzero basin label.
    pub fn decided_fraction(&self) -> f64 {
        let decided = self.labels.iter().filter(|&&l| l != 0).count();
        decided as f64 / self.labels.len() as f64
    }

    /// Pixels on the decision boundary: decided pixels with a 4-neighbor
    /// of a different decision (another basin or undecided), plus
    /// undecided pixels adjacent to a decided one. Neighbors outside the
    /// raster are ignored, so the window frame itself contributes nothing.
    ///
    /// For a map whose attractors capture every Fatou component in view,
    /// this band approximates the Julia set at pixel resolution.
    pub fn boundary_pixels(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for y in 0..self.height {
            for x in 0..self.width {
                let own = self.label(x, y);
                let mut differs = false;
                let mut decided_neighbor = false;
                let mut visit = |nx: usize, ny: usize| {
                    let other = self.label(nx, ny);
                    if other != own {
                        differs = true;
                    }
                    if other != 0 {
                        decided_neighbor = true;
                    }
                };
                if x > 0 {
                    visit(x - 1, y);
                }
                if x + 1 < self.width {
                    visit(x + 1, y);
                }
                if y > 0 {
                    visit(x, y - 1);
                }
                if y + 1 < self.height {
                    visit(x, y + 1);
                }
                let on_boundary = if own != 0 {
                    differs
                } else {
                    decided_neighbor
                };
                if on_boundary {
                    out.push((x, y));
                }
            }
        }
        out
    }
}

/// Rasterizes the basins of the given attractors over `window`.
///
/// Each pixel center is iterated forward up to `max_iter` steps; once the
/// orbit stays within chordal distance `tol` of the same attracting cycle
/// for [`CONFIRM_STEPS`] consecutive steps, the pixel takes that cycle's
/// 1-based label and records the deciding step. Pixels that never settle
/// keep label 0 and the full budget. Pixels are independent, so the rows
/// are computed in parallel and the output does not depend on scheduling.
pub fn basin_raster(
    map: &RationalMap,
    attractors: &[PeriodicOrbit],
    window: &Window,
    width: usize,
    height: usize,
    max_iter: u32,
    tol: f64,
) -> Result<BasinRaster, JuliaError> {
    if width == 0 || height == 0 {
        return Err(JuliaError::EmptyRaster { width, height });
    }
    let mut labels = vec![0usize; width * height];
    let mut iterations = vec![0u32; width * height];

    labels
        .par_chunks_mut(width)
        .zip(iterations.par_chunks_mut(width))
        .enumerate()
        .for_each(|(y, (label_row, iter_row))| {
            for x in 0..width {
                let z = window.pixel_center(width, height, x, y);
                let (label, steps) = classify_pixel(
                    map,
                    attractors,
                    SpherePoint::Finite(z),
                    max_iter,
                    tol,
                );
                label_row[x] = label;
                iter_row[x] = steps;
            }
        });

    Ok(BasinRaster {
        width,
        height,
        window: *window,
        attractor_count: attractors.len(),
        labels,
        iterations,
    })
}

/// Follows one orbit and reports `(label, deciding_step)`;
/// `(0, max_iter)` when the orbit never confirms an attractor.
fn classify_pixel(
    map: &RationalMap,
    attractors: &[PeriodicOrbit],
    start: SpherePoint,
    max_iter: u32,
    tol: f64,
) -> (usize, u32) {
    let mut current = start;
    let mut streak_label = 0usize;
    let mut streak_length = 0u32;
    for step in 1..=max_iter {
        current = map.eval(current);
        let near = attractors.iter().position(|orbit| {
            orbit.points.iter().any(|p| p.chordal(&current) <= tol)
        });
        match near {
            Some(index) if index + 1 == streak_label => {
                streak_length += 1;
            }
            Some(index) => {
                streak_label = index + 1;
                streak_length = 1;
            }
            None => {
                streak_label = 0;
                streak_length = 0;
            }
        }
        if streak_label != 0 && streak_length >= CONFIRM_STEPS {
            return (streak_label, step);
        }
    }
    (0, max_iter)
}
