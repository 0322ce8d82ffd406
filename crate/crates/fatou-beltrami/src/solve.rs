//! Neumann-series solver for the Beltrami equation on a grid.
//!
//! For a dilatation field `mu` with `sup |mu| < 1`, the solver iterates
//!
//! ```text
//! h_0 = 0,    h_{j+1} = beurling_transform(mu * h_j) + beurling_transform(mu)
//! ```
//!
//! until the grid L2 increment drops below the configured tolerance. The
//! limit satisfies `h = beurling_transform(mu (h + 1))`, and the map
//!
//! ```text
//! f = cauchy_transform(mu (h + 1)) + z
//! ```
//!
//! then solves `f_zbar = mu f_z` with `f_z = h + 1`, is normalized by
//! `f(0) = 0`, and is asymptotic to `z` at infinity. Because the iteration
//! multiplies by `mu` before every transform, only values on the support of
//! `mu` feed back into the loop, so truncating the plane to the grid window
//! does not perturb the iteration itself. The quality of the result is
//! reported as the sup of `|f_zbar - mu f_z|` over finite-difference
//! derivatives at well-conditioned interior samples.

use crate::dilatation::WirtingerPair;
use crate::error::BeltramiError;
use crate::field::BeltramiField;
use crate::grid::GridField;
use crate::operators::{cauchy_transform, BeurlingEngine};
use num_complex::Complex64;

/// Stopping rule for the Neumann iteration.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SolverConfig {
    /// Iteration stops once the grid L2 distance between consecutive
    /// iterates drops below this.
    pub tolerance: f64,
    /// Hard cap on the number of iterations before giving up.
    pub max_iterations: usize,
}

impl Default for SolverConfig {
    fn default() -> Self {
        Self {
            tolerance: 1e-10,
            max_iterations: 200,
        }
    }
}

/// A solved Beltrami problem: the quasiconformal map on its grid together
/// with the auxiliary density and convergence diagnostics.
#[derive(Debug, Clone)]
pub struct QcSolution {
    mu: BeltramiField,
    map: GridField,
    h_density: GridField,
    residual: f64,
    iterations: usize,
    increments: Vec<f64>,
}

impl QcSolution {
    /// The dilatation field the solution was computed for.
    pub fn mu(&self) -> &BeltramiField {
        &self.mu
    }

    /// Grid samples of the solution map.
    pub fn map(&self) -> &GridField {
        &self.map
    }

    /// The auxiliary density `h`; the z-derivative of the map is `h + 1`.
    pub fn h_density(&self) -> &GridField {
        &self.h_density
    }

    /// Sup of `|f_zbar - mu f_z|` over included finite-difference samples.
    pub fn residual(&self) -> f64 {
        self.residual
    }

    /// Number of Neumann sweeps performed.
    pub fn iterations(&self) -> usize {
        self.iterations
    }

    /// Grid L2 increment recorded after each sweep.
    pub fn increments(&self) -> &[f64] {
        &self.increments
    }

    /// Bilinear interpolation of the solution map at a point, or `None` if
    /// the point lies outside the hull of the grid sample centers.
    pub fn value_at(&self, z: Complex64) -> Option<Complex64> {
        let grid = self.map.grid();
        let size = grid.size();
        let mid = 0.5 * (size - 1) as f64;
        let u = (z.re - grid.center().re) / grid.spacing() + mid;
        let v = (z.im - grid.center().im) / grid.spacing() + mid;
        let top = (size - 1) as f64;
        if !(0.0..=top).contains(&u) || !(0.0..=top).contains(&v) {
            return None;
        }
        let col = (u.floor() as usize).min(size - 2);
        let row = (v.floor() as usize).min(size - 2);
        let s = u - col as f64;
        let t = v - row as f64;
        let f00 = self.map.value(row, col);
        let f01 = self.map.value(row, col + 1);
        let f10 = self.map.value(row + 1, col);
        let f11 = self.map.value(row + 1, col + 1);
        Some(
            f00 * ((1.0 - s) * (1.0 - t))
                + f01 * (s * (1.0 - t))
                + f10 * ((1.0 - s) * t)
                + f11 * (s * t),
        )
    }
}

/// Central-difference Wirtinger derivatives of a grid field at one sample,
/// or `None` on the outermost ring, where the stencil does not fit.
pub fn wirtinger_stencil(field: &GridField, row: usize, col: usize) -> Option<WirtingerPair> {
    let grid = field.grid();
    let size = grid.size();
    if row == 0 || col == 0 || row + 1 >= size || col + 1 >= size {
        return None;
    }
    let step = 2.0 * grid.spacing();
    let f_x = (field.value(row, col + 1) - field.value(row, col - 1)) / step;
    let f_y = (field.value(row + 1, col) - field.value(row - 1, col)) / step;
    let i = Complex64::new(0.0, 1.0);
    Some(WirtingerPair::new(
        (f_x - i * f_y) * 0.5,
        (f_x + i * f_y) * 0.5,
    ))
}

/// How many cells a sample must keep between itself and the grid edge or
/// the support circle to count toward the residual.
const RESIDUAL_EXCLUSION_CELLS: usize = 2;

/// Samples with `|f_z|` below this are too degenerate for the relative
/// equation check and are excluded from the residual.
const RESIDUAL_DERIVATIVE_FLOOR: f64 = 0.1;

/// Sup of `|f_zbar - mu f_z|` over finite-difference samples, excluding
/// samples near the grid edge, near the support circle (where the jump in
/// `mu` defeats central differences), and samples with tiny `|f_z|`.
fn residual_sup(map: &GridField, mu: &BeltramiField) -> f64 {
    let grid = map.grid();
    let size = grid.size();
    let guard = RESIDUAL_EXCLUSION_CELLS;
    let band = RESIDUAL_EXCLUSION_CELLS as f64 * grid.spacing();
    let mut worst = 0.0f64;
    for row in guard..size.saturating_sub(guard) {
        for col in guard..size.saturating_sub(guard) {
            let z = grid.point(row, col);
            if (z.norm() - mu.support_radius()).abs() < band {
                continue;
            }
            let Some(pair) = wirtinger_stencil(map, row, col) else {
                continue;
            };
            if pair.f_z.norm() < RESIDUAL_DERIVATIVE_FLOOR {
                continue;
            }
            let defect = pair.f_zbar - mu.mu().value(row, col) * pair.f_z;
            worst = worst.max(defect.norm());
        }
    }
    worst
}

/// Solves the Beltrami equation for the given dilatation field, returning
/// the map normalized by `f(0) = 0` and `f(z) - z -> 0` at infinity.
pub fn normal_solution(
    mu: &BeltramiField,
    config: &SolverConfig,
) -> Result<QcSolution, BeltramiError> {
    let grid = *mu.grid();
    if mu.k_bound() == 0.0 {
        let map = GridField::from_fn(grid, |z| z);
        return Ok(QcSolution {
            mu: mu.clone(),
            map,
            h_density: GridField::zeros(grid),
            residual: 0.0,
            iterations: 0,
            increments: Vec::new(),
        });
    }

    let engine = BeurlingEngine::new(grid);
    let t_mu = engine.apply(mu.mu())?;
    let mut h = t_mu.clone();
    let mut increments = Vec::new();
    let mut converged = false;
    while increments.len() < config.max_iterations {
        let mut next = engine.apply(&mu.mu().product(&h)?)?;
        for (value, base) in next.values_mut().iter_mut().zip(t_mu.values()) {
            *value += base;
        }
        let increment = next.l2_distance(&h)?;
        increments.push(increment);
        h = next;
        if increment < config.tolerance {
            converged = true;
            break;
        }
    }
    let iterations = increments.len();
    if !converged {
        return Err(BeltramiError::NotConverged {
            iterations,
            increments,
        });
    }

    let mut density = GridField::zeros(grid);
    let one = Complex64::new(1.0, 0.0);
    for i in 0..grid.len() {
        density.values_mut()[i] = mu.mu().values()[i] * (h.values()[i] + one);
    }
    let mut map = cauchy_transform(&density, &grid)?;
    for row in 0..grid.size() {
        for col in 0..grid.size() {
            let i = grid.index(row, col);
            map.values_mut()[i] += grid.point(row, col);
        }
    }
    let residual = residual_sup(&map, mu);
    Ok(QcSolution {
        mu: mu.clone(),
        map,
        h_density: h,
        residual,
        iterations,
        increments,
    })
}

/// Rescales a solution so that `f(1) = 1` while keeping `f(0) = 0`,
/// recomputing the auxiliary density and the residual to match.
pub fn normalize_solution(solution: QcSolution) -> Result<QcSolution, BeltramiError> {
    let at_one = solution
        .value_at(Complex64::new(1.0, 0.0))
        .ok_or(BeltramiError::NormalizationPointOutsideGrid)?;
    if at_one.norm() < 1e-12 {
        return Err(BeltramiError::DegenerateNormalization {
            value_abs: at_one.norm(),
        });
    }
    let scale = at_one.inv();
    let one = Complex64::new(1.0, 0.0);
    let mut map = solution.map.clone();
    for value in map.values_mut() {
        *value *= scale;
    }
    // The z-derivative rescales with the map, so h = f_z - 1 becomes
    // (h + 1) scale - 1.
    let mut h_density = solution.h_density.clone();
    for value in h_density.values_mut() {
        *value = (*value + one) * scale - one;
    }
    let residual = residual_sup(&map, &solution.mu);
    Ok(QcSolution {
        mu: solution.mu,
        map,
        h_density,
        residual,
        iterations: solution.iterations,
        increments: solution.increments,
    })
}
