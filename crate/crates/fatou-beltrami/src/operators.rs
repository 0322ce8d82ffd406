//! Singular integral operators on grid fields: the Cauchy-type transform
//! and the Beurling transform.
//!
//! For a compactly supported density `h`, the transforms are
//!
//! ```text
//! (cauchy_transform h)(w)   = -(1/pi) integral h(z) (1/(z-w) - 1/z) dx dy
//! (beurling_transform h)(w) = -(1/pi) p.v. integral h(z) / (z-w)^2 dx dy
//! ```
//!
//! The first is normalized to vanish at 0 and is the complex derivative
//! antiderivative of `h` in the zbar direction; the second is its derivative
//! in the z direction and acts isometrically on L2. Quadrature is the
//! midpoint rule over grid cells. Both kernels integrate to exactly zero
//! over the singular cell centered at the evaluation point — `1/(z-w)` is
//! odd around `w`, and the square cell's quarter-turn symmetry kills
//! `1/(z-w)^2` — so the singular cell simply contributes nothing.
//!
//! On matching grids the quadrature sums are lattice correlations and are
//! evaluated exactly (up to rounding) with zero-padded FFTs of twice the
//! grid side, turning the naive O(N^4) cost into O(N^2 log N).

use crate::error::BeltramiError;
use crate::grid::{Grid, GridField};
use num_complex::Complex64;
use rustfft::{Fft, FftPlanner};
use std::f64::consts::PI;
use std::sync::Arc;

/// Zero-padded cyclic convolution engine for one grid, reusable across
/// repeated transform applications.
pub(crate) struct Convolver {
    grid: Grid,
    padded_side: usize,
    forward: Arc<dyn Fft<f64>>,
    inverse: Arc<dyn Fft<f64>>,
}

impl Convolver {
    pub(crate) fn new(grid: Grid) -> Self {
        let padded_side = 2 * grid.size();
        let mut planner = FftPlanner::new();
        Self {
            grid,
            padded_side,
            forward: planner.plan_fft_forward(padded_side),
            inverse: planner.plan_fft_inverse(padded_side),
        }
    }

    /// Spectrum of the padded kernel table for `out_p = sum_q h_q K(q - p)`,
    /// where `K` receives the (row, column) offset `q - p`.
    pub(crate) fn kernel_spectrum(
        &self,
        kernel: impl Fn(isize, isize) -> Complex64,
    ) -> Vec<Complex64> {
        let n = self.grid.size() as isize;
        let m = self.padded_side;
        let mut table = vec![Complex64::new(0.0, 0.0); m * m];
        for delta_row in -(n - 1)..n {
            for delta_col in -(n - 1)..n {
                let row = delta_row.rem_euclid(m as isize) as usize;
                let col = delta_col.rem_euclid(m as isize) as usize;
                // The table holds K at the negated offset so that the cyclic
                // convolution below reproduces the correlation sum; positive
                // offsets and the wrapped negative ones cannot collide.
                table[row * m + col] = kernel(-delta_row, -delta_col);
            }
        }
        self.fft2d(&mut table, true);
        table
    }

    /// Computes `out_p = sum_q values_q K(q - p)` for the kernel whose
    /// spectrum was produced by [`Self::kernel_spectrum`].
    pub(crate) fn correlate(
        &self,
        values: &[Complex64],
        kernel_spectrum: &[Complex64],
    ) -> Vec<Complex64> {
        let n = self.grid.size();
        let m = self.padded_side;
        let mut padded = vec![Complex64::new(0.0, 0.0); m * m];
        for row in 0..n {
            padded[row * m..row * m + n].copy_from_slice(&values[row * n..(row + 1) * n]);
        }
        self.fft2d(&mut padded, true);
        for (value, factor) in padded.iter_mut().zip(kernel_spectrum) {
            *value *= factor;
        }
        self.fft2d(&mut padded, false);
        let scale = 1.0 / (m * m) as f64;
        let mut out = Vec::with_capacity(n * n);
        for row in 0..n {
            out.extend(padded[row * m..row * m + n].iter().map(|v| v * scale));
        }
        out
    }

    fn fft2d(&self, data: &mut [Complex64], forward: bool) {
        let fft = if forward { &self.forward } else { &self.inverse };
        fft.process(data);
        transpose_square(data, self.padded_side);
        fft.process(data);
        transpose_square(data, self.padded_side);
    }
}

fn transpose_square(data: &mut [Complex64], side: usize) {
    for row in 0..side {
        for col in row + 1..side {
            data.swap(row * side + col, col * side + row);
        }
    }
}

/// Kernel of the Beurling transform at a lattice offset, quadrature weight
/// and normalization included; zero at the singular offset.
fn beurling_kernel(grid: &Grid) -> impl Fn(isize, isize) -> Complex64 + '_ {
    let weight = -grid.cell_area() / PI;
    move |delta_row, delta_col| {
        if delta_row == 0 && delta_col == 0 {
            return Complex64::new(0.0, 0.0);
        }
        let w = Complex64::new(delta_col as f64, delta_row as f64) * grid.spacing();
        weight / (w * w)
    }
}

/// Kernel of the `1/(z - w)` part of the Cauchy transform; the `1/z`
/// reference part is a constant handled separately.
fn cauchy_kernel(grid: &Grid) -> impl Fn(isize, isize) -> Complex64 + '_ {
    let weight = -grid.cell_area() / PI;
    move |delta_row, delta_col| {
        if delta_row == 0 && delta_col == 0 {
            return Complex64::new(0.0, 0.0);
        }
        let w = Complex64::new(delta_col as f64, delta_row as f64) * grid.spacing();
        weight / w
    }
}

fn ensure_compact_support(h: &GridField) -> Result<(), BeltramiError> {
    let count = h.boundary_ring_nonzero_count();
    if count > 0 {
        Err(BeltramiError::SupportTouchesBoundary { count })
    } else {
        Ok(())
    }
}

/// The constant `-(1/pi) sum h(z) (-1/z) area` contributed by the reference
/// point of the Cauchy kernel. Cells whose center lies within half a
/// spacing of 0 drop the term — the same singular-cell rule as the moving
/// part of the kernel, so the two parts cancel exactly at the point 0.
fn reference_term(h: &GridField) -> Complex64 {
    let grid = *h.grid();
    let near = 0.5 * grid.spacing();
    let mut sum = Complex64::new(0.0, 0.0);
    for row in 0..grid.size() {
        for col in 0..grid.size() {
            let value = h.value(row, col);
            if value == Complex64::new(0.0, 0.0) {
                continue;
            }
            let z = grid.point(row, col);
            if z.norm() >= near {
                sum += value / z;
            }
        }
    }
    sum * grid.cell_area() / PI
}

/// Beurling transform with the FFT plan and kernel spectrum computed once,
/// for solvers that apply the transform many times on one grid.
pub(crate) struct BeurlingEngine {
    grid: Grid,
    convolver: Convolver,
    spectrum: Vec<Complex64>,
}

impl BeurlingEngine {
    pub(crate) fn new(grid: Grid) -> Self {
        let convolver = Convolver::new(grid);
        let spectrum = convolver.kernel_spectrum(beurling_kernel(&grid));
        Self {
            grid,
            convolver,
            spectrum,
        }
    }

    pub(crate) fn apply(&self, h: &GridField) -> Result<GridField, BeltramiError> {
        if h.grid() != &self.grid {
            return Err(BeltramiError::GridMismatch {
                left: self.grid.len(),
                right: h.grid().len(),
            });
        }
        ensure_compact_support(h)?;
        let out = self.convolver.correlate(h.values(), &self.spectrum);
        GridField::from_values(self.grid, out)
    }
}

/// Applies the Beurling transform to a compactly supported grid field.
pub fn beurling_transform(h: &GridField) -> Result<GridField, BeltramiError> {
    BeurlingEngine::new(*h.grid()).apply(h)
}

/// Applies the Cauchy transform to a compactly supported grid field,
/// evaluating on the target grid.
///
/// When the target is the field's own grid the correlation runs through the
/// FFT engine; otherwise every target point is evaluated by direct
/// summation, which costs one pass over the source grid per target sample.
pub fn cauchy_transform(h: &GridField, target: &Grid) -> Result<GridField, BeltramiError> {
    ensure_compact_support(h)?;
    if target == h.grid() {
        let convolver = Convolver::new(*h.grid());
        let spectrum = convolver.kernel_spectrum(cauchy_kernel(h.grid()));
        let mut out = convolver.correlate(h.values(), &spectrum);
        let reference = reference_term(h);
        for value in &mut out {
            *value += reference;
        }
        return GridField::from_values(*h.grid(), out);
    }
    let values = (0..target.size())
        .flat_map(|row| (0..target.size()).map(move |col| (row, col)))
        .map(|(row, col)| direct_cauchy(h, target.point(row, col)))
        .collect();
    GridField::from_values(*target, values)
}

/// Evaluates the Cauchy transform of a compactly supported grid field at a
/// single point by direct summation.
///
/// At the point 0 the kernel vanishes identically and the result is exactly
/// zero; a cell whose center lies within half a cell side of the evaluation
/// point drops its singular kernel part, standing in for the vanishing
/// analytic cell integral.
pub fn cauchy_transform_at(
    h: &GridField,
    target: Complex64,
) -> Result<Complex64, BeltramiError> {
    ensure_compact_support(h)?;
    Ok(direct_cauchy(h, target))
}

fn direct_cauchy(h: &GridField, target: Complex64) -> Complex64 {
    let grid = *h.grid();
    let near = 0.5 * grid.spacing();
    let mut sum = Complex64::new(0.0, 0.0);
    for row in 0..grid.size() {
        for col in 0..grid.size() {
            let value = h.value(row, col);
            if value == Complex64::new(0.0, 0.0) {
                continue;
            }
            let z = grid.point(row, col);
            let mut kernel = Complex64::new(0.0, 0.0);
            if (z - target).norm() >= near {
                kernel += (z - target).inv();
            }
            if z.norm() >= near {
                kernel -= z.inv();
            }
            sum += value * kernel;
        }
    }
    sum * (-grid.cell_area() / PI)
}
