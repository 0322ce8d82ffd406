//! Uniform square sample lattices and complex fields living on them.
//!
//! A [`Grid`] is the set of cell centers of an axis-aligned square window
//! split into `size * size` cells of side `spacing`; quadrature over the
//! window is the midpoint rule, one sample per cell. A [`GridField`] attaches
//! one complex value to every cell center, in row-major order with `Im`
//! increasing along rows.

use crate::error::BeltramiError;
use num_complex::Complex64;

/// Geometry of a uniform N x N lattice of cell centers.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Grid {
    center: Complex64,
    spacing: f64,
    size: usize,
}

impl Grid {
    /// Builds a grid from its center, cell side, and samples per side.
    pub fn new(center: Complex64, spacing: f64, size: usize) -> Result<Self, BeltramiError> {
        let finite = center.re.is_finite() && center.im.is_finite() && spacing.is_finite();
        if size == 0 || !finite || spacing <= 0.0 {
            return Err(BeltramiError::InvalidGrid { size, spacing });
        }
        Ok(Self {
            center,
            spacing,
            size,
        })
    }

    /// Builds the grid covering the square window of the given half-side.
    pub fn square(center: Complex64, half_side: f64, size: usize) -> Result<Self, BeltramiError> {
        if size == 0 || !half_side.is_finite() || half_side <= 0.0 {
            return Err(BeltramiError::InvalidGrid {
                size,
                spacing: half_side,
            });
        }
        Self::new(center, 2.0 * half_side / size as f64, size)
    }

    pub fn center(&self) -> Complex64 {
        self.center
    }

    pub fn spacing(&self) -> f64 {
        self.spacing
    }

    /// Samples per side.
    pub fn size(&self) -> usize {
        self.size
    }

    /// Total number of samples.
    pub fn len(&self) -> usize {
        self.size * self.size
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    /// Area of one quadrature cell.
    pub fn cell_area(&self) -> f64 {
        self.spacing * self.spacing
    }

    /// Half the side length of the covered window.
    pub fn half_side(&self) -> f64 {
        0.5 * self.spacing * self.size as f64
    }

    /// The sample at a (row, column) position; `Im` grows with the row.
    pub fn point(&self, row: usize, col: usize) -> Complex64 {
        let mid = 0.5 * (self.size as f64 - 1.0);
        Complex64::new(
            self.center.re + self.spacing * (col as f64 - mid),
            self.center.im + self.spacing * (row as f64 - mid),
        )
    }

    /// Row-major index of a (row, column) position.
    pub fn index(&self, row: usize, col: usize) -> usize {
        row * self.size + col
    }

    /// The (row, column) of the cell containing `z`, if any.
    pub fn locate(&self, z: Complex64) -> Option<(usize, usize)> {
        let half = self.size as f64 / 2.0;
        let u = (z.re - self.center.re) / self.spacing + half;
        let v = (z.im - self.center.im) / self.spacing + half;
        if u < 0.0 || v < 0.0 {
            return None;
        }
        let (col, row) = (u.floor() as usize, v.floor() as usize);
        if col < self.size && row < self.size {
            Some((row, col))
        } else {
            None
        }
    }

    /// Whether `z` lies inside the covered window.
    pub fn contains(&self, z: Complex64) -> bool {
        self.locate(z).is_some()
    }
}

/// One complex value per grid cell, row-major.
#[derive(Debug, Clone, PartialEq)]
pub struct GridField {
    grid: Grid,
    values: Vec<Complex64>,
}

impl GridField {
    /// The zero field.
    pub fn zeros(grid: Grid) -> Self {
        Self {
            values: vec![Complex64::new(0.0, 0.0); grid.len()],
            grid,
        }
    }

    /// Samples a function at every cell center.
    pub fn from_fn(grid: Grid, f: impl Fn(Complex64) -> Complex64) -> Self {
        let mut values = Vec::with_capacity(grid.len());
        for row in 0..grid.size() {
            for col in 0..grid.size() {
                values.push(f(grid.point(row, col)));
            }
        }
        Self { grid, values }
    }

    /// Wraps an existing row-major value vector.
    pub fn from_values(grid: Grid, values: Vec<Complex64>) -> Result<Self, BeltramiError> {
        if values.len() != grid.len() {
            return Err(BeltramiError::GridMismatch {
                left: grid.len(),
                right: values.len(),
            });
        }
        Ok(Self { grid, values })
    }

    pub fn grid(&self) -> &Grid {
        &self.grid
    }

    pub fn values(&self) -> &[Complex64] {
        &self.values
    }

    pub fn values_mut(&mut self) -> &mut [Complex64] {
        &mut self.values
    }

    pub fn value(&self, row: usize, col: usize) -> Complex64 {
        self.values[self.grid.index(row, col)]
    }

    pub fn set(&mut self, row: usize, col: usize, value: Complex64) {
        let i = self.grid.index(row, col);
        self.values[i] = value;
    }

    /// Grid L2 norm: the midpoint quadrature of |field|^2, square-rooted.
    pub fn l2_norm(&self) -> f64 {
        let sum: f64 = self.values.iter().map(|v| v.norm_sqr()).sum();
        (sum * self.grid.cell_area()).sqrt()
    }

    /// Largest sample modulus.
    pub fn sup_norm(&self) -> f64 {
        self.values.iter().map(|v| v.norm()).fold(0.0, f64::max)
    }

    /// Pointwise product with a field on the same grid.
    pub fn product(&self, other: &GridField) -> Result<GridField, BeltramiError> {
        self.check_same_grid(other)?;
        let values = self
            .values
            .iter()
            .zip(&other.values)
            .map(|(a, b)| a * b)
            .collect();
        Ok(GridField {
            grid: self.grid,
            values,
        })
    }

    /// Grid L2 norm of the difference with a field on the same grid.
    pub fn l2_distance(&self, other: &GridField) -> Result<f64, BeltramiError> {
        self.check_same_grid(other)?;
        let sum: f64 = self
            .values
            .iter()
            .zip(&other.values)
            .map(|(a, b)| (a - b).norm_sqr())
            .sum();
        Ok((sum * self.grid.cell_area()).sqrt())
    }

    /// Number of nonzero samples on the outermost ring of the grid.
    pub(crate) fn boundary_ring_nonzero_count(&self) -> usize {
        let n = self.grid.size();
        let mut count = 0;
        for row in 0..n {
            for col in 0..n {
                let on_ring = row == 0 || col == 0 || row == n - 1 || col == n - 1;
                if on_ring && self.value(row, col) != Complex64::new(0.0, 0.0) {
                    count += 1;
                }
            }
        }
        count
    }

    fn check_same_grid(&self, other: &GridField) -> Result<(), BeltramiError> {
        if self.grid == other.grid {
            Ok(())
        } else {
            Err(BeltramiError::GridMismatch {
                left: self.grid.len(),
                right: other.grid.len(),
            })
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn unit_grid(size: usize) -> Grid {
        Grid::square(Complex64::new(0.0, 0.0), 1.0, size).unwrap()
    }

    #[test]
    fn two_by_two_cell_centers_sit_at_quarter_points() {
        let g = unit_grid(2);
        assert_eq!(g.spacing(), 1.0);
        assert_eq!(g.point(0, 0), Complex64::new(-0.5, -0.5));
        assert_eq!(g.point(1, 1), Complex64::new(0.5, 0.5));
    }

    #[test]
    fn locate_recovers_every_cell_center() {
        let g = Grid::new(Complex64::new(0.3, -1.0), 0.25, 7).unwrap();
        for row in 0..7 {
            for col in 0..7 {
                assert_eq!(g.locate(g.point(row, col)), Some((row, col)));
            }
        }
        assert_eq!(g.locate(Complex64::new(100.0, 0.0)), None);
    }

    #[test]
    fn degenerate_grids_are_rejected() {
        let zero = Complex64::new(0.0, 0.0);
        assert!(matches!(
            Grid::new(zero, 0.1, 0),
            Err(BeltramiError::InvalidGrid { .. })
        ));
        assert!(matches!(
            Grid::new(zero, -0.1, 8),
            Err(BeltramiError::InvalidGrid { .. })
        ));
        assert!(matches!(
            Grid::new(Complex64::new(f64::NAN, 0.0), 0.1, 8),
            Err(BeltramiError::InvalidGrid { .. })
        ));
        assert!(matches!(
            Grid::square(zero, f64::INFINITY, 8),
            Err(BeltramiError::InvalidGrid { .. })
        ));
    }

    #[test]
    fn constant_field_l2_norm_matches_window_area() {
        let g = unit_grid(16);
        let f = GridField::from_fn(g, |_| Complex64::new(3.0, 0.0));
        // |f|^2 integrates to 9 * window area = 9 * 4.
        assert!((f.l2_norm() - 6.0).abs() < 1e-12);
    }

    #[test]
    fn product_rejects_fields_on_different_grids() {
        let a = GridField::zeros(unit_grid(4));
        let b = GridField::zeros(unit_grid(5));
        assert!(matches!(
            a.product(&b),
            Err(BeltramiError::GridMismatch { .. })
        ));
    }

    #[test]
    fn boundary_ring_count_sees_only_the_outer_ring() {
        let mut f = GridField::zeros(unit_grid(4));
        f.set(1, 1, Complex64::new(1.0, 0.0));
        assert_eq!(f.boundary_ring_nonzero_count(), 0);
        f.set(0, 2, Complex64::new(1.0, 0.0));
        f.set(3, 0, Complex64::new(0.0, 2.0));
        assert_eq!(f.boundary_ring_nonzero_count(), 2);
    }
}
