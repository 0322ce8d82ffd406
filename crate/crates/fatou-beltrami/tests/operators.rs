//! Integration checks for the singular integral operators: the Cauchy
//! transform antidifferentiates in the zbar direction, its z-derivative is
//! the Beurling transform, and the Beurling transform is close to an L2
//! isometry on resolved densities.

use fatou_beltrami::{
    beurling_transform, cauchy_transform, cauchy_transform_at, wirtinger_stencil, Grid, GridField,
};
use num_complex::Complex64;

fn c(re: f64, im: f64) -> Complex64 {
    Complex64::new(re, im)
}

/// A C1 bump supported in the unit disk with both components exercised.
fn smooth_bump(grid: Grid) -> GridField {
    GridField::from_fn(grid, |z| {
        let r2 = z.norm_sqr();
        if r2 < 1.0 {
            let s = 1.0 - r2;
            c(s * s, 0.5 * s * s * z.re)
        } else {
            c(0.0, 0.0)
        }
    })
}

#[test]
fn cauchy_transform_antidifferentiates_the_density() {
    let grid = Grid::square(c(0.0, 0.0), 2.0, 256).unwrap();
    let bump = smooth_bump(grid);
    let potential = cauchy_transform(&bump, &grid).unwrap();
    let shifted = beurling_transform(&bump).unwrap();
    let mut worst_zbar = 0.0f64;
    let mut worst_z = 0.0f64;
    for row in 2..grid.size() - 2 {
        for col in 2..grid.size() - 2 {
            let z = grid.point(row, col);
            if (z.norm() - 1.0).abs() < 2.0 * grid.spacing() {
                continue;
            }
            let pair = wirtinger_stencil(&potential, row, col).unwrap();
            worst_zbar = worst_zbar.max((pair.f_zbar - bump.value(row, col)).norm());
            worst_z = worst_z.max((pair.f_z - shifted.value(row, col)).norm());
        }
    }
    // Measured 4.0e-4 and 5.3e-4 at this resolution.
    assert!(worst_zbar < 0.01, "sup |(Ph)_zbar - h| = {worst_zbar}");
    assert!(worst_z < 0.01, "sup |(Ph)_z - Th| = {worst_z}");
}

#[test]
fn beurling_transform_is_nearly_an_isometry_on_smooth_densities() {
    for size in [64usize, 256] {
        let grid = Grid::square(c(0.0, 0.0), 2.0, size).unwrap();
        let bump = smooth_bump(grid);
        let transformed = beurling_transform(&bump).unwrap();
        let ratio = transformed.l2_norm() / bump.l2_norm();
        // The window clips the transform's quadratic tail, so the ratio
        // sits a little below 1; measured 0.942 at both resolutions.
        assert!((0.9..=1.1).contains(&ratio), "N = {size}: ratio = {ratio}");
    }
}

#[test]
fn cauchy_transform_vanishes_identically_at_the_origin() {
    let grid = Grid::square(c(0.0, 0.0), 2.0, 128).unwrap();
    let bump = smooth_bump(grid);
    assert_eq!(
        cauchy_transform_at(&bump, c(0.0, 0.0)).unwrap(),
        c(0.0, 0.0)
    );
}

#[test]
fn transforms_refine_with_the_grid() {
    // The derivative identity error should drop by roughly the resolution
    // ratio squared between these two grids.
    let mut errors = Vec::new();
    for size in [64usize, 128] {
        let grid = Grid::square(c(0.0, 0.0), 2.0, size).unwrap();
        let bump = smooth_bump(grid);
        let potential = cauchy_transform(&bump, &grid).unwrap();
        let mut worst = 0.0f64;
        for row in 2..grid.size() - 2 {
            for col in 2..grid.size() - 2 {
                let z = grid.point(row, col);
                if (z.norm() - 1.0).abs() < 2.0 * grid.spacing() {
                    continue;
                }
                let pair = wirtinger_stencil(&potential, row, col).unwrap();
                worst = worst.max((pair.f_zbar - bump.value(row, col)).norm());
            }
        }
        errors.push(worst);
    }
    assert!(
        errors[1] < 0.5 * errors[0],
        "no refinement: {errors:?}"
    );
}
