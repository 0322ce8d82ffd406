//! Compactly supported dilatation fields on a grid.
//!
//! A [`BeltramiField`] is the discrete datum of a Beltrami equation
//! `f_zbar = mu f_z`: one dilatation sample per grid cell, vanishing outside
//! a declared support radius, with sup norm strictly below 1. Construction
//! validates all three properties, so downstream consumers (the singular
//! integral operators and the fixed-point solver) can rely on them.

use crate::error::BeltramiError;
use crate::grid::{Grid, GridField};
use num_complex::Complex64;

/// A dilatation field of compact support: the right-hand side datum of a
/// Beltrami equation.
#[derive(Debug, Clone)]
pub struct BeltramiField {
    mu: GridField,
    support_radius: f64,
    k_bound: f64,
}

impl BeltramiField {
    /// Validates and wraps dilatation samples.
    ///
    /// Requires `max |mu| < 1`, `mu = 0` at every sample outside the support
    /// radius, and a grid window whose half-side is at least twice the
    /// support radius, so that the support is surrounded by a margin of its
    /// own radius.
    pub fn new(mu: GridField, support_radius: f64) -> Result<Self, BeltramiError> {
        if !support_radius.is_finite() || support_radius <= 0.0 {
            return Err(BeltramiError::InvalidSupportRadius {
                radius: support_radius,
            });
        }
        let half_side = mu.grid().half_side();
        if half_side < 2.0 * support_radius {
            return Err(BeltramiError::InsufficientMargin {
                half_side,
                support_radius,
            });
        }
        let k_bound = mu.sup_norm();
        if k_bound >= 1.0 {
            return Err(BeltramiError::DilatationTooLarge { max_abs: k_bound });
        }
        let grid = *mu.grid();
        let mut outside = 0;
        for row in 0..grid.size() {
            for col in 0..grid.size() {
                let z = grid.point(row, col);
                if z.norm() > support_radius && mu.value(row, col) != Complex64::new(0.0, 0.0) {
                    outside += 1;
                }
            }
        }
        if outside > 0 {
            return Err(BeltramiError::SupportViolated {
                count: outside,
                support_radius,
            });
        }
        Ok(Self {
            mu,
            support_radius,
            k_bound,
        })
    }

    /// Samples a dilatation function over the grid and validates it.
    pub fn from_fn(
        grid: Grid,
        support_radius: f64,
        mu: impl Fn(Complex64) -> Complex64,
    ) -> Result<Self, BeltramiError> {
        Self::new(GridField::from_fn(grid, mu), support_radius)
    }

    /// The constant field `k` on the disk `|z| < radius`, zero elsewhere.
    pub fn constant_disk(grid: Grid, k: Complex64, radius: f64) -> Result<Self, BeltramiError> {
        Self::from_fn(grid, radius, |z| {
            if z.norm() < radius {
                k
            } else {
                Complex64::new(0.0, 0.0)
            }
        })
    }

    pub fn mu(&self) -> &GridField {
        &self.mu
    }

    pub fn grid(&self) -> &Grid {
        self.mu.grid()
    }

    /// Radius outside which every sample is zero.
    pub fn support_radius(&self) -> f64 {
        self.support_radius
    }

    /// The measured sup norm of the samples, strictly below 1.
    pub fn k_bound(&self) -> f64 {
        self.k_bound
    }
}

/// Pulls a dilatation field supported away from the origin back to one of
/// compact support through the coordinate swap `w = 1/z`:
///
/// `mu_tilde(z) = mu(1/z) z^2 / zbar^2`.
///
/// Every input sample inside the vanishing radius must be zero; reciprocal
/// points falling outside the input window read as zero. The unimodular
/// factor leaves `|mu_tilde(z)| = |mu(1/z)|` pointwise, and the result is
/// supported inside the reciprocal of the input support. Because samples are
/// looked up by containing cell, that reciprocal is resolved only to cell
/// accuracy: the declared support radius is `1 / (r - s/sqrt(2))` for
/// vanishing radius `r` and input spacing `s`, and a vanishing radius not
/// exceeding the cell diagonal is rejected as unresolvable.
pub fn reflect_at_infinity(
    mu: &GridField,
    vanishing_radius: f64,
    target: Grid,
) -> Result<BeltramiField, BeltramiError> {
    let resolved = vanishing_radius - mu.grid().spacing() * std::f64::consts::FRAC_1_SQRT_2;
    if !vanishing_radius.is_finite() || resolved <= 0.0 {
        return Err(BeltramiError::InvalidSupportRadius {
            radius: vanishing_radius,
        });
    }
    let grid = *mu.grid();
    let mut near_zero = 0;
    for row in 0..grid.size() {
        for col in 0..grid.size() {
            let z = grid.point(row, col);
            if z.norm() < vanishing_radius && mu.value(row, col) != Complex64::new(0.0, 0.0) {
                near_zero += 1;
            }
        }
    }
    if near_zero > 0 {
        return Err(BeltramiError::NonvanishingNearZero {
            count: near_zero,
            vanishing_radius,
        });
    }
    let reflected = GridField::from_fn(target, |z| {
        if z == Complex64::new(0.0, 0.0) {
            return Complex64::new(0.0, 0.0);
        }
        let w = z.inv();
        let sample = match grid.locate(w) {
            Some((row, col)) => mu.value(row, col),
            None => Complex64::new(0.0, 0.0),
        };
        if sample == Complex64::new(0.0, 0.0) {
            return sample;
        }
        let zbar = z.conj();
        // The unimodular factor is formed first so that where it is exactly
        // 1 (the real axis) the sample passes through unchanged.
        let factor = (z * z) / (zbar * zbar);
        sample * factor
    });
    BeltramiField::new(reflected, resolved.recip())
}
