//! Pointwise dilatation algebra for Wirtinger derivative samples.
//!
//! A C1 map has Wirtinger derivatives `f_z = (f_x - i f_y)/2` and
//! `f_zbar = (f_x + i f_y)/2`; its complex dilatation is `mu = f_zbar / f_z`
//! and the infinitesimal ellipse it carries has axis ratio
//! `(1 + |mu|) / (1 - |mu|)`. This module computes those quantities and the
//! dilatations of compositions and inverses.

use crate::error::BeltramiError;
use num_complex::Complex64;

/// The two Wirtinger derivatives of a map at one sample point.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct WirtingerPair {
    pub f_z: Complex64,
    pub f_zbar: Complex64,
}

impl WirtingerPair {
    pub fn new(f_z: Complex64, f_zbar: Complex64) -> Self {
        Self { f_z, f_zbar }
    }

    /// Jacobian determinant `|f_z|^2 - |f_zbar|^2`.
    pub fn jacobian(&self) -> f64 {
        self.f_z.norm_sqr() - self.f_zbar.norm_sqr()
    }

    /// Whether the sample preserves orientation (positive Jacobian).
    pub fn is_orientation_preserving(&self) -> bool {
        self.jacobian() > 0.0
    }
}

/// Complex dilatation and ellipse axis ratio at one point.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Dilatation {
    /// `f_zbar / f_z`.
    pub mu: Complex64,
    /// `(1 + |mu|) / (1 - |mu|)`, at least 1, equal to 1 exactly for
    /// conformal samples.
    pub ratio: f64,
}

/// Computes the complex dilatation and axis ratio of a derivative sample.
///
/// Fails on `f_z = 0` (dilatation undefined) and on orientation-reversing
/// samples (`|f_zbar| >= |f_z|`), whose axis ratio formula breaks down.
pub fn dilatation(pair: &WirtingerPair) -> Result<Dilatation, BeltramiError> {
    if pair.f_z == Complex64::new(0.0, 0.0) {
        return Err(BeltramiError::DegenerateDerivative);
    }
    let mu = pair.f_zbar / pair.f_z;
    let modulus = mu.norm();
    if modulus >= 1.0 {
        return Err(BeltramiError::OrientationReversing { mu_abs: modulus });
    }
    Ok(Dilatation {
        mu,
        ratio: (1.0 + modulus) / (1.0 - modulus),
    })
}

/// The unimodular factor `conj(f_z) / f_z` appearing in composition rules.
pub fn unit_factor(f_z: Complex64) -> Result<Complex64, BeltramiError> {
    if f_z == Complex64::new(0.0, 0.0) {
        return Err(BeltramiError::DegenerateDerivative);
    }
    Ok(f_z.conj() / f_z)
}

/// Dilatation of a composition `g . f` from the dilatation of `f`, the
/// unimodular factor `conj(f_z)/f_z`, and the dilatation of `g` evaluated
/// at `f(z)`:
///
/// `mu_{g.f} = (mu_f + k_f mu_g) / (1 + k_f conj(mu_f) mu_g)`.
///
/// For admissible inputs (`|mu_f| < 1`, `|mu_g| < 1`) the denominator cannot
/// vanish and the result again has modulus below 1.
pub fn compose_dilatation(
    mu_f: Complex64,
    k_f: Complex64,
    mu_g_at_fz: Complex64,
) -> Complex64 {
    let product = k_f * mu_g_at_fz;
    (mu_f + product) / (Complex64::new(1.0, 0.0) + product * mu_f.conj())
}

/// Dilatation of the inverse map, expressed at the source point:
///
/// `mu_{f^-1}(f(z)) = -(f_z/|f_z|)^2 mu_f(z)`.
///
/// The factor is unimodular, so the modulus of the dilatation is preserved.
pub fn inverse_dilatation(
    mu_f: Complex64,
    f_z: Complex64,
) -> Result<Complex64, BeltramiError> {
    if f_z == Complex64::new(0.0, 0.0) {
        return Err(BeltramiError::DegenerateDerivative);
    }
    let phase = f_z / f_z.norm();
    Ok(-(phase * phase) * mu_f)
}
