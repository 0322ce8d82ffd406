//! Classification of fixed points and cycles by their multiplier.

use fatou_core::Complex64;

/// Dynamical type of a fixed point or cycle, determined by the multiplier
/// `lambda` (the derivative of the return map at the point).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Classification {
    /// `lambda = 0`: the cycle contains a critical point.
    Superattracting,
    /// `0 < |lambda| < 1`.
    Attracting,
    /// `|lambda| > 1`.
    Repelling,
    /// `|lambda| = 1` with `lambda^q = 1`; carries the smallest such `q`.
    RationallyIndifferent(u32),
    /// `|lambda| = 1` but no power within reach of the root test equals 1.
    IrrationallyIndifferent,
}

impl Classification {
    /// True for superattracting and attracting points alike.
    pub fn is_attracting(self) -> bool {
        matches!(
            self,
            Classification::Superattracting | Classification::Attracting
        )
    }

    /// Stable text label, also used by the serialized report formats.
    pub fn label(self) -> String {
        match self {
            Classification::Superattracting => "superattracting".to_string(),
            Classification::Attracting => "attracting".to_string(),
            Classification::Repelling => "repelling".to_string(),
            Classification::RationallyIndifferent(q) => {
                format!("rationally-indifferent(q={q})")
            }
            Classification::IrrationallyIndifferent => "irrationally-indifferent".to_string(),
        }
    }
}

impl std::fmt::Display for Classification {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(&self.label())
    }
}

/// Tolerances controlling how multipliers are sorted into classes.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ClassifyConfig {
    /// `|lambda|` below this counts as zero (superattracting).
    pub tol_super: f64,
    /// Half-width of the band around `|lambda| = 1` treated as indifferent.
    pub tol_unit: f64,
    /// Tolerance for the root-of-unity test `|lambda^q - 1| <= tol_root`.
    pub tol_root: f64,
    /// Largest exponent tried by the root-of-unity test.
    pub max_root_order: u32,
}

impl Default for ClassifyConfig {
    fn default() -> Self {
        ClassifyConfig {
            tol_super: 1e-9,
            tol_unit: 1e-9,
            tol_root: 1e-8,
            max_root_order: 64,
        }
    }
}

/// Classify a multiplier.
///
/// The modulus bands are, in order: `[0, tol_super)` superattracting,
/// `[tol_super, 1 - tol_unit)` attracting, `(1 + tol_unit, inf)` repelling.
/// Inside the remaining band around the unit circle the multiplier counts as
/// indifferent; it is rationally indifferent exactly when some power
/// `lambda^q` with `q <= max_root_order` lies within `tol_root` of 1, and the
/// smallest such `q` is recorded.
pub fn classify(multiplier: Complex64, config: &ClassifyConfig) -> Classification {
    let modulus = multiplier.norm();
    if modulus < config.tol_super {
        return Classification::Superattracting;
    }
    if modulus < 1.0 - config.tol_unit {
        return Classification::Attracting;
    }
    if modulus > 1.0 + config.tol_unit {
        return Classification::Repelling;
    }
    let mut power = Complex64::new(1.0, 0.0);
    for q in 1..=config.max_root_order {
        power *= multiplier;
        if (power - 1.0).norm() <= config.tol_root {
            return Classification::RationallyIndifferent(q);
        }
    }
    Classification::IrrationallyIndifferent
}
