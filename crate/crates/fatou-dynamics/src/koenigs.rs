//! Koenigs linearizing coordinate at an attracting fixed point.
//!
//! For a fixed point `p` with multiplier `0 < |lambda| < 1`, the coordinate
//! `g(z) = lim (R^k(z) - p) / lambda^k` conjugates the map to
//! `w -> lambda w` near `p`: it satisfies `g(R(z)) = lambda g(z)`, with
//! `g(p) = 0` and `g'(p) = 1`. It is computed as a running product of the
//! per-step ratios `(R^(k+1)(z) - p) / (lambda (R^k(z) - p))`, which
//! telescope to the limit; the product is stopped once its increments fall
//! below the configured tolerance.

use crate::error::{DynamicsError, KoenigsPointError};
use crate::fixed::FixedPointRecord;
use fatou_core::{Complex64, RationalMap, SpherePoint};

/// Tolerances and budget for Koenigs coordinate evaluation.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct KoenigsConfig {
    /// Stop the product once `|factor - 1|` drops below this.
    pub product_tol: f64,
    /// Bound enforced on the functional-equation residual
    /// `|g(R(z)) - lambda g(z)|` for each point.
    pub residual_tol: f64,
    /// Iteration budget per point.
    pub max_iterations: usize,
}

impl Default for KoenigsConfig {
    fn default() -> Self {
        KoenigsConfig {
            product_tol: 1e-12,
            residual_tol: 1e-8,
            max_iterations: 200_000,
        }
    }
}

/// Evaluate the Koenigs coordinate of `fixed_point` at each input point.
///
/// The fixed point must be finite (conjugate the map first otherwise) and
/// its multiplier must satisfy `0 < |lambda| < 1`; a superattracting point
/// has no Koenigs coordinate. Points outside the basin are reported with
/// individual error markers instead of failing the whole batch, and each
/// returned value has passed the functional-equation residual check. The
/// output order matches the input order.
pub fn koenigs_coordinate(
    map: &RationalMap,
    fixed_point: &FixedPointRecord,
    points: &[SpherePoint],
    config: &KoenigsConfig,
) -> Result<Vec<Result<Complex64, KoenigsPointError>>, DynamicsError> {
    let center = match fixed_point.location {
        SpherePoint::Finite(z) => z,
        SpherePoint::Infinity => return Err(DynamicsError::FixedPointAtInfinity),
    };
    let lambda = fixed_point.multiplier;
    let modulus = lambda.norm();
    if !(modulus > 1e-12 && modulus < 1.0) {
        return Err(DynamicsError::NotLinearizable {
            multiplier: lambda,
            modulus,
        });
    }

    Ok(points
        .iter()
        .map(|&z| evaluate_checked(map, center, lambda, z, config))
        .collect())
}

/// Evaluate at one point and verify the functional equation by evaluating
/// independently at the image point; the two runs stop at different places,
/// so the comparison genuinely probes convergence.
fn evaluate_checked(
    map: &RationalMap,
    center: Complex64,
    lambda: Complex64,
    z: SpherePoint,
    config: &KoenigsConfig,
) -> Result<Complex64, KoenigsPointError> {
    let g = evaluate_product(map, center, lambda, z, config)?;
    let g_image = evaluate_product(map, center, lambda, map.eval(z), config)?;
    let residual = (g_image - lambda * g).norm();
    if residual > config.residual_tol {
        return Err(KoenigsPointError::ResidualTooLarge {
            residual,
            tolerance: config.residual_tol,
        });
    }
    Ok(g)
}

/// The running-product evaluation of the coordinate at a single point.
///
/// Two stopping rules apply. The product finishes when its increment
/// `|factor - 1|` drops below `product_tol`, or when the orbit gets so
/// close to the fixed point that rounding noise in the centered coordinate
/// would dominate any further factors; at that distance the neglected tail
/// of the product is of the same relative size as the noise, so stopping
/// is both safe and necessary (the increment criterion alone would chase
/// an unattainable precision and never fire).
fn evaluate_product(
    map: &RationalMap,
    center: Complex64,
    lambda: Complex64,
    z: SpherePoint,
    config: &KoenigsConfig,
) -> Result<Complex64, KoenigsPointError> {
    // Noise in a centered coordinate u is absolute (machine epsilon at the
    // scale of the fixed point), so factors computed from |u| below this
    // floor are dominated by rounding; sqrt(epsilon)-sized u balances the
    // truncated tail against the accumulated noise.
    let coordinate_floor = 1e-8 * (1.0 + center.norm());
    let mut w = z;
    let mut iterations = 0usize;
    let mut infinity_visits = 0usize;
    // (start index, centered coordinate at the start of the product)
    let mut start: Option<(usize, Complex64)> = None;
    let mut previous = Complex64::new(0.0, 0.0);
    let mut product = Complex64::new(1.0, 0.0);

    loop {
        match w {
            SpherePoint::Finite(value) => {
                let centered = value - center;
                if centered.norm() == 0.0 {
                    // The orbit hit the fixed point exactly; the functional
                    // equation forces the coordinate of the seed to zero.
                    return Ok(Complex64::new(0.0, 0.0));
                }
                match start {
                    None => {
                        if centered.norm() < coordinate_floor {
                            // Already at the fixed point to working
                            // precision: g(z) = u + O(u^2).
                            return Ok(centered);
                        }
                        start = Some((iterations, centered));
                        previous = centered;
                    }
                    Some(_) => {
                        let factor = centered / (lambda * previous);
                        product *= factor;
                        previous = centered;
                        let settled = (factor - 1.0).norm() < config.product_tol
                            || centered.norm() < coordinate_floor;
                        if settled {
                            let (offset, first) = start.expect("product has started");
                            // g(z) = g(R^offset(z)) / lambda^offset
                            let g = first * product / lambda.powi(offset as i32);
                            if !g.is_finite() {
                                return Err(KoenigsPointError::NoConvergence { iterations });
                            }
                            return Ok(g);
                        }
                    }
                }
            }
            SpherePoint::Infinity => {
                // A second visit would make infinity periodic, so the seed
                // could not be in the basin of a finite attracting point.
                infinity_visits += 1;
                if infinity_visits >= 2 {
                    return Err(KoenigsPointError::Escaped { iterations });
                }
                // Abandon the running product and restart past the pole.
                start = None;
                product = Complex64::new(1.0, 0.0);
            }
        }
        if iterations >= config.max_iterations {
            return Err(KoenigsPointError::NoConvergence { iterations });
        }
        w = map.eval(w);
        iterations += 1;
    }
}
