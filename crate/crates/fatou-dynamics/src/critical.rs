//! Critical points, preimages, deficiency, and exceptional points.

use crate::error::DynamicsError;
use crate::order;
use fatou_core::{
    chordal_distance, RationalMap, RootFindConfig, SpherePoint,
};

/// Relative threshold treating leading coefficients as cancelled when a
/// preimage equation drops degree (the lost solutions sit at infinity).
const LEADING_CANCEL_EPSILON: f64 = 1e-12;

/// Relative threshold for deciding which chart-expansion coefficients of
/// the map at infinity count as zero when reading off its local degree.
const CHART_COEFF_EPSILON: f64 = 1e-9;

/// All critical points of `map`, with multiplicities (local degree minus
/// one). Requires degree at least 2. The finite critical points are the
/// zeros of the derivative together with every pole of order at least two;
/// infinity is examined in the `w = 1/z` chart. Counted on the sphere the
/// multiplicities sum to at most `2 deg - 2`, with equality exactly when
/// none of the underlying roots collide.
pub fn critical_points(
    map: &RationalMap,
) -> Result<Vec<(SpherePoint, usize)>, DynamicsError> {
    require_degree(map, 2)?;
    let config = RootFindConfig::default();
    let mut out: Vec<(SpherePoint, usize)> = Vec::new();

    let derivative = map.derivative();
    for (root, multiplicity) in fatou_core::poly_roots(derivative.num(), &config)? {
        out.push((SpherePoint::from_value(root), multiplicity));
    }
    for (pole, order) in fatou_core::poly_roots(map.den(), &config)? {
        if order >= 2 {
            out.push((SpherePoint::from_value(pole), order - 1));
        }
    }
    let local_degree = local_degree_at_infinity(map);
    if local_degree >= 2 {
        out.push((SpherePoint::Infinity, local_degree - 1));
    }

    out.sort_by(|a, b| order::compare(&a.0, &b.0));
    Ok(out)
}

/// Local degree of the map at infinity, read off in the `w = 1/z` chart.
///
/// With `n = deg P` and `m = deg Q` the chart expansion begins with
/// `w^(n-m)` (pole) or `w^(m-n)` (zero), so for `n != m` the local degree
/// is `|n - m|` exactly. For `n == m` the map sends infinity to the finite
/// value `v = p_n / q_m` and the local degree is the vanishing order of the
/// chart numerator of `R(1/w) - v` at `w = 0`.
fn local_degree_at_infinity(map: &RationalMap) -> usize {
    let n = map.num().degree().expect("numerator of a valid map is nonzero");
    let m = map.den().degree().unwrap_or(0);
    if n != m {
        return n.abs_diff(m);
    }
    let p = map.num().coeffs();
    let q = map.den().coeffs();
    let v = p[n] / q[m];
    let scale = map.num().max_coeff_norm() + v.norm() * map.den().max_coeff_norm();
    let threshold = scale * CHART_COEFF_EPSILON;
    for k in 1..=n {
        let coefficient = p[n - k] - v * q[m - k];
        if coefficient.norm() > threshold {
            return k;
        }
    }
    // All chart coefficients cancel only for a constant map, which cannot
    // be constructed; treat a full collapse as maximal ramification.
    n
}

/// All solutions of `map(z) = value`, with multiplicities summing to the
/// degree of the map. For a finite value these are the roots of
/// `P - value * Q`; any degree drop at the top moves solutions to infinity.
/// For `value = infinity` they are the poles, plus infinity itself when
/// `deg P > deg Q`.
pub fn preimages(
    map: &RationalMap,
    value: SpherePoint,
) -> Result<Vec<(SpherePoint, usize)>, DynamicsError> {
    let config = RootFindConfig::default();
    let d = map.degree();
    let mut out: Vec<(SpherePoint, usize)> = Vec::new();
    match value {
        SpherePoint::Finite(v) => {
            let equation = map.num() - &map.den().scale(v);
            let equation = equation.truncate_leading(LEADING_CANCEL_EPSILON);
            let degree = equation.degree().unwrap_or(0);
            if !equation.is_zero() {
                for (root, multiplicity) in fatou_core::poly_roots(&equation, &config)? {
                    out.push((SpherePoint::from_value(root), multiplicity));
                }
            }
            if d > degree {
                out.push((SpherePoint::Infinity, d - degree));
            }
        }
        SpherePoint::Infinity => {
            for (pole, order) in fatou_core::poly_roots(map.den(), &config)? {
                out.push((SpherePoint::from_value(pole), order));
            }
            let n = map.num().degree().expect("numerator is nonzero");
            let m = map.den().degree().unwrap_or(0);
            if n > m {
                out.push((SpherePoint::Infinity, n - m));
            }
        }
    }
    out.sort_by(|a, b| order::compare(&a.0, &b.0));
    debug_assert_eq!(out.iter().map(|(_, k)| k).sum::<usize>(), d);
    Ok(out)
}

/// Number of preimages the value is missing compared to a regular value:
/// `deg - #distinct preimages`. Nonzero exactly at critical values.
/// Requires degree at least 2.
pub fn deficiency(map: &RationalMap, value: SpherePoint) -> Result<usize, DynamicsError> {
    require_degree(map, 2)?;
    Ok(map.degree() - preimages(map, value)?.len())
}

/// The exceptional points of `map`: points whose entire backward orbit is
/// finite. A rational map of degree at least 2 has at most two, and each
/// must have deficiency `deg - 1` (a single preimage), with the resulting
/// one- or two-point set closed under taking preimages: either a totally
/// ramified fixed point, or a pair swapped by the map.
pub fn exceptional_points(
    map: &RationalMap,
    tol: f64,
) -> Result<Vec<SpherePoint>, DynamicsError> {
    require_degree(map, 2)?;
    let d = map.degree();
    let mut out: Vec<SpherePoint> = Vec::new();
    for (carrier, multiplicity) in critical_points(map)? {
        if multiplicity != d - 1 {
            continue;
        }
        let value = map.eval(carrier);
        let value_preimages = preimages(map, value)?;
        if value_preimages.len() != 1
            || chordal_distance(value_preimages[0].0, carrier) > tol
        {
            continue;
        }
        if chordal_distance(carrier, value) <= tol {
            // Totally ramified fixed point: the backward orbit is {value}.
            out.push(value);
        } else {
            // Two-point case: need the pair swapped, i.e. the only preimage
            // of the carrier must be the value.
            let carrier_preimages = preimages(map, carrier)?;
            if carrier_preimages.len() == 1
                && chordal_distance(carrier_preimages[0].0, value) <= tol
            {
                out.push(carrier);
                out.push(value);
            }
        }
    }
    order::dedup_within(&mut out, tol.max(1e-9));
    out.sort_by(order::compare);
    debug_assert!(out.len() <= 2);
    Ok(out)
}

fn require_degree(map: &RationalMap, required: usize) -> Result<(), DynamicsError> {
    if map.degree() < required {
        return Err(DynamicsError::DegreeTooLow {
            required,
            actual: map.degree(),
        });
    }
    Ok(())
}
