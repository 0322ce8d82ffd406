//! Periodic orbits of exact period `n`.

use crate::classify::{classify, Classification, ClassifyConfig};
use crate::error::DynamicsError;
use crate::fixed::{finite_derivative, fixed_point_polynomial, multiplier_at_infinity};
use crate::order;
use fatou_core::{
    chordal_distance, Complex64, MapError, Mobius, RationalMap, RootFindConfig, SpherePoint,
};

/// A cycle of exact period `n` together with its multiplier.
#[derive(Debug, Clone, PartialEq)]
pub struct PeriodicOrbit {
    /// Exact (minimal) period of every point in the cycle.
    pub period: usize,
    /// The cycle in forward order: the map sends `points[i]` to
    /// `points[i + 1 mod period]`. Rotated so the first entry is the
    /// smallest point in the deterministic point order.
    pub points: Vec<SpherePoint>,
    /// Derivative of the `period`-th iterate at any point of the cycle.
    pub multiplier: Complex64,
    /// Dynamical type derived from the multiplier.
    pub class: Classification,
}

/// Relative threshold treating leading coefficients of the iterate's
/// fixed-point polynomial as cancelled (multiplicity moved to infinity).
const LEADING_CANCEL_EPSILON: f64 = 1e-12;

/// Find every periodic orbit of exact period `n`.
///
/// The `n`-th iterate is built explicitly (subject to the degree cap), its
/// fixed points are solved for, points whose period properly divides `n`
/// are removed, and the survivors are grouped into cycles by following the
/// map. Each orbit's multiplier is the derivative of the iterate at a cycle
/// point; the chain rule makes it independent of which point is chosen.
///
/// `tol` is the chordal tolerance used to match points when filtering
/// divisor periods and when following the map through the root list.
pub fn periodic_points(
    map: &RationalMap,
    n: u32,
    tol: f64,
) -> Result<Vec<PeriodicOrbit>, DynamicsError> {
    assert!(n >= 1, "period must be at least 1");
    let iterate = map.iterate(n).map_err(|e| match e {
        MapError::DegreeCap { degree, cap } => DynamicsError::IterateTooLarge { degree, cap },
        other => DynamicsError::Map(other),
    })?;

    let displacement = fixed_point_polynomial(&iterate);
    if displacement.is_zero() {
        // The iterate is the identity (finite-order Moebius): every point is
        // periodic and no finite listing exists.
        return Err(DynamicsError::IdentityMap);
    }
    let displacement = displacement.truncate_leading(LEADING_CANCEL_EPSILON);
    let degree = displacement.degree().expect("displacement is nonzero");

    let mut candidates: Vec<SpherePoint> = Vec::new();
    if degree < iterate.degree() + 1 {
        candidates.push(SpherePoint::Infinity);
    }
    for (root, _multiplicity) in
        fatou_core::poly_roots(&displacement, &RootFindConfig::default())?
    {
        candidates.push(SpherePoint::from_value(root));
    }

    // Drop points whose exact period is a proper divisor of n.
    let divisors: Vec<u32> = (1..n).filter(|m| n.is_multiple_of(*m)).collect();
    candidates.retain(|&point| {
        !divisors
            .iter()
            .any(|&m| chordal_distance(apply_iterated(map, point, m), point) <= tol)
    });
    order::dedup_within(&mut candidates, tol.min(1e-7));
    candidates.sort_by(order::compare);

    // Group the survivors into cycles by following the map.
    let match_tol = tol.max(1e-7);
    let mut used = vec![false; candidates.len()];
    let mut orbits = Vec::new();
    for start in 0..candidates.len() {
        if used[start] {
            continue;
        }
        let mut cycle = vec![candidates[start]];
        used[start] = true;
        let mut current = candidates[start];
        let mut closed = false;
        for _step in 1..=n {
            let image = map.eval(current);
            if chordal_distance(image, candidates[start]) <= match_tol {
                closed = true;
                break;
            }
            let next = match nearest_unused(&candidates, &used, image, match_tol) {
                Some(j) => j,
                None => break,
            };
            used[next] = true;
            cycle.push(candidates[next]);
            current = candidates[next];
        }
        if !closed || cycle.len() != n as usize {
            return Err(DynamicsError::Inconsistent {
                context: "periodic point grouping did not close into a cycle of the requested period",
                defect: cycle.len() as f64,
            });
        }
        let multiplier = iterate_multiplier(&iterate, &cycle);
        let class = classify(multiplier, &ClassifyConfig::default());
        orbits.push(PeriodicOrbit {
            period: n as usize,
            points: canonical_rotation(cycle),
            multiplier,
            class,
        });
    }

    orbits.sort_by(|a, b| order::compare(&a.points[0], &b.points[0]));
    Ok(orbits)
}

/// Apply the map `m` times pointwise.
fn apply_iterated(map: &RationalMap, point: SpherePoint, m: u32) -> SpherePoint {
    let mut z = point;
    for _ in 0..m {
        z = map.eval(z);
    }
    z
}

fn nearest_unused(
    candidates: &[SpherePoint],
    used: &[bool],
    target: SpherePoint,
    tol: f64,
) -> Option<usize> {
    let mut best: Option<(usize, f64)> = None;
    for (j, &candidate) in candidates.iter().enumerate() {
        if used[j] {
            continue;
        }
        let dist = chordal_distance(candidate, target);
        if dist <= tol && best.is_none_or(|(_, d)| dist < d) {
            best = Some((j, dist));
        }
    }
    best.map(|(j, _)| j)
}

/// Multiplier of a cycle from the explicit iterate: its derivative at a
/// finite cycle point, or in the `1/z` chart when the cycle is `{infinity}`.
fn iterate_multiplier(iterate: &RationalMap, cycle: &[SpherePoint]) -> Complex64 {
    for point in cycle {
        if let SpherePoint::Finite(z) = point {
            return finite_derivative(&iterate.derivative(), *z);
        }
    }
    multiplier_at_infinity(iterate)
}

/// Multiplier of a cycle by the chain rule: the product of the map's
/// derivative over the cycle points. Cycles passing through infinity (or a
/// point where the derivative overflows) are first moved by a Moebius
/// transformation, under which the multiplier is invariant.
pub(crate) fn chain_rule_multiplier(map: &RationalMap, points: &[SpherePoint]) -> Complex64 {
    if let Some(product) = finite_chain_product(map, points) {
        return product;
    }
    // Conjugate so the cycle avoids infinity, then multiply there.
    let anchors = [
        Complex64::new(0.37, 0.41),
        Complex64::new(-1.3, 0.7),
        Complex64::new(2.1, -1.9),
    ];
    for anchor in anchors {
        let far_enough = points.iter().all(|p| {
            chordal_distance(*p, SpherePoint::from_value(anchor)) > 1e-6
        });
        if !far_enough {
            continue;
        }
        let moebius = Mobius::new(
            Complex64::new(0.0, 0.0),
            Complex64::new(1.0, 0.0),
            Complex64::new(1.0, 0.0),
            -anchor,
        )
        .expect("anchor inversion is nondegenerate");
        let conjugated = map.conjugate(&moebius);
        let moved: Vec<SpherePoint> = points.iter().map(|p| moebius.apply(*p)).collect();
        if let Some(product) = finite_chain_product(&conjugated, &moved) {
            return product;
        }
    }
    Complex64::new(f64::NAN, f64::NAN)
}

/// Chain-rule product when every factor stays finite; `None` otherwise.
fn finite_chain_product(map: &RationalMap, points: &[SpherePoint]) -> Option<Complex64> {
    let derivative = map.derivative();
    let mut product = Complex64::new(1.0, 0.0);
    for point in points {
        let z = point.as_complex()?;
        match derivative.eval_complex(z) {
            SpherePoint::Finite(value) => product *= value,
            SpherePoint::Infinity => return None,
        }
    }
    product.is_finite().then_some(product)
}

/// Rotate a cycle so the smallest point (deterministic order) leads while
/// preserving the forward cyclic order.
pub(crate) fn canonical_rotation(points: Vec<SpherePoint>) -> Vec<SpherePoint> {
    if points.is_empty() {
        return points;
    }
    let lead = (0..points.len())
        .min_by(|&i, &j| order::compare(&points[i], &points[j]))
        .expect("cycle is nonempty");
    let mut rotated = Vec::with_capacity(points.len());
    rotated.extend_from_slice(&points[lead..]);
    rotated.extend_from_slice(&points[..lead]);
    rotated
}
