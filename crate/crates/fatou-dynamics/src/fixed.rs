//! Fixed points of rational maps: location, multiplier, classification.

use crate::classify::{classify, Classification, ClassifyConfig};
use crate::error::DynamicsError;
use fatou_core::{
    chordal_distance, Complex64, Mobius, Polynomial, RationalMap, RootFindConfig, SpherePoint,
};

/// Relative threshold below which leading coefficients of the fixed-point
/// polynomial are treated as cancelled. Cancellation at the top is exactly
/// what transfers fixed-point multiplicity to infinity, so this cut decides
/// between "multiple fixed point at infinity" and "simple fixed point at
/// astronomically large modulus"; the two are within `tol` of each other on
/// the sphere either way.
const LEADING_CANCEL_EPSILON: f64 = 1e-12;

/// A fixed point of a rational map together with its local data.
#[derive(Debug, Clone, PartialEq)]
pub struct FixedPointRecord {
    /// Where the fixed point sits on the sphere.
    pub location: SpherePoint,
    /// Derivative of the map at the point, computed in a chart where the
    /// point is finite.
    pub multiplier: Complex64,
    /// Algebraic multiplicity as a root of the fixed-point equation (>= 1).
    pub multiplicity: usize,
    /// Dynamical type derived from the multiplier.
    pub class: Classification,
}

/// Compute all fixed points of `map`, counted with multiplicity.
///
/// The finite fixed points are the roots of `P(z) - z Q(z)`; infinity is
/// fixed exactly when `deg P > deg Q` and absorbs whatever multiplicity the
/// degree of that polynomial drops below `deg(map) + 1`. The multiplicities
/// over the sphere always sum to `deg(map) + 1`.
///
/// Each record's location satisfies the chordal bound
/// `sigma(R(z), z) <= tol`; a root that fails this check aborts the call
/// with an error rather than silently producing a bad record.
///
/// The identity map has every point fixed and is rejected with
/// [`DynamicsError::IdentityMap`].
pub fn fixed_points(
    map: &RationalMap,
    tol: f64,
) -> Result<Vec<FixedPointRecord>, DynamicsError> {
    let displacement = fixed_point_polynomial(map);
    if displacement.is_zero() {
        return Err(DynamicsError::IdentityMap);
    }
    let displacement = displacement.truncate_leading(LEADING_CANCEL_EPSILON);
    let degree = displacement
        .degree()
        .expect("displacement polynomial is nonzero");

    let classify_config = ClassifyConfig::default();
    let derivative = map.derivative();
    let mut records = Vec::new();

    let target_total = map.degree() + 1;
    let infinite_multiplicity = target_total - degree;
    if infinite_multiplicity > 0 {
        let multiplier = multiplier_at_infinity(map);
        records.push(FixedPointRecord {
            location: SpherePoint::Infinity,
            multiplier,
            multiplicity: infinite_multiplicity,
            class: classify(multiplier, &classify_config),
        });
    }

    for (root, multiplicity) in fatou_core::poly_roots(&displacement, &RootFindConfig::default())? {
        let location = SpherePoint::from_value(root);
        let defect = map.eval(location).chordal(&location);
        if defect > tol {
            return Err(DynamicsError::Inconsistent {
                context: "computed fixed point does not map to itself",
                defect,
            });
        }
        let multiplier = finite_derivative(&derivative, root);
        records.push(FixedPointRecord {
            location,
            multiplier,
            multiplicity,
            class: classify(multiplier, &classify_config),
        });
    }

    Ok(records)
}

/// Multiplier of `map` at a fixed point `point`.
///
/// At a finite fixed point this is the ordinary derivative. At infinity the
/// map is conjugated by the chart inversion `z -> 1/z` and differentiated at
/// the origin, so the result is the derivative of the map in coordinates
/// where the point is finite. Returns an error if `point` is not fixed to
/// within `tol` in the chordal metric.
pub fn multiplier(
    map: &RationalMap,
    point: SpherePoint,
    tol: f64,
) -> Result<Complex64, DynamicsError> {
    let defect = map.eval(point).chordal(&point);
    if defect > tol {
        return Err(DynamicsError::NotFixed { point, defect });
    }
    match point {
        SpherePoint::Finite(z) => Ok(finite_derivative(&map.derivative(), z)),
        SpherePoint::Infinity => Ok(multiplier_at_infinity(map)),
    }
}

/// The polynomial `P(z) - z Q(z)` whose roots are the finite fixed points.
pub(crate) fn fixed_point_polynomial(map: &RationalMap) -> Polynomial {
    let mut shifted = vec![Complex64::new(0.0, 0.0)];
    shifted.extend_from_slice(map.den().coeffs());
    map.num() - &Polynomial::new(shifted)
}

/// Derivative of the map in the `w = 1/z` chart, evaluated at the origin.
pub(crate) fn multiplier_at_infinity(map: &RationalMap) -> Complex64 {
    let inversion = Mobius::new(
        Complex64::new(0.0, 0.0),
        Complex64::new(1.0, 0.0),
        Complex64::new(1.0, 0.0),
        Complex64::new(0.0, 0.0),
    )
    .expect("inversion is nondegenerate");
    let chart_map = map.conjugate(&inversion);
    finite_derivative(&chart_map.derivative(), Complex64::new(0.0, 0.0))
}

/// Evaluate a derivative map at a finite point, insisting on a finite value.
/// Fixed points are never poles, so a pole here means the inputs were
/// already inconsistent; fold that into an honest non-finite number rather
/// than panicking.
pub(crate) fn finite_derivative(derivative: &RationalMap, z: Complex64) -> Complex64 {
    match derivative.eval_complex(z) {
        SpherePoint::Finite(value) => value,
        SpherePoint::Infinity => Complex64::new(f64::INFINITY, 0.0),
    }
}

/// Convenience: the record closest to `point` on the sphere, if any.
pub fn nearest_record(
    records: &[FixedPointRecord],
    point: SpherePoint,
) -> Option<&FixedPointRecord> {
    records.iter().min_by(|a, b| {
        let da = chordal_distance(a.location, point);
        let db = chordal_distance(b.location, point);
        da.partial_cmp(&db).expect("chordal distances are finite")
    })
}
