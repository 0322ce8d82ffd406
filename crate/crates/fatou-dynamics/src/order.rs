//! Deterministic ordering and deduplication helpers for sphere points.
//!
//! Several operations return sets of points; sorting them with infinity
//! first and finite points in lexicographic (re, im) order makes outputs
//! reproducible run to run.

use fatou_core::{chordal_distance, SpherePoint};

/// Sort key: infinity sorts before every finite point, finite points sort by
/// real part then imaginary part.
pub(crate) fn sort_key(point: &SpherePoint) -> (u8, f64, f64) {
    match point {
        SpherePoint::Infinity => (0, 0.0, 0.0),
        SpherePoint::Finite(z) => (1, z.re, z.im),
    }
}

/// Compare two points by [`sort_key`]. Coordinates are always finite, so the
/// partial order is total here.
pub(crate) fn compare(a: &SpherePoint, b: &SpherePoint) -> std::cmp::Ordering {
    let ka = sort_key(a);
    let kb = sort_key(b);
    ka.partial_cmp(&kb).expect("sort keys are finite")
}

/// Remove points that lie within `tol` (chordal) of an earlier entry.
/// Keeps the first representative and preserves the incoming order.
pub(crate) fn dedup_within(points: &mut Vec<SpherePoint>, tol: f64) {
    let mut kept: Vec<SpherePoint> = Vec::with_capacity(points.len());
    for &p in points.iter() {
        if !kept.iter().any(|q| chordal_distance(*q, p) <= tol) {
            kept.push(p);
        }
    }
    *points = kept;
}
