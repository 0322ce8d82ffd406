//! Discovery of attracting cycles up to a period bound.

use fatou_core::RationalMap;
use fatou_dynamics::{periodic_points, DynamicsError, PeriodicOrbit};

/// Clustering tolerance used when solving for periodic orbits.
const ORBIT_TOL: f64 = 1e-9;

/// All attracting and superattracting cycles of `map` with period at most
/// `n_max`, in increasing period order.
///
/// Infinity is treated like any other point: a polynomial's superattracting
/// fixed point at infinity appears in the period-1 sweep. Maps without
/// attracting cycles in range (for instance maps whose Julia set is the
/// whole sphere) yield an empty list. Requires degree at least 2.
pub fn find_attractors(
    map: &RationalMap,
    n_max: u32,
) -> Result<Vec<PeriodicOrbit>, DynamicsError> {
    if map.degree() < 2 {
        return Err(DynamicsError::DegreeTooLow {
            required: 2,
            actual: map.degree(),
        });
    }
    let mut found = Vec::new();
    for period in 1..=n_max {
        for orbit in periodic_points(map, period, ORBIT_TOL)? {
            if orbit.class.is_attracting() {
                found.push(orbit);
            }
        }
    }
    Ok(found)
}
