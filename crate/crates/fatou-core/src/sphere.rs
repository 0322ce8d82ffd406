//! Points of the Riemann sphere and the chordal metric.

use num_complex::Complex64;
use std::fmt;

/// A point of the extended complex plane `C ∪ {∞}`.
///
/// The point at infinity is a first-class variant rather than a large float,
/// so evaluation and multiplier computations can switch to the `w = 1/z`
/// chart exactly.
#[derive(Clone, Copy, Debug, PartialEq)]
pub enum SpherePoint {
    Finite(Complex64),
    Infinity,
}

impl SpherePoint {
    /// The origin.
    pub const ZERO: SpherePoint = SpherePoint::Finite(Complex64::new(0.0, 0.0));

    /// A finite point from real and imaginary parts.
    ///
    /// Finite points must have finite, non-NaN components; use
    /// [`SpherePoint::from_value`] to classify the result of a computation
    /// that may have overflowed.
    pub fn finite(re: f64, im: f64) -> SpherePoint {
        let z = Complex64::new(re, im);
        assert!(
            z.re.is_finite() && z.im.is_finite(),
            "finite sphere point requires finite components, got {z}"
        );
        SpherePoint::Finite(z)
    }

    /// Classifies a computed complex value: overflowed or otherwise
    /// non-finite values are folded to the point at infinity.
    pub fn from_value(z: Complex64) -> SpherePoint {
        if z.re.is_finite() && z.im.is_finite() {
            SpherePoint::Finite(z)
        } else {
            SpherePoint::Infinity
        }
    }

    pub fn is_infinity(&self) -> bool {
        matches!(self, SpherePoint::Infinity)
    }

    /// The finite value, if there is one.
    pub fn as_complex(&self) -> Option<Complex64> {
        match self {
            SpherePoint::Finite(z) => Some(*z),
            SpherePoint::Infinity => None,
        }
    }

    /// Chordal distance to another point; see [`chordal_distance`].
    pub fn chordal(&self, other: &SpherePoint) -> f64 {
        chordal_distance(*self, *other)
    }

    /// Equality under the chordal metric at tolerance `tol`.
    pub fn approx_eq(&self, other: &SpherePoint, tol: f64) -> bool {
        self.chordal(other) <= tol
    }
}

impl From<Complex64> for SpherePoint {
    fn from(z: Complex64) -> SpherePoint {
        assert!(
            z.re.is_finite() && z.im.is_finite(),
            "finite sphere point requires finite components, got {z}"
        );
        SpherePoint::Finite(z)
    }
}

impl fmt::Display for SpherePoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SpherePoint::Finite(z) => write!(f, "{z}"),
            SpherePoint::Infinity => write!(f, "inf"),
        }
    }
}

/// The chordal metric on the sphere,
///
/// ```text
/// σ(z, w) = 2|z − w| / ((1 + |z|²)^{1/2} (1 + |w|²)^{1/2}),
/// ```
///
/// extended to infinity by its limit `σ(z, ∞) = 2 / (1 + |z|²)^{1/2}` rather
/// than by substituting a large value. The distance is symmetric, lies in
/// `[0, 2]`, and vanishes exactly on equal points. Antipodal points (such as
/// `0` and `∞`, or `1` and `−1`) realize the maximum `2`.
pub fn chordal_distance(z: SpherePoint, w: SpherePoint) -> f64 {
    // (1 + |z|²)^{1/2} computed as hypot(|z|, 1) to survive |z| near the
    // overflow threshold.
    match (z, w) {
        (SpherePoint::Infinity, SpherePoint::Infinity) => 0.0,
        (SpherePoint::Finite(z), SpherePoint::Infinity)
        | (SpherePoint::Infinity, SpherePoint::Finite(z)) => 2.0 / z.norm().hypot(1.0),
        (SpherePoint::Finite(z), SpherePoint::Finite(w)) => {
            let num = 2.0 * (z - w).norm();
            // Divide by the two factors separately so the product cannot
            // overflow before the quotient is formed.
            num / z.norm().hypot(1.0) / w.norm().hypot(1.0)
        }
    }
}
