//! Möbius transformations `z ↦ (az+b)/(cz+d)` on the Riemann sphere.
//!
//! Coefficients are normalized to determinant 1 at construction, so
//! composition and inversion stay well scaled. Nearly singular coefficient
//! matrices are rejected: a silently degenerate conjugation would corrupt
//! every downstream computation.

use crate::error::MapError;
use crate::poly::Polynomial;
use crate::rational::RationalMap;
use crate::sphere::SpherePoint;
use num_complex::Complex64;

const DEGENERACY_TOL: f64 = 1e-14;

#[derive(Clone, Copy, Debug)]
pub struct Mobius {
    a: Complex64,
    b: Complex64,
    c: Complex64,
    d: Complex64,
}

impl Mobius {
    /// Builds `(az+b)/(cz+d)`, scaled so `ad − bc = 1`.
    pub fn new(
        a: Complex64,
        b: Complex64,
        c: Complex64,
        d: Complex64,
    ) -> Result<Mobius, MapError> {
        let scale = [a, b, c, d].iter().map(|z| z.norm()).fold(0.0, f64::max);
        if scale == 0.0 || !scale.is_finite() {
            return Err(MapError::DegenerateMobius { det_norm: 0.0 });
        }
        let s = Complex64::new(1.0 / scale, 0.0);
        let (a, b, c, d) = (a * s, b * s, c * s, d * s);
        let det = a * d - b * c;
        if det.norm() < DEGENERACY_TOL {
            return Err(MapError::DegenerateMobius { det_norm: det.norm() });
        }
        let root = det.sqrt();
        Ok(Mobius { a: a / root, b: b / root, c: c / root, d: d / root })
    }

    pub fn identity() -> Mobius {
        Mobius {
            a: Complex64::new(1.0, 0.0),
            b: Complex64::new(0.0, 0.0),
            c: Complex64::new(0.0, 0.0),
            d: Complex64::new(1.0, 0.0),
        }
    }

    /// The coefficient rows `((a, b), (c, d))`.
    pub fn coefficients(&self) -> ((Complex64, Complex64), (Complex64, Complex64)) {
        ((self.a, self.b), (self.c, self.d))
    }

    pub fn apply(&self, z: SpherePoint) -> SpherePoint {
        match z {
            SpherePoint::Infinity => {
                if self.c.norm() == 0.0 {
                    SpherePoint::Infinity
                } else {
                    SpherePoint::from_value(self.a / self.c)
                }
            }
            SpherePoint::Finite(z) => {
                let den = self.c * z + self.d;
                if den.norm() == 0.0 {
                    SpherePoint::Infinity
                } else {
                    SpherePoint::from_value((self.a * z + self.b) / den)
                }
            }
        }
    }

    /// The inverse transformation `w ↦ (dw − b)/(−cw + a)`.
    pub fn inverse(&self) -> Mobius {
        // Determinant stays 1; no renormalization needed.
        Mobius { a: self.d, b: -self.b, c: -self.c, d: self.a }
    }

    /// The composition `self ∘ other` (apply `other` first).
    pub fn compose(&self, other: &Mobius) -> Mobius {
        Mobius {
            a: self.a * other.a + self.b * other.c,
            b: self.a * other.b + self.b * other.d,
            c: self.c * other.a + self.d * other.c,
            d: self.c * other.b + self.d * other.d,
        }
    }

    /// The unique Möbius transformation with `sources[i] ↦ targets[i]`.
    /// Each triple must consist of pairwise distinct points.
    pub fn through(
        sources: [SpherePoint; 3],
        targets: [SpherePoint; 3],
    ) -> Result<Mobius, MapError> {
        let to_standard_src = standard_triple(sources)?;
        let to_standard_tgt = standard_triple(targets)?;
        Ok(to_standard_tgt.inverse().compose(&to_standard_src))
    }

    /// This transformation as a degree-1 rational map.
    pub fn as_rational_map(&self) -> RationalMap {
        RationalMap::new(
            Polynomial::new(vec![self.b, self.a]),
            Polynomial::new(vec![self.d, self.c]),
        )
        .expect("a nondegenerate Möbius transformation is a degree-1 map")
    }
}

/// The cross-ratio transformation sending `(p, q, r) ↦ (0, 1, ∞)`.
fn standard_triple(points: [SpherePoint; 3]) -> Result<Mobius, MapError> {
    let [p, q, r] = points;
    if p == q || q == r || p == r {
        return Err(MapError::CoincidentPoints);
    }
    let one = Complex64::new(1.0, 0.0);
    match (p, q, r) {
        (SpherePoint::Infinity, SpherePoint::Finite(q), SpherePoint::Finite(r)) => {
            Mobius::new(Complex64::new(0.0, 0.0), q - r, one, -r)
        }
        (SpherePoint::Finite(p), SpherePoint::Infinity, SpherePoint::Finite(r)) => {
            Mobius::new(one, -p, one, -r)
        }
        (SpherePoint::Finite(p), SpherePoint::Finite(q), SpherePoint::Infinity) => {
            Mobius::new(one, -p, Complex64::new(0.0, 0.0), q - p)
        }
        (SpherePoint::Finite(p), SpherePoint::Finite(q), SpherePoint::Finite(r)) => {
            Mobius::new(q - r, -p * (q - r), q - p, -r * (q - p))
        }
        _ => unreachable!("at most one point of a distinct triple is infinite"),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    fn finite(re: f64, im: f64) -> SpherePoint {
        SpherePoint::finite(re, im)
    }

    #[test]
    fn reciprocal_swaps_zero_and_infinity() {
        let m = Mobius::new(c(0.0, 0.0), c(1.0, 0.0), c(1.0, 0.0), c(0.0, 0.0)).unwrap();
        assert_eq!(m.apply(SpherePoint::ZERO), SpherePoint::Infinity);
        assert_eq!(m.apply(SpherePoint::Infinity), SpherePoint::ZERO);
    }

    #[test]
    fn inverse_round_trips() {
        let m = Mobius::new(c(2.0, 0.0), c(1.0, 0.0), c(1.0, 0.0), c(1.0, 0.0)).unwrap();
        let inv = m.inverse();
        for k in 0..10 {
            let z = finite(0.3 * k as f64 - 1.2, 0.7 - 0.2 * k as f64);
            let back = inv.apply(m.apply(z));
            assert!(back.chordal(&z) < 1e-12, "round trip failed at {z}");
        }
    }

    #[test]
    fn through_of_matching_triples_is_identity() {
        let triple = [SpherePoint::ZERO, finite(1.0, 0.0), SpherePoint::Infinity];
        let m = Mobius::through(triple, triple).unwrap();
        for z in [finite(0.5, 0.5), finite(-3.0, 2.0), SpherePoint::Infinity] {
            assert!(m.apply(z).chordal(&z) < 1e-12);
        }
    }

    #[test]
    fn through_maps_each_source_to_its_target() {
        let sources = [finite(1.0, 0.0), finite(0.0, 2.0), finite(-1.0, -1.0)];
        let targets = [SpherePoint::ZERO, SpherePoint::Infinity, finite(1.0, 0.0)];
        let m = Mobius::through(sources, targets).unwrap();
        for (s, t) in sources.iter().zip(targets.iter()) {
            assert!(m.apply(*s).chordal(t) < 1e-12);
        }
    }

    #[test]
    fn coincident_triple_is_rejected() {
        let err = Mobius::through(
            [SpherePoint::ZERO, SpherePoint::ZERO, SpherePoint::Infinity],
            [SpherePoint::ZERO, finite(1.0, 0.0), SpherePoint::Infinity],
        )
        .unwrap_err();
        assert_eq!(err, MapError::CoincidentPoints);
    }

    #[test]
    fn singular_matrix_is_rejected() {
        let err = Mobius::new(c(1.0, 0.0), c(2.0, 0.0), c(2.0, 0.0), c(4.0, 0.0)).unwrap_err();
        assert!(matches!(err, MapError::DegenerateMobius { .. }));
    }

    #[test]
    fn composition_matches_sequential_application() {
        let m1 = Mobius::new(c(1.0, 1.0), c(0.0, 0.0), c(0.5, 0.0), c(1.0, 0.0)).unwrap();
        let m2 = Mobius::new(c(0.0, 0.0), c(1.0, 0.0), c(1.0, 0.0), c(-2.0, 0.0)).unwrap();
        let both = m1.compose(&m2);
        for z in [finite(0.1, 0.2), finite(-1.0, 3.0), finite(2.0, -2.0)] {
            let seq = m1.apply(m2.apply(z));
            assert!(both.apply(z).chordal(&seq) < 1e-12);
        }
    }
}
