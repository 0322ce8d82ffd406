//! Julia set sampling by backward iteration.

use crate::JuliaError;
use fatou_core::{Complex64, RationalMap, SpherePoint};
use fatou_dynamics::{exceptional_points, preimages};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// Tolerance for recognizing the seed as an exceptional point, and for the
/// exceptional-set computation backing that check.
const EXCEPTIONAL_TOL: f64 = 1e-9;

/// How the points of a [`PointCloud`] were produced, kept alongside the
/// samples so downstream reports can state their provenance.
#[derive(Clone, Debug)]
pub struct CloudSource {
    /// Display form of the sampled map.
    pub map: String,
    /// Starting point of the backward orbit.
    pub seed: SpherePoint,
    /// Stream seed of the deterministic random generator.
    pub rng_seed: u64,
    /// Number of leading pulls discarded before sampling began.
    pub burn_in: usize,
}

/// A finite sample of points accumulating on the Julia set.
#[derive(Clone, Debug)]
pub struct PointCloud {
    /// Finite sample points, in the order they were drawn.
    pub points: Vec<Complex64>,
    /// Provenance of the sample.
    pub source: CloudSource,
}

/// Samples the Julia set of `map` by iterating a randomly chosen inverse
/// branch backward from `seed`.
///
/// Each pull solves `map(w) = current` and picks one solution with
/// probability proportional to its multiplicity, so the chain follows the
/// balanced backward random walk whose states equidistribute toward the
/// Julia set. The first `burn_in` pulls are discarded; afterwards every
/// finite state is recorded until `n_points` samples are collected (states
/// at infinity are skipped but the chain continues through them).
///
/// Requires degree at least 2, and rejects seeds in the exceptional set:
/// their backward orbits stay inside a one- or two-point set forever. The
/// generator is seeded from `rng_seed` alone, so equal arguments produce
/// bit-for-bit equal clouds.
pub fn julia_inverse_iteration(
    map: &RationalMap,
    seed: SpherePoint,
    n_points: usize,
    burn_in: usize,
    rng_seed: u64,
) -> Result<PointCloud, JuliaError> {
    let exceptional = exceptional_points(map, EXCEPTIONAL_TOL)?;
    if exceptional.iter().any(|p| p.chordal(&seed) <= EXCEPTIONAL_TOL) {
        return Err(JuliaError::ExceptionalSeed { seed, exceptional });
    }

    let mut rng = ChaCha8Rng::seed_from_u64(rng_seed);
    let degree = map.degree();
    let mut current = seed;
    let mut points = Vec::with_capacity(n_points);
    let mut pulled = 0usize;
    // Generous budget: almost every pull from a non-exceptional seed yields
    // a finite point, so hitting this cap signals a genuinely stuck chain
    // rather than bad luck.
    let max_pulls = burn_in + n_points.saturating_mul(4) + 100;

    while points.len() < n_points {
        if pulled >= max_pulls {
            return Err(JuliaError::ChainStalled {
                pulled,
                collected: points.len(),
                requested: n_points,
            });
        }
        let branches = preimages(map, current)?;
        let mut ticket = rng.gen_range(0..degree);
        current = branches
            .iter()
            .find(|(_, multiplicity)| {
                if ticket < *multiplicity {
                    true
                } else {
                    ticket -= multiplicity;
                    false
                }
            })
            .map(|(point, _)| *point)
            .expect("preimage multiplicities sum to the degree");
        pulled += 1;
        if pulled > burn_in {
            if let SpherePoint::Finite(z) = current {
                points.push(z);
            }
        }
    }

    Ok(PointCloud {
        points,
        source: CloudSource {
            map: map.to_string(),
            seed,
            rng_seed,
            burn_in,
        },
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use fatou_core::parse_map;

    fn map(text: &str) -> RationalMap {
        parse_map(text).expect("example map parses")
    }

    #[test]
    fn squaring_map_cloud_lies_on_the_unit_circle() {
        let m = map("z^2");
        let cloud = julia_inverse_iteration(
            &m,
            SpherePoint::finite(1.0, 0.0),
            500,
            20,
            7,
        )
        .expect("chain runs");
        assert_eq!(cloud.points.len(), 500);
        for z in &cloud.points {
            assert!(
                (z.norm() - 1.0).abs() < 1e-6,
                "sample {z} off the unit circle"
            );
        }
    }

    #[test]
    fn off_circle_seed_accumulates_onto_the_circle() {
        let m = map("z^2");
        let cloud = julia_inverse_iteration(
            &m,
            SpherePoint::finite(3.0, 0.5),
            200,
            40,
            11,
        )
        .expect("chain runs");
        for z in &cloud.points {
            assert!(
                (z.norm() - 1.0).abs() < 1e-6,
                "post burn-in sample {z} off the unit circle"
            );
        }
    }

    #[test]
    fn exceptional_seed_is_rejected_with_the_set_in_the_error() {
        let m = map("z^2");
        let err = julia_inverse_iteration(&m, SpherePoint::ZERO, 10, 0, 1)
            .expect_err("zero is exceptional for z^2");
        match err {
            JuliaError::ExceptionalSeed { exceptional, .. } => {
                assert_eq!(exceptional.len(), 2);
            }
            other => panic!("unexpected error {other:?}"),
        }
        let err =
            julia_inverse_iteration(&m, SpherePoint::Infinity, 10, 0, 1)
                .expect_err("infinity is exceptional for z^2");
        assert!(matches!(err, JuliaError::ExceptionalSeed { .. }));
    }

    #[test]
    fn equal_arguments_reproduce_the_cloud_bit_for_bit() {
        let m = map("z^2 - 1");
        let a = julia_inverse_iteration(
            &m,
            SpherePoint::finite(0.3, 0.1),
            300,
            25,
            42,
        )
        .expect("chain runs");
        let b = julia_inverse_iteration(
            &m,
            SpherePoint::finite(0.3, 0.1),
            300,
            25,
            42,
        )
        .expect("chain runs");
        assert_eq!(a.points.len(), b.points.len());
        for (x, y) in a.points.iter().zip(&b.points) {
            assert_eq!(x.re.to_bits(), y.re.to_bits());
            assert_eq!(x.im.to_bits(), y.im.to_bits());
        }
        let c = julia_inverse_iteration(
            &m,
            SpherePoint::finite(0.3, 0.1),
            300,
            25,
            43,
        )
        .expect("chain runs");
        assert!(
            a.points.iter().zip(&c.points).any(|(x, y)| x != y),
            "different stream seeds should explore different branches"
        );
    }

    #[test]
    fn burn_in_discards_the_leading_transient() {
        let m = map("z^2");
        // Without burn-in the distant seed itself would contaminate the
        // sample; with burn-in every kept point is already near the circle.
        let cloud = julia_inverse_iteration(
            &m,
            SpherePoint::finite(100.0, 0.0),
            50,
            30,
            5,
        )
        .expect("chain runs");
        for z in &cloud.points {
            assert!((z.norm() - 1.0).abs() < 1e-3, "sample {z} too far out");
        }
    }

    #[test]
    fn low_degree_maps_are_rejected() {
        let m = map("(2z + 1) / (z + 2)");
        let err = julia_inverse_iteration(&m, SpherePoint::ZERO, 10, 0, 1)
            .expect_err("Mobius maps have no Julia sampling");
        assert!(matches!(err, JuliaError::Dynamics(_)));
    }
}
