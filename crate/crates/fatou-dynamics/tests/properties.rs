//! Structural invariants checked over seeded families of random maps:
//! fixed-point and critical-point counts, conjugation equivariance, the
//! chain rule for cycle multipliers, and minimality of reported periods.

use fatou_core::{Complex64, Mobius, Polynomial, RationalMap, SpherePoint};
use fatou_dynamics::{
    classify, critical_points, fixed_points, nearest_record, periodic_points, Classification,
    ClassifyConfig,
};
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

const TOL: f64 = 1e-6;

fn random_coefficient(rng: &mut ChaCha8Rng) -> Complex64 {
    Complex64::new(rng.gen_range(-2.0..2.0), rng.gen_range(-2.0..2.0))
}

fn random_polynomial(rng: &mut ChaCha8Rng, degree: usize) -> Polynomial {
    let mut coeffs: Vec<Complex64> = (0..=degree).map(|_| random_coefficient(rng)).collect();
    // Keep the leading coefficient away from zero so the degree is exact.
    while coeffs[degree].norm() < 0.5 {
        coeffs[degree] = random_coefficient(rng);
    }
    Polynomial::new(coeffs)
}

/// A random rational map of the exact degree drawn from 2..=5.
fn random_map(rng: &mut ChaCha8Rng) -> RationalMap {
    loop {
        let degree = rng.gen_range(2..=5usize);
        let den_degree = rng.gen_range(0..=degree);
        let num = random_polynomial(rng, degree);
        let den = random_polynomial(rng, den_degree);
        if let Ok(map) = RationalMap::new(num, den) {
            if map.degree() == degree {
                return map;
            }
        }
    }
}

fn random_mobius(rng: &mut ChaCha8Rng) -> Mobius {
    loop {
        let a = random_coefficient(rng);
        let b = random_coefficient(rng);
        let c = random_coefficient(rng);
        let d = random_coefficient(rng);
        if (a * d - b * c).norm() < 0.5 {
            continue;
        }
        if let Ok(m) = Mobius::new(a, b, c, d) {
            return m;
        }
    }
}

#[test]
fn fixed_point_multiplicities_sum_to_degree_plus_one() {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    for _ in 0..200 {
        let map = random_map(&mut rng);
        let records = fixed_points(&map, TOL).expect("random maps have fixed points");
        let total: usize = records.iter().map(|r| r.multiplicity).sum();
        assert_eq!(total, map.degree() + 1, "count failed for {map}");
    }
}

#[test]
fn critical_multiplicities_sum_to_two_degree_minus_two() {
    let mut rng = ChaCha8Rng::seed_from_u64(23);
    for _ in 0..200 {
        let map = random_map(&mut rng);
        let crits = critical_points(&map).expect("critical points");
        let total: usize = crits.iter().map(|(_, k)| k).sum();
        assert_eq!(total, 2 * map.degree() - 2, "count failed for {map}");
    }
}

#[test]
fn conjugation_transports_fixed_points_and_multipliers() {
    let mut rng = ChaCha8Rng::seed_from_u64(37);
    for _ in 0..60 {
        let map = random_map(&mut rng);
        let mobius = random_mobius(&mut rng);
        let conjugated = map.conjugate(&mobius);

        let records = fixed_points(&map, TOL).expect("fixed points");
        let transported = fixed_points(&conjugated, TOL).expect("conjugated fixed points");
        for record in &records {
            let image = mobius.apply(record.location);
            let partner =
                nearest_record(&transported, image).expect("conjugated map has fixed points");
            assert!(
                partner.location.chordal(&image) < 1e-6,
                "no fixed point of {conjugated} near the image of {}",
                record.location
            );
            // Multipliers are conjugation invariants. Agreement is limited
            // by the conditioning of the conjugated root-finding problem,
            // not by machine precision, hence the loose band.
            assert!(
                (partner.multiplier - record.multiplier).norm()
                    <= 1e-3 * (1.0 + record.multiplier.norm()),
                "multiplier {} transported to {}",
                record.multiplier,
                partner.multiplier
            );
        }
    }
}

#[test]
fn cycle_multipliers_obey_the_chain_rule() {
    let mut rng = ChaCha8Rng::seed_from_u64(53);
    let derivative_of = |map: &RationalMap, z: Complex64| -> SpherePoint {
        map.derivative().eval_complex(z)
    };
    let mut verified = 0usize;
    for _ in 0..40 {
        let map = random_map(&mut rng);
        let orbits = match periodic_points(&map, 2, TOL) {
            Ok(orbits) => orbits,
            Err(_) => continue,
        };
        for orbit in &orbits {
            // Only exercise cycles staying finite with finite derivatives:
            // those are exactly the ones where the naive product applies.
            let mut product = Complex64::new(1.0, 0.0);
            let mut usable = true;
            for point in &orbit.points {
                let z = match point.as_complex() {
                    Some(z) => z,
                    None => {
                        usable = false;
                        break;
                    }
                };
                match derivative_of(&map, z) {
                    SpherePoint::Finite(d) if d.norm() < 1e6 => product *= d,
                    _ => {
                        usable = false;
                        break;
                    }
                }
            }
            if !usable {
                continue;
            }
            // The stored multiplier differentiates the second iterate while
            // the product differentiates the map at each cycle point; the
            // two agree to the accuracy the cycle points are located, which
            // for random quintic iterates is conditioning-limited.
            assert!(
                (product - orbit.multiplier).norm() <= 1e-2 * (1.0 + product.norm()),
                "chain rule product {product} disagrees with stored multiplier {} for {map}",
                orbit.multiplier
            );
            verified += 1;
        }
    }
    assert!(verified > 20, "too few finite cycles exercised: {verified}");
}

#[test]
fn reported_periodic_orbits_have_minimal_period() {
    let mut rng = ChaCha8Rng::seed_from_u64(71);
    for _ in 0..40 {
        let map = random_map(&mut rng);
        let fixed = match fixed_points(&map, TOL) {
            Ok(records) => records,
            Err(_) => continue,
        };
        let orbits = match periodic_points(&map, 2, TOL) {
            Ok(orbits) => orbits,
            Err(_) => continue,
        };
        for orbit in &orbits {
            assert_eq!(orbit.period, 2);
            assert_eq!(orbit.points.len(), 2);
            // The two cycle points are genuinely distinct...
            assert!(orbit.points[0].chordal(&orbit.points[1]) > TOL);
            // ...and neither is one of the fixed points.
            for point in &orbit.points {
                if let Some(record) = nearest_record(&fixed, *point) {
                    assert!(
                        record.location.chordal(point) > TOL,
                        "period-2 point {point} coincides with a fixed point of {map}"
                    );
                }
            }
        }
    }
}

#[test]
fn classification_is_stable_away_from_band_boundaries() {
    let mut rng = ChaCha8Rng::seed_from_u64(97);
    let config = ClassifyConfig::default();
    for _ in 0..500 {
        // Moduli kept clear of 0 and 1, where the bands change.
        let modulus = if rng.gen_bool(0.5) {
            rng.gen_range(0.05..0.9)
        } else {
            rng.gen_range(1.1..3.0)
        };
        let angle = rng.gen_range(0.0..std::f64::consts::TAU);
        let lambda = Complex64::from_polar(modulus, angle);
        let base = classify(lambda, &config);
        assert!(matches!(
            base,
            Classification::Attracting | Classification::Repelling
        ));
        for eps in [1e-10, -1e-10] {
            let nudged = classify(lambda * (1.0 + eps), &config);
            assert_eq!(base, nudged, "classification moved at modulus {modulus}");
        }
    }
}
