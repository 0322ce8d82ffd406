//! Structural properties of the core algebra, checked over random inputs:
//! metric axioms for the chordal distance, residual bounds for the root
//! finder, idempotent reduction, and algebraic identities of composition.

use fatou_core::{
    poly_roots, Complex64, Mobius, Polynomial, RationalMap, RootFindConfig, SpherePoint,
};
use proptest::prelude::*;
use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn sphere_point() -> impl Strategy<Value = SpherePoint> {
    prop_oneof![
        19 => (-10.0..10.0f64, -10.0..10.0f64)
            .prop_map(|(re, im)| SpherePoint::finite(re, im)),
        1 => Just(SpherePoint::Infinity),
    ]
}

/// Stereographic embedding onto the unit sphere in R³, the independent
/// geometry used to cross-check the chordal metric.
fn embed(p: &SpherePoint) -> [f64; 3] {
    match p.as_complex() {
        None => [0.0, 0.0, 1.0],
        Some(z) => {
            let d = 1.0 + z.norm_sqr();
            [2.0 * z.re / d, 2.0 * z.im / d, (z.norm_sqr() - 1.0) / d]
        }
    }
}

/// Great-circle (spherical) distance from the embedding.
fn spherical(p: &SpherePoint, q: &SpherePoint) -> f64 {
    let (a, b) = (embed(p), embed(q));
    let dot: f64 = a.iter().zip(b.iter()).map(|(x, y)| x * y).sum();
    dot.clamp(-1.0, 1.0).acos()
}

proptest! {
    #[test]
    fn chordal_is_bounded_and_symmetric(a in sphere_point(), b in sphere_point()) {
        let d = a.chordal(&b);
        prop_assert!((0.0..=2.0 + 1e-15).contains(&d));
        prop_assert!((d - b.chordal(&a)).abs() < 1e-15);
    }

    #[test]
    fn chordal_satisfies_triangle_inequality(
        a in sphere_point(), b in sphere_point(), c in sphere_point()
    ) {
        prop_assert!(a.chordal(&c) <= a.chordal(&b) + b.chordal(&c) + 1e-12);
    }

    #[test]
    fn chordal_is_pinched_by_spherical_distance(a in sphere_point(), b in sphere_point()) {
        // 2/π · spherical ≤ chordal ≤ spherical, from chordal = 2 sin(spherical/2).
        let sigma = a.chordal(&b);
        let sigma0 = spherical(&a, &b);
        prop_assert!(sigma <= sigma0 + 1e-9);
        prop_assert!(sigma >= 2.0 / std::f64::consts::PI * sigma0 - 1e-9);
    }
}

#[test]
fn root_finder_residuals_over_random_corpus() {
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed_0001);
    let cfg = RootFindConfig::default();
    for trial in 0..1000 {
        let degree = 1 + trial % 8;
        let coeffs: Vec<Complex64> = (0..=degree)
            .map(|_| Complex64::new(rng.gen_range(-1.0..1.0), rng.gen_range(-1.0..1.0)))
            .collect();
        let p = Polynomial::new(coeffs);
        let roots = poly_roots(&p, &cfg).expect("random polynomial roots");
        let total: usize = roots.iter().map(|&(_, m)| m).sum();
        assert_eq!(total, degree, "multiplicity total for trial {trial}");
        for &(z, _) in &roots {
            // The residual bound is relative to the coefficient magnitudes
            // at the root's modulus — the scale evaluation round-off itself
            // reaches, and the only scale a bound can hold at for roots of
            // large modulus.
            let scale: f64 = p
                .coeffs()
                .iter()
                .enumerate()
                .map(|(k, c)| c.norm() * z.norm().powi(k as i32))
                .sum();
            assert!(
                p.eval(z).norm() <= cfg.tol * scale.max(p.max_coeff_norm()),
                "trial {trial}: residual {} at root {z}",
                p.eval(z).norm()
            );
        }
    }
}

#[test]
fn reduction_is_idempotent() {
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed_0002);
    for _ in 0..50 {
        let rand_poly = |rng: &mut ChaCha8Rng, deg: usize| {
            Polynomial::new(
                (0..=deg)
                    .map(|_| Complex64::new(rng.gen_range(-1.0..1.0), rng.gen_range(-1.0..1.0)))
                    .collect(),
            )
        };
        // Inject a common factor so reduction has real work to do.
        let shared = rand_poly(&mut rng, 1);
        let num = &rand_poly(&mut rng, 2) * &shared;
        let den = &rand_poly(&mut rng, 1) * &shared;
        let once = RationalMap::new(num, den).unwrap();
        let twice = RationalMap::new(once.num().clone(), once.den().clone()).unwrap();
        assert_eq!(once, twice, "\nonce:  {once:?}\ntwice: {twice:?}");
    }
}

#[test]
fn conjugation_preserves_degree() {
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed_0003);
    let random_complex =
        |rng: &mut ChaCha8Rng| Complex64::new(rng.gen_range(-1.0..1.0), rng.gen_range(-1.0..1.0));
    for _ in 0..50 {
        let num = Polynomial::new((0..=3).map(|_| random_complex(&mut rng)).collect());
        let den = Polynomial::new((0..=2).map(|_| random_complex(&mut rng)).collect());
        let map = RationalMap::new(num, den).unwrap();
        let mobius = Mobius::new(
            random_complex(&mut rng),
            random_complex(&mut rng),
            random_complex(&mut rng),
            random_complex(&mut rng),
        )
        .unwrap();
        assert_eq!(map.conjugate(&mobius).degree(), map.degree());
    }
}

#[test]
fn iteration_is_a_semigroup() {
    for text in ["z^2 - 1", "(1 + z^2)/(2z)", "z^2 + (0,0.25)"] {
        let map: RationalMap = text.parse().unwrap();
        for (m, n) in [(2u32, 1u32), (2, 2), (3, 1)] {
            let left = map.iterate(m + n).unwrap();
            let right = map.iterate(m).unwrap().compose(&map.iterate(n).unwrap()).unwrap();
            assert!(
                left.approx_eq(&right, 1e-8),
                "{text}: iterate({}) differs from iterate({m})∘iterate({n})",
                m + n
            );
        }
    }
}
