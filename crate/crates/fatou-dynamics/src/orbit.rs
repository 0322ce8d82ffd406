//! Forward orbits with cycle detection.
//!
//! Two kinds of cycle are told apart. An orbit that lands *exactly* (to the
//! last bit) on an earlier sample is eventually periodic: this is how exact
//! preperiodic seeds behave in floating point, e.g. `1 -> 0 -> -1 -> 0`
//! under `z^2 - 1`. An orbit that approaches a cycle without landing on it
//! is reported as converging to that cycle: tolerance-based detection fires
//! long before rounding could collapse the samples onto exact values, so
//! the two outcomes stay distinct in practice.

use crate::classify::{classify, ClassifyConfig};
use crate::periodic::{canonical_rotation, chain_rule_multiplier, PeriodicOrbit};
use fatou_core::{chordal_distance, Complex64, RationalMap, SpherePoint};
use std::collections::HashMap;

/// How an orbit computation ended.
#[derive(Debug, Clone, PartialEq)]
pub enum OrbitStatus {
    /// The orbit approaches `orbit` without landing on it exactly; `after`
    /// is the first sample index within tolerance of the cycle.
    ConvergedToCycle { orbit: PeriodicOrbit, after: usize },
    /// The orbit landed exactly on a cycle: `samples[preperiod + period] ==
    /// samples[preperiod]` bit for bit.
    EventuallyPeriodic { preperiod: usize, period: usize },
    /// No cycle was detected within the iteration budget.
    MaxIterations,
}

/// A forward orbit: the samples visited and how the iteration ended.
#[derive(Debug, Clone, PartialEq)]
pub struct OrbitTrace {
    /// `samples[0]` is the seed and `samples[k] = R^k(seed)`.
    pub samples: Vec<SpherePoint>,
    /// Outcome of cycle detection.
    pub status: OrbitStatus,
    /// Number of map applications performed.
    pub iterations: usize,
}

/// Extra slack multiplier applied to `tol` when verifying a tentative cycle
/// over a full extra period; orbit points still drift slightly while the
/// contraction settles.
const VERIFY_SLACK: f64 = 4.0;

/// Gap below which a converging orbit is considered numerically settled on
/// its limit cycle.
const SETTLE_TOL: f64 = 1e-12;

/// Iterate `map` from `seed`, recording samples until a cycle is detected
/// or `max_iter` applications have been made. `tol` is the chordal
/// tolerance for approximate cycle detection.
pub fn orbit(map: &RationalMap, seed: SpherePoint, max_iter: usize, tol: f64) -> OrbitTrace {
    let mut samples = vec![canonical(seed)];
    let mut seen: HashMap<(u64, u64), usize> = HashMap::new();
    seen.insert(bit_key(&samples[0]), 0);

    let mut exact: Option<(usize, usize)> = None; // (preperiod, period)
    let mut iterations = 0usize;

    // Phase 1: detect either an exact repeat or an approximate cycle.
    let mut detected: Option<(usize, usize)> = None; // (preperiod, period) at tolerance
    while iterations < max_iter {
        let next = canonical(map.eval(*samples.last().expect("samples nonempty")));
        iterations += 1;
        if let Some(&first) = seen.get(&bit_key(&next)) {
            samples.push(next);
            exact = Some((first, iterations - first));
            break;
        }
        seen.insert(bit_key(&next), iterations);
        samples.push(next);

        // Tortoise-and-hare comparison at half the current index.
        if iterations.is_multiple_of(2) {
            let half = iterations / 2;
            if chordal_distance(samples[half], samples[iterations]) <= tol {
                if let Some(found) = refine_cycle(&samples, half, tol) {
                    if verify_cycle(
                        map,
                        &mut samples,
                        &mut seen,
                        &mut iterations,
                        max_iter,
                        found.1,
                        tol,
                    ) {
                        detected = Some(found);
                        break;
                    }
                }
            }
        }
    }

    if let Some((preperiod, period)) = exact {
        return OrbitTrace {
            samples,
            status: OrbitStatus::EventuallyPeriodic { preperiod, period },
            iterations,
        };
    }

    let Some((after, period)) = detected else {
        return OrbitTrace {
            samples,
            status: OrbitStatus::MaxIterations,
            iterations,
        };
    };

    // Phase 2: let the orbit settle onto the cycle for sharper coordinates.
    let mut gap = trailing_gap(&samples, period);
    while gap > SETTLE_TOL && iterations < max_iter {
        let next = canonical(map.eval(*samples.last().expect("samples nonempty")));
        iterations += 1;
        samples.push(next);
        let new_gap = trailing_gap(&samples, period);
        if new_gap >= gap {
            break; // rounding floor reached
        }
        gap = new_gap;
    }

    let cycle: Vec<SpherePoint> = samples[samples.len() - period..].to_vec();
    let multiplier = chain_rule_multiplier(map, &cycle);
    let class = classify(multiplier, &ClassifyConfig::default());
    let orbit = PeriodicOrbit {
        period,
        points: canonical_rotation(cycle),
        multiplier,
        class,
    };
    OrbitTrace {
        samples,
        status: OrbitStatus::ConvergedToCycle { orbit, after },
        iterations,
    }
}

/// Chordal gap between the last sample and the one a period earlier.
fn trailing_gap(samples: &[SpherePoint], period: usize) -> f64 {
    let k = samples.len() - 1;
    chordal_distance(samples[k], samples[k - period])
}

/// From a tortoise-hare hit at index `half`, extract the minimal period and
/// the first index within tolerance of the cycle.
fn refine_cycle(samples: &[SpherePoint], half: usize, tol: f64) -> Option<(usize, usize)> {
    let period = (1..=half)
        .find(|&t| chordal_distance(samples[half], samples[half + t]) <= tol)?;
    let preperiod = (0..=half)
        .find(|&i| chordal_distance(samples[i], samples[i + period]) <= tol)
        .unwrap_or(half);
    Some((preperiod, period))
}

/// Iterate one extra period and require every new sample to stay within a
/// slackened tolerance of its predecessor one period back. Chaotic orbits
/// produce transient near-recurrences that fail this check; genuine
/// convergence passes it.
#[allow(clippy::too_many_arguments)]
fn verify_cycle(
    map: &RationalMap,
    samples: &mut Vec<SpherePoint>,
    seen: &mut HashMap<(u64, u64), usize>,
    iterations: &mut usize,
    max_iter: usize,
    period: usize,
    tol: f64,
) -> bool {
    for _ in 0..period {
        if *iterations >= max_iter {
            return false;
        }
        let next = canonical(map.eval(*samples.last().expect("samples nonempty")));
        *iterations += 1;
        seen.entry(bit_key(&next)).or_insert(*iterations);
        samples.push(next);
        if trailing_gap(samples, period) > tol * VERIFY_SLACK {
            return false;
        }
    }
    true
}

/// Normalize signed zeros so bitwise comparison agrees with numeric
/// equality on the values an orbit can actually produce.
fn canonical(point: SpherePoint) -> SpherePoint {
    match point {
        SpherePoint::Finite(z) => SpherePoint::Finite(Complex64::new(z.re + 0.0, z.im + 0.0)),
        SpherePoint::Infinity => SpherePoint::Infinity,
    }
}

/// Bit pattern key for exact-repeat detection. Infinity gets a reserved key
/// no finite point can produce (NaN payloads never appear in samples).
fn bit_key(point: &SpherePoint) -> (u64, u64) {
    match point {
        SpherePoint::Finite(z) => (z.re.to_bits(), z.im.to_bits()),
        SpherePoint::Infinity => (u64::MAX, u64::MAX),
    }
}
