//! Polynomial root finding.
//!
//! The primary method is simultaneous iteration (Aberth–Ehrlich): all root
//! candidates are updated together, each repelled by the others, which keeps
//! the method stable at the moderate degrees this crate produces. A
//! companion-matrix eigenvalue solve backs it up when the residual check
//! fails. Roots at the origin are stripped exactly beforehand, and candidates
//! closer together than the cluster radius are merged into one root with
//! summed multiplicity.

use crate::error::RootError;
use crate::poly::Polynomial;
use nalgebra::DMatrix;
use num_complex::Complex64;

/// Tuning knobs for [`poly_roots`].
#[derive(Clone, Debug)]
pub struct RootFindConfig {
    /// Relative stopping tolerance for the simultaneous iteration, and the
    /// relative residual bound accepted for each root.
    pub tol: f64,
    /// Maximum number of full simultaneous-update sweeps.
    pub max_sweeps: usize,
    /// Candidates within this distance are merged into a multiple root.
    pub cluster_radius: f64,
}

impl Default for RootFindConfig {
    fn default() -> RootFindConfig {
        RootFindConfig { tol: 1e-12, max_sweeps: 500, cluster_radius: 1e-7 }
    }
}

/// All roots of `p`, counted with multiplicity, in a deterministic order
/// (lexicographic by real then imaginary part).
///
/// The multiplicity total always equals `deg p`; each returned root `z`
/// satisfies `|p(z)| ≤ tol·‖coeffs‖` in the backward-error sense (the bound
/// is evaluated against the coefficient magnitudes at `|z|`). Constant and
/// zero polynomials have no roots and yield an empty list.
pub fn poly_roots(
    p: &Polynomial,
    cfg: &RootFindConfig,
) -> Result<Vec<(Complex64, usize)>, RootError> {
    let Some(degree) = p.degree() else { return Ok(Vec::new()) };
    if degree == 0 {
        return Ok(Vec::new());
    }

    // Scale to unit maximum coefficient, and peel off exact roots at 0.
    let scaled = p.scale(Complex64::new(1.0 / p.max_coeff_norm(), 0.0));
    let zeros_at_origin =
        scaled.coeffs().iter().take_while(|c| c.norm() == 0.0).count();
    let reduced = Polynomial::new(scaled.coeffs()[zeros_at_origin..].to_vec());

    let mut candidates = vec![Complex64::new(0.0, 0.0); zeros_at_origin];
    if let Some(m) = reduced.degree().filter(|&m| m > 0) {
        let mut found = aberth(&reduced, cfg);
        polish(&reduced, &mut found, cfg);
        if worst_residual(&reduced, &found) > cfg.tol {
            if let Some(mut eig) = companion_eigenvalues(&reduced, m) {
                polish(&reduced, &mut eig, cfg);
                if worst_residual(&reduced, &eig) < worst_residual(&reduced, &found) {
                    found = eig;
                }
            }
        }
        let max_residual = worst_residual(&reduced, &found);
        if max_residual > cfg.tol {
            return Err(RootError::NonConvergence {
                sweeps: cfg.max_sweeps,
                max_residual,
                best: found,
            });
        }
        candidates.extend(found);
    }

    let merged = merge_clusters(candidates, cfg.cluster_radius);
    Ok(refine_multiple_roots(&scaled, merged, cfg))
}

/// Newton-polishes each multiple root on the derivative of order one below
/// its multiplicity, where that root is simple. A cluster centroid is only
/// accurate to roughly the cluster radius, while the derivative locates the
/// same point at full precision; the result is kept only when it stays near
/// the centroid and does not worsen the derivative residual.
fn refine_multiple_roots(
    p: &Polynomial,
    mut roots: Vec<(Complex64, usize)>,
    cfg: &RootFindConfig,
) -> Vec<(Complex64, usize)> {
    for (root, multiplicity) in roots.iter_mut() {
        if *multiplicity < 2 {
            continue;
        }
        let mut reduced = p.clone();
        for _ in 1..*multiplicity {
            reduced = reduced.derivative();
        }
        let deriv = reduced.derivative();
        let mut refined = *root;
        for _ in 0..8 {
            let dv = deriv.eval(refined);
            if dv.norm() == 0.0 {
                break;
            }
            let step = reduced.eval(refined) / dv;
            refined -= step;
            if step.norm() <= 1e-15 * (1.0 + refined.norm()) {
                break;
            }
        }
        if (refined - *root).norm() <= 10.0 * cfg.cluster_radius
            && relative_residual(&reduced, refined) <= relative_residual(&reduced, *root)
        {
            *root = refined;
        }
    }
    roots.sort_by(|a, b| {
        (a.0.re, a.0.im)
            .partial_cmp(&(b.0.re, b.0.im))
            .expect("root coordinates are finite")
    });
    roots
}

/// Largest relative backward-error residual over the candidates.
fn worst_residual(p: &Polynomial, roots: &[Complex64]) -> f64 {
    roots.iter().map(|&z| relative_residual(p, z)).fold(0.0, f64::max)
}

/// `|p(z)|` measured against the size the evaluation itself can reach at
/// `|z|`, so roots of large modulus are not penalized for benign round-off.
fn relative_residual(p: &Polynomial, z: Complex64) -> f64 {
    let r = z.norm();
    let mut scale: f64 = 0.0;
    let mut rk = 1.0;
    for c in p.coeffs() {
        scale += c.norm() * rk;
        rk *= r;
    }
    p.eval(z).norm() / scale.max(p.max_coeff_norm())
}

/// Simultaneous Aberth–Ehrlich iteration on a polynomial with nonzero
/// constant term; returns `deg p` candidates.
fn aberth(p: &Polynomial, cfg: &RootFindConfig) -> Vec<Complex64> {
    let m = p.degree().unwrap();
    let deriv = p.derivative();

    // Start on a circle sized by the root-product estimate |a0/am|^(1/m),
    // with a fixed angular offset so no candidate begins on an axis.
    let radius = (p.coeff(0).norm() / p.leading().unwrap().norm()).powf(1.0 / m as f64);
    let mut z: Vec<Complex64> = (0..m)
        .map(|k| {
            let theta = 2.0 * std::f64::consts::PI * k as f64 / m as f64 + 0.4;
            Complex64::from_polar(radius.max(1e-6), theta)
        })
        .collect();

    for _ in 0..cfg.max_sweeps {
        let mut worst_step = 0.0f64;
        for k in 0..m {
            let pv = p.eval(z[k]);
            if pv.norm() == 0.0 {
                continue;
            }
            let dv = deriv.eval(z[k]);
            let newton = if dv.norm() == 0.0 {
                // Flat spot: nudge deterministically instead of dividing by 0.
                Complex64::new(1e-6, 1e-6) * (1.0 + z[k].norm())
            } else {
                pv / dv
            };
            let mut repulsion = Complex64::new(0.0, 0.0);
            for j in 0..m {
                if j != k {
                    let gap = z[k] - z[j];
                    if gap.norm() == 0.0 {
                        continue;
                    }
                    repulsion += gap.inv();
                }
            }
            let denom = Complex64::new(1.0, 0.0) - newton * repulsion;
            let step = if denom.norm() == 0.0 { newton } else { newton / denom };
            z[k] -= step;
            worst_step = worst_step.max(step.norm() / z[k].norm().max(1.0));
        }
        if worst_step <= cfg.tol {
            break;
        }
    }
    z
}

/// A few Newton steps per candidate, keeping whichever point along the way
/// had the smallest residual.
fn polish(p: &Polynomial, roots: &mut [Complex64], _cfg: &RootFindConfig) {
    let deriv = p.derivative();
    for z in roots.iter_mut() {
        let mut best = *z;
        let mut best_res = relative_residual(p, best);
        let mut cur = *z;
        for _ in 0..3 {
            let dv = deriv.eval(cur);
            if dv.norm() == 0.0 {
                break;
            }
            cur -= p.eval(cur) / dv;
            let res = relative_residual(p, cur);
            if res < best_res {
                best = cur;
                best_res = res;
            }
        }
        *z = best;
    }
}

/// Eigenvalues of the companion matrix of `p` (degree `m`), or `None` if the
/// eigensolver does not converge.
fn companion_eigenvalues(p: &Polynomial, m: usize) -> Option<Vec<Complex64>> {
    let monic = p.monic();
    let mut mat = DMatrix::<Complex64>::zeros(m, m);
    for i in 1..m {
        mat[(i, i - 1)] = Complex64::new(1.0, 0.0);
    }
    for i in 0..m {
        mat[(i, m - 1)] = -monic.coeff(i);
    }
    let eigen = mat.try_schur(1e-14, 10_000)?.eigenvalues()?;
    Some(eigen.iter().copied().collect())
}

/// Groups candidates lying within `radius` of each other (transitively) into
/// single roots at the cluster centroid, with summed multiplicity, and sorts
/// the result for deterministic output.
fn merge_clusters(candidates: Vec<Complex64>, radius: f64) -> Vec<(Complex64, usize)> {
    let n = candidates.len();
    let mut parent: Vec<usize> = (0..n).collect();
    fn find(parent: &mut Vec<usize>, i: usize) -> usize {
        if parent[i] != i {
            let root = find(parent, parent[i]);
            parent[i] = root;
        }
        parent[i]
    }
    for i in 0..n {
        for j in (i + 1)..n {
            if (candidates[i] - candidates[j]).norm() <= radius {
                let (a, b) = (find(&mut parent, i), find(&mut parent, j));
                if a != b {
                    parent[a] = b;
                }
            }
        }
    }
    let mut sums: Vec<(Complex64, usize)> = vec![(Complex64::new(0.0, 0.0), 0); n];
    for (i, &candidate) in candidates.iter().enumerate() {
        let root = find(&mut parent, i);
        sums[root].0 += candidate;
        sums[root].1 += 1;
    }
    let mut merged: Vec<(Complex64, usize)> = sums
        .into_iter()
        .filter(|&(_, count)| count > 0)
        .map(|(sum, count)| (sum / count as f64, count))
        .collect();
    merged.sort_by(|a, b| {
        (a.0.re, a.0.im)
            .partial_cmp(&(b.0.re, b.0.im))
            .expect("root coordinates are finite")
    });
    merged
}

#[cfg(test)]
mod tests {
    use super::*;

    fn r(x: f64) -> Complex64 {
        Complex64::new(x, 0.0)
    }

    fn roots_of(coeffs: &[f64]) -> Vec<(Complex64, usize)> {
        let p = Polynomial::new(coeffs.iter().map(|&x| r(x)).collect());
        poly_roots(&p, &RootFindConfig::default()).unwrap()
    }

    #[test]
    fn quadratic_roots() {
        let roots = roots_of(&[-2.0, 0.0, 1.0]); // z^2 - 2
        assert_eq!(roots.len(), 2);
        assert!((roots[0].0 - r(-f64::sqrt(2.0))).norm() < 1e-10);
        assert!((roots[1].0 - r(f64::sqrt(2.0))).norm() < 1e-10);
    }

    #[test]
    fn pure_power_strips_origin_roots_exactly() {
        let roots = roots_of(&[0.0, 0.0, 0.0, 1.0]); // z^3
        assert_eq!(roots, vec![(r(0.0), 3)]);
    }

    #[test]
    fn double_root_is_merged() {
        // (z-1)^2 (z+2) = z^3 - 3z + 2
        let roots = roots_of(&[2.0, -3.0, 0.0, 1.0]);
        let mults: Vec<usize> = roots.iter().map(|&(_, m)| m).collect();
        assert_eq!(mults.iter().sum::<usize>(), 3);
        let double = roots.iter().find(|&&(_, m)| m == 2).expect("double root");
        assert!((double.0 - r(1.0)).norm() < 1e-6);
    }

    #[test]
    fn real_cubic_has_conjugate_pair() {
        // c^3 + 2c^2 + c + 1: one real root, one conjugate pair.
        let p = Polynomial::new(vec![r(1.0), r(1.0), r(2.0), r(1.0)]);
        let roots = poly_roots(&p, &RootFindConfig::default()).unwrap();
        assert_eq!(roots.len(), 3);
        for &(z, _) in &roots {
            assert!(p.eval(z).norm() < 1e-10);
        }
        let upper = roots.iter().filter(|&&(z, _)| z.im > 0.0).count();
        assert_eq!(upper, 1);
    }

    #[test]
    fn high_degree_cyclotomic() {
        // z^12 - 1: twelve simple roots on the unit circle.
        let mut coeffs = vec![r(0.0); 13];
        coeffs[0] = r(-1.0);
        coeffs[12] = r(1.0);
        let p = Polynomial::new(coeffs);
        let roots = poly_roots(&p, &RootFindConfig::default()).unwrap();
        assert_eq!(roots.len(), 12);
        for &(z, m) in &roots {
            assert_eq!(m, 1);
            assert!((z.norm() - 1.0).abs() < 1e-10);
        }
    }

    #[test]
    fn linear_polynomial() {
        let roots = roots_of(&[3.0, -1.5]); // -1.5z + 3
        assert_eq!(roots.len(), 1);
        assert!((roots[0].0 - r(2.0)).norm() < 1e-12);
    }

    #[test]
    fn constants_have_no_roots() {
        assert!(roots_of(&[4.0]).is_empty());
        assert!(poly_roots(&Polynomial::zero(), &RootFindConfig::default())
            .unwrap()
            .is_empty());
    }

    #[test]
    fn from_roots_round_trip_with_scaling() {
        let want = vec![r(-3.0), r(0.25), Complex64::new(1.0, 1.0), Complex64::new(1.0, -1.0)];
        let p = Polynomial::from_roots(&want).scale(r(7.5));
        let got = poly_roots(&p, &RootFindConfig::default()).unwrap();
        assert_eq!(got.len(), 4);
        for &w in &want {
            assert!(got.iter().any(|&(z, _)| (z - w).norm() < 1e-9));
        }
    }
}
