//! Rational maps `R = P/Q` on the Riemann sphere.
//!
//! Construction reduces the fraction to numerically coprime form, rejects
//! constants, and rescales both polynomials jointly so the first coefficient
//! of largest magnitude (numerator scanned first) becomes exactly 1. The
//! canonical scale makes coefficientwise comparison of two maps meaningful;
//! a fraction is otherwise only defined up to common scale.

use crate::error::MapError;
use crate::mobius::Mobius;
use crate::poly::{poly_gcd, Polynomial};
use crate::sphere::SpherePoint;
use crate::{DEGREE_CAP, GCD_EPSILON};
use num_complex::Complex64;
use std::fmt;

#[derive(Clone, Debug, PartialEq)]
pub struct RationalMap {
    num: Polynomial,
    den: Polynomial,
    degree: usize,
}

impl RationalMap {
    /// Builds `num/den`, reducing to coprime form and canonical scale.
    pub fn new(num: Polynomial, den: Polynomial) -> Result<RationalMap, MapError> {
        let map = RationalMap::reduced(num, den)?;
        if map.degree == 0 {
            return Err(MapError::ConstantMap);
        }
        Ok(map)
    }

    /// Reduction and scaling without the degree-≥-1 check; the constant
    /// outcome is needed internally for derivatives of linear maps.
    fn reduced(num: Polynomial, den: Polynomial) -> Result<RationalMap, MapError> {
        if den.is_zero() {
            return Err(MapError::ZeroDenominator);
        }
        if num.is_zero() {
            return Err(MapError::ConstantMap);
        }
        let gcd = poly_gcd(&num, &den, GCD_EPSILON);
        let (mut num, mut den) = if gcd.degree() > Some(0) {
            (num.div_rem(&gcd).0, den.div_rem(&gcd).0)
        } else {
            (num, den)
        };
        let degree = num.degree().unwrap_or(0).max(den.degree().unwrap_or(0));

        // Joint canonical scale: divide through by the first coefficient of
        // maximal magnitude, making it exactly one.
        let max_norm = num.max_coeff_norm().max(den.max_coeff_norm());
        let pivot = num
            .coeffs()
            .iter()
            .chain(den.coeffs().iter())
            .copied()
            .find(|c| c.norm() == max_norm)
            .expect("a nonzero polynomial has a maximal coefficient");
        num = num.unscale(pivot);
        den = den.unscale(pivot);
        Ok(RationalMap { num, den, degree })
    }

    /// The polynomial map `p/1`.
    pub fn from_polynomial(p: Polynomial) -> Result<RationalMap, MapError> {
        RationalMap::new(p, Polynomial::one())
    }

    pub fn num(&self) -> &Polynomial {
        &self.num
    }

    pub fn den(&self) -> &Polynomial {
        &self.den
    }

    /// The degree `max(deg P, deg Q)` of the reduced map. At least 1 for any
    /// map built with [`new`](Self::new); only derivatives of degree-1
    /// polynomial maps are constant (degree 0).
    pub fn degree(&self) -> usize {
        self.degree
    }

    /// True when the map is a polynomial (constant denominator).
    pub fn is_polynomial(&self) -> bool {
        self.den.degree() == Some(0)
    }

    /// Evaluation at a point of the sphere, chart-correct at poles and ∞.
    pub fn eval(&self, z: SpherePoint) -> SpherePoint {
        match z {
            SpherePoint::Infinity => self.eval_at_infinity(),
            SpherePoint::Finite(z) => {
                if z.norm() <= 1.0 {
                    let p = self.num.eval(z);
                    let q = self.den.eval(z);
                    if q.norm() == 0.0 {
                        SpherePoint::Infinity
                    } else {
                        SpherePoint::from_value(p / q)
                    }
                } else {
                    self.eval_outer(z)
                }
            }
        }
    }

    /// Convenience wrapper over [`eval`](Self::eval) for finite inputs.
    pub fn eval_complex(&self, z: Complex64) -> SpherePoint {
        self.eval(SpherePoint::from_value(z))
    }

    /// `R(∞)` by comparing numerator and denominator degrees.
    fn eval_at_infinity(&self) -> SpherePoint {
        let n = self.num.degree().unwrap_or(0);
        let m = self.den.degree().unwrap_or(0);
        match n.cmp(&m) {
            std::cmp::Ordering::Greater => SpherePoint::Infinity,
            std::cmp::Ordering::Less => SpherePoint::ZERO,
            std::cmp::Ordering::Equal => {
                SpherePoint::from_value(self.num.leading().unwrap() / self.den.leading().unwrap())
            }
        }
    }

    /// Evaluation for `|z| > 1` through the chart at infinity:
    /// `R(z) = z^(n−m) · P̃(1/z)/Q̃(1/z)` with reversed coefficients, which
    /// avoids overflowing intermediate powers of `z`.
    fn eval_outer(&self, z: Complex64) -> SpherePoint {
        let n = self.num.degree().unwrap_or(0);
        let m = self.den.degree().unwrap_or(0);
        let w = z.inv();
        let a = self.num.reversed().eval(w);
        let b = self.den.reversed().eval(w);
        if b.norm() == 0.0 {
            return SpherePoint::Infinity;
        }
        if a.norm() == 0.0 {
            return SpherePoint::ZERO;
        }
        let value = if n >= m {
            z.powi((n - m) as i32) * (a / b)
        } else {
            w.powi((m - n) as i32) * (a / b)
        };
        SpherePoint::from_value(value)
    }

    /// The derivative `(QP′ − PQ′)/Q²`, reduced. For a degree-1 polynomial
    /// map the result is a constant fraction (degree 0), the one place such
    /// a value can arise.
    pub fn derivative(&self) -> RationalMap {
        let num = &(&self.den * &self.num.derivative()) - &(&self.num * &self.den.derivative());
        // When numerator and denominator share a degree, the top coefficient
        // of QP′ − PQ′ cancels exactly; drop the rounding residue it leaves
        // so the reduction below sees the true degree.
        let num = num.truncate_leading(1e-12);
        let den = &self.den * &self.den;
        RationalMap::reduced(num, den)
            .expect("a nonconstant map has a nonzero derivative")
    }

    /// The composition `self ∘ other` (apply `other` first), via joint
    /// homogenization of `other`'s fraction.
    pub fn compose(&self, other: &RationalMap) -> Result<RationalMap, MapError> {
        let d = self.degree;
        let a = &other.num;
        let b = &other.den;
        let mut a_pows = Vec::with_capacity(d + 1);
        let mut b_pows = Vec::with_capacity(d + 1);
        a_pows.push(Polynomial::one());
        b_pows.push(Polynomial::one());
        for k in 1..=d {
            a_pows.push(&a_pows[k - 1] * a);
            b_pows.push(&b_pows[k - 1] * b);
        }
        let homogenize = |p: &Polynomial| {
            let mut acc = Polynomial::zero();
            for (i, &c) in p.coeffs().iter().enumerate() {
                acc = &acc + &(&a_pows[i] * &b_pows[d - i]).scale(c);
            }
            acc
        };
        RationalMap::new(homogenize(&self.num), homogenize(&self.den))
    }

    /// The n-fold composition `R^n`, refused when the resulting degree would
    /// exceed [`DEGREE_CAP`]; callers hitting the cap should work with
    /// pointwise orbits instead.
    pub fn iterate(&self, n: u32) -> Result<RationalMap, MapError> {
        assert!(n >= 1, "iterate requires n ≥ 1");
        let degree = (self.degree as u128)
            .checked_pow(n)
            .filter(|&d| d <= DEGREE_CAP)
            .ok_or(MapError::DegreeCap {
                degree: (self.degree as u128).checked_pow(n).unwrap_or(u128::MAX),
                cap: DEGREE_CAP,
            })?;
        let _ = degree;
        let mut acc = self.clone();
        for _ in 1..n {
            // R ∘ R^k = R^(k+1); composing in this order keeps the
            // homogenization exponent at deg R rather than deg R^k.
            acc = self.compose(&acc)?;
        }
        Ok(acc)
    }

    /// The conjugate `M ∘ R ∘ M⁻¹`; degree is preserved and fixed points are
    /// transported by `M`.
    pub fn conjugate(&self, m: &Mobius) -> RationalMap {
        let forward = m.as_rational_map();
        let backward = m.inverse().as_rational_map();
        forward
            .compose(self)
            .and_then(|inner| inner.compose(&backward))
            .expect("conjugation by a nondegenerate Möbius map preserves degree ≥ 1")
    }

    /// Coefficientwise comparison of two canonical-form maps.
    pub fn approx_eq(&self, other: &RationalMap, tol: f64) -> bool {
        let close = |p: &Polynomial, q: &Polynomial| {
            p.degree() == q.degree()
                && p.coeffs()
                    .iter()
                    .zip(q.coeffs())
                    .all(|(a, b)| (a - b).norm() <= tol)
        };
        close(&self.num, &other.num) && close(&self.den, &other.den)
    }
}

impl fmt::Display for RationalMap {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.degree() == Some(0) {
            // Fold the constant denominator into the numerator and print a
            // bare polynomial.
            write!(f, "{}", self.num.unscale(self.den.coeff(0)))
        } else {
            // Render with a monic numerator rather than the canonical scale;
            // it reads closer to how maps are usually written.
            let lead = self.num.leading().expect("numerator is nonzero");
            write!(f, "({})/({})", self.num.unscale(lead), self.den.unscale(lead))
        }
    }
}
