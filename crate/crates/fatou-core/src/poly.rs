//! Complex polynomials in one variable.
//!
//! Coefficients are stored in ascending power order. The zero polynomial is
//! the empty coefficient list; any nonzero polynomial keeps a nonzero leading
//! coefficient, so `degree` is always `len − 1` for nonzero inputs.

use num_complex::Complex64;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

const ZERO: Complex64 = Complex64::new(0.0, 0.0);

#[derive(Clone, Debug, PartialEq)]
pub struct Polynomial {
    coeffs: Vec<Complex64>,
}

impl Polynomial {
    /// Builds a polynomial from ascending-order coefficients, trimming
    /// exactly-zero leading terms. All coefficients must be finite.
    pub fn new(mut coeffs: Vec<Complex64>) -> Polynomial {
        assert!(
            coeffs.iter().all(|c| c.re.is_finite() && c.im.is_finite()),
            "polynomial coefficients must be finite"
        );
        while coeffs.last().is_some_and(|c| c.norm() == 0.0) {
            coeffs.pop();
        }
        Polynomial { coeffs }
    }

    pub fn zero() -> Polynomial {
        Polynomial { coeffs: Vec::new() }
    }

    pub fn one() -> Polynomial {
        Polynomial::constant(Complex64::new(1.0, 0.0))
    }

    pub fn constant(c: Complex64) -> Polynomial {
        Polynomial::new(vec![c])
    }

    /// The monomial `c·z^k`.
    pub fn monomial(c: Complex64, k: usize) -> Polynomial {
        let mut coeffs = vec![ZERO; k + 1];
        coeffs[k] = c;
        Polynomial::new(coeffs)
    }

    /// The monic polynomial with the given roots (with repetition).
    pub fn from_roots(roots: &[Complex64]) -> Polynomial {
        let mut p = Polynomial::one();
        for &r in roots {
            p = &p * &Polynomial::new(vec![-r, Complex64::new(1.0, 0.0)]);
        }
        p
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `None` for the zero polynomial, else the degree.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn coeffs(&self) -> &[Complex64] {
        &self.coeffs
    }

    /// Coefficient of `z^k` (zero past the degree).
    pub fn coeff(&self, k: usize) -> Complex64 {
        self.coeffs.get(k).copied().unwrap_or(ZERO)
    }

    pub fn leading(&self) -> Option<Complex64> {
        self.coeffs.last().copied()
    }

    /// Largest coefficient magnitude (zero for the zero polynomial).
    pub fn max_coeff_norm(&self) -> f64 {
        self.coeffs.iter().map(|c| c.norm()).fold(0.0, f64::max)
    }

    /// Horner evaluation.
    pub fn eval(&self, z: Complex64) -> Complex64 {
        let mut acc = ZERO;
        for &c in self.coeffs.iter().rev() {
            acc = acc * z + c;
        }
        acc
    }

    /// Coefficient-reversed polynomial `z^d · p(1/z)`; used for computations
    /// in the chart at infinity.
    pub fn reversed(&self) -> Polynomial {
        let mut coeffs = self.coeffs.clone();
        coeffs.reverse();
        Polynomial::new(coeffs)
    }

    pub fn derivative(&self) -> Polynomial {
        if self.coeffs.len() <= 1 {
            return Polynomial::zero();
        }
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .skip(1)
            .map(|(k, c)| c * k as f64)
            .collect();
        Polynomial::new(coeffs)
    }

    pub fn scale(&self, c: Complex64) -> Polynomial {
        Polynomial::new(self.coeffs.iter().map(|a| a * c).collect())
    }

    /// Divides every coefficient by `c`. Unlike multiplying by `c.inv()`,
    /// this rounds once, so a coefficient equal to `c` becomes exactly 1 —
    /// which normalization relies on.
    pub fn unscale(&self, c: Complex64) -> Polynomial {
        Polynomial::new(self.coeffs.iter().map(|a| a / c).collect())
    }

    /// Scales so the leading coefficient is exactly 1.
    pub fn monic(&self) -> Polynomial {
        match self.leading() {
            Some(lead) => self.unscale(lead),
            None => Polynomial::zero(),
        }
    }

    /// Substitution `self(other)`, by Horner in the polynomial ring.
    pub fn compose(&self, other: &Polynomial) -> Polynomial {
        let mut acc = Polynomial::zero();
        for &c in self.coeffs.iter().rev() {
            acc = &(&acc * other) + &Polynomial::constant(c);
        }
        acc
    }

    /// Drops leading coefficients whose magnitude is at most
    /// `eps · max_coeff_norm()`; used to collapse numerically-degenerate
    /// degrees after cancellation-prone arithmetic.
    pub fn truncate_leading(&self, eps: f64) -> Polynomial {
        let floor = eps * self.max_coeff_norm();
        let mut coeffs = self.coeffs.clone();
        while coeffs.last().is_some_and(|c| c.norm() <= floor) {
            coeffs.pop();
        }
        Polynomial { coeffs }
    }

    /// Euclidean division: `self = q·div + r` with `deg r < deg div`.
    ///
    /// The coefficient that each elimination step is meant to cancel is
    /// removed structurally rather than subtracted, so the remainder degree
    /// genuinely decreases even when the arithmetic leaves round-off behind.
    ///
    /// Panics on a zero divisor.
    pub fn div_rem(&self, div: &Polynomial) -> (Polynomial, Polynomial) {
        let d = div.degree().expect("polynomial division by zero");
        let lead = div.leading().unwrap();
        if self.coeffs.len() <= d {
            return (Polynomial::zero(), self.clone());
        }
        let mut rem = self.coeffs.clone();
        let mut quot = vec![ZERO; self.coeffs.len() - d];
        while rem.len() > d {
            let k = rem.len() - 1 - d;
            let factor = rem[rem.len() - 1] / lead;
            quot[k] = factor;
            // Eliminate the top coefficient exactly by dropping it.
            rem.pop();
            for (i, &c) in div.coeffs[..d].iter().enumerate() {
                rem[k + i] -= factor * c;
            }
        }
        (Polynomial::new(quot), Polynomial::new(rem))
    }
}

impl Add for &Polynomial {
    type Output = Polynomial;
    fn add(self, rhs: &Polynomial) -> Polynomial {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let coeffs = (0..n).map(|k| self.coeff(k) + rhs.coeff(k)).collect();
        Polynomial::new(coeffs)
    }
}

impl Sub for &Polynomial {
    type Output = Polynomial;
    fn sub(self, rhs: &Polynomial) -> Polynomial {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let coeffs = (0..n).map(|k| self.coeff(k) - rhs.coeff(k)).collect();
        Polynomial::new(coeffs)
    }
}

impl Neg for &Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        Polynomial::new(self.coeffs.iter().map(|c| -c).collect())
    }
}

impl Mul for &Polynomial {
    type Output = Polynomial;
    fn mul(self, rhs: &Polynomial) -> Polynomial {
        if self.is_zero() || rhs.is_zero() {
            return Polynomial::zero();
        }
        let mut coeffs = vec![ZERO; self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, &a) in self.coeffs.iter().enumerate() {
            for (j, &b) in rhs.coeffs.iter().enumerate() {
                coeffs[i + j] += a * b;
            }
        }
        Polynomial::new(coeffs)
    }
}

/// Numerical GCD by the Euclidean remainder sequence.
///
/// Each remainder is rescaled to unit maximum coefficient and has leading
/// coefficients below `eps` (relative to that maximum) truncated; a remainder
/// whose coefficients all fall below `eps` relative to the divisor counts as
/// zero. The result is monic. Inputs coming from user-entered coefficients
/// and small symbolic compositions are well served by this; exact-arithmetic
/// GCD is out of scope.
pub fn poly_gcd(p: &Polynomial, q: &Polynomial, eps: f64) -> Polynomial {
    let norm = |p: &Polynomial| {
        let m = p.max_coeff_norm();
        if m > 0.0 {
            p.scale(Complex64::new(1.0 / m, 0.0))
        } else {
            Polynomial::zero()
        }
    };
    let (mut a, mut b) = (norm(p), norm(q));
    if a.degree() < b.degree() {
        std::mem::swap(&mut a, &mut b);
    }
    if b.is_zero() {
        return a.monic();
    }
    loop {
        let r = a.div_rem(&b).1.truncate_leading(eps);
        if r.max_coeff_norm() <= eps {
            return b.monic();
        }
        a = b;
        b = norm(&r);
    }
}

/// Formats one coefficient together with its sign, in a form the expression
/// parser accepts back: real parts plain, pure-imaginary as `bi`, and full
/// complex values as `(re,im)` pairs.
fn push_coeff(out: &mut String, c: Complex64, lead: bool, with_unit: bool) {
    let sign_neg = if lead { "-" } else { " - " };
    let sign_pos = if lead { "" } else { " + " };
    if c.im == 0.0 {
        let (sign, mag) = if c.re < 0.0 { (sign_neg, -c.re) } else { (sign_pos, c.re) };
        out.push_str(sign);
        if mag != 1.0 || !with_unit {
            out.push_str(&format!("{mag}"));
        }
    } else if c.re == 0.0 {
        let (sign, mag) = if c.im < 0.0 { (sign_neg, -c.im) } else { (sign_pos, c.im) };
        out.push_str(sign);
        if mag == 1.0 {
            out.push('i');
        } else {
            out.push_str(&format!("{mag}i"));
        }
    } else {
        out.push_str(sign_pos);
        out.push_str(&format!("({},{})", c.re, c.im));
    }
}

impl fmt::Display for Polynomial {
    /// Descending-power rendering in the shared expression grammar, e.g.
    /// `z^2 - 0.5z + 0.5`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut out = String::new();
        let mut lead = true;
        for k in (0..self.coeffs.len()).rev() {
            let c = self.coeffs[k];
            if c.norm() == 0.0 {
                continue;
            }
            push_coeff(&mut out, c, lead, k > 0);
            match k {
                0 => {}
                1 => out.push('z'),
                _ => out.push_str(&format!("z^{k}")),
            }
            lead = false;
        }
        write!(f, "{out}")
    }
}
