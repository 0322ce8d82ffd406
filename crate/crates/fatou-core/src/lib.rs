//! Polynomial and rational-map algebra on the extended complex plane.
//!
//! This crate provides the arithmetic substrate for iterating rational maps
//! on the Riemann sphere: complex polynomials with numerically robust root
//! finding and GCD, coprime rational maps with chart-correct evaluation at
//! infinity, Möbius transformations and conjugation, the chordal metric, and
//! a plain-text expression grammar shared by the CLI and the test fixtures.
//!
//! Everything here is immutable after construction and free of interior
//! mutability visible to callers, so values can be shared freely across
//! threads.

pub mod error;
pub mod mobius;
pub mod parse;
pub mod poly;
pub mod rational;
pub mod roots;
pub mod sphere;

pub use error::{MapError, ParseError, RootError};
pub use mobius::Mobius;
pub use parse::{parse_map, parse_polynomial};
pub use poly::{poly_gcd, Polynomial};
pub use rational::RationalMap;
pub use roots::{poly_roots, RootFindConfig};
pub use sphere::{chordal_distance, SpherePoint};

pub use num_complex::Complex64;

/// Relative coefficient tolerance used by the numerical polynomial GCD that
/// backs coprime reduction of rational maps.
pub const GCD_EPSILON: f64 = 1e-10;

/// Largest intermediate degree `iterate` is willing to construct explicitly.
/// Past this point root-finder accuracy degrades badly, so the operation
/// refuses and callers should fall back to pointwise orbit computation.
pub const DEGREE_CAP: u128 = 4096;
