//! Dynamical analysis of rational maps on the Riemann sphere.
//!
//! Building on the algebra in `fatou-core`, this crate locates and
//! classifies fixed points and periodic orbits, computes multipliers in the
//! appropriate chart (including at infinity), finds critical, exceptional,
//! and preimage structure, evaluates the Koenigs linearizing coordinate at
//! attracting fixed points, and traces forward orbits with cycle detection.
//! Results serialize to a line-oriented record format and to JSON for
//! downstream consumers.
//!
//! All operations are pure functions of their inputs and deterministic:
//! outputs are sorted with infinity first and finite points in
//! lexicographic order, so repeated runs produce identical results.

pub mod classify;
pub mod critical;
pub mod error;
pub mod fixed;
pub mod koenigs;
pub mod orbit;
mod order;
pub mod periodic;
pub mod report;

pub use classify::{classify, Classification, ClassifyConfig};
pub use critical::{critical_points, deficiency, exceptional_points, preimages};
pub use error::{DynamicsError, KoenigsPointError};
pub use fixed::{fixed_points, multiplier, nearest_record, FixedPointRecord};
pub use koenigs::{koenigs_coordinate, KoenigsConfig};
pub use orbit::{orbit, OrbitStatus, OrbitTrace};
pub use periodic::{periodic_points, PeriodicOrbit};
