//! Grid-based solver for the Beltrami equation `f_zbar = mu f_z`.
//!
//! A dilatation field `mu` with `sup |mu| < 1`, sampled on a square grid
//! and compactly supported well inside it, determines a quasiconformal map
//! of the plane. This crate computes that map by the classical singular
//! integral scheme: the Beurling transform drives a Neumann-series
//! iteration for the density `h` with `f_z = h + 1`, and the Cauchy-type
//! transform integrates the density into the map itself, normalized so that
//! `f(0) = 0` and `f(z) - z` vanishes at infinity. A second normalization
//! step rescales to `f(1) = 1`.
//!
//! Alongside the solver there is pointwise dilatation algebra for
//! Wirtinger derivative samples — axis ratios, compositions, inverses —
//! and a reflection that turns a dilatation vanishing near the origin into
//! the dilatation of the conjugate problem at infinity.
//!
//! Everything is deterministic: solving the same field twice yields
//! bit-identical grids, and the serialized form is byte-stable.

pub mod dilatation;
pub mod error;
pub mod field;
pub mod grid;
pub mod io;
pub mod operators;
pub mod solve;

pub use dilatation::{
    compose_dilatation, dilatation, inverse_dilatation, unit_factor, Dilatation, WirtingerPair,
};
pub use error::BeltramiError;
pub use field::{reflect_at_infinity, BeltramiField};
pub use grid::{Grid, GridField};
pub use io::{read_qcf, write_csv, write_qcf};
pub use operators::{beurling_transform, cauchy_transform, cauchy_transform_at};
pub use solve::{
    normal_solution, normalize_solution, wirtinger_stencil, QcSolution, SolverConfig,
};
