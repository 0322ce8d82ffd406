//! Julia set and Fatou component approximation for rational maps.
//!
//! Two complementary pictures of the dynamics are produced. Backward
//! random iteration samples the Julia set directly as a [`PointCloud`]:
//! pulling a point through randomly chosen inverse branches drives it onto
//! the closure of the repelling behavior. Forward iteration over a pixel
//! grid produces a [`BasinRaster`]: each pixel is labeled by the attracting
//! cycle its orbit settles on, the unlabeled residue approximating the
//! Julia set and any rotation domains. Connected labeled regions become
//! Fatou components, which can be pushed forward through the map to expose
//! their eventual periodicity — at this resolution every component's orbit
//! falls into a finite cycle.
//!
//! Pixel work is parallelized but deterministic: rasters, clouds (for a
//! fixed generator seed), component maps, and rendered images are
//! bit-for-bit reproducible across runs and thread counts.

pub mod attractors;
pub mod cloud;
pub mod components;
pub mod error;
pub mod raster;
pub mod render;
pub mod report;
pub mod window;

pub use attractors::find_attractors;
pub use cloud::{julia_inverse_iteration, CloudSource, PointCloud};
pub use components::{
    component_orbit, fatou_components, Component, ComponentMap,
    CyclePosition, ForwardImage,
};
pub use error::JuliaError;
pub use raster::{basin_raster, BasinRaster, CONFIRM_STEPS};
pub use render::{Image, Palette};
pub use report::{attractors_json, cloud_stats_json, raster_stats_json};
pub use window::Window;
