//! JSON reports for clouds, rasters, and component maps.

use crate::{BasinRaster, ComponentMap, ForwardImage, PointCloud};
use fatou_dynamics::report::location_text;
use fatou_dynamics::PeriodicOrbit;
use serde_json::{json, Value};

/// JSON array of attractor descriptions, in raster label order (entry `k`
/// carries basin label `k + 1`).
pub fn attractors_json(attractors: &[PeriodicOrbit]) -> Value {
    Value::Array(
        attractors
            .iter()
            .enumerate()
            .map(|(index, orbit)| {
                let mut object = orbit.to_json();
                object["label"] = json!(index + 1);
                object
            })
            .collect(),
    )
}

/// Summary statistics of a basin raster for sidecar reports.
pub fn raster_stats_json(raster: &BasinRaster) -> Value {
    json!({
        "width": raster.width(),
        "height": raster.height(),
        "window": raster.window().to_string(),
        "attractors": raster.attractor_count(),
        "decided_fraction": raster.decided_fraction(),
        "boundary_pixels": raster.boundary_pixels().len(),
    })
}

/// Summary statistics of a point cloud for sidecar reports.
pub fn cloud_stats_json(cloud: &PointCloud) -> Value {
    json!({
        "map": cloud.source.map,
        "seed": location_text(cloud.source.seed),
        "rng_seed": cloud.source.rng_seed,
        "burn_in": cloud.source.burn_in,
        "points": cloud.points.len(),
    })
}

impl ComponentMap {
    /// Structured JSON document listing every component with its basin,
    /// size, border flag, forward image, and eventual periodicity.
    pub fn to_json(&self) -> Value {
        let components: Vec<Value> = self
            .components()
            .iter()
            .enumerate()
            .map(|(index, component)| {
                let forward = match component.forward {
                    ForwardImage::Unknown => Value::Null,
                    ForwardImage::Unresolved => json!("unresolved"),
                    ForwardImage::Mapped(id) => json!(id),
                };
                let periodicity = match component.periodicity {
                    None => Value::Null,
                    Some(cycle) => json!({
                        "preperiod": cycle.preperiod,
                        "period": cycle.period,
                    }),
                };
                json!({
                    "id": index + 1,
                    "basin": component.basin,
                    "pixels": component.pixel_count,
                    "touches_border": component.touches_border,
                    "forward": forward,
                    "periodicity": periodicity,
                })
            })
            .collect();
        json!({
            "width": self.width(),
            "height": self.height(),
            "components": components,
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::{
        basin_raster, fatou_components, find_attractors, component_orbit,
        julia_inverse_iteration, Window,
    };
    use fatou_core::{parse_map, SpherePoint};

    #[test]
    fn component_report_lists_every_component() {
        let map = parse_map("z^2").expect("parses");
        let attractors = find_attractors(&map, 1).expect("attractors");
        let window = Window::centered_square(2.0).expect("valid");
        let raster = basin_raster(&map, &attractors, &window, 48, 48, 80, 1e-6)
            .expect("raster");
        let components =
            component_orbit(&map, fatou_components(&raster), &raster)
                .expect("annotated");
        let doc = components.to_json();
        assert_eq!(doc["width"], 48);
        let listed = doc["components"].as_array().expect("array");
        assert_eq!(listed.len(), components.len());
        for entry in listed {
            assert!(entry["id"].as_u64().expect("id") >= 1);
            assert!(entry["pixels"].as_u64().expect("pixels") >= 4);
            assert!(entry["periodicity"]["period"].as_u64().is_some());
        }
    }

    #[test]
    fn attractor_report_carries_raster_labels() {
        let map = parse_map("z^2 - 1").expect("parses");
        let attractors = find_attractors(&map, 2).expect("attractors");
        let doc = attractors_json(&attractors);
        let entries = doc.as_array().expect("array");
        assert_eq!(entries.len(), 2);
        assert_eq!(entries[0]["label"], 1);
        assert_eq!(entries[1]["label"], 2);
        assert_eq!(entries[1]["period"], 2);
    }

    #[test]
    fn stats_documents_summarize_their_sources() {
        let map = parse_map("z^2").expect("parses");
        let attractors = find_attractors(&map, 1).expect("attractors");
        let window = Window::centered_square(2.0).expect("valid");
        let raster = basin_raster(&map, &attractors, &window, 32, 32, 80, 1e-6)
            .expect("raster");
        let stats = raster_stats_json(&raster);
        assert_eq!(stats["window"], "-2:2:-2:2");
        assert!(stats["decided_fraction"].as_f64().expect("fraction") > 0.9);

        let cloud = julia_inverse_iteration(
            &map,
            SpherePoint::finite(1.0, 0.0),
            100,
            10,
            3,
        )
        .expect("cloud");
        let stats = cloud_stats_json(&cloud);
        assert_eq!(stats["points"], 100);
        assert_eq!(stats["seed"], "1");
    }
}
