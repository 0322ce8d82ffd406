//! Serialized views of analysis results.
//!
//! Two formats are produced: a line-oriented record format (one record per
//! line, `key=value` fields) for terminal output and diffing, and a
//! structured JSON document for programmatic consumers. Finite locations
//! serialize as `[re, im]` pairs; the point at infinity as the string
//! `"inf"`.

use crate::fixed::FixedPointRecord;
use crate::orbit::{OrbitStatus, OrbitTrace};
use crate::periodic::PeriodicOrbit;
use fatou_core::{Complex64, SpherePoint};
use serde_json::{json, Value};

/// JSON form of a point on the sphere: `[re, im]` or `"inf"`.
pub fn location_json(point: SpherePoint) -> Value {
    match point {
        SpherePoint::Finite(z) => json!([z.re, z.im]),
        SpherePoint::Infinity => json!("inf"),
    }
}

/// JSON form of a finite complex number: `[re, im]`.
pub fn complex_json(z: Complex64) -> Value {
    json!([z.re, z.im])
}

/// Compact text form of a complex number, e.g. `0.5-0.25i`.
pub fn complex_text(z: Complex64) -> String {
    if z.im == 0.0 {
        format!("{}", z.re)
    } else if z.im < 0.0 {
        format!("{}{}i", z.re, z.im)
    } else {
        format!("{}+{}i", z.re, z.im)
    }
}

/// Compact text form of a sphere point.
pub fn location_text(point: SpherePoint) -> String {
    match point {
        SpherePoint::Finite(z) => complex_text(z),
        SpherePoint::Infinity => "inf".to_string(),
    }
}

impl FixedPointRecord {
    /// Structured JSON object for this record.
    pub fn to_json(&self) -> Value {
        json!({
            "location": location_json(self.location),
            "multiplier": complex_json(self.multiplier),
            "multiplicity": self.multiplicity,
            "class": self.class.label(),
        })
    }

    /// One-line record: `fixed location=... multiplier=... multiplicity=...
    /// class=...`.
    pub fn to_record_line(&self) -> String {
        format!(
            "fixed location={} multiplier={} multiplicity={} class={}",
            location_text(self.location),
            complex_text(self.multiplier),
            self.multiplicity,
            self.class.label(),
        )
    }
}

impl PeriodicOrbit {
    /// Structured JSON object for this orbit.
    pub fn to_json(&self) -> Value {
        json!({
            "period": self.period,
            "points": self.points.iter().map(|p| location_json(*p)).collect::<Vec<_>>(),
            "multiplier": complex_json(self.multiplier),
            "class": self.class.label(),
        })
    }

    /// One-line record: `orbit period=... points=a;b;c multiplier=...
    /// class=...`.
    pub fn to_record_line(&self) -> String {
        let points = self
            .points
            .iter()
            .map(|p| location_text(*p))
            .collect::<Vec<_>>()
            .join(";");
        format!(
            "orbit period={} points={} multiplier={} class={}",
            self.period,
            points,
            complex_text(self.multiplier),
            self.class.label(),
        )
    }
}

impl OrbitTrace {
    /// Structured JSON object for this trace.
    pub fn to_json(&self) -> Value {
        let status = match &self.status {
            OrbitStatus::ConvergedToCycle { orbit, after } => json!({
                "kind": "converged-to-cycle",
                "after": after,
                "orbit": orbit.to_json(),
            }),
            OrbitStatus::EventuallyPeriodic { preperiod, period } => json!({
                "kind": "eventually-periodic",
                "preperiod": preperiod,
                "period": period,
            }),
            OrbitStatus::MaxIterations => json!({ "kind": "max-iterations" }),
        };
        json!({
            "samples": self.samples.iter().map(|p| location_json(*p)).collect::<Vec<_>>(),
            "iterations": self.iterations,
            "status": status,
        })
    }

    /// One-line summary of how the orbit ended.
    pub fn to_record_line(&self) -> String {
        match &self.status {
            OrbitStatus::ConvergedToCycle { orbit, after } => format!(
                "trace iterations={} status=converged-to-cycle after={} period={} class={}",
                self.iterations,
                after,
                orbit.period,
                orbit.class.label(),
            ),
            OrbitStatus::EventuallyPeriodic { preperiod, period } => format!(
                "trace iterations={} status=eventually-periodic preperiod={} period={}",
                self.iterations, preperiod, period,
            ),
            OrbitStatus::MaxIterations => {
                format!("trace iterations={} status=max-iterations", self.iterations)
            }
        }
    }
}
