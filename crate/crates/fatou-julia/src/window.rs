//! Rectangular view windows in the complex plane.

use crate::JuliaError;
use fatou_core::{Complex64, ParseError};
use std::fmt;
use std::str::FromStr;

/// An axis-aligned rectangle `[re_min, re_max] x [im_min, im_max]` used as
/// the view for rasters and rendered images.
///
/// Windows are validated on construction: all corners finite and both spans
/// strictly positive, so a `Window` always has area.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Window {
    re_min: f64,
    re_max: f64,
    im_min: f64,
    im_max: f64,
}

impl Window {
    /// A validated window; rejects empty or non-finite rectangles.
    pub fn new(
        re_min: f64,
        re_max: f64,
        im_min: f64,
        im_max: f64,
    ) -> Result<Window, JuliaError> {
        let finite = re_min.is_finite()
            && re_max.is_finite()
            && im_min.is_finite()
            && im_max.is_finite();
        if !finite || re_min >= re_max || im_min >= im_max {
            return Err(JuliaError::DegenerateWindow {
                re_min,
                re_max,
                im_min,
                im_max,
            });
        }
        Ok(Window { re_min, re_max, im_min, im_max })
    }

    /// The square window `[-radius, radius] x [-radius, radius]`.
    pub fn centered_square(radius: f64) -> Result<Window, JuliaError> {
        Window::new(-radius, radius, -radius, radius)
    }

    pub fn re_min(&self) -> f64 {
        self.re_min
    }

    pub fn re_max(&self) -> f64 {
        self.re_max
    }

    pub fn im_min(&self) -> f64 {
        self.im_min
    }

    pub fn im_max(&self) -> f64 {
        self.im_max
    }

    /// Width of the window along the real axis.
    pub fn re_span(&self) -> f64 {
        self.re_max - self.re_min
    }

    /// Height of the window along the imaginary axis.
    pub fn im_span(&self) -> f64 {
        self.im_max - self.im_min
    }

    /// True when the point lies inside the rectangle (closed boundary).
    pub fn contains(&self, z: Complex64) -> bool {
        self.re_min <= z.re
            && z.re <= self.re_max
            && self.im_min <= z.im
            && z.im <= self.im_max
    }

    /// Center of pixel `(x, y)` on a `width x height` grid over this
    /// window. Row `y = 0` is the top of the image (largest imaginary
    /// part), matching the raster and image conventions.
    pub fn pixel_center(
        &self,
        width: usize,
        height: usize,
        x: usize,
        y: usize,
    ) -> Complex64 {
        let dx = self.re_span() / width as f64;
        let dy = self.im_span() / height as f64;
        Complex64::new(
            self.re_min + (x as f64 + 0.5) * dx,
            self.im_max - (y as f64 + 0.5) * dy,
        )
    }

    /// The pixel of a `width x height` grid whose cell contains `z`, or
    /// `None` when `z` falls outside the window.
    pub fn locate(
        &self,
        width: usize,
        height: usize,
        z: Complex64,
    ) -> Option<(usize, usize)> {
        if !self.contains(z) || width == 0 || height == 0 {
            return None;
        }
        let fx = (z.re - self.re_min) / self.re_span() * width as f64;
        let fy = (self.im_max - z.im) / self.im_span() * height as f64;
        let x = (fx.floor() as usize).min(width - 1);
        let y = (fy.floor() as usize).min(height - 1);
        Some((x, y))
    }

    /// Length of the diagonal of one pixel cell on a `width x height` grid.
    pub fn pixel_diagonal(&self, width: usize, height: usize) -> f64 {
        let dx = self.re_span() / width as f64;
        let dy = self.im_span() / height as f64;
        dx.hypot(dy)
    }
}

impl fmt::Display for Window {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{}:{}:{}:{}",
            self.re_min, self.re_max, self.im_min, self.im_max
        )
    }
}

impl FromStr for Window {
    type Err = ParseError;

    /// Parses the `RE_MIN:RE_MAX:IM_MIN:IM_MAX` form used on the command
    /// line, e.g. `-2:2:-2:2`.
    fn from_str(text: &str) -> Result<Window, ParseError> {
        let parts: Vec<&str> = text.split(':').collect();
        if parts.len() != 4 {
            return Err(ParseError::new(
                0,
                format!(
                    "window must have four colon-separated bounds, got {}",
                    parts.len()
                ),
            ));
        }
        let mut bounds = [0.0f64; 4];
        let mut offset = 0;
        for (i, part) in parts.iter().enumerate() {
            bounds[i] = part.trim().parse::<f64>().map_err(|_| {
                ParseError::new(offset, format!("invalid number {part:?}"))
            })?;
            offset += part.len() + 1;
        }
        Window::new(bounds[0], bounds[1], bounds[2], bounds[3]).map_err(|_| {
            ParseError::new(
                0,
                format!("window {text:?} is degenerate (zero area)"),
            )
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_the_colon_form_and_round_trips() {
        let w: Window = "-2:2:-1.5:1.5".parse().expect("parses");
        assert_eq!(w.re_min(), -2.0);
        assert_eq!(w.re_max(), 2.0);
        assert_eq!(w.im_min(), -1.5);
        assert_eq!(w.im_max(), 1.5);
        let again: Window = w.to_string().parse().expect("round trips");
        assert_eq!(w, again);
    }

    #[test]
    fn rejects_malformed_and_degenerate_text() {
        assert!("-2:2:-1.5".parse::<Window>().is_err());
        assert!("a:2:-1:1".parse::<Window>().is_err());
        assert!("2:-2:-1:1".parse::<Window>().is_err());
        assert!("0:0:0:0".parse::<Window>().is_err());
    }

    #[test]
    fn constructor_rejects_zero_area_and_non_finite_bounds() {
        assert!(Window::new(0.0, 0.0, -1.0, 1.0).is_err());
        assert!(Window::new(-1.0, 1.0, 2.0, 1.0).is_err());
        assert!(Window::new(f64::NAN, 1.0, 0.0, 1.0).is_err());
        assert!(Window::new(-1.0, f64::INFINITY, 0.0, 1.0).is_err());
        assert!(Window::new(-1.0, 1.0, -1.0, 1.0).is_ok());
    }

    #[test]
    fn row_zero_is_the_top_of_the_window() {
        let w = Window::new(-2.0, 2.0, -1.0, 1.0).expect("valid");
        let top = w.pixel_center(4, 2, 0, 0);
        let bottom = w.pixel_center(4, 2, 0, 1);
        assert!(top.im > bottom.im);
        assert_eq!(top, Complex64::new(-1.5, 0.5));
        assert_eq!(bottom, Complex64::new(-1.5, -0.5));
    }

    #[test]
    fn locate_inverts_pixel_center() {
        let w = Window::new(-2.0, 2.0, -1.0, 1.0).expect("valid");
        for y in 0..5 {
            for x in 0..7 {
                let z = w.pixel_center(7, 5, x, y);
                assert_eq!(w.locate(7, 5, z), Some((x, y)));
            }
        }
        assert_eq!(w.locate(7, 5, Complex64::new(3.0, 0.0)), None);
        assert_eq!(w.locate(7, 5, Complex64::new(0.0, 1.5)), None);
    }

    #[test]
    fn boundary_points_clamp_to_edge_pixels() {
        let w = Window::new(0.0, 1.0, 0.0, 1.0).expect("valid");
        assert_eq!(w.locate(4, 4, Complex64::new(1.0, 0.0)), Some((3, 3)));
        assert_eq!(w.locate(4, 4, Complex64::new(0.0, 1.0)), Some((0, 0)));
    }
}
