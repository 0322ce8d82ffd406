//! Rasters and point clouds as binary PPM images.

use crate::{BasinRaster, JuliaError, PointCloud, Window};
use std::io::Write;
use std::path::Path;

/// Colors for basin labels, plus the color of undecided pixels.
#[derive(Clone, Debug)]
pub struct Palette {
    colors: Vec<[u8; 3]>,
    undecided: [u8; 3],
}

impl Palette {
    /// A palette with explicit label colors; label `k` takes
    /// `colors[(k - 1) % colors.len()]`.
    pub fn new(colors: Vec<[u8; 3]>, undecided: [u8; 3]) -> Palette {
        assert!(!colors.is_empty(), "palette needs at least one color");
        Palette { colors, undecided }
    }

    /// Default basin palette: well-separated hues on a black undecided
    /// background, so the Julia set shows as the dark seams.
    pub fn basins() -> Palette {
        Palette::new(
            vec![
                [230, 57, 70],
                [69, 123, 157],
                [244, 162, 97],
                [42, 157, 143],
                [155, 93, 229],
                [233, 196, 106],
            ],
            [0, 0, 0],
        )
    }

    /// Color of a basin label (0 is the undecided color).
    pub fn color(&self, label: usize) -> [u8; 3] {
        if label == 0 {
            self.undecided
        } else {
            self.colors[(label - 1) % self.colors.len()]
        }
    }
}

/// An RGB image with 8-bit channels, row-major from the top-left pixel.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Image {
    width: usize,
    height: usize,
    pixels: Vec<u8>,
}

impl Image {
    pub fn width(&self) -> usize {
        self.width
    }

    pub fn height(&self) -> usize {
        self.height
    }

    /// Raw RGB bytes, three per pixel.
    pub fn pixels(&self) -> &[u8] {
        &self.pixels
    }

    /// Paints each raster pixel with its basin color.
    pub fn from_raster(raster: &BasinRaster, palette: &Palette) -> Image {
        let mut pixels =
            Vec::with_capacity(raster.width() * raster.height() * 3);
        for y in 0..raster.height() {
            for x in 0..raster.width() {
                pixels.extend_from_slice(&palette.color(raster.label(x, y)));
            }
        }
        Image { width: raster.width(), height: raster.height(), pixels }
    }

    /// Plots cloud points in black on a white field. Points outside the
    /// window are skipped; row 0 corresponds to the largest imaginary
    /// part, matching [`BasinRaster`].
    pub fn from_cloud(
        cloud: &PointCloud,
        window: &Window,
        width: usize,
        height: usize,
    ) -> Result<Image, JuliaError> {
        if width == 0 || height == 0 {
            return Err(JuliaError::EmptyRaster { width, height });
        }
        let mut pixels = vec![255u8; width * height * 3];
        for z in &cloud.points {
            if let Some((x, y)) = window.locate(width, height, *z) {
                let base = (y * width + x) * 3;
                pixels[base..base + 3].copy_from_slice(&[0, 0, 0]);
            }
        }
        Ok(Image { width, height, pixels })
    }

    /// Writes the image as binary PPM (`P6`, maxval 255).
    ///
    /// The bytes go to a temporary file in the destination directory which
    /// is renamed into place only after a complete write, so a crash or
    /// full disk never leaves a truncated image at `path`.
    pub fn write_ppm(&self, path: &Path) -> Result<(), JuliaError> {
        let bytes = self.ppm_bytes();
        write_atomically(path, &bytes)
    }

    /// The exact bytes `write_ppm` produces.
    pub fn ppm_bytes(&self) -> Vec<u8> {
        let mut bytes =
            format!("P6\n{} {}\n255\n", self.width, self.height).into_bytes();
        bytes.extend_from_slice(&self.pixels);
        bytes
    }
}

/// Writes `bytes` to `path` via a temporary file and atomic rename.
pub(crate) fn write_atomically(
    path: &Path,
    bytes: &[u8],
) -> Result<(), JuliaError> {
    let io_error = |source| JuliaError::Io {
        path: path.to_path_buf(),
        source,
    };
    let directory = path.parent().filter(|p| !p.as_os_str().is_empty());
    let mut file =
        tempfile::NamedTempFile::new_in(directory.unwrap_or(Path::new(".")))
            .map_err(io_error)?;
    file.write_all(bytes).map_err(io_error)?;
    file.flush().map_err(io_error)?;
    file.persist(path).map_err(|e| io_error(e.error))?;
    Ok(())
}
