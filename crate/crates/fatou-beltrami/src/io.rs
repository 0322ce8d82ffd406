//! Serialization of grid fields.
//!
//! The binary field format (extension `.qcf`) is a fixed 36-byte header —
//! the magic `QCF1`, the grid side as a little-endian u64, then the grid
//! center's real part, imaginary part, and the cell spacing as little-endian
//! f64 — followed by the row-major samples as (re, im) little-endian f64
//! pairs. Writes go to a temporary file in the destination directory and are
//! renamed into place, so a crash never leaves a half-written field behind,
//! and equal fields always serialize to identical bytes.
//!
//! The CSV form is for inspection and plotting: one line per sample with
//! the sample position and value.

use crate::error::BeltramiError;
use crate::grid::{Grid, GridField};
use num_complex::Complex64;
use std::io::Write;
use std::path::Path;

const MAGIC: &[u8; 4] = b"QCF1";
const HEADER_LEN: usize = 36;

/// Largest accepted grid side when reading, guarding against absurd
/// allocations from corrupt headers.
const MAX_SIDE: u64 = 8192;

fn io_error(path: &Path, source: std::io::Error) -> BeltramiError {
    BeltramiError::Io {
        path: path.to_path_buf(),
        source,
    }
}

fn format_error(message: impl Into<String>) -> BeltramiError {
    BeltramiError::Format {
        message: message.into(),
    }
}

fn write_atomically(path: &Path, bytes: &[u8]) -> Result<(), BeltramiError> {
    let dir = path.parent().filter(|p| !p.as_os_str().is_empty());
    let mut file = tempfile::NamedTempFile::new_in(dir.unwrap_or(Path::new(".")))
        .map_err(|e| io_error(path, e))?;
    file.write_all(bytes).map_err(|e| io_error(path, e))?;
    file.persist(path).map_err(|e| io_error(path, e.error))?;
    Ok(())
}

/// Writes a grid field in the binary field format, atomically.
pub fn write_qcf(field: &GridField, path: &Path) -> Result<(), BeltramiError> {
    let grid = field.grid();
    let mut bytes = Vec::with_capacity(HEADER_LEN + 16 * grid.len());
    bytes.extend_from_slice(MAGIC);
    bytes.extend_from_slice(&(grid.size() as u64).to_le_bytes());
    bytes.extend_from_slice(&grid.center().re.to_le_bytes());
    bytes.extend_from_slice(&grid.center().im.to_le_bytes());
    bytes.extend_from_slice(&grid.spacing().to_le_bytes());
    for value in field.values() {
        bytes.extend_from_slice(&value.re.to_le_bytes());
        bytes.extend_from_slice(&value.im.to_le_bytes());
    }
    write_atomically(path, &bytes)
}

fn f64_at(bytes: &[u8], offset: usize) -> f64 {
    f64::from_le_bytes(bytes[offset..offset + 8].try_into().expect("8 bytes"))
}

/// Reads a grid field from the binary field format.
pub fn read_qcf(path: &Path) -> Result<GridField, BeltramiError> {
    let bytes = std::fs::read(path).map_err(|e| io_error(path, e))?;
    if bytes.len() < HEADER_LEN {
        return Err(format_error(format!(
            "file is {} bytes, shorter than the {HEADER_LEN}-byte header",
            bytes.len()
        )));
    }
    if &bytes[0..4] != MAGIC {
        return Err(format_error("missing QCF1 magic"));
    }
    let side = u64::from_le_bytes(bytes[4..12].try_into().expect("8 bytes"));
    if side == 0 || side > MAX_SIDE {
        return Err(format_error(format!(
            "grid side {side} outside the accepted range 1..={MAX_SIDE}"
        )));
    }
    let size = side as usize;
    let center = Complex64::new(f64_at(&bytes, 12), f64_at(&bytes, 20));
    let spacing = f64_at(&bytes, 28);
    let grid = Grid::new(center, spacing, size)?;
    let expected = HEADER_LEN + 16 * size * size;
    if bytes.len() != expected {
        return Err(format_error(format!(
            "expected {expected} bytes for a side-{size} field, found {}",
            bytes.len()
        )));
    }
    let mut values = Vec::with_capacity(size * size);
    for i in 0..size * size {
        let offset = HEADER_LEN + 16 * i;
        let value = Complex64::new(f64_at(&bytes, offset), f64_at(&bytes, offset + 8));
        if !value.re.is_finite() || !value.im.is_finite() {
            return Err(format_error(format!("non-finite sample at index {i}")));
        }
        values.push(value);
    }
    GridField::from_values(grid, values)
}

/// Writes a grid field as CSV with columns `re,im,value_re,value_im`,
/// atomically.
pub fn write_csv(field: &GridField, path: &Path) -> Result<(), BeltramiError> {
    let grid = field.grid();
    let mut out = String::with_capacity(32 * grid.len());
    out.push_str("re,im,value_re,value_im\n");
    for row in 0..grid.size() {
        for col in 0..grid.size() {
            let z = grid.point(row, col);
            let value = field.value(row, col);
            out.push_str(&format!("{},{},{},{}\n", z.re, z.im, value.re, value.im));
        }
    }
    write_atomically(path, out.as_bytes())
}
