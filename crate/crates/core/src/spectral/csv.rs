//! `wavelength_nm,value` spectrum files.

use std::path::Path;

use super::{SpectralDistribution, WavelengthGrid};
use crate::error::{Error, Result};

/// Spectrum samples at arbitrary, strictly increasing wavelengths.
#[derive(Clone, Debug, PartialEq)]
pub struct TabulatedSpectrum {
    points: Vec<(f64, f64)>,
}

impl TabulatedSpectrum {
    pub fn new(points: Vec<(f64, f64)>) -> Result<Self> {
        if points.is_empty() {
            return Err(Error::InvariantViolation("empty spectrum".into()));
        }
        if points.windows(2).any(|w| w[1].0 <= w[0].0) {
            return Err(Error::InvariantViolation("wavelengths must be strictly increasing".into()));
        }
        if points.iter().any(|&(_, v)| !(v >= 0.0 && v.is_finite())) {
            return Err(Error::InvariantViolation("negative or non-finite value".into()));
        }
        Ok(TabulatedSpectrum { points })
    }

    pub fn points(&self) -> &[(f64, f64)] {
        &self.points
    }

    /// Linear interpolation inside the tabulated range, 0 outside. A
    /// single-point table is nonzero only at its own wavelength.
    pub fn value_at(&self, lambda: f64) -> f64 {
        let pts = &self.points;
        let (first, last) = (pts[0], pts[pts.len() - 1]);
        if lambda < first.0 || lambda > last.0 {
            return 0.0;
        }
        if pts.len() == 1 {
            return first.1;
        }
        let j = pts.partition_point(|p| p.0 < lambda).max(1);
        let (a, b) = (pts[j - 1], pts[j]);
        if lambda == b.0 {
            return b.1;
        }
        let f = (lambda - a.0) / (b.0 - a.0);
        a.1 + (b.1 - a.1) * f
    }

    pub fn resample(&self, grid: &WavelengthGrid) -> SpectralDistribution {
        SpectralDistribution::from_fn(*grid, |l| self.value_at(l))
    }
}

/// Parses a spectrum CSV: one header line, then `wavelength_nm,value` rows.
///
/// Blank lines are skipped; CRLF line endings are accepted. `origin` only
/// labels errors.
pub fn parse_spectrum_csv(text: &str, origin: &Path) -> Result<TabulatedSpectrum> {
    let malformed = |line: usize, message: String| Error::MalformedCsv { path: origin.to_path_buf(), line, message };
    let mut lines = text.lines().enumerate().map(|(i, l)| (i + 1, l.trim()));
    match lines.by_ref().find(|(_, l)| !l.is_empty()) {
        Some(_) => {}
        None => return Err(malformed(1, "empty file".into())),
    }
    let mut points: Vec<(f64, f64)> = Vec::new();
    for (line, row) in lines {
        if row.is_empty() {
            continue;
        }
        let mut fields = row.split(',').map(str::trim);
        let (Some(w), Some(v)) = (fields.next(), fields.next()) else {
            return Err(malformed(line, format!("expected two columns, got `{row}`")));
        };
        let w: f64 = w.parse().map_err(|e| malformed(line, format!("wavelength `{w}`: {e}")))?;
        let v: f64 = v.parse().map_err(|e| malformed(line, format!("value `{v}`: {e}")))?;
        if !w.is_finite() || w <= 0.0 {
            return Err(malformed(line, format!("invalid wavelength {w}")));
        }
        if !v.is_finite() || v < 0.0 {
            return Err(malformed(line, format!("negative or non-finite value {v}")));
        }
        if let Some(&(prev, _)) = points.last() {
            if w <= prev {
                return Err(malformed(line, format!("wavelength {w} not above {prev}")));
            }
        }
        points.push((w, v));
    }
    if points.is_empty() {
        return Err(malformed(1, "no data rows".into()));
    }
    TabulatedSpectrum::new(points)
}

pub fn read_spectrum_csv(path: &Path) -> Result<TabulatedSpectrum> {
    let text = match std::fs::read_to_string(path) {
        Ok(t) => t,
        Err(e) if e.kind() == std::io::ErrorKind::NotFound => return Err(Error::MissingFile(path.to_path_buf())),
        Err(e) => return Err(e.into()),
    };
    parse_spectrum_csv(&text, path)
}
