//! Tabulated spectra on regular wavelength grids.
//!
//! Every spectral quantity in the renderer (dye spectra, absorption and
//! scattering coefficients, light SPDs, film bins) is a [`SpectralDistribution`]
//! on a [`WavelengthGrid`]. Off-grid lookups interpolate linearly and vanish
//! outside the grid.

mod cie;
mod color;
mod csv;

pub use cie::{CIE_1931_2DEG, CIE_LAMBDA_MAX, CIE_LAMBDA_MIN};
pub use color::{cie_xyz_at, spd_to_rgb, spd_to_xyz, xyz_to_linear_srgb};
pub use csv::{parse_spectrum_csv, read_spectrum_csv, TabulatedSpectrum};

use crate::error::{Error, Result};

/// Regular wavelength sampling `lambda_min, lambda_min + step, ..., lambda_max` in nm.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct WavelengthGrid {
    lambda_min: f64,
    lambda_max: f64,
    step: f64,
}

impl Default for WavelengthGrid {
    /// 300-800 nm at 1 nm, 501 samples with inclusive endpoints.
    fn default() -> Self {
        WavelengthGrid { lambda_min: 300.0, lambda_max: 800.0, step: 1.0 }
    }
}

impl WavelengthGrid {
    pub fn new(lambda_min: f64, lambda_max: f64, step: f64) -> Result<Self> {
        if !(lambda_min.is_finite() && lambda_max.is_finite() && step.is_finite()) {
            return Err(Error::InvalidGrid("non-finite bounds".into()));
        }
        if lambda_min >= lambda_max {
            return Err(Error::InvalidGrid(format!("lambda_min {lambda_min} must be below lambda_max {lambda_max}")));
        }
        if step <= 0.0 {
            return Err(Error::InvalidGrid(format!("step {step} must be positive")));
        }
        let intervals = (lambda_max - lambda_min) / step;
        if (intervals - intervals.round()).abs() > 1e-9 * intervals.max(1.0) {
            return Err(Error::InvalidGrid(format!(
                "range {lambda_min}-{lambda_max} is not a multiple of step {step}"
            )));
        }
        Ok(WavelengthGrid { lambda_min, lambda_max, step })
    }

    pub fn lambda_min(&self) -> f64 {
        self.lambda_min
    }

    pub fn lambda_max(&self) -> f64 {
        self.lambda_max
    }

    pub fn step(&self) -> f64 {
        self.step
    }

    /// Number of samples, endpoints included.
    pub fn len(&self) -> usize {
        ((self.lambda_max - self.lambda_min) / self.step).round() as usize + 1
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn wavelength(&self, index: usize) -> f64 {
        self.lambda_min + index as f64 * self.step
    }

    pub fn wavelengths(&self) -> impl Iterator<Item = f64> + '_ {
        (0..self.len()).map(|i| self.wavelength(i))
    }

    pub fn contains(&self, lambda: f64) -> bool {
        let eps = 1e-9 * self.step;
        lambda >= self.lambda_min - eps && lambda <= self.lambda_max + eps
    }

    /// Index of the grid point at `lambda`, if `lambda` lies on the grid.
    pub fn index_of(&self, lambda: f64) -> Option<usize> {
        let i = self.nearest_index(lambda)?;
        ((self.wavelength(i) - lambda).abs() <= 1e-6 * self.step).then_some(i)
    }

    /// Closest grid point, or `None` outside the grid range.
    pub fn nearest_index(&self, lambda: f64) -> Option<usize> {
        if !self.contains(lambda) {
            return None;
        }
        let i = ((lambda - self.lambda_min) / self.step).round() as usize;
        Some(i.min(self.len() - 1))
    }
}

/// A non-negative function of wavelength tabulated on a grid.
#[derive(Clone, Debug, PartialEq)]
pub struct SpectralDistribution {
    grid: WavelengthGrid,
    values: Vec<f64>,
}

impl SpectralDistribution {
    pub fn new(grid: WavelengthGrid, values: Vec<f64>) -> Result<Self> {
        if values.len() != grid.len() {
            return Err(Error::InvariantViolation(format!(
                "{} values for a grid of {} samples",
                values.len(),
                grid.len()
            )));
        }
        if let Some((i, v)) = values.iter().enumerate().find(|(_, v)| !(v.is_finite() && **v >= 0.0)) {
            return Err(Error::InvariantViolation(format!(
                "value {v} at {} nm is negative or non-finite",
                grid.wavelength(i)
            )));
        }
        Ok(SpectralDistribution { grid, values })
    }

    pub fn zeros(grid: WavelengthGrid) -> Self {
        SpectralDistribution { grid, values: vec![0.0; grid.len()] }
    }

    pub fn constant(grid: WavelengthGrid, value: f64) -> Self {
        assert!(value >= 0.0 && value.is_finite());
        SpectralDistribution { grid, values: vec![value; grid.len()] }
    }

    /// Tabulates `f` at every grid wavelength. Negative results are clamped to 0.
    pub fn from_fn(grid: WavelengthGrid, f: impl Fn(f64) -> f64) -> Self {
        let values = grid.wavelengths().map(|l| f(l).max(0.0)).collect();
        SpectralDistribution { grid, values }
    }

    /// A single-sample impulse at the grid point nearest `lambda`; all zero if
    /// `lambda` is off the grid.
    pub fn monochromatic(grid: WavelengthGrid, lambda: f64, value: f64) -> Self {
        let mut s = Self::zeros(grid);
        if let Some(i) = grid.nearest_index(lambda) {
            s.values[i] = value.max(0.0);
        }
        s
    }

    pub fn grid(&self) -> &WavelengthGrid {
        &self.grid
    }

    pub fn values(&self) -> &[f64] {
        &self.values
    }

    /// Value at grid index `i`.
    #[inline]
    pub fn at(&self, i: usize) -> f64 {
        self.values[i]
    }

    /// Linear interpolation between grid samples; 0 outside the grid.
    pub fn value_at(&self, lambda: f64) -> f64 {
        let g = &self.grid;
        if !g.contains(lambda) {
            return 0.0;
        }
        let x = ((lambda - g.lambda_min) / g.step).max(0.0);
        let i = x.floor() as usize;
        if i + 1 >= self.values.len() {
            return self.values[self.values.len() - 1];
        }
        let f = x - i as f64;
        self.values[i] * (1.0 - f) + self.values[i + 1] * f
    }

    pub fn resample(&self, dst: &WavelengthGrid) -> SpectralDistribution {
        if *dst == self.grid {
            return self.clone();
        }
        SpectralDistribution::from_fn(*dst, |l| self.value_at(l))
    }

    /// Trapezoidal integral over the grid.
    pub fn integrate(&self) -> f64 {
        trapezoid(&self.values, self.grid.step)
    }

    /// Rescales to unit integral.
    pub fn normalize_pdf(&self) -> Result<SpectralDistribution> {
        let total = self.integrate();
        if total <= 0.0 {
            return Err(Error::ZeroSpectrum);
        }
        Ok(self.scaled(1.0 / total))
    }

    /// Rescales so the largest sample is 1.
    pub fn normalize_peak(&self) -> Result<SpectralDistribution> {
        let peak = self.max_value();
        if peak <= 0.0 {
            return Err(Error::ZeroSpectrum);
        }
        Ok(self.scaled(1.0 / peak))
    }

    pub fn scaled(&self, k: f64) -> SpectralDistribution {
        assert!(k >= 0.0 && k.is_finite());
        SpectralDistribution { grid: self.grid, values: self.values.iter().map(|v| v * k).collect() }
    }

    pub fn max_value(&self) -> f64 {
        self.values.iter().copied().fold(0.0, f64::max)
    }

    /// Wavelength of the largest sample (first one on ties); `None` if all zero.
    pub fn peak_wavelength(&self) -> Option<f64> {
        let peak = self.max_value();
        if peak <= 0.0 {
            return None;
        }
        let i = self.values.iter().position(|&v| v == peak)?;
        Some(self.grid.wavelength(i))
    }

    /// First and last grid wavelengths with a nonzero value.
    pub fn support(&self) -> Option<(f64, f64)> {
        let first = self.values.iter().position(|&v| v > 0.0)?;
        let last = self.values.iter().rposition(|&v| v > 0.0)?;
        Some((self.grid.wavelength(first), self.grid.wavelength(last)))
    }

    pub fn is_zero(&self) -> bool {
        self.values.iter().all(|&v| v == 0.0)
    }

    /// Inverse-CDF sampling helper for this spectrum treated as a density.
    pub fn sampler(&self) -> Result<WavelengthSampler> {
        WavelengthSampler::new(self)
    }

    /// Draws a wavelength with density proportional to this spectrum.
    ///
    /// Returns the wavelength and the per-nm density at it. Builds the CDF on
    /// every call; use [`sampler`](Self::sampler) in loops.
    pub fn sample_wavelength(&self, u: f64) -> Result<(f64, f64)> {
        Ok(self.sampler()?.sample(u))
    }
}

pub(crate) fn trapezoid(values: &[f64], step: f64) -> f64 {
    match values {
        [] | [_] => 0.0,
        [first, inner @ .., last] => step * (0.5 * (first + last) + inner.iter().sum::<f64>()),
    }
}

/// Precomputed CDF of a piecewise-linear density.
#[derive(Clone, Debug)]
pub struct WavelengthSampler {
    grid: WavelengthGrid,
    values: Vec<f64>,
    /// `cdf[i]` is the unnormalized mass below `grid.wavelength(i)`.
    cdf: Vec<f64>,
}

impl WavelengthSampler {
    pub fn new(spectrum: &SpectralDistribution) -> Result<Self> {
        let h = spectrum.grid.step;
        let values = spectrum.values.clone();
        let mut cdf = Vec::with_capacity(values.len());
        let mut acc = 0.0;
        cdf.push(0.0);
        for w in values.windows(2) {
            acc += 0.5 * h * (w[0] + w[1]);
            cdf.push(acc);
        }
        if acc <= 0.0 {
            return Err(Error::ZeroSpectrum);
        }
        Ok(WavelengthSampler { grid: spectrum.grid, values, cdf })
    }

    pub fn total(&self) -> f64 {
        *self.cdf.last().unwrap()
    }

    /// Maps `u` in [0,1) to `(wavelength, density)`; density is per nm and
    /// normalized by the total mass.
    pub fn sample(&self, u: f64) -> (f64, f64) {
        let total = self.total();
        let target = u.clamp(0.0, 1.0) * total;
        // first segment whose upper cdf exceeds the target: never a zero-mass one
        let seg = self.cdf[1..].partition_point(|&c| c <= target).min(self.values.len() - 2);
        let h = self.grid.step;
        let (p0, p1) = (self.values[seg], self.values[seg + 1]);
        let r = (target - self.cdf[seg]).max(0.0);
        let x = if r == 0.0 {
            0.0
        } else {
            // root of p0*x + (p1-p0)*x^2/(2h) = r, in the cancellation-free form
            let disc = (p0 * p0 + 2.0 * (p1 - p0) * r / h).max(0.0);
            (2.0 * r / (p0 + disc.sqrt())).min(h)
        };
        let density = (p0 + (p1 - p0) * x / h) / total;
        (self.grid.wavelength(seg) + x, density)
    }
}
