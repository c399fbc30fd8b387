//! Spectroscopic checks of rendered fluorescence.
//!
//! * Profile: the peak-normalized scene SPD of a dye sample lit at its
//!   excitation maximum should match the dye's emission spectrum.
//! * Scaling: lighting the same sample at other wavelengths should scale the
//!   emitted energy by the excitation spectrum, leaving the profile unchanged.

use std::fmt;
use std::path::{Path, PathBuf};

use crate::error::{Error, Result};
use crate::film::{Film, RegionSpd};
use crate::fluorophore::{canonical_name, Fluorophore};
use crate::integrator::{render, RenderConfig};
use crate::scene::{SceneDescription, SceneLoader};
use crate::spectral::SpectralDistribution;
use crate::Scene;

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Tolerances {
    pub normalized_rmse: f64,
    pub peak_error_nm: f64,
    pub scaling: f64,
}

impl Default for Tolerances {
    fn default() -> Self {
        Tolerances { normalized_rmse: 0.05, peak_error_nm: 5.0, scaling: 0.1 }
    }
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct ProfileComparison {
    pub normalized_rmse: f64,
    pub peak_error_nm: f64,
}

/// Peak-normalizes both spectra and compares them over the union of their
/// supports. `reference` is resampled onto `rendered`'s grid if needed.
pub fn compare_profiles(
    rendered: &SpectralDistribution,
    reference: &SpectralDistribution,
) -> Result<ProfileComparison> {
    let a = rendered.normalize_peak()?;
    let b = reference.resample(rendered.grid()).normalize_peak()?;
    let (mut sum, mut count) = (0.0, 0usize);
    for (x, y) in a.values().iter().zip(b.values()) {
        if *x > 0.0 || *y > 0.0 {
            sum += (x - y) * (x - y);
            count += 1;
        }
    }
    let peak = |s: &SpectralDistribution| s.peak_wavelength().ok_or(Error::ZeroSpectrum);
    Ok(ProfileComparison { normalized_rmse: (sum / count as f64).sqrt(), peak_error_nm: (peak(&a)? - peak(&b)?).abs() })
}

/// f_x(λ)/f_x(λ_max) at each requested excitation wavelength.
pub fn expected_scaling(dye: &Fluorophore, excitation_lambdas: &[f64]) -> Vec<f64> {
    let fx = dye.excitation();
    let max = fx.value_at(dye.excitation_peak());
    excitation_lambdas.iter().map(|l| fx.value_at(*l) / max).collect()
}

/// The excitation peak plus grid wavelengths on its blue flank where f_x
/// first reaches 0.75, 0.5 and 0.25.
pub fn default_scaling_wavelengths(dye: &Fluorophore) -> Vec<f64> {
    let fx = dye.excitation();
    let grid = fx.grid();
    let peak = dye.excitation_peak();
    let mut out = vec![peak];
    let peak_i = grid.nearest_index(peak).unwrap_or(0);
    for level in [0.75, 0.5, 0.25] {
        if let Some(i) = (0..peak_i).rev().find(|&i| fx.at(i) <= level) {
            out.push(grid.wavelength(i));
        }
    }
    out
}

#[derive(Clone, Debug, PartialEq)]
pub struct ScalingPoint {
    pub excitation: f64,
    pub measured: f64,
    pub expected: f64,
    /// Profile RMSE against the SPD at the excitation maximum; `None` when
    /// nothing was emitted.
    pub profile_rmse: Option<f64>,
}

#[derive(Clone, Debug, PartialEq)]
pub struct ValidationReport {
    pub dye: String,
    pub profile: Option<ProfileComparison>,
    pub scaling_points: Vec<ScalingPoint>,
    pub tolerances: Tolerances,
    pub pass: bool,
}

impl ValidationReport {
    fn evaluate(&mut self) {
        let t = self.tolerances;
        let profile_ok =
            self.profile.is_none_or(|p| p.normalized_rmse < t.normalized_rmse && p.peak_error_nm <= t.peak_error_nm);
        let scaling_ok = self.scaling_points.iter().all(|p| {
            (p.measured - p.expected).abs() < t.scaling && p.profile_rmse.is_none_or(|r| r < t.normalized_rmse)
        });
        self.pass = profile_ok && scaling_ok;
    }

    /// Merges the checks of two reports on the same dye.
    pub fn combine(mut self, other: ValidationReport) -> ValidationReport {
        self.profile = self.profile.or(other.profile);
        self.scaling_points.extend(other.scaling_points);
        self.evaluate();
        self
    }

    pub fn to_csv(&self) -> String {
        let mut out = String::from("dye,check,excitation_nm,measured,expected,normalized_rmse,peak_error_nm\n");
        if let Some(p) = &self.profile {
            out += &format!("{},profile,,,,{},{}\n", self.dye, p.normalized_rmse, p.peak_error_nm);
        }
        for s in &self.scaling_points {
            let rmse = s.profile_rmse.map(|r| r.to_string()).unwrap_or_default();
            out += &format!("{},scaling,{},{},{},{},\n", self.dye, s.excitation, s.measured, s.expected, rmse);
        }
        out
    }

    /// Writes `<basename>.csv` and `<basename>.txt`.
    pub fn write(&self, basename: &Path) -> Result<(PathBuf, PathBuf)> {
        let with = |s: &str| {
            let mut p = basename.as_os_str().to_owned();
            p.push(s);
            PathBuf::from(p)
        };
        let (csv, txt) = (with(".csv"), with(".txt"));
        std::fs::write(&csv, self.to_csv())?;
        std::fs::write(&txt, self.to_string())?;
        Ok((csv, txt))
    }
}

impl fmt::Display for ValidationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let t = self.tolerances;
        writeln!(f, "dye {}: {}", self.dye, if self.pass { "PASS" } else { "FAIL" })?;
        if let Some(p) = &self.profile {
            writeln!(
                f,
                "  profile: normalized RMSE {:.4} (< {}), peak error {:.1} nm (<= {} nm)",
                p.normalized_rmse, t.normalized_rmse, p.peak_error_nm, t.peak_error_nm
            )?;
        }
        for s in &self.scaling_points {
            write!(
                f,
                "  excitation {:.0} nm: measured {:.4}, expected {:.4} (±{})",
                s.excitation, s.measured, s.expected, t.scaling
            )?;
            match s.profile_rmse {
                Some(r) => writeln!(f, ", profile RMSE {r:.4}")?,
                None => writeln!(f)?,
            }
        }
        Ok(())
    }
}

/// Render settings for validation runs; unset fields keep the scene's values.
#[derive(Clone, Debug, Default)]
pub struct ValidationConfig {
    pub spp: Option<u32>,
    pub resolution: Option<(u32, u32)>,
    pub seed: Option<u64>,
    pub threads: usize,
    pub tolerances: Tolerances,
}

/// A dye sample scene plus what is needed to re-light and render it.
pub struct Protocol<'a> {
    template: &'a SceneDescription,
    loader: &'a SceneLoader,
    config: ValidationConfig,
    dye: Fluorophore,
}

impl<'a> Protocol<'a> {
    /// `dye` must be dissolved in one of the template's media.
    pub fn new(
        template: &'a SceneDescription,
        loader: &'a SceneLoader,
        dye: &str,
        config: ValidationConfig,
    ) -> Result<Self> {
        let mut desc = template.clone();
        desc.camera.resolution = [1, 1];
        let scene = desc.build(loader)?;
        let key = canonical_name(dye);
        let found = scene
            .media()
            .iter()
            .flat_map(|m| m.fluorophores())
            .find(|f| f.dye().name() == key)
            .ok_or_else(|| Error::UnknownFluorophore(dye.to_string()))?;
        Ok(Protocol { template, loader, config, dye: found.dye().clone() })
    }

    pub fn dye(&self) -> &Fluorophore {
        &self.dye
    }

    fn scene_at(&self, excitation: f64) -> Result<Scene> {
        let mut desc = self.template.clone();
        desc.set_monochromatic_lights(excitation);
        if let Some((w, h)) = self.config.resolution {
            desc.camera.resolution = [w, h];
        }
        desc.build(self.loader)
    }

    /// Renders with all lights at `excitation`.
    pub fn render_at(&self, excitation: f64) -> Result<Film> {
        let scene = self.scene_at(excitation)?;
        let mut cfg = RenderConfig::from_scene(&scene);
        cfg.elastic_component = false;
        cfg.threads = self.config.threads;
        if let Some(spp) = self.config.spp {
            cfg.spp = spp;
        }
        if let Some(seed) = self.config.seed {
            cfg.seed = seed;
        }
        render(&scene, &cfg)
    }

    fn report(&self) -> ValidationReport {
        ValidationReport {
            dye: self.dye.name().to_string(),
            profile: None,
            scaling_points: Vec::new(),
            tolerances: self.config.tolerances,
            pass: false,
        }
    }

    /// Lights the sample at the excitation maximum and compares the scene SPD
    /// with the emission spectrum.
    pub fn profile_test(&self) -> Result<(ValidationReport, SpectralDistribution)> {
        let film = self.render_at(self.dye.excitation_peak())?;
        let spd = film.scene_spd(0.0, None)?;
        let mut report = self.report();
        report.profile = Some(compare_profiles(&spd, self.dye.emission())?);
        report.evaluate();
        Ok((report, spd))
    }

    /// Lights the sample at each wavelength and compares emitted energy, over
    /// the pixels lit at the excitation maximum, with the excitation spectrum.
    pub fn scaling_test(&self, excitation_lambdas: &[f64]) -> Result<ValidationReport> {
        let renders = self.scaling_renders(excitation_lambdas)?;
        self.scaling_report(&renders)
    }

    /// Scene SPDs at the excitation maximum followed by each requested
    /// wavelength, all over the pixels lit at the maximum.
    pub fn scaling_renders(&self, excitation_lambdas: &[f64]) -> Result<Vec<(f64, RegionSpd)>> {
        let grid = *self.dye.grid();
        if let Some(l) = excitation_lambdas.iter().find(|l| !grid.contains(**l)) {
            return Err(Error::validation("scaling test", format!("{l} nm is outside the render grid")));
        }
        let peak = self.dye.excitation_peak();
        let reference_film = self.render_at(peak)?;
        let mask = reference_film.illuminated_mask(0.0, None);
        let reference = reference_film.masked_spd(&mask)?;
        let mut out = vec![(peak, reference.clone())];
        for &lx in excitation_lambdas {
            let region = if lx == peak { reference.clone() } else { self.render_at(lx)?.masked_spd(&mask)? };
            out.push((lx, region));
        }
        Ok(out)
    }

    /// Report from [`scaling_renders`](Self::scaling_renders) output.
    pub fn scaling_report(&self, renders: &[(f64, RegionSpd)]) -> Result<ValidationReport> {
        let (_, reference) = renders.first().ok_or_else(|| Error::validation("scaling test", "no renders"))?;
        let mut report = self.report();
        for (lx, region) in &renders[1..] {
            let profile_rmse = if region.spd.is_zero() {
                None
            } else {
                Some(compare_profiles(&region.spd, &reference.spd)?.normalized_rmse)
            };
            report.scaling_points.push(ScalingPoint {
                excitation: *lx,
                measured: region.integral / reference.integral,
                expected: expected_scaling(&self.dye, &[*lx])[0],
                profile_rmse,
            });
        }
        report.evaluate();
        Ok(report)
    }
}
