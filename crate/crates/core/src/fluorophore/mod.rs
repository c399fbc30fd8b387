//! Fluorescent dyes: intrinsic spectra, Beer-Lambert absorption, and the
//! excitation-to-emission conversion.

mod db;

pub use db::{canonical_name, FluorophoreDb};

use std::f64::consts::LN_10;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::spectral::{SpectralDistribution, WavelengthGrid, WavelengthSampler};

/// A dye's intrinsic optical identity.
#[derive(Clone, Debug)]
pub struct Fluorophore {
    name: String,
    display_name: String,
    /// Peak-normalized excitation (absorption) shape f_x.
    excitation: SpectralDistribution,
    /// Peak-normalized emission shape f_m.
    emission: SpectralDistribution,
    emission_integral: f64,
    emission_sampler: WavelengthSampler,
    /// L·mol⁻¹·cm⁻¹ at the excitation peak.
    epsilon_max: f64,
    quantum_yield: f64,
    /// g·mol⁻¹
    molecular_weight: f64,
}

impl Fluorophore {
    /// Builds a dye from spectra in any relative units; both are rescaled to
    /// unit peak.
    pub fn new(
        name: impl Into<String>,
        excitation: &SpectralDistribution,
        emission: &SpectralDistribution,
        epsilon_max: f64,
        quantum_yield: f64,
        molecular_weight: f64,
    ) -> Result<Self> {
        let name = name.into();
        let bad = |msg: String| Error::InvariantViolation(format!("fluorophore {name}: {msg}"));
        if !(0.0..=1.0).contains(&quantum_yield) {
            return Err(bad(format!("quantum yield {quantum_yield} outside [0, 1]")));
        }
        if !(molecular_weight > 0.0 && molecular_weight.is_finite()) {
            return Err(bad(format!("molecular weight {molecular_weight} must be positive")));
        }
        if !(epsilon_max >= 0.0 && epsilon_max.is_finite()) {
            return Err(bad(format!("molar absorptivity {epsilon_max} must be non-negative")));
        }
        if excitation.grid() != emission.grid() {
            return Err(bad("excitation and emission on different grids".into()));
        }
        let excitation = excitation.normalize_peak()?;
        let emission = emission.normalize_peak()?;
        let (ex_peak, em_peak) = (excitation.peak_wavelength().unwrap(), emission.peak_wavelength().unwrap());
        if em_peak < ex_peak {
            return Err(bad(format!("emission peak {em_peak} nm below excitation peak {ex_peak} nm")));
        }
        let emission_integral = emission.integrate();
        let emission_sampler = emission.normalize_pdf()?.sampler()?;
        Ok(Fluorophore {
            display_name: name.clone(),
            name,
            excitation,
            emission,
            emission_integral,
            emission_sampler,
            epsilon_max,
            quantum_yield,
            molecular_weight,
        })
    }

    pub fn with_display_name(mut self, display_name: impl Into<String>) -> Self {
        self.display_name = display_name.into();
        self
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn display_name(&self) -> &str {
        &self.display_name
    }

    pub fn excitation(&self) -> &SpectralDistribution {
        &self.excitation
    }

    pub fn emission(&self) -> &SpectralDistribution {
        &self.emission
    }

    pub fn grid(&self) -> &WavelengthGrid {
        self.excitation.grid()
    }

    pub fn epsilon_max(&self) -> f64 {
        self.epsilon_max
    }

    pub fn quantum_yield(&self) -> f64 {
        self.quantum_yield
    }

    pub fn molecular_weight(&self) -> f64 {
        self.molecular_weight
    }

    pub fn excitation_peak(&self) -> f64 {
        self.excitation.peak_wavelength().unwrap()
    }

    pub fn emission_peak(&self) -> f64 {
        self.emission.peak_wavelength().unwrap()
    }

    /// Molar absorptivity ε(λ) = ε_max · f_x(λ), in L·mol⁻¹·cm⁻¹.
    pub fn molar_absorptivity(&self, lambda: f64) -> f64 {
        self.epsilon_max * self.excitation.value_at(lambda)
    }

    /// Fraction of re-emitted energy falling in a `delta_lambda` bin at `lambda`:
    /// f_m(λ)·δλ / ∫f_m.
    pub fn emission_fraction(&self, lambda: f64, delta_lambda: f64) -> f64 {
        self.emission.value_at(lambda) * delta_lambda / self.emission_integral
    }

    /// F_f(λx, λ) = f_m(λ)·δλ / ∫f_m(λ')dλ' · f_x(λx).
    ///
    /// Quantum yield is not part of this factor; it thins fluorescent
    /// collisions in the medium instead.
    pub fn excitation_to_emission(&self, lambda_x: f64, lambda: f64, delta_lambda: f64) -> f64 {
        debug_assert!(delta_lambda > 0.0);
        self.emission_fraction(lambda, delta_lambda) * self.excitation.value_at(lambda_x)
    }

    /// Samples an emission wavelength with density f_m / ∫f_m.
    pub fn sample_emission(&self, u: f64) -> (f64, f64) {
        self.emission_sampler.sample(u)
    }

    /// Same dye tabulated on another grid.
    pub fn on_grid(&self, grid: &WavelengthGrid) -> Result<Fluorophore> {
        if grid == self.grid() {
            return Ok(self.clone());
        }
        Ok(Fluorophore::new(
            self.name.clone(),
            &self.excitation.resample(grid),
            &self.emission.resample(grid),
            self.epsilon_max,
            self.quantum_yield,
            self.molecular_weight,
        )?
        .with_display_name(self.display_name.clone()))
    }
}

/// A dye dissolved at a mass concentration (g/L).
#[derive(Clone, Debug)]
pub struct DissolvedFluorophore {
    dye: Arc<Fluorophore>,
    concentration: f64,
}

impl DissolvedFluorophore {
    pub fn new(dye: Arc<Fluorophore>, concentration: f64) -> Result<Self> {
        if !(concentration >= 0.0 && concentration.is_finite()) {
            return Err(Error::InvariantViolation(format!(
                "concentration {concentration} g/L of {} must be non-negative",
                dye.name()
            )));
        }
        Ok(DissolvedFluorophore { dye, concentration })
    }

    pub fn dye(&self) -> &Fluorophore {
        &self.dye
    }

    pub fn dye_arc(&self) -> &Arc<Fluorophore> {
        &self.dye
    }

    /// g/L
    pub fn concentration(&self) -> f64 {
        self.concentration
    }

    /// mol/L
    pub fn molarity(&self) -> f64 {
        self.concentration / self.dye.molecular_weight
    }

    /// Beer-Lambert absorption coefficient in m⁻¹:
    /// ln(10) · ε(λ) [L·mol⁻¹·cm⁻¹] · molarity [mol·L⁻¹] · 100 [cm/m].
    pub fn absorption_coefficient(&self, lambda: f64) -> f64 {
        LN_10 * self.dye.molar_absorptivity(lambda) * self.molarity() * 100.0
    }

    /// The absorption coefficient at the excitation peak. Fluorescent
    /// collisions occur at this rate; the wavelength dependence of the
    /// absorption is carried by f_x inside F_f.
    pub fn interaction_coefficient(&self) -> f64 {
        LN_10 * self.dye.epsilon_max * self.molarity() * 100.0
    }
}
