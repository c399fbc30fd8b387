//! Homogeneous participating media with dissolved dyes.

pub mod phase;

use glam::DVec3;

use crate::error::{Error, Result};
use crate::fluorophore::DissolvedFluorophore;
use crate::spectral::{SpectralDistribution, WavelengthGrid};

/// Pure-water scattering coefficient in m⁻¹ (λ^-4.32 power law, 0.003 m⁻¹ at 500 nm).
pub fn water_scattering(lambda: f64) -> f64 {
    0.003 * (500.0 / lambda).powf(4.32)
}

/// What happens at a collision inside a medium.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum MediumEvent {
    ElasticScatter,
    /// Fluorescence by the dye at this index in [`Medium::fluorophores`].
    FluorescentEmission {
        dye: usize,
    },
    Absorbed,
}

impl MediumEvent {
    pub fn is_inelastic(&self) -> bool {
        matches!(self, MediumEvent::FluorescentEmission { .. })
    }
}

/// A classified collision and its estimator weight: the event's coefficient
/// over σ_t, divided by the probability of having picked it. Equals 1 when
/// event probabilities are plain coefficient ratios.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Collision {
    pub event: MediumEvent,
    pub weight: f64,
}

/// Event probabilities at one wavelength.
#[derive(Clone, Debug, PartialEq)]
pub struct EventProbabilities {
    pub elastic: f64,
    /// One entry per dye.
    pub fluorescent: Vec<f64>,
    pub absorbed: f64,
    /// Weight attached to elastic and fluorescent picks.
    pub weight: f64,
}

#[derive(Clone, Debug)]
pub struct Medium {
    grid: WavelengthGrid,
    sigma_a_bg: SpectralDistribution,
    sigma_s_bg: SpectralDistribution,
    phase_g: f64,
    fluorophores: Vec<DissolvedFluorophore>,
    sigma_t: Vec<f64>,
    /// `dye_absorption[k][i]`: σ_a,f of dye k at grid index i.
    dye_absorption: Vec<Vec<f64>>,
    /// σ_f,k · Q_k per dye.
    fluorescence_rate: Vec<f64>,
}

impl Medium {
    /// Builds a medium on `grid`; coefficient spectra and dyes are resampled
    /// onto it.
    pub fn new(
        grid: WavelengthGrid,
        sigma_a_bg: &SpectralDistribution,
        sigma_s_bg: &SpectralDistribution,
        phase_g: f64,
        fluorophores: Vec<DissolvedFluorophore>,
    ) -> Result<Self> {
        if !(phase_g > -1.0 && phase_g < 1.0) {
            return Err(Error::InvariantViolation(format!("phase asymmetry {phase_g} outside (-1, 1)")));
        }
        let sigma_a_bg = sigma_a_bg.resample(&grid);
        let sigma_s_bg = sigma_s_bg.resample(&grid);
        let fluorophores = fluorophores
            .into_iter()
            .map(|f| {
                if f.dye().grid() == &grid {
                    Ok(f)
                } else {
                    let dye = std::sync::Arc::new(f.dye().on_grid(&grid)?);
                    DissolvedFluorophore::new(dye, f.concentration())
                }
            })
            .collect::<Result<Vec<_>>>()?;
        let dye_absorption: Vec<Vec<f64>> =
            fluorophores.iter().map(|f| grid.wavelengths().map(|l| f.absorption_coefficient(l)).collect()).collect();
        let sigma_t = (0..grid.len())
            .map(|i| sigma_a_bg.at(i) + sigma_s_bg.at(i) + dye_absorption.iter().map(|a| a[i]).sum::<f64>())
            .collect();
        let fluorescence_rate =
            fluorophores.iter().map(|f| f.interaction_coefficient() * f.dye().quantum_yield()).collect();
        Ok(Medium { grid, sigma_a_bg, sigma_s_bg, phase_g, fluorophores, sigma_t, dye_absorption, fluorescence_rate })
    }

    /// A dye-free medium.
    pub fn elastic(
        grid: WavelengthGrid,
        sigma_a: &SpectralDistribution,
        sigma_s: &SpectralDistribution,
        phase_g: f64,
    ) -> Result<Self> {
        Self::new(grid, sigma_a, sigma_s, phase_g, Vec::new())
    }

    pub fn grid(&self) -> &WavelengthGrid {
        &self.grid
    }

    pub fn phase_g(&self) -> f64 {
        self.phase_g
    }

    pub fn fluorophores(&self) -> &[DissolvedFluorophore] {
        &self.fluorophores
    }

    pub fn sigma_a_background(&self) -> &SpectralDistribution {
        &self.sigma_a_bg
    }

    pub fn sigma_s_background(&self) -> &SpectralDistribution {
        &self.sigma_s_bg
    }

    /// σ_t at grid index `i`.
    #[inline]
    pub fn sigma_t_at(&self, i: usize) -> f64 {
        self.sigma_t[i]
    }

    /// σ_t(λ) = σ_a,bg + σ_s,bg + Σ σ_a,f; interpolated between grid samples.
    pub fn sigma_t(&self, lambda: f64) -> f64 {
        self.sigma_a_bg.value_at(lambda)
            + self.sigma_s_bg.value_at(lambda)
            + self.fluorophores.iter().map(|f| f.absorption_coefficient(lambda)).sum::<f64>()
    }

    /// Collision rate of fluorescent emission by dye `k`, independent of
    /// wavelength.
    pub fn fluorescence_rate(&self, k: usize) -> f64 {
        self.fluorescence_rate[k]
    }

    pub fn dye_absorption_at(&self, k: usize, i: usize) -> f64 {
        self.dye_absorption[k][i]
    }

    pub fn transmittance(&self, a: DVec3, b: DVec3, lambda: f64) -> f64 {
        (-self.sigma_t(lambda) * a.distance(b)).exp()
    }

    pub fn transmittance_at(&self, distance: f64, i: usize) -> f64 {
        (-self.sigma_t[i] * distance).exp()
    }

    /// Samples a free-flight distance with density σ_t·exp(−σ_t·t).
    pub fn sample_free_flight(&self, lambda: f64, u: f64) -> Result<(f64, f64)> {
        free_flight(self.sigma_t(lambda), u).ok_or(Error::VacuumMedium(lambda))
    }

    pub fn sample_free_flight_at(&self, i: usize, u: f64) -> Option<(f64, f64)> {
        free_flight(self.sigma_t[i], u)
    }

    /// Probabilities of each event at `lambda`, the wavelength the path carries.
    ///
    /// Dye k fluoresces at rate σ_f,k·Q_k, where σ_f,k is its absorption at the
    /// excitation peak. When σ_s + Σ σ_f,k·Q_k exceeds σ_t(λ) (the emission
    /// band lies mostly outside the absorption band) probabilities are taken
    /// relative to that sum and the pick is reweighted by it over σ_t.
    pub fn event_probabilities(&self, lambda: f64) -> EventProbabilities {
        let sigma_t = self.sigma_t(lambda);
        let sigma_s = self.sigma_s_bg.value_at(lambda);
        self.probabilities_from(sigma_t, sigma_s)
    }

    fn probabilities_from(&self, sigma_t: f64, sigma_s: f64) -> EventProbabilities {
        let scatter_total = sigma_s + self.fluorescence_rate.iter().sum::<f64>();
        let denom = sigma_t.max(scatter_total);
        if denom <= 0.0 {
            return EventProbabilities {
                elastic: 0.0,
                fluorescent: vec![0.0; self.fluorophores.len()],
                absorbed: 1.0,
                weight: 0.0,
            };
        }
        let elastic = sigma_s / denom;
        let fluorescent: Vec<f64> = self.fluorescence_rate.iter().map(|r| r / denom).collect();
        let absorbed = (1.0 - elastic - fluorescent.iter().sum::<f64>()).max(0.0);
        EventProbabilities { elastic, fluorescent, absorbed, weight: if sigma_t > 0.0 { denom / sigma_t } else { 0.0 } }
    }

    pub fn classify_event(&self, lambda: f64, u: f64) -> Collision {
        let p = self.event_probabilities(lambda);
        pick_event(p.elastic, p.fluorescent.iter().copied(), p.weight, u)
    }

    /// [`classify_event`](Self::classify_event) at a grid index, without allocation.
    pub fn classify_event_at(&self, i: usize, u: f64) -> Collision {
        let sigma_t = self.sigma_t[i];
        let sigma_s = self.sigma_s_bg.at(i);
        let scatter_total = sigma_s + self.fluorescence_rate.iter().sum::<f64>();
        let denom = sigma_t.max(scatter_total);
        if denom <= 0.0 || sigma_t <= 0.0 {
            return Collision { event: MediumEvent::Absorbed, weight: 0.0 };
        }
        pick_event(sigma_s / denom, self.fluorescence_rate.iter().map(|r| r / denom), denom / sigma_t, u)
    }
}

fn free_flight(sigma_t: f64, u: f64) -> Option<(f64, f64)> {
    if sigma_t <= 0.0 {
        return None;
    }
    let t = -(-u).ln_1p() / sigma_t;
    Some((t, sigma_t * (-sigma_t * t).exp()))
}

fn pick_event(elastic: f64, fluorescent: impl Iterator<Item = f64>, weight: f64, u: f64) -> Collision {
    if u < elastic {
        return Collision { event: MediumEvent::ElasticScatter, weight };
    }
    let mut acc = elastic;
    for (dye, p) in fluorescent.enumerate() {
        acc += p;
        if u < acc {
            return Collision { event: MediumEvent::FluorescentEmission { dye }, weight };
        }
    }
    Collision { event: MediumEvent::Absorbed, weight: 0.0 }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fluorophore::Fluorophore;
    use approx::assert_relative_eq;
    use rand::{Rng, SeedableRng};
    use std::sync::Arc;

    fn grid() -> WavelengthGrid {
        WavelengthGrid::new(400.0, 700.0, 1.0).unwrap()
    }

    fn constant(v: f64) -> SpectralDistribution {
        SpectralDistribution::constant(grid(), v)
    }

    /// Dye absorbing with peak at 500 nm and emitting at 550 nm.
    fn dye(q: f64) -> Arc<Fluorophore> {
        let g = grid();
        let ex = SpectralDistribution::from_fn(g, |l| (-(l - 500.0f64).powi(2) / 200.0).exp());
        let em = SpectralDistribution::from_fn(g, |l| (-(l - 550.0f64).powi(2) / 200.0).exp());
        Arc::new(Fluorophore::new("d", &ex, &em, 1e4, q, 100.0).unwrap())
    }

    #[test]
    fn transmittance_analytic() {
        let m = Medium::elastic(grid(), &constant(0.0), &constant(0.0), 0.0).unwrap();
        assert_eq!(m.transmittance(DVec3::ZERO, DVec3::X, 500.0), 1.0);
        let m = Medium::elastic(grid(), &constant(0.25), &constant(0.75), 0.0).unwrap();
        let b = DVec3::new(2f64.ln(), 0.0, 0.0);
        assert_relative_eq!(m.transmittance(DVec3::ZERO, b, 500.0), 0.5, epsilon = 1e-15);
    }

    #[test]
    fn transmittance_multiplicative_over_splits() {
        let mut rng = rand_pcg::Pcg64Mcg::seed_from_u64(3);
        for _ in 0..100 {
            let s: f64 = rng.random_range(0.0..20.0);
            let m = Medium::elastic(grid(), &constant(s * 0.3), &constant(s * 0.7), 0.0).unwrap();
            let a = DVec3::new(rng.random(), rng.random(), rng.random());
            let c = a + DVec3::new(rng.random(), rng.random(), rng.random());
            let b = a.lerp(c, rng.random());
            let whole = m.transmittance(a, c, 450.0);
            let split = m.transmittance(a, b, 450.0) * m.transmittance(b, c, 450.0);
            assert!((whole - split).abs() <= 1e-12, "{whole} vs {split}");
        }
    }

    #[test]
    fn free_flight_inverse_cdf() {
        let m = Medium::elastic(grid(), &constant(0.0), &constant(2.0), 0.0).unwrap();
        assert_eq!(m.sample_free_flight(500.0, 0.0).unwrap().0, 0.0);
        let (t, pdf) = m.sample_free_flight(500.0, 1.0 - (-2.0f64).exp()).unwrap();
        assert_relative_eq!(t, 1.0, epsilon = 1e-12);
        assert_relative_eq!(pdf, 2.0 * (-2.0f64).exp(), epsilon = 1e-12);
        let vacuum = Medium::elastic(grid(), &constant(0.0), &constant(0.0), 0.0).unwrap();
        assert!(matches!(vacuum.sample_free_flight(500.0, 0.3), Err(Error::VacuumMedium(_))));
    }

    #[test]
    fn elastic_only_medium_always_scatters() {
        let m = Medium::elastic(grid(), &constant(0.0), &constant(5.0), 0.3).unwrap();
        for u in [0.0, 0.5, 0.999_999] {
            assert_eq!(m.classify_event(500.0, u).event, MediumEvent::ElasticScatter);
            assert_eq!(m.classify_event(500.0, u).weight, 1.0);
        }
    }

    #[test]
    fn equal_scattering_and_dye_gives_half() {
        let d = DissolvedFluorophore::new(dye(1.0), 1e-2).unwrap();
        let sigma_f = d.interaction_coefficient();
        let m = Medium::new(grid(), &constant(0.0), &constant(sigma_f), 0.0, vec![d]).unwrap();
        // at the excitation peak σ_a,f(λ) equals the fluorescence rate
        let p = m.event_probabilities(500.0);
        assert_relative_eq!(p.fluorescent[0], 0.5, epsilon = 1e-12);
        assert_relative_eq!(p.elastic, 0.5, epsilon = 1e-12);
        assert_relative_eq!(p.weight, 1.0, epsilon = 1e-12);
    }

    #[test]
    fn zero_quantum_yield_never_fluoresces() {
        let d = DissolvedFluorophore::new(dye(0.0), 10.0).unwrap();
        let m = Medium::new(grid(), &constant(0.0), &constant(1.0), 0.0, vec![d]).unwrap();
        for l in [450.0, 500.0, 550.0, 650.0] {
            assert_eq!(m.event_probabilities(l).fluorescent[0], 0.0);
        }
    }

    #[test]
    fn probabilities_sum_to_one() {
        let d1 = DissolvedFluorophore::new(dye(0.8), 1e-3).unwrap();
        let d2 = DissolvedFluorophore::new(dye(0.3), 5e-3).unwrap();
        let m = Medium::new(grid(), &constant(0.2), &constant(1.0), 0.0, vec![d1, d2]).unwrap();
        for l in [420.0, 500.0, 560.0, 690.0] {
            let p = m.event_probabilities(l);
            let total = p.elastic + p.fluorescent.iter().sum::<f64>() + p.absorbed;
            assert!((total - 1.0).abs() < 1e-12);
            assert!(p.weight >= 1.0);
        }
    }

    #[test]
    fn collision_estimator_is_unbiased() {
        // E[weight · 1{event}] must equal coefficient / σ_t for each event kind
        let d = DissolvedFluorophore::new(dye(0.9), 2e-3).unwrap();
        let m = Medium::new(grid(), &constant(0.1), &constant(0.5), 0.0, vec![d]).unwrap();
        let i = 150; // 550 nm, outside most of the absorption band
        let sigma_t = m.sigma_t_at(i);
        let steps = 200_000;
        let (mut el, mut fl) = (0.0, 0.0);
        for s in 0..steps {
            let u = (s as f64 + 0.5) / steps as f64;
            let c = m.classify_event_at(i, u);
            match c.event {
                MediumEvent::ElasticScatter => el += c.weight,
                MediumEvent::FluorescentEmission { .. } => fl += c.weight,
                MediumEvent::Absorbed => {}
            }
        }
        assert_relative_eq!(el / steps as f64, 0.5 / sigma_t, epsilon = 1e-4);
        assert_relative_eq!(fl / steps as f64, m.fluorescence_rate(0) / sigma_t, epsilon = 1e-4);
    }

    #[test]
    fn transmittance_decreases_with_concentration() {
        let lo = DissolvedFluorophore::new(dye(0.5), 1e-3).unwrap();
        let hi = DissolvedFluorophore::new(dye(0.5), 2e-3).unwrap();
        let m_lo = Medium::new(grid(), &constant(0.0), &constant(1.0), 0.0, vec![lo]).unwrap();
        let m_hi = Medium::new(grid(), &constant(0.0), &constant(1.0), 0.0, vec![hi]).unwrap();
        let b = DVec3::new(0.0, 0.0, 0.1);
        assert!(m_hi.transmittance(DVec3::ZERO, b, 500.0) < m_lo.transmittance(DVec3::ZERO, b, 500.0));
        assert!(m_lo.transmittance(DVec3::ZERO, 2.0 * b, 500.0) < m_lo.transmittance(DVec3::ZERO, b, 500.0));
    }

    #[test]
    fn rejects_bad_asymmetry() {
        assert!(Medium::elastic(grid(), &constant(0.0), &constant(1.0), 1.0).is_err());
    }
}
