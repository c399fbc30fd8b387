//! Spectral path tracing of highly scattering media that carry fluorescent dyes.
//!
//! Camera paths carry a single emission wavelength through a homogeneous
//! medium. Elastic collisions continue the walk; the first fluorescent
//! collision connects to a light at a sampled excitation wavelength, converts
//! the excitation to the carried emission wavelength, and ends the path. Paths
//! that never fluoresce contribute nothing.
//!
//! Modules, bottom up:
//!
//! * [`spectral`]: wavelength grids, tabulated spectra, sampling, colour.
//! * [`fluorophore`]: dye spectra, Beer-Lambert absorption and the
//!   excitation-to-emission conversion, plus the on-disk dye database.
//! * [`medium`]: extinction, transmittance, free flights, phase functions and
//!   collision classification.
//! * [`scene`]: geometry, materials, lights, camera and the JSON scene format.
//! * [`integrator`]: the path tracer, the parallel renderer and a quadrature
//!   reference for single-scatter slabs.
//! * [`film`]: spectral accumulation and image/SPD/raw output.
//! * [`validation`]: emission-profile and excitation-scaling checks.

pub mod error;
pub mod film;
pub mod fluorophore;
pub mod integrator;
pub mod medium;
pub mod scene;
pub mod spectral;
pub mod validation;

pub use error::{Error, Result};
pub use film::Film;
pub use fluorophore::{DissolvedFluorophore, Fluorophore, FluorophoreDb};
pub use integrator::{render, RenderConfig};
pub use medium::{Medium, MediumEvent};
pub use scene::Scene;
pub use spectral::{SpectralDistribution, WavelengthGrid};
