//! Fluorescence path tracing.
//!
//! A camera path carries one emission wavelength λ. Inside a medium it
//! samples free flights at λ; elastic collisions scatter it by the phase
//! function; the first fluorescent collision connects to a light at an
//! excitation wavelength λx, converts λx to λ and ends the path. Paths that
//! never fluoresce contribute nothing unless the elastic component is
//! enabled.
//!
//! Contribution of the emission vertex x for dye k, with (light, λx) drawn
//! with probability ∝ f_x,k(λx)·L_l(λx)·A_l and y uniform on the light:
//!
//! ```text
//! β · w · f_m,k(λ)δλ/∫f_m,k · Z_k/(4π) · T(x↔y, λx) · cos θ_y / |x − y|²
//! ```
//!
//! where β is the path throughput, w the collision weight and
//! Z_k = Σ_l Σ_λx f_x,k(λx)·L_l(λx)·A_l.

mod reference;
mod rng;

pub use reference::{single_scatter_reference, SlabReference};
pub use rng::path_stream;

use std::time::{Duration, Instant};

use glam::DVec3;
use rand::Rng;
use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::film::Film;
use crate::medium::phase::{hg_eval, hg_sample, sample_isotropic, INV_FOUR_PI};
use crate::medium::{Medium, MediumEvent};
use crate::scene::{Hit, Material, Ray, Scene, Surface};

pub const TILE_SIZE: u32 = 8;

/// Upper bound on consecutive dielectric crossings, which do not count as bounces.
const MAX_PASSES: u32 = 1024;

#[derive(Clone, Debug, PartialEq)]
pub struct RenderConfig {
    pub spp: u32,
    /// Scattering events (medium or surface) allowed per path.
    pub max_bounces: u32,
    pub seed: u64,
    /// Also estimate elastic transport of light at the camera wavelength.
    pub elastic_component: bool,
    /// Keep tracing at the excitation wavelength after the emission vertex.
    pub continue_after_emission: bool,
    /// Worker threads; 0 picks the rayon default.
    pub threads: usize,
}

impl Default for RenderConfig {
    fn default() -> Self {
        RenderConfig {
            spp: 16,
            max_bounces: 64,
            seed: 0,
            elastic_component: false,
            continue_after_emission: false,
            threads: 0,
        }
    }
}

impl RenderConfig {
    /// The render settings stored in the scene file.
    pub fn from_scene(scene: &Scene) -> Self {
        let s = scene.settings();
        RenderConfig {
            spp: s.spp,
            max_bounces: s.max_bounces,
            seed: s.seed,
            elastic_component: s.elastic_component,
            continue_after_emission: s.continue_after_emission,
            threads: 0,
        }
    }

    pub fn validate(&self) -> Result<()> {
        if self.spp == 0 {
            return Err(Error::validation("render", "spp must be at least 1"));
        }
        if self.max_bounces == 0 {
            return Err(Error::validation("render", "max_bounces must be at least 1"));
        }
        Ok(())
    }
}

/// Outcome of one traced path.
#[derive(Clone, Copy, Debug, Default, PartialEq)]
pub struct PathRecord {
    pub radiance: f64,
    pub inelastic_events: u32,
    pub scatter_events: u32,
}

#[derive(Clone, Copy, Debug)]
pub struct RenderStats {
    pub paths: u64,
    pub elapsed: Duration,
}

impl RenderStats {
    pub fn paths_per_second(&self) -> f64 {
        self.paths as f64 / self.elapsed.as_secs_f64().max(1e-9)
    }
}

/// Discrete distribution over items with non-negative weights.
#[derive(Clone, Debug, Default)]
struct Discrete<T> {
    items: Vec<T>,
    cdf: Vec<f64>,
    total: f64,
}

impl<T: Copy> Discrete<T> {
    fn new(weighted: impl IntoIterator<Item = (T, f64)>) -> Self {
        let mut items = Vec::new();
        let mut cdf = Vec::new();
        let mut total = 0.0;
        for (item, w) in weighted {
            if w > 0.0 {
                total += w;
                items.push(item);
                cdf.push(total);
            }
        }
        for c in &mut cdf {
            *c /= total;
        }
        Discrete { items, cdf, total }
    }

    /// Item and its probability.
    fn sample(&self, u: f64) -> Option<(T, f64)> {
        if self.items.is_empty() {
            return None;
        }
        let k = self.cdf.partition_point(|c| *c <= u).min(self.items.len() - 1);
        let lo = if k == 0 { 0.0 } else { self.cdf[k - 1] };
        Some((self.items[k], self.cdf[k] - lo))
    }
}

struct DyeTables {
    emission_fraction: Vec<f64>,
    /// (light, excitation grid index) ∝ f_x·L·A.
    excitation: Discrete<(usize, usize)>,
    /// Excitation grid index ∝ f_x, for continuing after emission.
    excitation_only: Discrete<usize>,
}

/// A scene prepared for tracing with a fixed configuration.
pub struct Integrator<'a> {
    scene: &'a Scene,
    config: RenderConfig,
    dyes: Vec<Vec<DyeTables>>,
    active: Vec<bool>,
}

impl<'a> Integrator<'a> {
    pub fn new(scene: &'a Scene, config: RenderConfig) -> Result<Self> {
        config.validate()?;
        let grid = *scene.grid();
        let dyes: Vec<Vec<DyeTables>> = scene
            .media()
            .iter()
            .map(|m| {
                m.fluorophores()
                    .iter()
                    .map(|f| {
                        let dye = f.dye();
                        let fx = dye.excitation();
                        DyeTables {
                            emission_fraction: grid
                                .wavelengths()
                                .map(|l| dye.emission_fraction(l, grid.step()))
                                .collect(),
                            excitation: Discrete::new(scene.lights().iter().enumerate().flat_map(|(l, light)| {
                                let area = light.shape.area();
                                (0..grid.len()).map(move |j| ((l, j), fx.at(j) * light.spd.at(j) * area))
                            })),
                            excitation_only: Discrete::new((0..grid.len()).map(|j| (j, fx.at(j)))),
                        }
                    })
                    .collect()
            })
            .collect();
        let active = (0..grid.len())
            .map(|i| config.elastic_component || dyes.iter().flatten().any(|d| d.emission_fraction[i] > 0.0))
            .collect();
        Ok(Integrator { scene, config, dyes, active })
    }

    pub fn config(&self) -> &RenderConfig {
        &self.config
    }

    /// Grid indices that can receive a nonzero contribution.
    pub fn active_wavelengths(&self) -> impl Iterator<Item = usize> + '_ {
        self.active.iter().enumerate().filter(|(_, a)| **a).map(|(i, _)| i)
    }

    /// Traces one camera path through pixel (px, py) carrying grid wavelength
    /// `lambda_index`.
    pub fn trace_path<R: Rng>(&self, (px, py): (u32, u32), lambda_index: usize, rng: &mut R) -> PathRecord {
        let scene = self.scene;
        let max_bounces = self.config.max_bounces;
        let mut rec = PathRecord::default();

        let mut ray = scene.camera().generate_ray(px, py, rng.random(), rng.random());
        let mut medium = scene.medium_at(ray.origin);
        let mut throughput = 1.0;
        let mut lam = lambda_index;
        let mut elastic_light = self.config.elastic_component;
        // emitters hit directly are counted only when no light was sampled at the previous vertex
        let mut count_emitters = true;
        let mut passes = 0u32;

        loop {
            let hit = scene.intersect(&ray);
            let t_hit = hit.map_or(f64::INFINITY, |h| h.t);

            if let Some(m) = medium {
                let med = &scene.media()[m];
                if let Some((t, _)) = med.sample_free_flight_at(lam, rng.random()) {
                    if t < t_hit {
                        let x = ray.at(t);
                        rec.scatter_events += 1;
                        if rec.scatter_events > max_bounces {
                            break;
                        }
                        let c = med.classify_event_at(lam, rng.random());
                        match c.event {
                            MediumEvent::Absorbed => break,
                            MediumEvent::ElasticScatter => {
                                throughput *= c.weight;
                                let (dir, pdf) = hg_sample(med.phase_g(), ray.dir, rng.random(), rng.random());
                                debug_assert_elastic_weight(med, lam, c.weight, ray.dir.dot(dir), pdf);
                                if elastic_light {
                                    rec.radiance += throughput * self.medium_light_sample(med, x, ray.dir, lam, rng);
                                }
                                ray = Ray::new(x, dir);
                                count_emitters = false;
                                passes = 0;
                                continue;
                            }
                            MediumEvent::FluorescentEmission { dye } => {
                                if rec.inelastic_events >= 1 {
                                    break;
                                }
                                rec.inelastic_events = 1;
                                let tables = &self.dyes[m][dye];
                                let weight = throughput * c.weight;
                                rec.radiance += weight * self.emission_light_sample(tables, x, lam, rng);
                                if !self.config.continue_after_emission {
                                    break;
                                }
                                // isotropic emission; p(ω) cancels the 1/4π
                                let Some((j, p)) = tables.excitation_only.sample(rng.random()) else {
                                    break;
                                };
                                let fx = med.fluorophores()[dye].dye().excitation().at(j);
                                throughput = weight * tables.emission_fraction[lam] * fx / p;
                                lam = j;
                                elastic_light = true;
                                count_emitters = false;
                                ray = Ray::new(x, sample_isotropic(rng.random(), rng.random()));
                                passes = 0;
                                continue;
                            }
                        }
                    }
                }
            }

            let Some(h) = hit else { break };
            let prim = &scene.primitives()[h.primitive];
            match &prim.surface {
                Surface::Emitter { light } => {
                    if elastic_light && count_emitters {
                        let l = &scene.lights()[*light];
                        let outward = if h.entering { h.normal } else { -h.normal };
                        rec.radiance += throughput * l.radiance(lam, outward, -ray.dir);
                    }
                    break;
                }
                Surface::Material(mat) if mat.is_dielectric() => {
                    passes += 1;
                    if passes > MAX_PASSES {
                        break;
                    }
                    let Some(s) = mat.sample(lam, h.normal, ray.dir, h.entering, 0.0, 0.0, rng.random()) else {
                        break;
                    };
                    if s.transmitted {
                        medium = scene.medium_after(&h, medium);
                    }
                    throughput *= s.weight;
                    ray = Ray::new(h.point, s.dir);
                }
                Surface::Material(mat) => {
                    rec.scatter_events += 1;
                    if rec.scatter_events > max_bounces {
                        break;
                    }
                    if elastic_light {
                        rec.radiance += throughput * self.surface_light_sample(mat, &h, ray.dir, lam, rng);
                    }
                    let Some(s) = mat.sample(lam, h.normal, ray.dir, h.entering, rng.random(), rng.random(), 0.0)
                    else {
                        break;
                    };
                    throughput *= s.weight;
                    ray = Ray::new(h.point, s.dir);
                    count_emitters = false;
                    passes = 0;
                }
            }
            if throughput == 0.0 {
                break;
            }
        }
        debug_assert!(rec.radiance >= 0.0 && rec.radiance.is_finite(), "path radiance {}", rec.radiance);
        rec
    }

    /// Emission-vertex estimate without the collision weight.
    fn emission_light_sample<R: Rng>(&self, tables: &DyeTables, x: DVec3, lam: usize, rng: &mut R) -> f64 {
        let frac = tables.emission_fraction[lam];
        if frac == 0.0 {
            return 0.0;
        }
        let Some(((l, j), _)) = tables.excitation.sample(rng.random()) else {
            return 0.0;
        };
        let light = &self.scene.lights()[l];
        let (y, n_y) = light.shape.sample_surface(rng.random(), rng.random());
        let d = y - x;
        let dist2 = d.length_squared();
        if dist2 == 0.0 {
            return 0.0;
        }
        let dir = d / dist2.sqrt();
        let cos_y = light.emitting_cosine(n_y, -dir);
        if cos_y == 0.0 {
            return 0.0;
        }
        let tr = self.scene.attenuated_visibility_at(x, y, j);
        frac * tables.excitation.total * INV_FOUR_PI * tr * cos_y / dist2
    }

    /// Picks a light ∝ L(λ)·A and a point on it. Returns the point, its
    /// normal, the light index and the pdf per unit area.
    fn pick_light_point<R: Rng>(&self, lam: usize, rng: &mut R) -> Option<(DVec3, DVec3, usize, f64)> {
        let lights = self.scene.lights();
        let total: f64 = lights.iter().map(|l| l.spd.at(lam) * l.shape.area()).sum();
        if total <= 0.0 {
            return None;
        }
        let u = rng.random::<f64>() * total;
        let mut acc = 0.0;
        let mut pick = lights.len() - 1;
        for (k, l) in lights.iter().enumerate() {
            acc += l.spd.at(lam) * l.shape.area();
            if u < acc {
                pick = k;
                break;
            }
        }
        let l = &lights[pick];
        let p_light = l.spd.at(lam) * l.shape.area() / total;
        if p_light == 0.0 {
            return None;
        }
        let (y, n) = l.shape.sample_surface(rng.random(), rng.random());
        Some((y, n, pick, p_light / l.shape.area()))
    }

    fn medium_light_sample<R: Rng>(&self, med: &Medium, x: DVec3, wi: DVec3, lam: usize, rng: &mut R) -> f64 {
        let Some((y, n_y, l, pdf_area)) = self.pick_light_point(lam, rng) else {
            return 0.0;
        };
        let d = y - x;
        let dist2 = d.length_squared();
        let dir = d / dist2.sqrt();
        let light = &self.scene.lights()[l];
        let cos_y = light.emitting_cosine(n_y, -dir);
        if cos_y == 0.0 {
            return 0.0;
        }
        let tr = self.scene.attenuated_visibility_at(x, y, lam);
        hg_eval(med.phase_g(), wi.dot(dir)) * light.spd.at(lam) * tr * cos_y / dist2 / pdf_area
    }

    fn surface_light_sample<R: Rng>(&self, mat: &Material, h: &Hit, wi: DVec3, lam: usize, rng: &mut R) -> f64 {
        let Some((y, n_y, l, pdf_area)) = self.pick_light_point(lam, rng) else {
            return 0.0;
        };
        let d = y - h.point;
        let dist2 = d.length_squared();
        let dir = d / dist2.sqrt();
        let cos_x = h.normal.dot(dir);
        let light = &self.scene.lights()[l];
        let cos_y = light.emitting_cosine(n_y, -dir);
        if cos_x <= 0.0 || cos_y == 0.0 {
            return 0.0;
        }
        let f = mat.eval(lam, h.normal, wi, dir);
        if f == 0.0 {
            return 0.0;
        }
        let tr = self.scene.attenuated_visibility_at(h.point, y, lam);
        f * cos_x * light.spd.at(lam) * tr * cos_y / dist2 / pdf_area
    }

    /// Per-pixel sums and squared sums over all samples and active wavelengths.
    fn render_pixel(&self, px: u32, py: u32) -> (Vec<f64>, Vec<f64>) {
        let n = self.scene.grid().len();
        let (w, _) = self.scene.camera().resolution();
        let pixel = py as u64 * w as u64 + px as u64;
        let mut sums = vec![0.0; n];
        let mut sq = vec![0.0; n];
        for li in self.active_wavelengths() {
            for s in 0..self.config.spp {
                let mut rng = path_stream(self.config.seed, pixel, s as u64, li as u64);
                let v = self.trace_path((px, py), li, &mut rng).radiance;
                sums[li] += v;
                sq[li] += v * v;
            }
        }
        (sums, sq)
    }
}

#[cfg(debug_assertions)]
fn debug_assert_elastic_weight(med: &Medium, lam: usize, weight: f64, cos_theta: f64, pdf_omega: f64) {
    // F·T/(p_pick·p(ω)·p(t)) with F = σ_s·f_φ, p(t) = σ_t·T, p_pick = σ_s/D
    let sigma_t = med.sigma_t_at(lam);
    let sigma_s = med.sigma_s_background().at(lam);
    let rates: f64 = (0..med.fluorophores().len()).map(|k| med.fluorescence_rate(k)).sum();
    let d = sigma_t.max(sigma_s + rates);
    let explicit = sigma_s * hg_eval(med.phase_g(), cos_theta) / ((sigma_s / d) * pdf_omega * sigma_t);
    debug_assert!(
        (explicit - weight).abs() <= 1e-9 * weight.max(1.0),
        "elastic weight {weight} vs explicit {explicit}"
    );
}

#[cfg(not(debug_assertions))]
#[inline(always)]
fn debug_assert_elastic_weight(_: &Medium, _: usize, _: f64, _: f64, _: f64) {}

/// Renders the scene; bit-identical for a given seed whatever the thread count.
pub fn render(scene: &Scene, config: &RenderConfig) -> Result<Film> {
    Ok(render_with_stats(scene, config)?.0)
}

/// Per-pixel radiance sums and squared sums, tagged with the pixel.
type PixelSums = (u32, u32, Vec<f64>, Vec<f64>);

pub fn render_with_stats(scene: &Scene, config: &RenderConfig) -> Result<(Film, RenderStats)> {
    let start = Instant::now();
    let integrator = Integrator::new(scene, config.clone())?;
    let (w, h) = scene.camera().resolution();
    let tiles: Vec<(u32, u32)> = (0..h.div_ceil(TILE_SIZE))
        .flat_map(|ty| (0..w.div_ceil(TILE_SIZE)).map(move |tx| (tx * TILE_SIZE, ty * TILE_SIZE)))
        .collect();
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(config.threads)
        .build()
        .map_err(|e| Error::InvariantViolation(format!("thread pool: {e}")))?;
    let rendered: Vec<Vec<PixelSums>> = pool.install(|| {
        tiles
            .par_iter()
            .map(|&(x0, y0)| {
                let mut out = Vec::new();
                for y in y0..(y0 + TILE_SIZE).min(h) {
                    for x in x0..(x0 + TILE_SIZE).min(w) {
                        let (s, q) = integrator.render_pixel(x, y);
                        out.push((x, y, s, q));
                    }
                }
                out
            })
            .collect()
    });
    let mut film = Film::new(w, h, *scene.grid());
    for (x, y, s, q) in rendered.into_iter().flatten() {
        film.add_pixel(x, y, &s, &q, config.spp as u64);
    }
    let paths = w as u64 * h as u64 * config.spp as u64 * integrator.active_wavelengths().count() as u64;
    let stats = RenderStats { paths, elapsed: start.elapsed() };
    log::info!(
        "rendered {w}x{h} at {} spp: {paths} paths in {:.2?} ({:.0} paths/s)",
        config.spp,
        stats.elapsed,
        stats.paths_per_second()
    );
    Ok((film, stats))
}

#[cfg(test)]
mod tests;
