use std::sync::Arc;

use glam::DVec3;

use super::*;
use crate::fluorophore::{DissolvedFluorophore, Fluorophore};
use crate::scene::{Camera, Light, Shape};
use crate::spectral::{SpectralDistribution, WavelengthGrid};

fn grid() -> WavelengthGrid {
    WavelengthGrid::new(400.0, 600.0, 2.0).unwrap()
}

fn dye() -> Arc<Fluorophore> {
    let g = grid();
    let ex = SpectralDistribution::from_fn(g, |l| (-(l - 470.0f64).powi(2) / 300.0).exp());
    let em = SpectralDistribution::from_fn(g, |l| (-(l - 520.0f64).powi(2) / 300.0).exp());
    Arc::new(Fluorophore::new("test", &ex, &em, 50_000.0, 0.8, 500.0).unwrap())
}

const SLAB_MIN: DVec3 = DVec3::new(-0.5, -0.5, 0.0);
const SLAB_MAX: DVec3 = DVec3::new(0.5, 0.5, 0.02);

fn slab_medium(concentration: f64, sigma_s: f64) -> Medium {
    absorbing_slab_medium(concentration, sigma_s, 0.0)
}

fn absorbing_slab_medium(concentration: f64, sigma_s: f64, sigma_a: f64) -> Medium {
    let g = grid();
    let dyes =
        if concentration > 0.0 { vec![DissolvedFluorophore::new(dye(), concentration).unwrap()] } else { Vec::new() };
    Medium::new(g, &SpectralDistribution::constant(g, sigma_a), &SpectralDistribution::constant(g, sigma_s), 0.0, dyes)
        .unwrap()
}

fn lamp() -> (Shape, SpectralDistribution) {
    (
        Shape::Quad { corner: DVec3::new(-0.05, -0.05, -0.05), edge_u: DVec3::X * 0.1, edge_v: DVec3::Y * 0.1 },
        SpectralDistribution::monochromatic(grid(), 470.0, 1.0),
    )
}

fn slab_scene(concentration: f64, sigma_s: f64, resolution: (u32, u32), vfov: f64) -> Scene {
    scene_with(slab_medium(concentration, sigma_s), resolution, vfov)
}

fn scene_with(medium: Medium, resolution: (u32, u32), vfov: f64) -> Scene {
    let cam = Camera::new(DVec3::new(0.0, 0.0, 1.0), DVec3::ZERO, DVec3::Y, vfov, resolution).unwrap();
    let (shape, spd) = lamp();
    Scene::builder(grid(), cam)
        .medium("slab", medium)
        .shape(
            "slab",
            Shape::Box { min: SLAB_MIN, max: SLAB_MAX },
            Material::SmoothDielectric { ior: 1.33, refract: false },
            Some("slab"),
        )
        .unwrap()
        .light("lamp", shape, spd, false)
        .build()
        .unwrap()
}

fn config(spp: u32, max_bounces: u32) -> RenderConfig {
    RenderConfig { spp, max_bounces, seed: 3, ..RenderConfig::default() }
}

#[test]
fn discrete_sampling_matches_weights() {
    let d = Discrete::new([(0usize, 1.0), (1, 0.0), (2, 3.0)]);
    assert_eq!(d.total, 4.0);
    assert_eq!(d.sample(0.1), Some((0, 0.25)));
    assert_eq!(d.sample(0.25), Some((2, 0.75)));
    assert_eq!(d.sample(0.999_999), Some((2, 0.75)));
    assert!(Discrete::<usize>::new([]).sample(0.5).is_none());
}

#[test]
fn dye_free_scene_is_black() {
    let scene = slab_scene(0.0, 50.0, (4, 4), 60.0);
    let integ = Integrator::new(&scene, config(4, 16)).unwrap();
    let mut rng = path_stream(1, 0, 0, 0);
    for k in 0..2000 {
        let r = integ.trace_path((k % 4, (k / 4) % 4), 60, &mut rng);
        assert_eq!(r.radiance, 0.0);
    }
    let film = render(&scene, &config(2, 16)).unwrap();
    assert!(matches!(film.scene_spd(0.0, None), Err(Error::NoIlluminatedPixels)));
}

#[test]
fn contributing_paths_have_one_inelastic_event() {
    let scene = slab_scene(0.05, 30.0, (4, 4), 20.0);
    let integ = Integrator::new(&scene, config(1, 64)).unwrap();
    let mut contributing = 0;
    for k in 0..20_000u64 {
        let li = grid().index_of(520.0).unwrap();
        let mut rng = path_stream(9, k, 0, li as u64);
        let r = integ.trace_path(((k % 4) as u32, ((k / 4) % 4) as u32), li, &mut rng);
        if r.radiance > 0.0 {
            contributing += 1;
            assert_eq!(r.inelastic_events, 1);
        }
        assert!(r.inelastic_events <= 1);
    }
    assert!(contributing > 100, "{contributing}");
}

#[test]
fn render_is_deterministic_across_runs_and_threads() {
    let scene = slab_scene(0.02, 20.0, (8, 8), 40.0);
    let mut c = config(4, 8);
    c.threads = 1;
    let a = render(&scene, &c).unwrap();
    let b = render(&scene, &c).unwrap();
    c.threads = 3;
    let d = render(&scene, &c).unwrap();
    assert_eq!(a.dump_bytes(), b.dump_bytes());
    assert_eq!(a.dump_bytes(), d.dump_bytes());
    assert!(a.scene_spd(0.0, None).is_ok());
    c.seed = 4;
    assert_ne!(render(&scene, &c).unwrap().dump_bytes(), a.dump_bytes());
}

#[test]
fn only_emitting_wavelengths_are_traced() {
    let scene = slab_scene(0.02, 20.0, (1, 1), 1.0);
    let integ = Integrator::new(&scene, config(1, 4)).unwrap();
    let active: Vec<usize> = integ.active_wavelengths().collect();
    let em = dye();
    for i in 0..grid().len() {
        assert_eq!(active.contains(&i), em.emission().at(i) > 0.0);
    }
    let mut c = config(1, 4);
    c.elastic_component = true;
    assert_eq!(Integrator::new(&scene, c).unwrap().active_wavelengths().count(), grid().len());
}

#[test]
fn single_scatter_render_agrees_with_quadrature() {
    // σ_f ≈ 46 /m at the excitation peak, background absorption 25 /m
    let m = absorbing_slab_medium(0.002, 0.0, 25.0);
    let scene = scene_with(m.clone(), (1, 1), 0.01);
    let (shape, spd) = lamp();
    let light = Light { name: "lamp".into(), shape, spd, two_sided: false, primitive: 1 };
    let ray = Ray::new(DVec3::new(0.0, 0.0, 1.0), -DVec3::Z);
    let slab = SlabReference { medium: &m, min: SLAB_MIN, max: SLAB_MAX };
    let li = grid().index_of(520.0).unwrap();
    let expected = single_scatter_reference(&slab, &light, &ray, 520.0).unwrap();

    let integ = Integrator::new(&scene, config(1, 1)).unwrap();
    let n = 200_000u64;
    let (mut sum, mut sq) = (0.0, 0.0);
    for k in 0..n {
        let mut rng = path_stream(17, 0, k, li as u64);
        let v = integ.trace_path((0, 0), li, &mut rng).radiance;
        sum += v;
        sq += v * v;
    }
    let mean = sum / n as f64;
    let se = ((sq / n as f64 - mean * mean) / (n as f64 - 1.0)).sqrt();
    assert!((mean - expected).abs() < 4.0 * se, "{mean} ± {se} vs {expected}");
    assert!(se / mean < 0.02, "relative error {}", se / mean);
}

#[test]
fn elastic_component_sees_the_light_directly() {
    // camera looking straight at a one-sided lamp through empty space
    let cam = Camera::new(DVec3::new(0.0, 0.0, 1.0), DVec3::ZERO, DVec3::Y, 0.5, (1, 1)).unwrap();
    let (shape, spd) = lamp();
    let scene = Scene::builder(grid(), cam).light("lamp", shape, spd, false).build().unwrap();
    let mut c = config(2, 4);
    c.elastic_component = true;
    let film = render(&scene, &c).unwrap();
    let li = grid().index_of(470.0).unwrap();
    assert_eq!(film.mean(0, 0, li), 1.0);
    // a single bin of height 1 on a 2 nm grid
    assert_eq!(film.pixel_spd(0, 0).integrate(), 2.0);
    c.elastic_component = false;
    assert!(render(&scene, &c).unwrap().pixel_spd(0, 0).is_zero());
}

#[test]
fn continuing_after_emission_only_adds_light() {
    let scene = slab_scene(0.05, 40.0, (2, 2), 30.0);
    let mut c = config(64, 16);
    let base = render(&scene, &c).unwrap();
    c.continue_after_emission = true;
    let more = render(&scene, &c).unwrap();
    let a = base.scene_spd(0.0, None).unwrap().integrate();
    let b = more.scene_spd(0.0, None).unwrap().integrate();
    assert!(more.is_finite());
    assert!(b >= a * 0.98, "{b} < {a}");
}

#[test]
fn render_rejects_bad_config() {
    let scene = slab_scene(0.05, 1.0, (1, 1), 1.0);
    assert!(render(&scene, &config(0, 4)).is_err());
    assert!(render(&scene, &config(1, 0)).is_err());
}

#[test]
fn elastic_direct_lighting_on_lambertian_floor() {
    let g = grid();
    let cam = Camera::new(DVec3::new(0.5, 0.0, 2.0), DVec3::ZERO, DVec3::Y, 0.01, (1, 1)).unwrap();
    let floor = Shape::Quad { corner: DVec3::new(-2.0, -2.0, 0.0), edge_u: DVec3::X * 4.0, edge_v: DVec3::Y * 4.0 };
    // faces -z, towards the floor
    let lamp = Shape::Quad { corner: DVec3::new(-0.05, -0.05, 1.0), edge_u: DVec3::Y * 0.1, edge_v: DVec3::X * 0.1 };
    let scene = Scene::builder(g, cam)
        .shape("floor", floor, Material::Lambertian { reflectance: SpectralDistribution::constant(g, 0.5) }, None)
        .unwrap()
        .light("lamp", lamp, SpectralDistribution::monochromatic(g, 470.0, 1.0), false)
        .build()
        .unwrap();
    let mut c = config(1, 1);
    c.elastic_component = true;
    let integ = Integrator::new(&scene, c).unwrap();
    let li = g.index_of(470.0).unwrap();
    let n = 100_000u64;
    let sum: f64 = (0..n).map(|k| integ.trace_path((0, 0), li, &mut path_stream(5, 0, k, li as u64)).radiance).sum();
    let mean = sum / n as f64;
    // midpoint rule over the lamp, seen from the floor origin
    let k = 200;
    let mut e = 0.0;
    for a in 0..k {
        for b in 0..k {
            let x = -0.05 + 0.1 * (a as f64 + 0.5) / k as f64;
            let y = -0.05 + 0.1 * (b as f64 + 0.5) / k as f64;
            let d2 = x * x + y * y + 1.0;
            e += (1.0 / d2.sqrt()).powi(2) / d2 * 0.01 / (k * k) as f64;
        }
    }
    let expected = 0.5 / std::f64::consts::PI * e;
    assert!(((mean - expected) / expected).abs() < 0.01, "{mean} vs {expected}");
}
