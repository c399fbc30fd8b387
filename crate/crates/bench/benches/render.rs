use std::hint::black_box;
use std::path::PathBuf;

use criterion::{criterion_group, criterion_main, Criterion, Throughput};
use glam::DVec3;
use rand::Rng;

use fluoray_core::integrator::{path_stream, Integrator};
use fluoray_core::scene::{load_scene, Ray};
use fluoray_core::{RenderConfig, Scene};

fn scene(name: &str) -> Scene {
    let path = PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../../scenes").join(name);
    load_scene(&path, None).expect("bundled scene loads")
}

fn trace_path(c: &mut Criterion) {
    let mut group = c.benchmark_group("trace_path");
    group.throughput(Throughput::Elements(1000));
    for name in ["validation_bead_488.json", "vials_concentration.json"] {
        let scene = scene(name);
        let integrator = Integrator::new(&scene, RenderConfig::from_scene(&scene)).unwrap();
        let active: Vec<usize> = integrator.active_wavelengths().collect();
        let (w, h) = scene.camera().resolution();
        group.bench_function(name.trim_end_matches(".json"), |b| {
            let mut k = 0u64;
            b.iter(|| {
                for _ in 0..1000 {
                    k += 1;
                    let li = active[k as usize % active.len()];
                    let px = ((k % w as u64) as u32, ((k / w as u64) % h as u64) as u32);
                    black_box(integrator.trace_path(px, li, &mut path_stream(0, 0, k, li as u64)));
                }
            })
        });
    }
    group.finish();
}

fn intersect(c: &mut Criterion) {
    let scene = scene("cornell_spheres.json");
    let mut rng = path_stream(1, 0, 0, 0);
    let rays: Vec<Ray> = (0..1024)
        .map(|_| {
            let target =
                DVec3::new(rng.random_range(-1.0..1.0), rng.random_range(0.0..1.0), rng.random_range(-1.0..0.0));
            let origin = DVec3::new(0.0, 0.5, 1.4);
            Ray::new(origin, (target - origin).normalize())
        })
        .collect();
    let mut group = c.benchmark_group("intersect");
    group.throughput(Throughput::Elements(rays.len() as u64));
    group.bench_function("bvh", |b| b.iter(|| rays.iter().filter_map(|r| scene.intersect(r)).count()));
    group.bench_function("brute_force", |b| {
        b.iter(|| rays.iter().filter_map(|r| scene.intersect_brute_force(r)).count())
    });
    group.finish();
}

fn wavelength_sampling(c: &mut Criterion) {
    let scene = scene("validation_bead_488.json");
    let dye = scene.media()[0].fluorophores()[0].dye().clone();
    let mut rng = path_stream(2, 0, 0, 0);
    c.bench_function("sample_emission", |b| b.iter(|| dye.sample_emission(black_box(rng.random()))));
}

criterion_group!(benches, trace_path, intersect, wavelength_sampling);
criterion_main!(benches);
