use std::path::PathBuf;

use fluoray_core::scene::{load_scene, read_description};

fn scenes_dir() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../../scenes")
}

#[test]
fn bundled_scenes_load() {
    let mut count = 0;
    for entry in std::fs::read_dir(scenes_dir()).unwrap() {
        let path = entry.unwrap().path();
        if path.extension().is_some_and(|e| e == "json") {
            let scene = load_scene(&path, None).unwrap_or_else(|e| panic!("{}: {e}", path.display()));
            assert!(scene.has_fluorophores(), "{}", path.display());
            assert!(!scene.lights().is_empty());
            count += 1;
        }
    }
    assert!(count >= 6);
}

#[test]
fn cornell_scene_holds_seven_dyes() {
    let scene = load_scene(&scenes_dir().join("cornell_spheres.json"), None).unwrap();
    assert_eq!(scene.media().len(), 7);
    assert_eq!(scene.lights().len(), 7);
    for light in scene.lights() {
        assert_eq!(light.spd.values().iter().filter(|v| **v > 0.0).count(), 1);
    }
    assert!(scene.settings().elastic_component);
}

#[test]
fn bead_scenes_light_at_the_excitation_peak() {
    for dye in ["488", "568", "633"] {
        let path = scenes_dir().join(format!("validation_bead_{dye}.json"));
        let scene = load_scene(&path, None).unwrap();
        let peak = scene.media()[0].fluorophores()[0].dye().excitation_peak();
        assert_eq!(scene.lights()[0].spd.peak_wavelength(), Some(peak), "{dye}");
        assert_eq!(read_description(&path).unwrap().camera.resolution, [64, 64]);
    }
}
