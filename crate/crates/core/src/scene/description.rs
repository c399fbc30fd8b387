//! JSON scene files.
//!
//! ```json
//! {
//!   "fluorophore_db": "../data/fluorophores",
//!   "render": { "grid": { "min": 300, "max": 800, "step": 1 }, "spp": 64, "max_bounces": 32, "seed": 1 },
//!   "camera": { "position": [0, 0, 3], "look_at": [0, 0, 0], "vfov": 30, "resolution": [64, 64] },
//!   "media": [ { "name": "dye", "sigma_s": 5.0, "fluorophores": [ { "name": "alexa488", "concentration": 0.001 } ] } ],
//!   "shapes": [ { "name": "bead", "shape": { "sphere": { "center": [0, 0, 0], "radius": 0.05 } },
//!                 "material": { "dielectric": { "ior": 1.33 } }, "medium": "dye" } ],
//!   "lights": [ { "name": "lamp", "shape": { "quad": { "corner": [-1, 2, -1], "edge_u": [2, 0, 0], "edge_v": [0, 0, 2] } },
//!                 "spd": { "monochromatic": { "wavelength": 495, "value": 10 } } } ]
//! }
//! ```
//!
//! Spectra are written as a bare number, `{"constant": v}`,
//! `{"monochromatic": {"wavelength", "value"}}`, `{"points": [[λ, v], ...]}`,
//! `{"water": scale}` or `{"csv": "path"}`. Relative paths resolve against the
//! scene file's directory.

use std::collections::HashMap;
use std::path::{Path, PathBuf};
use std::sync::Arc;

use glam::DVec3;
use serde::{Deserialize, Serialize};

use super::{Camera, Material, RenderSettings, Scene, Shape};
use crate::error::{Error, Result};
use crate::fluorophore::{canonical_name, DissolvedFluorophore, Fluorophore, FluorophoreDb};
use crate::medium::{water_scattering, Medium};
use crate::spectral::{read_spectrum_csv, SpectralDistribution, TabulatedSpectrum, WavelengthGrid};

/// Default background scattering, relative to pure water.
pub const DEFAULT_WATER_SCALE: f64 = 100.0;

#[derive(Clone, Debug, Deserialize, Serialize, PartialEq)]
#[serde(deny_unknown_fields)]
pub struct SceneDescription {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub fluorophore_db: Option<String>,
    #[serde(default)]
    pub render: RenderDesc,
    pub camera: CameraDesc,
    #[serde(default)]
    pub media: Vec<MediumDesc>,
    #[serde(default)]
    pub shapes: Vec<ShapeDesc>,
    #[serde(default)]
    pub lights: Vec<LightDesc>,
}

#[derive(Clone, Copy, Debug, Deserialize, Serialize, PartialEq)]
#[serde(deny_unknown_fields)]
pub struct GridDesc {
    pub min: f64,
    pub max: f64,
    pub step: f64,
}

impl Default for GridDesc {
    fn default() -> Self {
        GridDesc { min: 300.0, max: 800.0, step: 1.0 }
    }
}

#[derive(Clone, Debug, Deserialize, Serialize, PartialEq)]
#[serde(deny_unknown_fields, default)]
pub struct RenderDesc {
    pub grid: GridDesc,
    pub spp: u32,
    pub max_bounces: u32,
    pub seed: u64,
    pub elastic_component: bool,
    pub continue_after_emission: bool,
}

impl Default for RenderDesc {
    fn default() -> Self {
        let s = RenderSettings::default();
        RenderDesc {
            grid: GridDesc::default(),
            spp: s.spp,
            max_bounces: s.max_bounces,
            seed: s.seed,
            elastic_component: s.elastic_component,
            continue_after_emission: s.continue_after_emission,
        }
    }
}

#[derive(Clone, Debug, Deserialize, Serialize, PartialEq)]
#[serde(deny_unknown_fields)]
pub struct CameraDesc {
    pub position: [f64; 3],
    pub look_at: [f64; 3],
    #[serde(default = "default_up")]
    pub up: [f64; 3],
    pub vfov: f64,
    pub resolution: [u32; 2],
}

fn default_up() -> [f64; 3] {
    [0.0, 1.0, 0.0]
}

#[derive(Clone, Debug, Deserialize, Serialize, PartialEq)]
#[serde(deny_unknown_fields)]
pub struct DyeDesc {
    pub name: String,
    /// g/L
    pub concentration: f64,
}

#[derive(Clone, Debug, Deserialize, Serialize, PartialEq)]
#[serde(deny_unknown_fields)]
pub struct MediumDesc {
    pub name: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub sigma_a: Option<SpectrumDesc>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub sigma_s: Option<SpectrumDesc>,
    #[serde(default)]
    pub g: f64,
    #[serde(default)]
    pub fluorophores: Vec<DyeDesc>,
}

#[derive(Clone, Debug, Deserialize, Serialize, PartialEq)]
#[serde(rename_all = "lowercase", deny_unknown_fields)]
pub enum GeometryDesc {
    Sphere { center: [f64; 3], radius: f64 },
    Quad { corner: [f64; 3], edge_u: [f64; 3], edge_v: [f64; 3] },
    Box { min: [f64; 3], max: [f64; 3] },
}

impl GeometryDesc {
    fn to_shape(&self) -> Shape {
        let v = DVec3::from_array;
        match *self {
            GeometryDesc::Sphere { center, radius } => Shape::Sphere { center: v(center), radius },
            GeometryDesc::Quad { corner, edge_u, edge_v } => {
                Shape::Quad { corner: v(corner), edge_u: v(edge_u), edge_v: v(edge_v) }
            }
            GeometryDesc::Box { min, max } => Shape::Box { min: v(min), max: v(max) },
        }
    }
}

#[derive(Clone, Debug, Deserialize, Serialize, PartialEq)]
#[serde(rename_all = "lowercase", deny_unknown_fields)]
pub enum MaterialDesc {
    Lambertian {
        reflectance: SpectrumDesc,
    },
    Glossy {
        reflectance: SpectrumDesc,
        exponent: f64,
    },
    Dielectric {
        ior: f64,
        #[serde(default)]
        refract: bool,
    },
}

#[derive(Clone, Debug, Deserialize, Serialize, PartialEq)]
#[serde(deny_unknown_fields)]
pub struct ShapeDesc {
    pub name: String,
    pub shape: GeometryDesc,
    pub material: MaterialDesc,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub medium: Option<String>,
}

#[derive(Clone, Debug, Deserialize, Serialize, PartialEq)]
#[serde(deny_unknown_fields)]
pub struct LightDesc {
    pub name: String,
    pub shape: GeometryDesc,
    pub spd: SpectrumDesc,
    #[serde(default)]
    pub two_sided: bool,
}

#[derive(Clone, Debug, Deserialize, Serialize, PartialEq)]
#[serde(untagged)]
pub enum SpectrumDesc {
    Value(f64),
    Form(SpectrumForm),
}

#[derive(Clone, Debug, Deserialize, Serialize, PartialEq)]
#[serde(rename_all = "lowercase", deny_unknown_fields)]
pub enum SpectrumForm {
    Constant(f64),
    Monochromatic { wavelength: f64, value: f64 },
    Points(Vec<[f64; 2]>),
    Water(f64),
    Csv(String),
}

impl SpectrumDesc {
    pub fn monochromatic(wavelength: f64, value: f64) -> Self {
        SpectrumDesc::Form(SpectrumForm::Monochromatic { wavelength, value })
    }

    fn resolve(&self, grid: &WavelengthGrid, base: &Path, entity: &str) -> Result<SpectralDistribution> {
        let invalid = |m: String| Error::validation(entity, m);
        let check = |v: f64| {
            if v.is_finite() && v >= 0.0 {
                Ok(v)
            } else {
                Err(invalid(format!("spectral value {v} must be finite and non-negative")))
            }
        };
        let clip_warning = |lo: f64, hi: f64| {
            if lo < grid.lambda_min() || hi > grid.lambda_max() {
                log::warn!("{entity}: wavelengths outside {}-{} nm are clipped", grid.lambda_min(), grid.lambda_max());
            }
        };
        match self {
            SpectrumDesc::Value(v) | SpectrumDesc::Form(SpectrumForm::Constant(v)) => {
                Ok(SpectralDistribution::constant(*grid, check(*v)?))
            }
            SpectrumDesc::Form(SpectrumForm::Monochromatic { wavelength, value }) => {
                let value = check(*value)?;
                clip_warning(*wavelength, *wavelength);
                if grid.contains(*wavelength) {
                    Ok(SpectralDistribution::monochromatic(*grid, *wavelength, value))
                } else {
                    Ok(SpectralDistribution::zeros(*grid))
                }
            }
            SpectrumDesc::Form(SpectrumForm::Points(points)) => {
                let tab = TabulatedSpectrum::new(points.iter().map(|p| (p[0], p[1])).collect())
                    .map_err(|e| invalid(e.to_string()))?;
                if let (Some(first), Some(last)) = (tab.points().first(), tab.points().last()) {
                    clip_warning(first.0, last.0);
                }
                Ok(tab.resample(grid))
            }
            SpectrumDesc::Form(SpectrumForm::Water(scale)) => {
                let scale = check(*scale)?;
                Ok(SpectralDistribution::from_fn(*grid, |l| scale * water_scattering(l)))
            }
            SpectrumDesc::Form(SpectrumForm::Csv(path)) => {
                let tab = read_spectrum_csv(&base.join(path))?;
                if let (Some(first), Some(last)) = (tab.points().first(), tab.points().last()) {
                    clip_warning(first.0, last.0);
                }
                Ok(tab.resample(grid))
            }
        }
    }
}

/// Where relative paths and dye names in a scene file are resolved.
#[derive(Clone, Debug, Default)]
pub struct SceneLoader {
    base_dir: PathBuf,
    db_override: Option<PathBuf>,
}

impl SceneLoader {
    pub fn new(base_dir: impl Into<PathBuf>) -> Self {
        SceneLoader { base_dir: base_dir.into(), db_override: None }
    }

    /// Use this database instead of the file's `fluorophore_db`.
    pub fn with_database(mut self, db: impl Into<PathBuf>) -> Self {
        self.db_override = Some(db.into());
        self
    }

    pub fn base_dir(&self) -> &Path {
        &self.base_dir
    }

    fn database(&self, desc: &SceneDescription) -> Result<FluorophoreDb> {
        match (&self.db_override, &desc.fluorophore_db) {
            (Some(p), _) => FluorophoreDb::open(p.clone()),
            (None, Some(p)) => FluorophoreDb::open(self.base_dir.join(p)),
            (None, None) => Err(Error::validation("scene", "no fluorophore_db given")),
        }
    }
}

impl SceneDescription {
    pub fn parse(text: &str) -> Result<Self> {
        serde_json::from_str(text).map_err(|e| Error::Parse {
            line: e.line(),
            column: e.column(),
            message: e.to_string(),
        })
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("scene description serializes")
    }

    /// Replaces every light's SPD with an impulse at `wavelength`, keeping
    /// each light's peak radiance.
    pub fn set_monochromatic_lights(&mut self, wavelength: f64) {
        for l in &mut self.lights {
            let value = match &l.spd {
                SpectrumDesc::Value(v) | SpectrumDesc::Form(SpectrumForm::Constant(v)) => *v,
                SpectrumDesc::Form(SpectrumForm::Monochromatic { value, .. }) => *value,
                SpectrumDesc::Form(SpectrumForm::Points(p)) => p.iter().map(|x| x[1]).fold(0.0, f64::max),
                _ => 1.0,
            };
            l.spd = SpectrumDesc::monochromatic(wavelength, value);
        }
    }

    /// Sets the concentration of `dye` in medium `medium`; false if absent.
    pub fn set_concentration(&mut self, medium: &str, dye: &str, concentration: f64) -> bool {
        let key = canonical_name(dye);
        self.media
            .iter_mut()
            .filter(|m| m.name == medium)
            .flat_map(|m| m.fluorophores.iter_mut())
            .filter(|d| canonical_name(&d.name) == key)
            .map(|d| d.concentration = concentration)
            .count()
            > 0
    }

    pub fn build(&self, loader: &SceneLoader) -> Result<Scene> {
        let r = &self.render;
        let grid = WavelengthGrid::new(r.grid.min, r.grid.max, r.grid.step)?;
        let c = &self.camera;
        let camera = Camera::new(
            DVec3::from_array(c.position),
            DVec3::from_array(c.look_at),
            DVec3::from_array(c.up),
            c.vfov,
            (c.resolution[0], c.resolution[1]),
        )
        .map_err(|m| Error::validation("camera", m))?;
        let base = loader.base_dir();

        let mut builder = Scene::builder(grid, camera).settings(RenderSettings {
            spp: r.spp,
            max_bounces: r.max_bounces,
            seed: r.seed,
            elastic_component: r.elastic_component,
            continue_after_emission: r.continue_after_emission,
        });

        let mut db = None;
        let mut dyes: HashMap<String, Arc<Fluorophore>> = HashMap::new();
        for (i, m) in self.media.iter().enumerate() {
            let entity = format!("medium '{}'", m.name);
            if self.media[..i].iter().any(|o| o.name == m.name) {
                return Err(Error::validation(entity, "duplicate medium name"));
            }
            let sigma_a = match &m.sigma_a {
                Some(s) => s.resolve(&grid, base, &entity)?,
                None => SpectralDistribution::zeros(grid),
            };
            let sigma_s = match &m.sigma_s {
                Some(s) => s.resolve(&grid, base, &entity)?,
                None => SpectralDistribution::from_fn(grid, |l| DEFAULT_WATER_SCALE * water_scattering(l)),
            };
            let mut dissolved = Vec::with_capacity(m.fluorophores.len());
            for d in &m.fluorophores {
                if db.is_none() {
                    db = Some(loader.database(self)?);
                }
                let key = canonical_name(&d.name);
                let dye = match dyes.get(&key) {
                    Some(f) => f.clone(),
                    None => {
                        let f = Arc::new(db.as_ref().expect("database opened").load(&d.name, &grid)?);
                        dyes.insert(key, f.clone());
                        f
                    }
                };
                dissolved.push(
                    DissolvedFluorophore::new(dye, d.concentration)
                        .map_err(|e| Error::validation(&entity, e.to_string()))?,
                );
            }
            let medium = Medium::new(grid, &sigma_a, &sigma_s, m.g, dissolved)
                .map_err(|e| Error::validation(&entity, e.to_string()))?;
            builder = builder.medium(m.name.clone(), medium);
        }

        for s in &self.shapes {
            let entity = format!("shape '{}'", s.name);
            let material = match &s.material {
                MaterialDesc::Lambertian { reflectance } => {
                    Material::Lambertian { reflectance: reflectance.resolve(&grid, base, &entity)? }
                }
                MaterialDesc::Glossy { reflectance, exponent } => Material::GlossyPhong {
                    reflectance: reflectance.resolve(&grid, base, &entity)?,
                    exponent: *exponent,
                },
                MaterialDesc::Dielectric { ior, refract } => {
                    Material::SmoothDielectric { ior: *ior, refract: *refract }
                }
            };
            builder = builder.shape(s.name.clone(), s.shape.to_shape(), material, s.medium.as_deref())?;
        }

        for l in &self.lights {
            let entity = format!("light '{}'", l.name);
            let spd = l.spd.resolve(&grid, base, &entity)?;
            builder = builder.light(l.name.clone(), l.shape.to_shape(), spd, l.two_sided);
        }

        builder.build()
    }
}

/// Parses and validates a scene; relative paths resolve through `loader`.
pub fn parse_scene(text: &str, loader: &SceneLoader) -> Result<Scene> {
    SceneDescription::parse(text)?.build(loader)
}

/// Reads a scene description from disk without building it.
pub fn read_description(path: &Path) -> Result<SceneDescription> {
    if !path.exists() {
        return Err(Error::MissingFile(path.to_path_buf()));
    }
    SceneDescription::parse(&std::fs::read_to_string(path)?)
}

/// Loads a scene file. `db_override` replaces the file's `fluorophore_db`.
pub fn load_scene(path: &Path, db_override: Option<&Path>) -> Result<Scene> {
    let desc = read_description(path)?;
    desc.build(&loader_for(path, db_override))
}

/// Loader resolving relative to `scene_path`'s directory.
pub fn loader_for(scene_path: &Path, db_override: Option<&Path>) -> SceneLoader {
    let base = scene_path.parent().map(Path::to_path_buf).unwrap_or_default();
    let loader = SceneLoader::new(base);
    match db_override {
        Some(db) => loader.with_database(db),
        None => loader,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn test_db() -> PathBuf {
        PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../../data/fluorophores")
    }

    const MINIMAL: &str = r#"{
        "render": { "grid": { "min": 400, "max": 700, "step": 1 } },
        "camera": { "position": [0, 0, 3], "look_at": [0, 0, 0], "vfov": 30, "resolution": [4, 4] },
        "media": [ { "name": "dye", "sigma_s": 5,
                     "fluorophores": [ { "name": "Alexa Fluor 488", "concentration": 0.01 } ] } ],
        "shapes": [ { "name": "bead", "shape": { "sphere": { "center": [0, 0, 0], "radius": 0.5 } },
                      "material": { "dielectric": { "ior": 1.33 } }, "medium": "dye" } ],
        "lights": [ { "name": "lamp",
                      "shape": { "quad": { "corner": [-1, 2, -1], "edge_u": [2, 0, 0], "edge_v": [0, 0, 2] } },
                      "spd": { "monochromatic": { "wavelength": 495, "value": 10 } } } ]
    }"#;

    fn loader() -> SceneLoader {
        SceneLoader::new(".").with_database(test_db())
    }

    #[test]
    fn minimal_scene_smoke() {
        let s = parse_scene(MINIMAL, &loader()).unwrap();
        assert_eq!(s.media().len(), 1);
        assert_eq!(s.lights().len(), 1);
        assert_eq!(s.primitives().len(), 2);
        assert_eq!(s.grid().len(), 301);
        let spd = &s.lights()[0].spd;
        assert_eq!(spd.values().iter().filter(|v| **v > 0.0).count(), 1);
        assert_eq!(spd.value_at(495.0), 10.0);
        assert_eq!(s.media()[0].fluorophores()[0].dye().name(), "alexa488");
    }

    #[test]
    fn unknown_dye_is_reported() {
        let text = MINIMAL.replace("Alexa Fluor 488", "Alexa999");
        assert!(matches!(parse_scene(&text, &loader()), Err(Error::UnknownFluorophore(_))));
    }

    #[test]
    fn syntax_error_carries_position() {
        let text = MINIMAL.replace("\"vfov\": 30,", "\"vfov\": 30");
        match parse_scene(&text, &loader()) {
            Err(Error::Parse { line, column, .. }) => {
                assert_eq!(line, 3);
                assert!(column > 0);
            }
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn unknown_field_rejected() {
        let text = MINIMAL.replace("\"vfov\"", "\"fov_typo\": 1, \"vfov\"");
        assert!(matches!(parse_scene(&text, &loader()), Err(Error::Parse { .. })));
    }

    #[test]
    fn validation_error_names_entity() {
        let text = MINIMAL.replace("\"radius\": 0.5", "\"radius\": -0.5");
        match parse_scene(&text, &loader()) {
            Err(Error::Validation { entity, .. }) => assert_eq!(entity, "shape 'bead'"),
            other => panic!("{other:?}"),
        }
        let text = MINIMAL.replace("\"medium\": \"dye\"", "\"medium\": \"ink\"");
        assert!(matches!(parse_scene(&text, &loader()), Err(Error::Validation { .. })));
        let text = MINIMAL.replace("\"vfov\": 30", "\"vfov\": 190");
        match parse_scene(&text, &loader()) {
            Err(Error::Validation { entity, .. }) => assert_eq!(entity, "camera"),
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn out_of_grid_light_is_clipped() {
        let text = MINIMAL.replace("\"wavelength\": 495", "\"wavelength\": 900");
        let s = parse_scene(&text, &loader()).unwrap();
        assert!(s.lights()[0].spd.is_zero());
    }

    #[test]
    fn dye_free_scene_needs_no_database() {
        let text = MINIMAL.replace("{ \"name\": \"Alexa Fluor 488\", \"concentration\": 0.01 }", "");
        let s = parse_scene(&text, &SceneLoader::new(".")).unwrap();
        assert!(!s.has_fluorophores());
        // default background scattering is water x100
        let m = &s.media()[0];
        let text = text.replace("\"sigma_s\": 5,", "");
        let d = parse_scene(&text, &SceneLoader::new(".")).unwrap();
        assert_eq!(m.sigma_s_background().value_at(500.0), 5.0);
        assert!((d.media()[0].sigma_s_background().value_at(500.0) - 0.3).abs() < 1e-12);
    }

    #[test]
    fn spectrum_forms() {
        let grid = WavelengthGrid::new(400.0, 500.0, 10.0).unwrap();
        let parse = |s: &str| -> SpectralDistribution {
            serde_json::from_str::<SpectrumDesc>(s).unwrap().resolve(&grid, Path::new("."), "t").unwrap()
        };
        assert_eq!(parse("2.5").value_at(430.0), 2.5);
        assert_eq!(parse(r#"{"constant": 1}"#).value_at(500.0), 1.0);
        let p = parse(r#"{"points": [[400, 0], [500, 1]]}"#);
        assert!((p.value_at(450.0) - 0.5).abs() < 1e-12);
        assert!((parse(r#"{"water": 1}"#).value_at(500.0) - 0.003).abs() < 1e-15);
        assert!(serde_json::from_str::<SpectrumDesc>(r#"{"rainbow": 1}"#).is_err());
    }

    #[test]
    fn mutators_and_round_trip() {
        let mut d = SceneDescription::parse(MINIMAL).unwrap();
        assert!(d.set_concentration("dye", "alexa488", 0.5));
        assert!(!d.set_concentration("dye", "alexa568", 0.5));
        d.set_monochromatic_lights(470.0);
        let again = SceneDescription::parse(&d.to_json()).unwrap();
        assert_eq!(again, d);
        let s = d.build(&loader()).unwrap();
        assert_eq!(s.lights()[0].spd.value_at(470.0), 10.0);
        assert_eq!(s.media()[0].fluorophores()[0].concentration(), 0.5);
    }
}
