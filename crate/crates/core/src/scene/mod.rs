//! Scene representation: shapes, materials, lights, media and the camera,
//! plus ray queries against them.

mod bvh;
mod camera;
mod description;
pub mod geometry;
mod material;

pub use bvh::{intersect_linear, Bvh};
pub use camera::Camera;
pub use description::{
    load_scene, loader_for, parse_scene, read_description, CameraDesc, DyeDesc, GeometryDesc, GridDesc, LightDesc,
    MaterialDesc, MediumDesc, RenderDesc, SceneDescription, SceneLoader, ShapeDesc, SpectrumDesc, SpectrumForm,
    DEFAULT_WATER_SCALE,
};
pub use geometry::{Aabb, Ray, Shape, RAY_EPSILON};
pub use material::{Material, SurfaceSample};

use glam::DVec3;

use crate::error::{Error, Result};
use crate::medium::Medium;
use crate::spectral::{SpectralDistribution, WavelengthGrid};

/// An area emitter. `spd` is radiance per grid bin.
#[derive(Clone, Debug)]
pub struct Light {
    pub name: String,
    pub shape: Shape,
    pub spd: SpectralDistribution,
    pub two_sided: bool,
    /// Index of the primitive that represents this light in ray queries.
    pub primitive: usize,
}

impl Light {
    /// Emitted radiance leaving `normal`'s side towards `dir` (unit, pointing
    /// away from the light), at grid index `i`.
    pub fn radiance(&self, i: usize, normal: DVec3, dir: DVec3) -> f64 {
        if self.two_sided || normal.dot(dir) > 0.0 {
            self.spd.at(i)
        } else {
            0.0
        }
    }

    /// |cos| at the emitter for light leaving towards `dir`, or 0 on the dark side.
    pub fn emitting_cosine(&self, normal: DVec3, dir: DVec3) -> f64 {
        let c = normal.dot(dir);
        if self.two_sided {
            c.abs()
        } else {
            c.max(0.0)
        }
    }
}

#[derive(Clone, Debug)]
pub enum Surface {
    Material(Material),
    Emitter { light: usize },
}

#[derive(Clone, Debug)]
pub struct Primitive {
    pub name: String,
    pub shape: Shape,
    pub surface: Surface,
    /// Medium filling the shape's interior.
    pub medium: Option<usize>,
}

impl Primitive {
    /// Rays and shadow rays go straight through thin dielectric walls.
    pub fn is_transparent(&self) -> bool {
        matches!(self.surface, Surface::Material(Material::SmoothDielectric { .. }))
    }
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Hit {
    pub t: f64,
    pub point: DVec3,
    /// Unit normal facing the incoming ray.
    pub normal: DVec3,
    pub primitive: usize,
    /// True when the ray crosses from the front (outside) to the back side.
    pub entering: bool,
}

/// Render parameters carried by a scene file.
#[derive(Clone, Debug, PartialEq)]
pub struct RenderSettings {
    pub spp: u32,
    pub max_bounces: u32,
    pub seed: u64,
    pub elastic_component: bool,
    pub continue_after_emission: bool,
}

impl Default for RenderSettings {
    fn default() -> Self {
        RenderSettings { spp: 16, max_bounces: 64, seed: 0, elastic_component: false, continue_after_emission: false }
    }
}

#[derive(Clone, Debug)]
pub struct Scene {
    grid: WavelengthGrid,
    camera: Camera,
    primitives: Vec<Primitive>,
    shapes: Vec<Shape>,
    bvh: Bvh,
    lights: Vec<Light>,
    media: Vec<Medium>,
    medium_names: Vec<String>,
    settings: RenderSettings,
}

impl Scene {
    pub fn builder(grid: WavelengthGrid, camera: Camera) -> SceneBuilder {
        SceneBuilder {
            scene: Scene {
                grid,
                camera,
                primitives: Vec::new(),
                shapes: Vec::new(),
                bvh: Bvh::default(),
                lights: Vec::new(),
                media: Vec::new(),
                medium_names: Vec::new(),
                settings: RenderSettings::default(),
            },
        }
    }

    pub fn grid(&self) -> &WavelengthGrid {
        &self.grid
    }

    pub fn camera(&self) -> &Camera {
        &self.camera
    }

    pub fn primitives(&self) -> &[Primitive] {
        &self.primitives
    }

    pub fn lights(&self) -> &[Light] {
        &self.lights
    }

    pub fn media(&self) -> &[Medium] {
        &self.media
    }

    pub fn medium_index(&self, name: &str) -> Option<usize> {
        self.medium_names.iter().position(|n| n == name)
    }

    pub fn settings(&self) -> &RenderSettings {
        &self.settings
    }

    /// True if any medium carries a dye.
    pub fn has_fluorophores(&self) -> bool {
        self.media.iter().any(|m| !m.fluorophores().is_empty())
    }

    pub fn intersect(&self, ray: &Ray) -> Option<Hit> {
        self.intersect_range(ray, RAY_EPSILON, f64::INFINITY)
    }

    pub fn intersect_range(&self, ray: &Ray, t_min: f64, t_max: f64) -> Option<Hit> {
        let (i, h) = self.bvh.intersect(&self.shapes, ray, t_min, t_max)?;
        Some(self.make_hit(ray, i, h))
    }

    /// [`intersect`](Self::intersect) by scanning every primitive.
    pub fn intersect_brute_force(&self, ray: &Ray) -> Option<Hit> {
        let (i, h) = intersect_linear(&self.shapes, ray, RAY_EPSILON, f64::INFINITY)?;
        Some(self.make_hit(ray, i, h))
    }

    fn make_hit(&self, ray: &Ray, primitive: usize, h: geometry::ShapeHit) -> Hit {
        let entering = h.outward.dot(ray.dir) < 0.0;
        Hit { t: h.t, point: ray.at(h.t), normal: if entering { h.outward } else { -h.outward }, primitive, entering }
    }

    /// The medium whose shape contains `p`; first declared wins on overlap.
    pub fn medium_at(&self, p: DVec3) -> Option<usize> {
        self.primitives.iter().find(|prim| prim.medium.is_some() && prim.shape.contains(p)).and_then(|prim| prim.medium)
    }

    /// Medium on the far side of a boundary crossing at `hit`.
    pub fn medium_after(&self, hit: &Hit, current: Option<usize>) -> Option<usize> {
        let prim = &self.primitives[hit.primitive];
        if prim.medium.is_none() {
            return current;
        }
        if hit.entering {
            prim.medium
        } else {
            self.primitives
                .iter()
                .enumerate()
                .find(|(k, p)| *k != hit.primitive && p.medium.is_some() && p.shape.contains(hit.point))
                .and_then(|(_, p)| p.medium)
        }
    }

    /// Walks the open segment a→b, calling `segment(medium, length)` for each
    /// piece between transparent surfaces. Returns false if an opaque surface
    /// blocks the segment.
    fn walk_segment(&self, a: DVec3, b: DVec3, mut segment: impl FnMut(Option<usize>, f64)) -> bool {
        let d = b - a;
        let dist = d.length();
        if dist == 0.0 {
            return true;
        }
        let dir = d / dist;
        let ray = Ray::new(a, dir);
        let end = dist - RAY_EPSILON * dist.max(1.0);
        let mut prev = 0.0;
        let mut t0 = RAY_EPSILON;
        loop {
            let next = self.bvh.intersect(&self.shapes, &ray, t0, end);
            if let Some((i, _)) = next {
                if !self.primitives[i].is_transparent() {
                    return false;
                }
            }
            let t = next.map_or(dist, |(_, h)| h.t);
            if t > prev {
                segment(self.medium_at(a + dir * (0.5 * (prev + t))), t - prev);
            }
            match next {
                Some((_, h)) => {
                    prev = h.t;
                    t0 = h.t + RAY_EPSILON;
                }
                None => return true,
            }
        }
    }

    /// Binary visibility; dielectric walls do not occlude.
    pub fn visible(&self, a: DVec3, b: DVec3) -> bool {
        self.walk_segment(a, b, |_, _| {})
    }

    /// Visibility times the transmittance of every medium segment on a→b.
    pub fn attenuated_visibility(&self, a: DVec3, b: DVec3, lambda: f64) -> f64 {
        self.attenuate(a, b, |m, len| (-m.sigma_t(lambda) * len).exp())
    }

    /// [`attenuated_visibility`](Self::attenuated_visibility) at a grid index.
    pub fn attenuated_visibility_at(&self, a: DVec3, b: DVec3, lambda_index: usize) -> f64 {
        self.attenuate(a, b, |m, len| m.transmittance_at(len, lambda_index))
    }

    fn attenuate(&self, a: DVec3, b: DVec3, transmittance: impl Fn(&Medium, f64) -> f64) -> f64 {
        let mut result = 1.0;
        let open = self.walk_segment(a, b, |m, len| {
            if let Some(m) = m {
                result *= transmittance(&self.media[m], len);
            }
        });
        if open {
            result
        } else {
            0.0
        }
    }
}

/// Incremental scene assembly; [`build`](SceneBuilder::build) validates.
pub struct SceneBuilder {
    scene: Scene,
}

impl SceneBuilder {
    pub fn settings(mut self, settings: RenderSettings) -> Self {
        self.scene.settings = settings;
        self
    }

    pub fn medium(mut self, name: impl Into<String>, medium: Medium) -> Self {
        self.scene.medium_names.push(name.into());
        self.scene.media.push(medium);
        self
    }

    pub fn shape(
        mut self,
        name: impl Into<String>,
        shape: Shape,
        material: Material,
        medium: Option<&str>,
    ) -> Result<Self> {
        let name = name.into();
        let medium = match medium {
            Some(m) => Some(
                self.scene
                    .medium_index(m)
                    .ok_or_else(|| Error::validation(format!("shape '{name}'"), format!("unknown medium '{m}'")))?,
            ),
            None => None,
        };
        self.scene.primitives.push(Primitive { name, shape, surface: Surface::Material(material), medium });
        Ok(self)
    }

    pub fn light(mut self, name: impl Into<String>, shape: Shape, spd: SpectralDistribution, two_sided: bool) -> Self {
        let name = name.into();
        let primitive = self.scene.primitives.len();
        let light = self.scene.lights.len();
        self.scene.primitives.push(Primitive {
            name: name.clone(),
            shape,
            surface: Surface::Emitter { light },
            medium: None,
        });
        self.scene.lights.push(Light { name, shape, spd, two_sided, primitive });
        self
    }

    pub fn build(mut self) -> Result<Scene> {
        let grid = self.scene.grid;
        for p in &self.scene.primitives {
            let entity = || format!("shape '{}'", p.name);
            p.shape.validate().map_err(|m| Error::validation(entity(), m))?;
            if p.medium.is_some() && !p.shape.is_closed() {
                return Err(Error::validation(entity(), "only closed shapes can hold a medium"));
            }
            if let Surface::Material(m) = &p.surface {
                match m {
                    Material::Lambertian { reflectance } | Material::GlossyPhong { reflectance, .. } => {
                        if reflectance.grid() != &grid {
                            return Err(Error::validation(entity(), "reflectance not on the render grid"));
                        }
                        if reflectance.max_value() > 1.0 {
                            return Err(Error::validation(entity(), "reflectance above 1"));
                        }
                        if let Material::GlossyPhong { exponent, .. } = m {
                            if exponent.is_nan() || *exponent <= 0.0 {
                                return Err(Error::validation(entity(), "glossy exponent must be positive"));
                            }
                        }
                    }
                    Material::SmoothDielectric { ior, .. } => {
                        if ior.is_nan() || *ior <= 1.0 {
                            return Err(Error::validation(entity(), "dielectric ior must exceed 1"));
                        }
                    }
                }
            }
        }
        for l in &self.scene.lights {
            if l.spd.grid() != &grid {
                return Err(Error::validation(format!("light '{}'", l.name), "spd not on the render grid"));
            }
        }
        for (m, name) in self.scene.media.iter().zip(&self.scene.medium_names) {
            if m.grid() != &grid {
                return Err(Error::validation(format!("medium '{name}'"), "not on the render grid"));
            }
        }
        if self.scene.settings.spp == 0 || self.scene.settings.max_bounces == 0 {
            return Err(Error::validation("render", "spp and max_bounces must be at least 1"));
        }
        self.scene.shapes = self.scene.primitives.iter().map(|p| p.shape).collect();
        self.scene.bvh = Bvh::build(&self.scene.shapes);
        Ok(self.scene)
    }
}
