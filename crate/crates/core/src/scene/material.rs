use std::f64::consts::PI;

use glam::DVec3;

use crate::spectral::SpectralDistribution;

#[derive(Clone, Debug, PartialEq)]
pub enum Material {
    Lambertian {
        reflectance: SpectralDistribution,
    },
    /// Energy-normalized modified Phong lobe around the mirror direction.
    GlossyPhong {
        reflectance: SpectralDistribution,
        exponent: f64,
    },
    /// Transparent boundary of a vial or bead. Rays pass straight through
    /// unless `refract` is set.
    SmoothDielectric {
        ior: f64,
        refract: bool,
    },
}

/// Outcome of sampling a surface interaction at one grid wavelength.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct SurfaceSample {
    pub dir: DVec3,
    /// BRDF·cos/pdf, or the Fresnel-weighted pass for dielectrics.
    pub weight: f64,
    /// True when the ray went through the surface.
    pub transmitted: bool,
    pub specular: bool,
}

impl Material {
    pub fn is_dielectric(&self) -> bool {
        matches!(self, Material::SmoothDielectric { .. })
    }

    /// BRDF value for incoming propagation direction `wi` (towards the
    /// surface) scattered into `wo`; `n` faces the incoming side.
    pub fn eval(&self, lambda_index: usize, n: DVec3, wi: DVec3, wo: DVec3) -> f64 {
        let cos_o = n.dot(wo);
        if cos_o <= 0.0 {
            return 0.0;
        }
        match self {
            Material::Lambertian { reflectance } => reflectance.at(lambda_index) / PI,
            Material::GlossyPhong { reflectance, exponent } => {
                let mirror = wi - 2.0 * wi.dot(n) * n;
                let c = mirror.dot(wo).max(0.0);
                reflectance.at(lambda_index) * (exponent + 2.0) / (2.0 * PI) * c.powf(*exponent)
            }
            Material::SmoothDielectric { .. } => 0.0,
        }
    }

    /// Samples the continuation of a ray travelling along `wi` that hit a
    /// surface with normal `n` facing the incoming side. `entering` tells
    /// dielectrics which side the ray comes from.
    #[allow(clippy::too_many_arguments)]
    pub fn sample(
        &self,
        lambda_index: usize,
        n: DVec3,
        wi: DVec3,
        entering: bool,
        u1: f64,
        u2: f64,
        u3: f64,
    ) -> Option<SurfaceSample> {
        match self {
            Material::Lambertian { reflectance } => {
                let r = reflectance.at(lambda_index);
                if r == 0.0 {
                    return None;
                }
                Some(SurfaceSample {
                    dir: cosine_hemisphere(n, u1, u2),
                    weight: r,
                    transmitted: false,
                    specular: false,
                })
            }
            Material::GlossyPhong { reflectance, exponent } => {
                let r = reflectance.at(lambda_index);
                let mirror = wi - 2.0 * wi.dot(n) * n;
                let cos_a = u1.powf(1.0 / (exponent + 1.0));
                let sin_a = (1.0 - cos_a * cos_a).max(0.0).sqrt();
                let phi = 2.0 * PI * u2;
                let (t, b) = mirror.any_orthonormal_pair();
                let dir = (t * (sin_a * phi.cos()) + b * (sin_a * phi.sin()) + mirror * cos_a).normalize();
                let cos_o = n.dot(dir);
                if cos_o <= 0.0 || r == 0.0 {
                    return None;
                }
                // f·cos/pdf with f = R(n+2)/(2π)cos^n α and pdf = (n+1)/(2π)cos^n α
                Some(SurfaceSample {
                    dir,
                    weight: r * (exponent + 2.0) / (exponent + 1.0) * cos_o,
                    transmitted: false,
                    specular: false,
                })
            }
            Material::SmoothDielectric { ior, refract } => {
                if !refract {
                    return Some(SurfaceSample { dir: wi, weight: 1.0, transmitted: true, specular: true });
                }
                let eta = if entering { 1.0 / ior } else { *ior };
                Some(sample_dielectric(eta, n, wi, u3))
            }
        }
    }
}

/// Fresnel-weighted choice between mirror reflection and Snell refraction.
/// `eta` is the incident over transmitted refractive index; `n` faces the
/// incoming side.
fn sample_dielectric(eta: f64, n: DVec3, wi: DVec3, u: f64) -> SurfaceSample {
    let cos_i = -wi.dot(n);
    let sin2_t = eta * eta * (1.0 - cos_i * cos_i).max(0.0);
    let reflect = wi + 2.0 * cos_i * n;
    if sin2_t >= 1.0 {
        return SurfaceSample { dir: reflect, weight: 1.0, transmitted: false, specular: true };
    }
    let cos_t = (1.0 - sin2_t).sqrt();
    let rs = (eta * cos_i - cos_t) / (eta * cos_i + cos_t);
    let rp = (cos_i - eta * cos_t) / (cos_i + eta * cos_t);
    let fresnel = 0.5 * (rs * rs + rp * rp);
    if u < fresnel {
        SurfaceSample { dir: reflect, weight: 1.0, transmitted: false, specular: true }
    } else {
        let dir = (eta * wi + (eta * cos_i - cos_t) * n).normalize();
        SurfaceSample { dir, weight: 1.0, transmitted: true, specular: true }
    }
}

pub(crate) fn cosine_hemisphere(n: DVec3, u1: f64, u2: f64) -> DVec3 {
    let r = u1.sqrt();
    let phi = 2.0 * PI * u2;
    let (t, b) = n.any_orthonormal_pair();
    (t * (r * phi.cos()) + b * (r * phi.sin()) + n * (1.0 - u1).max(0.0).sqrt()).normalize()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::spectral::WavelengthGrid;
    use approx::assert_relative_eq;

    #[test]
    fn thin_dielectric_passes_straight() {
        let m = Material::SmoothDielectric { ior: 1.5, refract: false };
        let wi = DVec3::new(0.3, 0.0, -1.0).normalize();
        let s = m.sample(0, DVec3::Z, wi, true, 0.2, 0.3, 0.4).unwrap();
        assert_eq!(s.dir, wi);
        assert!(s.transmitted);
        assert_eq!(s.weight, 1.0);
    }

    #[test]
    fn refraction_bends_towards_normal() {
        let wi = DVec3::new(0.6, 0.0, -0.8);
        let s = sample_dielectric(1.0 / 1.5, DVec3::Z, wi, 0.99);
        assert!(s.transmitted);
        let sin_t = s.dir.x.abs();
        assert_relative_eq!(sin_t, 0.6 / 1.5, epsilon = 1e-12);
    }

    #[test]
    fn lambertian_weight_is_reflectance() {
        let r = SpectralDistribution::constant(WavelengthGrid::default(), 0.7);
        let m = Material::Lambertian { reflectance: r };
        let s = m.sample(10, DVec3::Z, -DVec3::Z, false, 0.3, 0.6, 0.0).unwrap();
        assert!(s.dir.z > 0.0);
        assert_eq!(s.weight, 0.7);
        assert_relative_eq!(m.eval(10, DVec3::Z, -DVec3::Z, s.dir), 0.7 / PI);
    }

    #[test]
    fn phong_lobe_conserves_energy() {
        // at normal incidence the whole lobe is above the surface, so the albedo is exactly 1
        let r = SpectralDistribution::constant(WavelengthGrid::default(), 1.0);
        let m = Material::GlossyPhong { reflectance: r, exponent: 20.0 };
        let n = 200;
        let mut total = 0.0;
        for i in 0..n {
            for j in 0..n {
                let (u1, u2) = ((i as f64 + 0.5) / n as f64, (j as f64 + 0.5) / n as f64);
                if let Some(s) = m.sample(0, DVec3::Z, -DVec3::Z, false, u1, u2, 0.0) {
                    total += s.weight;
                }
            }
        }
        let albedo = total / (n * n) as f64;
        assert!((albedo - 1.0).abs() < 1e-3, "{albedo}");
    }
}
