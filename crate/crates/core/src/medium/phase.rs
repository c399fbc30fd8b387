//! Henyey-Greenstein phase function.
//!
//! `cos_theta` is measured between the incoming propagation direction and
//! the scattered one, so `g > 0` favours forward scattering.

use std::f64::consts::PI;

use glam::DVec3;

pub const INV_FOUR_PI: f64 = 1.0 / (4.0 * PI);

pub fn hg_eval(g: f64, cos_theta: f64) -> f64 {
    let denom = 1.0 + g * g - 2.0 * g * cos_theta;
    INV_FOUR_PI * (1.0 - g * g) / (denom * denom.sqrt())
}

/// Samples cos θ from the HG distribution.
pub fn hg_sample_cos(g: f64, u: f64) -> f64 {
    if g.abs() < 1e-3 {
        return 1.0 - 2.0 * u;
    }
    let sq = (1.0 - g * g) / (1.0 - g + 2.0 * g * u);
    ((1.0 + g * g - sq * sq) / (2.0 * g)).clamp(-1.0, 1.0)
}

/// Samples a scattered direction around `dir`; returns it with its solid-angle pdf.
pub fn hg_sample(g: f64, dir: DVec3, u1: f64, u2: f64) -> (DVec3, f64) {
    let cos_theta = hg_sample_cos(g, u1);
    let sin_theta = (1.0 - cos_theta * cos_theta).max(0.0).sqrt();
    let phi = 2.0 * PI * u2;
    let (t, b) = dir.any_orthonormal_pair();
    let out = (t * (sin_theta * phi.cos()) + b * (sin_theta * phi.sin()) + dir * cos_theta).normalize();
    (out, hg_eval(g, cos_theta))
}

/// Uniform direction on the sphere.
pub fn sample_isotropic(u1: f64, u2: f64) -> DVec3 {
    let z = 1.0 - 2.0 * u1;
    let r = (1.0 - z * z).max(0.0).sqrt();
    let phi = 2.0 * PI * u2;
    DVec3::new(r * phi.cos(), r * phi.sin(), z)
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;
    use gauss_quad::GaussLegendre;
    use std::num::NonZeroUsize;

    fn rule(order: usize) -> GaussLegendre {
        GaussLegendre::new(NonZeroUsize::new(order).unwrap())
    }

    #[test]
    fn isotropic_constant() {
        for c in [-1.0, -0.3, 0.0, 0.7, 1.0] {
            assert_relative_eq!(hg_eval(0.0, c), 0.0795775, epsilon = 1e-7);
        }
    }

    #[test]
    fn normalized_over_sphere() {
        let rule = rule(64);
        for g in [-0.9, -0.5, 0.0, 0.5, 0.9] {
            // azimuth integrates to 2π
            let total = rule.integrate(-1.0, 1.0, |x| 2.0 * PI * hg_eval(g, x));
            assert!((total - 1.0).abs() < 1e-3, "g={g}: {total}");
        }
    }

    #[test]
    fn sample_pdf_matches_eval() {
        let dir = DVec3::new(0.3, -0.2, 0.9).normalize();
        for (u1, u2) in [(0.1, 0.2), (0.5, 0.9), (0.97, 0.4)] {
            let (w, pdf) = hg_sample(0.7, dir, u1, u2);
            assert_relative_eq!(w.length(), 1.0, epsilon = 1e-12);
            assert_relative_eq!(pdf, hg_eval(0.7, w.dot(dir)), epsilon = 1e-9);
        }
    }

    #[test]
    fn sample_histogram_matches_eval() {
        use rand::{Rng, SeedableRng};
        use statrs::distribution::{ChiSquared, ContinuousCDF};
        let g = 0.7;
        let bins = 40;
        let n = 100_000;
        let mut rng = rand_pcg::Pcg64Mcg::seed_from_u64(7);
        let mut counts = vec![0usize; bins];
        for _ in 0..n {
            let c = hg_sample_cos(g, rng.random::<f64>());
            let b = (((c + 1.0) / 2.0) * bins as f64).floor().min(bins as f64 - 1.0) as usize;
            counts[b] += 1;
        }
        let rule = rule(16);
        let mut chi2 = 0.0;
        for (b, &obs) in counts.iter().enumerate() {
            let (lo, hi) = (-1.0 + 2.0 * b as f64 / bins as f64, -1.0 + 2.0 * (b + 1) as f64 / bins as f64);
            let p = rule.integrate(lo, hi, |c| 2.0 * PI * hg_eval(g, c));
            let e = p * n as f64;
            chi2 += (obs as f64 - e).powi(2) / e;
        }
        let crit = ChiSquared::new((bins - 1) as f64).unwrap().inverse_cdf(0.999);
        assert!(chi2 < crit, "chi2 {chi2} >= {crit}");
    }
}
