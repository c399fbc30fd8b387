//! Deterministic quadrature of single-scatter fluorescence in a box-shaped
//! homogeneous medium lit by one quad light. Used to check the path tracer.

use std::num::NonZeroUsize;

use gauss_quad::GaussLegendre;
use glam::DVec3;

use crate::error::{Error, Result};
use crate::medium::phase::INV_FOUR_PI;
use crate::medium::Medium;
use crate::scene::{Light, Ray, Shape};

/// A medium filling the axis-aligned box `[min, max]`, in vacuum.
#[derive(Clone, Copy, Debug)]
pub struct SlabReference<'a> {
    pub medium: &'a Medium,
    pub min: DVec3,
    pub max: DVec3,
}

const RELATIVE_TOLERANCE: f64 = 0.005;
const MAX_ORDER: usize = 128;

/// Parameter interval of `origin + t·dir`, t ∈ [0, t_max], inside the box.
fn clip(origin: DVec3, dir: DVec3, min: DVec3, max: DVec3, t_max: f64) -> Option<(f64, f64)> {
    let (mut t0, mut t1) = (0.0f64, t_max);
    for a in 0..3 {
        if dir[a] == 0.0 {
            if origin[a] < min[a] || origin[a] > max[a] {
                return None;
            }
            continue;
        }
        let inv = 1.0 / dir[a];
        let (mut near, mut far) = ((min[a] - origin[a]) * inv, (max[a] - origin[a]) * inv);
        if near > far {
            std::mem::swap(&mut near, &mut far);
        }
        t0 = t0.max(near);
        t1 = t1.min(far);
    }
    (t0 < t1).then_some((t0, t1))
}

fn inside_length(a: DVec3, b: DVec3, min: DVec3, max: DVec3) -> f64 {
    let d = b - a;
    let len = d.length();
    if len == 0.0 {
        return 0.0;
    }
    clip(a, d / len, min, max, len).map_or(0.0, |(t0, t1)| t1 - t0)
}

/// Radiance at `lambda` reaching the origin of `ray` from light scattered
/// exactly once, inelastically, inside the slab.
///
/// Integrates over the camera segment, the light's surface and the
/// excitation grid with Gauss-Legendre rules, doubling the order until two
/// successive results agree within 0.5%.
pub fn single_scatter_reference(slab: &SlabReference, light: &Light, ray: &Ray, lambda: f64) -> Result<f64> {
    let Shape::Quad { corner, edge_u, edge_v } = light.shape else {
        return Err(Error::InvariantViolation("reference light must be a quad".into()));
    };
    let medium = slab.medium;
    let grid = *medium.grid();
    let li =
        grid.index_of(lambda).ok_or_else(|| Error::InvariantViolation(format!("{lambda} nm is not on the grid")))?;
    let Some((t_in, t_out)) = clip(ray.origin, ray.dir, slab.min, slab.max, f64::INFINITY) else {
        return Ok(0.0);
    };

    // Σ_k σ_f,k·Q_k·f_m,k(λ)δλ/∫f_m,k, and per-dye excitation on the grid
    let dyes: Vec<(f64, Vec<f64>)> = medium
        .fluorophores()
        .iter()
        .enumerate()
        .map(|(k, f)| {
            let strength = medium.fluorescence_rate(k) * f.dye().emission_fraction(lambda, grid.step());
            (strength, f.dye().excitation().values().to_vec())
        })
        .filter(|(s, _)| *s > 0.0)
        .collect();
    let excitation: Vec<(usize, f64)> = (0..grid.len())
        .filter_map(|j| {
            let le = light.spd.at(j);
            let fx: f64 = dyes.iter().map(|(s, fx)| s * fx[j]).sum();
            (le * fx > 0.0).then_some((j, le * fx))
        })
        .collect();
    if excitation.is_empty() {
        return Ok(0.0);
    }

    let cross = edge_u.cross(edge_v);
    let area = cross.length();
    let n_light = cross / area;
    let sigma_t = |j: usize| medium.sigma_t_at(j);

    let evaluate = |order: usize| -> f64 {
        let rule = GaussLegendre::new(NonZeroUsize::new(order).expect("order > 0"));
        rule.integrate(t_in, t_out, |t| {
            let x = ray.at(t);
            let camera_tr = (-sigma_t(li) * (t - t_in)).exp();
            let light_term = rule.integrate(0.0, 1.0, |u| {
                rule.integrate(0.0, 1.0, |v| {
                    let y = corner + edge_u * u + edge_v * v;
                    let d = y - x;
                    let dist2 = d.length_squared();
                    let dir = d / dist2.sqrt();
                    let cos_y = light.emitting_cosine(n_light, -dir);
                    if cos_y == 0.0 {
                        return 0.0;
                    }
                    let len = inside_length(x, y, slab.min, slab.max);
                    let geometry = cos_y / dist2 * area;
                    excitation.iter().map(|&(j, w)| w * (-sigma_t(j) * len).exp()).sum::<f64>() * geometry
                })
            });
            camera_tr * INV_FOUR_PI * light_term
        })
    };

    let mut order = 8;
    let mut previous = evaluate(order);
    loop {
        order *= 2;
        let current = evaluate(order);
        let change = if current == 0.0 { previous.abs() } else { ((current - previous) / current).abs() };
        if change <= RELATIVE_TOLERANCE {
            return Ok(current);
        }
        if order >= MAX_ORDER {
            return Err(Error::NonConvergent(change));
        }
        previous = current;
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fluorophore::{DissolvedFluorophore, Fluorophore};
    use crate::spectral::{SpectralDistribution, WavelengthGrid};
    use std::sync::Arc;

    fn grid() -> WavelengthGrid {
        WavelengthGrid::new(400.0, 600.0, 1.0).unwrap()
    }

    fn dye() -> Arc<Fluorophore> {
        let g = grid();
        let ex = SpectralDistribution::from_fn(g, |l| (-(l - 470.0f64).powi(2) / 400.0).exp());
        let em = SpectralDistribution::from_fn(g, |l| (-(l - 520.0f64).powi(2) / 400.0).exp());
        Arc::new(Fluorophore::new("test", &ex, &em, 50_000.0, 0.8, 500.0).unwrap())
    }

    fn medium(concentration: f64, sigma_s: f64) -> Medium {
        let g = grid();
        Medium::new(
            g,
            &SpectralDistribution::zeros(g),
            &SpectralDistribution::constant(g, sigma_s),
            0.0,
            vec![DissolvedFluorophore::new(dye(), concentration).unwrap()],
        )
        .unwrap()
    }

    fn light() -> Light {
        Light {
            name: "lamp".into(),
            shape: Shape::Quad {
                corner: DVec3::new(-0.05, -0.05, -0.05),
                edge_u: DVec3::X * 0.1,
                edge_v: DVec3::Y * 0.1,
            },
            spd: SpectralDistribution::monochromatic(grid(), 470.0, 1.0),
            two_sided: false,
            primitive: 0,
        }
    }

    fn eval(m: &Medium) -> f64 {
        let slab = SlabReference { medium: m, min: DVec3::new(-0.5, -0.5, 0.0), max: DVec3::new(0.5, 0.5, 0.02) };
        let ray = Ray::new(DVec3::new(0.0, 0.0, 1.0), -DVec3::Z);
        single_scatter_reference(&slab, &light(), &ray, 520.0).unwrap()
    }

    #[test]
    fn zero_concentration_gives_zero() {
        assert_eq!(eval(&medium(0.0, 1.0)), 0.0);
    }

    #[test]
    fn thin_limit_is_linear_in_concentration() {
        let a = eval(&medium(1e-6, 0.0));
        let b = eval(&medium(2e-6, 0.0));
        assert!(a > 0.0);
        assert!((b / a - 2.0).abs() < 1e-3, "{}", b / a);
    }

    #[test]
    fn optically_thin_slab_matches_closed_form() {
        // thin slab, light far below: ∫ σ_fQ·frac/(4π)·L·A·cos/d² dt with d ≈ z distance
        let m = medium(1e-7, 0.0);
        let value = eval(&m);
        let rate = m.fluorescence_rate(0);
        let frac = m.fluorophores()[0].dye().emission_fraction(520.0, 1.0);
        let fx = m.fluorophores()[0].dye().excitation().value_at(470.0);
        let solid: f64 = {
            // mean of 1/d²·cos over the 2 cm slab thickness, light 10 cm square at z = -0.05
            let n = 2000;
            (0..n)
                .map(|i| {
                    let z = 0.02 * (i as f64 + 0.5) / n as f64;
                    let mut s = 0.0;
                    let k = 60;
                    for a in 0..k {
                        for b in 0..k {
                            let x = -0.05 + 0.1 * (a as f64 + 0.5) / k as f64;
                            let y = -0.05 + 0.1 * (b as f64 + 0.5) / k as f64;
                            let h = z + 0.05;
                            let d2 = x * x + y * y + h * h;
                            s += h / d2.sqrt() / d2 * 0.01 / (k * k) as f64;
                        }
                    }
                    s * 0.02 / n as f64
                })
                .sum()
        };
        let expected = rate * frac * fx * INV_FOUR_PI * solid;
        assert!(((value - expected) / expected).abs() < 2e-3, "{value} vs {expected}");
    }

    #[test]
    fn clip_and_length() {
        let (min, max) = (DVec3::ZERO, DVec3::ONE);
        assert_eq!(clip(DVec3::new(0.5, 0.5, 2.0), -DVec3::Z, min, max, 10.0), Some((1.0, 2.0)));
        assert_eq!(clip(DVec3::new(2.0, 0.5, 2.0), -DVec3::Z, min, max, 10.0), None);
        assert!((inside_length(DVec3::new(0.5, 0.5, 0.5), DVec3::new(0.5, 0.5, -3.0), min, max) - 0.5).abs() < 1e-15);
    }
}
