use super::cie::{CIE_1931_2DEG, CIE_LAMBDA_MAX, CIE_LAMBDA_MIN};
use super::SpectralDistribution;

/// Linearly interpolated colour-matching functions; zero outside 360-830 nm.
pub fn cie_xyz_at(lambda: f64) -> [f64; 3] {
    if !(CIE_LAMBDA_MIN..=CIE_LAMBDA_MAX).contains(&lambda) {
        return [0.0; 3];
    }
    let x = lambda - CIE_LAMBDA_MIN;
    let i = (x.floor() as usize).min(CIE_1931_2DEG.len() - 1);
    let j = (i + 1).min(CIE_1931_2DEG.len() - 1);
    let f = x - i as f64;
    let (a, b) = (CIE_1931_2DEG[i], CIE_1931_2DEG[j]);
    [a[0] + (b[0] - a[0]) * f, a[1] + (b[1] - a[1]) * f, a[2] + (b[2] - a[2]) * f]
}

/// Trapezoidal XYZ integration over the part of the grid the CIE tables cover.
pub fn spd_to_xyz(s: &SpectralDistribution) -> [f64; 3] {
    let g = s.grid();
    let n = g.len();
    let mut xyz = [0.0; 3];
    for (i, &v) in s.values().iter().enumerate() {
        if v == 0.0 {
            continue;
        }
        let w = if i == 0 || i == n - 1 { 0.5 } else { 1.0 } * g.step();
        let cmf = cie_xyz_at(g.wavelength(i));
        for c in 0..3 {
            xyz[c] += cmf[c] * v * w;
        }
    }
    xyz
}

/// XYZ to linear sRGB (D65 primaries).
pub fn xyz_to_linear_srgb(xyz: [f64; 3]) -> [f64; 3] {
    let [x, y, z] = xyz;
    [3.2406 * x - 1.5372 * y - 0.4986 * z, -0.9689 * x + 1.8758 * y + 0.0415 * z, 0.0557 * x - 0.2040 * y + 1.0570 * z]
}

/// Display colour of an SPD: XYZ, sRGB primaries, exposure, clamp, gamma 2.2.
pub fn spd_to_rgb(s: &SpectralDistribution, exposure: f64) -> [f64; 3] {
    xyz_to_linear_srgb(spd_to_xyz(s)).map(|c| (c * exposure).clamp(0.0, 1.0).powf(1.0 / 2.2))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::spectral::WavelengthGrid;

    #[test]
    fn black_spd_is_black() {
        let s = SpectralDistribution::zeros(WavelengthGrid::default());
        assert_eq!(spd_to_rgb(&s, 1.0), [0.0; 3]);
    }

    #[test]
    fn equal_energy_is_near_white() {
        let g = WavelengthGrid::new(360.0, 830.0, 1.0).unwrap();
        let s = SpectralDistribution::constant(g, 1.0);
        let y = spd_to_xyz(&s)[1];
        let [r, gg, b] = spd_to_rgb(&s, 1.0 / y);
        let max = r.max(gg).max(b);
        let min = r.min(gg).min(b);
        assert!(max - min < 0.05, "{r} {gg} {b}");
    }

    #[test]
    fn green_monochromatic_is_green() {
        let s = SpectralDistribution::monochromatic(WavelengthGrid::default(), 550.0, 1.0);
        let [r, g, b] = spd_to_rgb(&s, 1.0);
        assert!(g > r && g > b);
    }

    #[test]
    fn table_lookup_matches_rows() {
        assert_eq!(cie_xyz_at(360.0), CIE_1931_2DEG[0]);
        assert_eq!(cie_xyz_at(555.0), CIE_1931_2DEG[195]);
        assert_eq!(cie_xyz_at(200.0), [0.0; 3]);
    }
}
