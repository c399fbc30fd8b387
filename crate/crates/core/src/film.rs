//! Per-pixel spectral accumulation and output.
//!
//! Every pixel holds, for each grid wavelength, the sum and the sum of squares
//! of its path contributions, plus the number of samples taken. Means,
//! standard errors, scene SPDs and images are derived from those.

use std::fs::File;
use std::io::{BufReader, BufWriter, Read, Write};
use std::path::{Path, PathBuf};

use crate::error::{Error, Result};
use crate::spectral::{spd_to_rgb, spd_to_xyz, trapezoid, SpectralDistribution, WavelengthGrid};

pub const FLSPD_MAGIC: &[u8; 8] = b"FLSPD v1";

/// Half-open pixel rectangle `[x0, x1) × [y0, y1)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Roi {
    pub x0: u32,
    pub y0: u32,
    pub x1: u32,
    pub y1: u32,
}

impl Roi {
    pub fn new(x0: u32, y0: u32, x1: u32, y1: u32) -> Self {
        Roi { x0, y0, x1, y1 }
    }

    pub fn contains(&self, x: u32, y: u32) -> bool {
        x >= self.x0 && x < self.x1 && y >= self.y0 && y < self.y1
    }
}

/// Scene SPD together with the standard error of its integral.
#[derive(Clone, Debug)]
pub struct RegionSpd {
    pub spd: SpectralDistribution,
    pub pixels: usize,
    pub integral: f64,
    pub integral_std_error: f64,
}

/// Files produced by [`Film::write_outputs`].
#[derive(Clone, Debug)]
pub struct OutputPaths {
    pub png: PathBuf,
    pub csv: PathBuf,
    pub dump: PathBuf,
}

#[derive(Clone, Debug, PartialEq)]
pub struct Film {
    width: u32,
    height: u32,
    grid: WavelengthGrid,
    sums: Vec<f64>,
    sq_sums: Vec<f64>,
    counts: Vec<u64>,
}

impl Film {
    pub fn new(width: u32, height: u32, grid: WavelengthGrid) -> Self {
        let n = width as usize * height as usize;
        Film {
            width,
            height,
            grid,
            sums: vec![0.0; n * grid.len()],
            sq_sums: vec![0.0; n * grid.len()],
            counts: vec![0; n],
        }
    }

    pub fn width(&self) -> u32 {
        self.width
    }

    pub fn height(&self) -> u32 {
        self.height
    }

    pub fn grid(&self) -> &WavelengthGrid {
        &self.grid
    }

    fn pixel_index(&self, x: u32, y: u32) -> usize {
        assert!(x < self.width && y < self.height, "pixel ({x}, {y}) outside film");
        y as usize * self.width as usize + x as usize
    }

    fn bin(&self, x: u32, y: u32, i: usize) -> usize {
        self.pixel_index(x, y) * self.grid.len() + i
    }

    /// Adds one path contribution at grid index `i`.
    pub fn add_sample(&mut self, x: u32, y: u32, i: usize, value: f64) {
        debug_assert!(value >= 0.0 && value.is_finite(), "bad sample {value}");
        let b = self.bin(x, y, i);
        self.sums[b] += value;
        self.sq_sums[b] += value * value;
    }

    /// Records that `n` samples were taken at pixel (x, y), for every wavelength.
    pub fn add_sample_count(&mut self, x: u32, y: u32, n: u64) {
        let p = self.pixel_index(x, y);
        self.counts[p] += n;
    }

    /// Adds pre-summed accumulators for one pixel.
    pub fn add_pixel(&mut self, x: u32, y: u32, sums: &[f64], sq_sums: &[f64], count: u64) {
        let n = self.grid.len();
        assert!(sums.len() == n && sq_sums.len() == n);
        let p = self.pixel_index(x, y);
        for i in 0..n {
            self.sums[p * n + i] += sums[i];
            self.sq_sums[p * n + i] += sq_sums[i];
        }
        self.counts[p] += count;
    }

    /// Element-wise sum of two films with the same shape.
    pub fn merge(&mut self, other: &Film) -> Result<()> {
        if (self.width, self.height, self.grid) != (other.width, other.height, other.grid) {
            return Err(Error::InvariantViolation("merging films of different shape".into()));
        }
        for (a, b) in self.sums.iter_mut().zip(&other.sums) {
            *a += b;
        }
        for (a, b) in self.sq_sums.iter_mut().zip(&other.sq_sums) {
            *a += b;
        }
        for (a, b) in self.counts.iter_mut().zip(&other.counts) {
            *a += b;
        }
        Ok(())
    }

    pub fn sample_count(&self, x: u32, y: u32) -> u64 {
        self.counts[self.pixel_index(x, y)]
    }

    pub fn mean(&self, x: u32, y: u32, i: usize) -> f64 {
        let n = self.sample_count(x, y);
        if n == 0 {
            0.0
        } else {
            self.sums[self.bin(x, y, i)] / n as f64
        }
    }

    /// Sample variance of the mean at one bin (0 with fewer than 2 samples).
    pub fn variance_of_mean(&self, x: u32, y: u32, i: usize) -> f64 {
        let n = self.sample_count(x, y);
        if n < 2 {
            return 0.0;
        }
        let b = self.bin(x, y, i);
        let nf = n as f64;
        let m = self.sums[b] / nf;
        ((self.sq_sums[b] / nf - m * m).max(0.0) * nf / (nf - 1.0)) / nf
    }

    pub fn standard_error(&self, x: u32, y: u32, i: usize) -> f64 {
        self.variance_of_mean(x, y, i).sqrt()
    }

    pub fn pixel_spd(&self, x: u32, y: u32) -> SpectralDistribution {
        let values = (0..self.grid.len()).map(|i| self.mean(x, y, i)).collect();
        SpectralDistribution::new(self.grid, values).expect("film means are non-negative")
    }

    fn pixel_energy(&self, x: u32, y: u32) -> f64 {
        let n = self.sample_count(x, y);
        if n == 0 {
            return 0.0;
        }
        let b = self.bin(x, y, 0);
        trapezoid(&self.sums[b..b + self.grid.len()], self.grid.step()) / n as f64
    }

    /// Pixels whose integrated mean exceeds `threshold`, in row-major order.
    pub fn illuminated_mask(&self, threshold: f64, roi: Option<Roi>) -> Vec<bool> {
        let mut mask = Vec::with_capacity(self.counts.len());
        for y in 0..self.height {
            for x in 0..self.width {
                let inside = roi.is_none_or(|r| r.contains(x, y));
                mask.push(inside && self.pixel_energy(x, y) > threshold);
            }
        }
        mask
    }

    /// Mean SPD over illuminated pixels (integrated energy > `threshold`),
    /// optionally restricted to `roi`.
    pub fn scene_spd(&self, threshold: f64, roi: Option<Roi>) -> Result<SpectralDistribution> {
        Ok(self.masked_spd(&self.illuminated_mask(threshold, roi))?.spd)
    }

    /// Mean SPD over the pixels selected by `mask` (row-major), with the
    /// standard error of its integral.
    pub fn masked_spd(&self, mask: &[bool]) -> Result<RegionSpd> {
        assert_eq!(mask.len(), self.counts.len(), "mask size");
        let n = self.grid.len();
        let mut sum = vec![0.0; n];
        let mut var = vec![0.0; n];
        let mut pixels = 0usize;
        for y in 0..self.height {
            for x in 0..self.width {
                if !mask[self.pixel_index(x, y)] {
                    continue;
                }
                pixels += 1;
                for i in 0..n {
                    sum[i] += self.mean(x, y, i);
                    var[i] += self.variance_of_mean(x, y, i);
                }
            }
        }
        if pixels == 0 {
            return Err(Error::NoIlluminatedPixels);
        }
        let p = pixels as f64;
        let values: Vec<f64> = sum.iter().map(|s| s / p).collect();
        // distinct bins use independent random streams
        let h = self.grid.step();
        let integral_var: f64 = var
            .iter()
            .enumerate()
            .map(|(i, v)| {
                let w = if i == 0 || i == n - 1 { 0.5 * h } else { h };
                w * w * v / (p * p)
            })
            .sum();
        let spd = SpectralDistribution::new(self.grid, values)?;
        Ok(RegionSpd { integral: spd.integrate(), spd, pixels, integral_std_error: integral_var.sqrt() })
    }

    pub fn is_finite(&self) -> bool {
        self.sums.iter().chain(&self.sq_sums).all(|v| v.is_finite())
    }

    /// Exposure that maps the 99th-percentile pixel luminance to 0.8.
    pub fn auto_exposure(&self) -> f64 {
        let mut lum: Vec<f64> = (0..self.height)
            .flat_map(|y| (0..self.width).map(move |x| (x, y)))
            .map(|(x, y)| spd_to_xyz(&self.pixel_spd(x, y))[1])
            .filter(|l| *l > 0.0)
            .collect();
        if lum.is_empty() {
            return 1.0;
        }
        lum.sort_by(f64::total_cmp);
        let p = lum[((lum.len() - 1) as f64 * 0.99).round() as usize];
        0.8 / p
    }

    pub fn to_rgb_image(&self, exposure: f64) -> image::RgbImage {
        image::RgbImage::from_fn(self.width, self.height, |x, y| {
            let c = spd_to_rgb(&self.pixel_spd(x, y), exposure);
            image::Rgb(c.map(|v| (v * 255.0).round() as u8))
        })
    }

    pub fn write_png(&self, path: &Path, exposure: f64) -> Result<()> {
        self.to_rgb_image(exposure).save_with_format(path, image::ImageFormat::Png)?;
        Ok(())
    }

    /// `wavelength,value` rows of the scene SPD; all zeros if nothing is lit.
    pub fn write_spd_csv(&self, path: &Path, threshold: f64) -> Result<()> {
        let spd = match self.scene_spd(threshold, None) {
            Ok(s) => s,
            Err(Error::NoIlluminatedPixels) => SpectralDistribution::zeros(self.grid),
            Err(e) => return Err(e),
        };
        let mut w = BufWriter::new(File::create(path)?);
        writeln!(w, "wavelength,value")?;
        for (l, v) in self.grid.wavelengths().zip(spd.values()) {
            writeln!(w, "{l},{v:e}")?;
        }
        w.flush()?;
        Ok(())
    }

    /// Raw dump: magic, u32 width, u32 height, f64 λmin/λmax/step, then
    /// row-major per-pixel mean spectra as f64, all little-endian.
    pub fn write_dump(&self, path: &Path) -> Result<()> {
        let mut w = BufWriter::new(File::create(path)?);
        w.write_all(&self.dump_bytes())?;
        w.flush()?;
        Ok(())
    }

    pub fn dump_bytes(&self) -> Vec<u8> {
        let n = self.grid.len();
        let mut out = Vec::with_capacity(40 + self.sums.len() * 8);
        out.extend_from_slice(FLSPD_MAGIC);
        out.extend_from_slice(&self.width.to_le_bytes());
        out.extend_from_slice(&self.height.to_le_bytes());
        for v in [self.grid.lambda_min(), self.grid.lambda_max(), self.grid.step()] {
            out.extend_from_slice(&v.to_le_bytes());
        }
        for y in 0..self.height {
            for x in 0..self.width {
                for i in 0..n {
                    out.extend_from_slice(&self.mean(x, y, i).to_le_bytes());
                }
            }
        }
        out
    }

    /// Loads a raw dump as a film with one sample per pixel.
    pub fn read_dump(path: &Path) -> Result<Film> {
        if !path.exists() {
            return Err(Error::MissingFile(path.to_path_buf()));
        }
        let mut bytes = Vec::new();
        BufReader::new(File::open(path)?).read_to_end(&mut bytes)?;
        Self::from_dump_bytes(&bytes)
    }

    pub fn from_dump_bytes(bytes: &[u8]) -> Result<Film> {
        let bad = |m: &str| Error::MalformedDump(m.to_string());
        if bytes.len() < 40 || &bytes[..8] != FLSPD_MAGIC {
            return Err(bad("missing FLSPD v1 header"));
        }
        let u32_at = |o: usize| u32::from_le_bytes(bytes[o..o + 4].try_into().expect("4 bytes"));
        let f64_at = |o: usize| f64::from_le_bytes(bytes[o..o + 8].try_into().expect("8 bytes"));
        let (width, height) = (u32_at(8), u32_at(12));
        let grid = WavelengthGrid::new(f64_at(16), f64_at(24), f64_at(32)).map_err(|e| bad(&e.to_string()))?;
        let n = grid.len();
        let expected = 40 + width as usize * height as usize * n * 8;
        if bytes.len() != expected {
            return Err(bad(&format!("expected {expected} bytes, found {}", bytes.len())));
        }
        let mut film = Film::new(width, height, grid);
        for (k, chunk) in bytes[40..].chunks_exact(8).enumerate() {
            let v = f64::from_le_bytes(chunk.try_into().expect("8 bytes"));
            if !(v >= 0.0 && v.is_finite()) {
                return Err(bad(&format!("invalid value {v} in bin {k}")));
            }
            film.sums[k] = v;
            film.sq_sums[k] = v * v;
        }
        film.counts.fill(1);
        Ok(film)
    }

    /// Writes `<basename>.png`, `<basename>.spd.csv` and `<basename>.flspd`.
    pub fn write_outputs(&self, basename: &Path) -> Result<OutputPaths> {
        let with_suffix = |s: &str| {
            let mut p = basename.as_os_str().to_owned();
            p.push(s);
            PathBuf::from(p)
        };
        let paths = OutputPaths { png: with_suffix(".png"), csv: with_suffix(".spd.csv"), dump: with_suffix(".flspd") };
        self.write_png(&paths.png, self.auto_exposure())?;
        self.write_spd_csv(&paths.csv, 0.0)?;
        self.write_dump(&paths.dump)?;
        Ok(paths)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn grid() -> WavelengthGrid {
        WavelengthGrid::new(400.0, 700.0, 10.0).unwrap()
    }

    fn bump(scale: f64) -> Vec<f64> {
        grid().wavelengths().map(|l| scale * (-(l - 550.0).powi(2) / 800.0).exp()).collect()
    }

    fn uniform_film(w: u32, h: u32, s: &[f64]) -> Film {
        let mut f = Film::new(w, h, grid());
        let sq: Vec<f64> = s.iter().map(|v| v * v).collect();
        for y in 0..h {
            for x in 0..w {
                f.add_pixel(x, y, s, &sq, 1);
            }
        }
        f
    }

    #[test]
    fn uniform_film_scene_spd_is_pixel_spd() {
        let s = bump(2.0);
        let f = uniform_film(4, 3, &s);
        let spd = f.scene_spd(0.0, None).unwrap();
        for (a, b) in spd.values().iter().zip(&s) {
            assert!((a - b).abs() < 1e-15);
        }
    }

    #[test]
    fn dark_pixels_are_excluded() {
        let s = bump(1.0);
        let mut f = Film::new(4, 4, grid());
        let sq: Vec<f64> = s.iter().map(|v| v * v).collect();
        for y in 0..4 {
            for x in 0..4 {
                if (x + y) % 2 == 0 {
                    f.add_pixel(x, y, &s, &sq, 1);
                } else {
                    f.add_sample_count(x, y, 1);
                }
            }
        }
        let lit = f.scene_spd(0.0, None).unwrap();
        let all = uniform_film(4, 4, &s).scene_spd(0.0, None).unwrap();
        for (a, b) in lit.values().iter().zip(all.values()) {
            assert!((a - b).abs() <= 1e-15 * b.max(1.0));
        }
        assert_eq!(f.illuminated_mask(0.0, None).iter().filter(|m| **m).count(), 8);
    }

    #[test]
    fn empty_film_has_no_illuminated_pixels() {
        let f = Film::new(2, 2, grid());
        assert!(matches!(f.scene_spd(0.0, None), Err(Error::NoIlluminatedPixels)));
    }

    #[test]
    fn roi_selects_region() {
        let mut f = Film::new(4, 1, grid());
        let (a, b) = (bump(1.0), bump(3.0));
        f.add_pixel(0, 0, &a, &a, 1);
        f.add_pixel(3, 0, &b, &b, 1);
        let left = f.scene_spd(0.0, Some(Roi::new(0, 0, 2, 1))).unwrap();
        assert_eq!(left.values(), &a[..]);
        let right = f.scene_spd(0.0, Some(Roi::new(2, 0, 4, 1))).unwrap();
        assert_eq!(right.values(), &b[..]);
    }

    #[test]
    fn adding_zero_changes_nothing() {
        let mut f = uniform_film(2, 2, &bump(1.0));
        let before = f.clone();
        f.add_sample(1, 1, 3, 0.0);
        assert_eq!(f, before);
    }

    #[test]
    fn standard_error_of_known_samples() {
        let mut f = Film::new(1, 1, grid());
        for v in [1.0, 2.0, 3.0, 4.0] {
            f.add_sample(0, 0, 0, v);
        }
        f.add_sample_count(0, 0, 4);
        assert_eq!(f.mean(0, 0, 0), 2.5);
        // sample variance 5/3, over n = 4
        assert!((f.variance_of_mean(0, 0, 0) - 5.0 / 12.0).abs() < 1e-15);
    }

    #[test]
    fn dump_round_trip_is_exact() {
        let mut f = Film::new(3, 2, grid());
        let mut k = 1.0f64;
        for y in 0..2 {
            for x in 0..3 {
                for i in 0..grid().len() {
                    k = (k * 1.618_033_988_7).fract() + 1e-3;
                    f.add_sample(x, y, i, k / 7.0);
                }
                f.add_sample_count(x, y, 1);
            }
        }
        let g = Film::from_dump_bytes(&f.dump_bytes()).unwrap();
        assert_eq!(g, f);
        assert_eq!(g.dump_bytes(), f.dump_bytes());
    }

    #[test]
    fn dump_rejects_garbage() {
        assert!(matches!(Film::from_dump_bytes(b"not a dump at all"), Err(Error::MalformedDump(_))));
        let mut bytes = Film::new(1, 1, grid()).dump_bytes();
        bytes.pop();
        assert!(matches!(Film::from_dump_bytes(&bytes), Err(Error::MalformedDump(_))));
    }

    #[test]
    fn zero_film_outputs() {
        let dir = tempfile::tempdir().unwrap();
        let f = Film::new(5, 4, grid());
        let paths = f.write_outputs(&dir.path().join("zero")).unwrap();
        let img = image::open(&paths.png).unwrap().to_rgb8();
        assert!(img.pixels().all(|p| p.0 == [0, 0, 0]));
        let csv = std::fs::read_to_string(&paths.csv).unwrap();
        let rows: Vec<&str> = csv.lines().skip(1).collect();
        assert_eq!(rows.len(), grid().len());
        assert!(rows.iter().all(|r| r.split(',').nth(1).unwrap().parse::<f64>().unwrap() == 0.0));
        assert_eq!(Film::read_dump(&paths.dump).unwrap().dump_bytes(), f.dump_bytes());
    }

    proptest! {
        #[test]
        fn merge_commutes(a in prop::collection::vec(0.0f64..10.0, 62), b in prop::collection::vec(0.0f64..10.0, 62)) {
            let n = grid().len();
            let mut fa = Film::new(2, 1, grid());
            let mut fb = Film::new(2, 1, grid());
            for x in 0..2u32 {
                let r = x as usize * n..(x as usize + 1) * n;
                fa.add_pixel(x, 0, &a[r.clone()], &a[r.clone()], 1);
                fb.add_pixel(x, 0, &b[r.clone()], &b[r], 2);
            }
            let mut ab = fa.clone();
            ab.merge(&fb).unwrap();
            let mut ba = fb.clone();
            ba.merge(&fa).unwrap();
            prop_assert_eq!(ab, ba);
        }

        #[test]
        fn scene_spd_ignores_pixel_order(perm in Just((0..6usize).collect::<Vec<_>>()).prop_shuffle()) {
            let spectra: Vec<Vec<f64>> = (0..6).map(|k| bump(k as f64 * 0.5)).collect();
            let mut a = Film::new(3, 2, grid());
            let mut b = Film::new(3, 2, grid());
            for (k, s) in spectra.iter().enumerate() {
                let (x, y) = ((k % 3) as u32, (k / 3) as u32);
                a.add_pixel(x, y, s, s, 1);
                let p = perm[k];
                b.add_pixel((p % 3) as u32, (p / 3) as u32, s, s, 1);
            }
            let sa = a.scene_spd(0.0, None).unwrap();
            let sb = b.scene_spd(0.0, None).unwrap();
            for (x, y) in sa.values().iter().zip(sb.values()) {
                prop_assert!((x - y).abs() <= 1e-12 * x.abs().max(1.0));
            }
        }
    }
}
