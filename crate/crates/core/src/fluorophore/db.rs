//! On-disk dye database.
//!
//! ```text
//! <root>/<name>/excitation.csv   wavelength_nm,value
//! <root>/<name>/emission.csv     wavelength_nm,value
//! <root>/<name>/meta.toml        epsilon_max, quantum_yield, molecular_weight
//! ```

use std::path::{Path, PathBuf};

use serde::Deserialize;

use super::Fluorophore;
use crate::error::{Error, Result};
use crate::spectral::{read_spectrum_csv, WavelengthGrid};

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct Meta {
    display_name: Option<String>,
    epsilon_max: f64,
    quantum_yield: f64,
    molecular_weight: f64,
}

/// Maps user spellings ("Alexa Fluor 488", "alexa-488", "488") onto the
/// directory naming used by the database ("alexa488").
pub fn canonical_name(name: &str) -> String {
    let lower: String =
        name.to_ascii_lowercase().replace("fluor", "").chars().filter(|c| c.is_ascii_alphanumeric()).collect();
    if !lower.is_empty() && lower.chars().all(|c| c.is_ascii_digit()) {
        format!("alexa{lower}")
    } else {
        lower
    }
}

#[derive(Clone, Debug)]
pub struct FluorophoreDb {
    root: PathBuf,
}

impl FluorophoreDb {
    pub fn open(root: impl Into<PathBuf>) -> Result<Self> {
        let root = root.into();
        if !root.is_dir() {
            return Err(Error::MissingFile(root));
        }
        Ok(FluorophoreDb { root })
    }

    pub fn root(&self) -> &Path {
        &self.root
    }

    /// Canonical names of every dye directory, sorted.
    pub fn names(&self) -> Result<Vec<String>> {
        let mut names = Vec::new();
        for entry in std::fs::read_dir(&self.root)? {
            let entry = entry?;
            if entry.file_type()?.is_dir() {
                names.push(entry.file_name().to_string_lossy().into_owned());
            }
        }
        names.sort();
        Ok(names)
    }

    pub fn contains(&self, name: &str) -> bool {
        self.root.join(canonical_name(name)).is_dir()
    }

    /// Loads a dye and resamples its spectra onto `grid`.
    pub fn load(&self, name: &str, grid: &WavelengthGrid) -> Result<Fluorophore> {
        let canon = canonical_name(name);
        let dir = self.root.join(&canon);
        if canon.is_empty() || !dir.is_dir() {
            return Err(Error::UnknownFluorophore(name.to_string()));
        }
        let excitation = read_spectrum_csv(&dir.join("excitation.csv"))?.resample(grid);
        let emission = read_spectrum_csv(&dir.join("emission.csv"))?.resample(grid);

        let meta_path = dir.join("meta.toml");
        let text = match std::fs::read_to_string(&meta_path) {
            Ok(t) => t,
            Err(e) if e.kind() == std::io::ErrorKind::NotFound => return Err(Error::MissingFile(meta_path)),
            Err(e) => return Err(e.into()),
        };
        let meta: Meta = toml::from_str(&text)
            .map_err(|e| Error::InvariantViolation(format!("{}: {}", meta_path.display(), e.message())))?;

        let dye = Fluorophore::new(
            canon,
            &excitation,
            &emission,
            meta.epsilon_max,
            meta.quantum_yield,
            meta.molecular_weight,
        )?;
        Ok(match meta.display_name {
            Some(d) => dye.with_display_name(d),
            None => dye,
        })
    }
}
