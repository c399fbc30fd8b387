//! `fluoray`: render scenes, run the dye validation protocol and inspect
//! dye spectra.
//!
//! Exit codes: 0 success, 1 parse or validation failure, 2 I/O failure.

use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use fluoray_core::fluorophore::canonical_name;
use fluoray_core::integrator::render_with_stats;
use fluoray_core::scene::{loader_for, read_description};
use fluoray_core::validation::{default_scaling_wavelengths, Protocol, ValidationConfig};
use fluoray_core::{Error, FluorophoreDb, RenderConfig, WavelengthGrid};

const DEFAULT_DB: &str = concat!(env!("CARGO_MANIFEST_DIR"), "/../../data/fluorophores");
const DEFAULT_SCENES: &str = concat!(env!("CARGO_MANIFEST_DIR"), "/../../scenes");

#[derive(Parser)]
#[command(name = "fluoray", version, about = "Spectral renderer for fluorescent participating media")]
struct Cli {
    /// Fluorophore database directory; overrides the scene's own setting.
    #[arg(long, global = true, env = "FLUOR_DB")]
    db: Option<PathBuf>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Render a scene to <out>.png, <out>.spd.csv and <out>.flspd.
    Render {
        scene: PathBuf,
        #[arg(long)]
        spp: Option<u32>,
        /// Output basename; defaults to the scene file stem.
        #[arg(long)]
        out: Option<PathBuf>,
        #[arg(long)]
        seed: Option<u64>,
        /// Worker threads, 0 for one per core.
        #[arg(long, default_value_t = 0)]
        threads: usize,
        /// Also render the elastic (non-fluorescent) light.
        #[arg(long)]
        elastic: bool,
    },
    /// Run the emission-profile and excitation-scaling checks for a dye.
    Validate {
        /// Dye name, e.g. 488 or "Alexa Fluor 488".
        dye: String,
        #[arg(long, value_enum, default_value_t = Test::All)]
        test: Test,
        #[arg(long)]
        spp: Option<u32>,
        #[arg(long)]
        seed: Option<u64>,
        #[arg(long, default_value_t = 0)]
        threads: usize,
        /// Directory holding validation_bead_<n>.json scenes.
        #[arg(long, env = "FLUORAY_SCENES", default_value = DEFAULT_SCENES)]
        scenes: PathBuf,
        /// Report basename; defaults to validation_<dye>.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Print a dye's properties and optionally write its spectra as CSV.
    Spectra {
        dye: String,
        #[arg(long)]
        csv: Option<PathBuf>,
    },
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Test {
    Profile,
    Scaling,
    All,
}

#[derive(Debug)]
enum Failure {
    Core(Error),
    ValidationFailed,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Core(e)
    }
}

fn main() -> ExitCode {
    env_logger::Builder::from_env(env_logger::Env::default().default_filter_or("info")).init();
    let cli = Cli::parse();
    let result = match cli.command {
        Command::Render { scene, spp, out, seed, threads, elastic } => {
            run_render(&scene, cli.db.as_deref(), spp, out, seed, threads, elastic)
        }
        Command::Validate { dye, test, spp, seed, threads, scenes, out } => {
            run_validate(&dye, test, spp, seed, threads, &scenes, cli.db.as_deref(), out)
        }
        Command::Spectra { dye, csv } => run_spectra(&dye, cli.db.as_deref(), csv.as_deref()),
    };
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::ValidationFailed) => ExitCode::from(1),
        Err(Failure::Core(e)) => {
            eprintln!("error: {e}");
            ExitCode::from(if e.is_io() { 2 } else { 1 })
        }
    }
}

fn run_render(
    scene: &Path,
    db: Option<&Path>,
    spp: Option<u32>,
    out: Option<PathBuf>,
    seed: Option<u64>,
    threads: usize,
    elastic: bool,
) -> Result<(), Failure> {
    let desc = read_description(scene)?;
    let built = desc.build(&loader_for(scene, db))?;
    let mut config = RenderConfig::from_scene(&built);
    config.threads = threads;
    config.elastic_component |= elastic;
    if let Some(spp) = spp {
        config.spp = spp;
    }
    if let Some(seed) = seed {
        config.seed = seed;
    }
    let (film, stats) = render_with_stats(&built, &config)?;
    let basename = out.unwrap_or_else(|| PathBuf::from(scene.file_stem().unwrap_or_default()));
    let paths = film.write_outputs(&basename)?;
    println!(
        "rendered {}x{} at {} spp: {} paths in {:.2} s ({:.0} paths/s)",
        film.width(),
        film.height(),
        config.spp,
        stats.paths,
        stats.elapsed.as_secs_f64(),
        stats.paths_per_second()
    );
    for p in [paths.png, paths.csv, paths.dump] {
        println!("wrote {}", p.display());
    }
    Ok(())
}

fn open_db(db: Option<&Path>) -> Result<FluorophoreDb, Error> {
    FluorophoreDb::open(db.unwrap_or(Path::new(DEFAULT_DB)))
}

#[allow(clippy::too_many_arguments)]
fn run_validate(
    dye: &str,
    test: Test,
    spp: Option<u32>,
    seed: Option<u64>,
    threads: usize,
    scenes: &Path,
    db: Option<&Path>,
    out: Option<PathBuf>,
) -> Result<(), Failure> {
    let canon = canonical_name(dye);
    if !open_db(db)?.contains(&canon) {
        return Err(Error::UnknownFluorophore(dye.to_string()).into());
    }
    let scene = scenes.join(format!("validation_bead_{}.json", canon.trim_start_matches("alexa")));
    let desc = read_description(&scene)?;
    let loader = loader_for(&scene, db);
    let config = ValidationConfig { spp, seed, threads, ..ValidationConfig::default() };
    let protocol = Protocol::new(&desc, &loader, &canon, config)?;
    let profile = match test {
        Test::Profile | Test::All => Some(protocol.profile_test()?.0),
        Test::Scaling => None,
    };
    let scaling = match test {
        Test::Scaling | Test::All => Some(protocol.scaling_test(&default_scaling_wavelengths(protocol.dye()))?),
        Test::Profile => None,
    };
    let report = match (profile, scaling) {
        (Some(p), Some(s)) => p.combine(s),
        (Some(r), None) | (None, Some(r)) => r,
        (None, None) => unreachable!("at least one test runs"),
    };
    print!("{report}");
    let basename = out.unwrap_or_else(|| PathBuf::from(format!("validation_{canon}")));
    let (csv, txt) = report.write(&basename)?;
    println!("wrote {}\nwrote {}", csv.display(), txt.display());
    if report.pass {
        Ok(())
    } else {
        Err(Failure::ValidationFailed)
    }
}

fn run_spectra(dye: &str, db: Option<&Path>, csv: Option<&Path>) -> Result<(), Failure> {
    let grid = WavelengthGrid::new(300.0, 800.0, 1.0)?;
    let d = open_db(db)?.load(dye, &grid)?;
    println!("{} ({})", d.display_name(), d.name());
    println!("excitation peak  {:.0} nm", d.excitation_peak());
    println!("emission peak    {:.0} nm", d.emission_peak());
    println!("Stokes shift     {:.0} nm", d.emission_peak() - d.excitation_peak());
    println!("epsilon max      {} M^-1 cm^-1", d.epsilon_max());
    println!("quantum yield    {}", d.quantum_yield());
    println!("molecular weight {} g/mol", d.molecular_weight());
    if let Some(path) = csv {
        let mut text = String::from("wavelength,excitation,emission\n");
        for (i, l) in grid.wavelengths().enumerate() {
            text += &format!("{l},{},{}\n", d.excitation().at(i), d.emission().at(i));
        }
        std::fs::write(path, text).map_err(Error::from)?;
        println!("wrote {}", path.display());
    }
    Ok(())
}
