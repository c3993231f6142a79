use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;

#[derive(Debug, Parser)]
#[command(
    name = "sphere-osc",
    version,
    about = "Pöschl–Teller oscillator on the N-sphere: spectra, eigenfunctions and checks"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,

    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Csv)]
    pub format: Format,

    /// Output file; standard output when absent.
    #[arg(long, global = true, value_name = "PATH")]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Format {
    Csv,
    Json,
}

#[derive(Debug, Subcommand, Serialize)]
#[serde(tag = "command", rename_all = "kebab-case")]
pub enum Command {
    /// Energy levels sorted by energy.
    Spectrum(SpectrumArgs),
    /// One eigenfunction sampled on a grid.
    Wavefunction(WavefunctionArgs),
    /// Closed forms checked against quadrature, ODE residuals, node counts
    /// and a finite-difference eigensolver.
    Verify(VerifyArgs),
    /// Convergence of the sphere system to the flat-space oscillator.
    EuclidLimit(EuclidArgs),
}

/// Oscillator parameters: either the dimensionless couplings or the
/// physical frequencies, radius, mass and ħ.
#[derive(Debug, Clone, Args, Serialize)]
pub struct SphereArgs {
    /// Dimensionless coupling w₁ = 4mω₁R²/ħ (north-pole oscillator).
    #[arg(long, allow_hyphen_values = true, requires = "dim", conflicts_with_all = PHYSICAL)]
    pub w1: Option<f64>,
    /// Dimensionless coupling w₂ = 4mω₂R²/ħ.
    #[arg(long, allow_hyphen_values = true, requires = "dim", conflicts_with_all = PHYSICAL)]
    pub w2: Option<f64>,
    /// Frequency ω₁ of the north-pole oscillator.
    #[arg(long, allow_hyphen_values = true, requires = "dim")]
    pub omega1: Option<f64>,
    /// Frequency ω₂ of the south-pole oscillator.
    #[arg(long, allow_hyphen_values = true, requires = "dim")]
    pub omega2: Option<f64>,
    /// Sphere radius R.
    #[arg(long, allow_hyphen_values = true, requires = "dim")]
    pub radius: Option<f64>,
    /// Particle mass m [default: 1].
    #[arg(long, allow_hyphen_values = true, requires = "dim", conflicts_with = "natural")]
    pub mass: Option<f64>,
    /// Reduced Planck constant ħ [default: 1].
    #[arg(long, allow_hyphen_values = true, requires = "dim", conflicts_with = "natural")]
    pub hbar: Option<f64>,
    /// Natural units, ħ = m = 1.
    #[arg(long)]
    pub natural: bool,
}

const PHYSICAL: [&str; 5] = ["omega1", "omega2", "radius", "mass", "hbar"];

#[derive(Debug, Clone, Args, Serialize)]
pub struct SpectrumArgs {
    /// Sphere dimension N ≥ 2.
    #[arg(long)]
    pub dim: u32,
    #[command(flatten)]
    pub sphere: SphereArgs,
    /// Highest n_θ listed.
    #[arg(long, default_value_t = 4)]
    pub nmax: u32,
    /// Highest L listed.
    #[arg(long, default_value_t = 2)]
    pub lmax: u32,
}

#[derive(Debug, Clone, Args, Serialize)]
pub struct WavefunctionArgs {
    /// Sphere dimension N ≥ 2.
    #[arg(long)]
    pub dim: u32,
    #[command(flatten)]
    pub sphere: SphereArgs,
    /// Radial quantum number n_θ.
    #[arg(long, default_value_t = 0)]
    pub n: u32,
    /// Angular momentum L; negative values are accepted for N = 2.
    #[arg(long, default_value_t = 0, allow_hyphen_values = true)]
    pub l: i64,
    /// Number of grid points, endpoints included.
    #[arg(long, default_value_t = 181)]
    pub points: usize,
    /// Sample on the tangent plane through the stereographic map.
    #[arg(long)]
    pub projected: bool,
    /// Largest plane radius for `--projected`; defaults to 4R.
    #[arg(long, requires = "projected")]
    pub rmax: Option<f64>,
}

#[derive(Debug, Clone, Args, Serialize)]
pub struct VerifyArgs {
    /// Single dimension to check; without it the full built-in grid runs.
    #[arg(long)]
    pub dim: Option<u32>,
    #[command(flatten)]
    pub sphere: SphereArgs,
    /// Highest n_θ checked.
    #[arg(long, default_value_t = 4)]
    pub levels: u32,
    /// Highest L checked.
    #[arg(long, default_value_t = 2)]
    pub lmax: u32,
    /// Finite-difference grid size, at least 500.
    #[arg(long, default_value_t = 8000)]
    pub grid_points: usize,
    /// Relative shift applied to the closed-form energies (detector test hook).
    #[arg(long, default_value_t = 0.0, allow_hyphen_values = true)]
    pub perturb_energy: f64,
}

#[derive(Debug, Clone, Args, Serialize)]
pub struct EuclidArgs {
    /// Dimension N ≥ 2 of the sphere and of the flat space.
    #[arg(long)]
    pub dim: u32,
    /// Radial quantum number n_r.
    #[arg(long, default_value_t = 0)]
    pub n: u32,
    /// Angular momentum L.
    #[arg(long, default_value_t = 0)]
    pub l: u32,
    /// Flat-space frequency ω (the ω₁ of every sphere in the scan).
    #[arg(long, default_value_t = 1.0)]
    pub omega: f64,
    /// Barrier strength χ; the sphere systems use ω₂ = ħχ/(4mR²).
    #[arg(long, allow_hyphen_values = true)]
    pub chi: f64,
    /// Particle mass m [default: 1].
    #[arg(long, conflicts_with = "natural")]
    pub mass: Option<f64>,
    /// Reduced Planck constant ħ [default: 1].
    #[arg(long, conflicts_with = "natural")]
    pub hbar: Option<f64>,
    /// Natural units, ħ = m = 1.
    #[arg(long)]
    pub natural: bool,
    /// Ascending radii, comma separated, at least three.
    #[arg(
        long,
        value_delimiter = ',',
        allow_hyphen_values = true,
        default_value = "10,15,20,30,45,65,100"
    )]
    pub radii: Vec<f64>,
}
