use std::f64::consts::PI;

use rayon::prelude::*;
use serde::Serialize;
use sphere_osc_core::eigenfunctions::{eval_F, project_to_plane, theta_from_r};
use sphere_osc_core::spectrum::spectrum_table;
use sphere_osc_core::verification::{
    euclidean_limit_scan, loglog_slope, verify_angular_momentum, Tolerances, VerificationOptions,
};
use sphere_osc_core::{EuclideanParams, OscillatorParams, QuantumNumbers};

use crate::args::{Command, EuclidArgs, SpectrumArgs, SphereArgs, VerifyArgs, WavefunctionArgs};
use crate::table::{Cell, Table};
use crate::CliError;

/// Dimensions and `(w₁, w₂)` pairs covered by `verify` without `--dim`.
pub const GRID_DIMS: [u32; 3] = [2, 3, 5];
pub const GRID_COUPLINGS: [(f64, f64); 4] = [(0.0, 0.0), (1.0, 0.0), (1.0, 1.0), (5.0, 2.0)];

pub const MIN_RADII: usize = 3;

pub struct Outcome {
    pub table: Table,
    pub passed: bool,
}

/// Echo of the invocation written into JSON output.
#[derive(Serialize)]
pub struct Echo<'a> {
    #[serde(flatten)]
    pub command: &'a Command,
    pub units: &'static str,
}

pub fn echo(command: &Command) -> Echo<'_> {
    let si_like = match command {
        Command::Spectrum(a) => a.sphere.mass.is_some() || a.sphere.hbar.is_some(),
        Command::Wavefunction(a) => a.sphere.mass.is_some() || a.sphere.hbar.is_some(),
        Command::Verify(a) => a.sphere.mass.is_some() || a.sphere.hbar.is_some(),
        Command::EuclidLimit(a) => a.mass.is_some() || a.hbar.is_some(),
    };
    Echo {
        command,
        units: if si_like { "si-like" } else { "natural" },
    }
}

pub fn run(command: &Command) -> Result<Outcome, CliError> {
    match command {
        Command::Spectrum(a) => spectrum(a),
        Command::Wavefunction(a) => wavefunction(a),
        Command::Verify(a) => verify(a),
        Command::EuclidLimit(a) => euclid_limit(a),
    }
}

fn sphere_params(dim: u32, s: &SphereArgs) -> Result<OscillatorParams, CliError> {
    let physical =
        s.omega1.is_some() || s.omega2.is_some() || s.radius.is_some() || s.mass.is_some() || s.hbar.is_some();
    let params = if physical {
        OscillatorParams::new(
            dim,
            s.radius.unwrap_or(1.0),
            s.mass.unwrap_or(1.0),
            s.hbar.unwrap_or(1.0),
            s.omega1.unwrap_or(0.0),
            s.omega2.unwrap_or(0.0),
        )?
    } else {
        OscillatorParams::from_couplings(dim, 1.0, s.w1.unwrap_or(0.0), s.w2.unwrap_or(0.0))?
    };
    Ok(params)
}

fn spectrum(a: &SpectrumArgs) -> Result<Outcome, CliError> {
    let params = sphere_params(a.dim, &a.sphere)?;
    let mut table = Table::new(vec!["n_theta", "L", "epsilon", "energy"]);
    for e in spectrum_table(&params, a.nmax, a.lmax)? {
        table.push(vec![
            Cell::Int(e.n_theta.into()),
            Cell::Int(e.l.into()),
            Cell::Real(e.energy_dimensionless),
            Cell::Real(e.energy),
        ]);
    }
    Ok(Outcome { table, passed: true })
}

fn grid(points: usize, end: f64) -> Vec<f64> {
    let last = points - 1;
    (0..points)
        .map(|i| if i == last { end } else { end * i as f64 / last as f64 })
        .collect()
}

fn wavefunction(a: &WavefunctionArgs) -> Result<Outcome, CliError> {
    if a.points < 2 {
        return Err(CliError::Usage("--points must be at least 2".into()));
    }
    let params = sphere_params(a.dim, &a.sphere)?;
    let qn = QuantumNumbers::new(a.dim, a.n, a.l)?;
    if !a.projected {
        let mut table = Table::new(vec!["theta", "F"]);
        for theta in grid(a.points, PI) {
            table.push(vec![Cell::Real(theta), Cell::Real(eval_F(&params, qn, theta)?)]);
        }
        return Ok(Outcome { table, passed: true });
    }
    let rmax = a.rmax.unwrap_or(4.0 * params.radius());
    if !(rmax > 0.0 && rmax.is_finite()) {
        return Err(CliError::Usage("--rmax must be finite and positive".into()));
    }
    let mut table = Table::new(vec!["r", "theta", "F", "f"]);
    for r in grid(a.points, rmax) {
        let theta = theta_from_r(params.radius(), r)?;
        table.push(vec![
            Cell::Real(r),
            Cell::Real(theta),
            Cell::Real(eval_F(&params, qn, theta)?),
            Cell::Real(project_to_plane(&params, qn, r)?),
        ]);
    }
    Ok(Outcome { table, passed: true })
}

fn verify(a: &VerifyArgs) -> Result<Outcome, CliError> {
    let sets: Vec<OscillatorParams> = match a.dim {
        Some(dim) => vec![sphere_params(dim, &a.sphere)?],
        None => GRID_DIMS
            .iter()
            .flat_map(|&dim| GRID_COUPLINGS.iter().map(move |&(w1, w2)| (dim, w1, w2)))
            .map(|(dim, w1, w2)| OscillatorParams::from_couplings(dim, 1.0, w1, w2))
            .collect::<Result<_, _>>()?,
    };
    let opts = VerificationOptions {
        n_max: a.levels,
        l_max: a.lmax,
        grid_points: a.grid_points,
        perturb_energy: a.perturb_energy,
    };
    let jobs: Vec<(OscillatorParams, u32)> = sets.iter().flat_map(|p| (0..=a.lmax).map(move |l| (*p, l))).collect();
    let results = jobs
        .par_iter()
        .map(|(p, l)| verify_angular_momentum(p, *l, &opts).map(|reports| (*p, reports)))
        .collect::<Result<Vec<_>, _>>()?;

    let tol = Tolerances::default();
    let mut table = Table::new(vec![
        "dim",
        "w1",
        "w2",
        "n_theta",
        "L",
        "epsilon",
        "oracle_epsilon",
        "normalization_error",
        "ode_residual",
        "oracle_relerr",
        "sign_changes",
        "pass",
    ]);
    let mut passed = true;
    for (p, reports) in results {
        for r in reports {
            let ok = r.passes(&tol);
            passed &= ok;
            table.push(vec![
                Cell::Int(p.dim().into()),
                Cell::Real(p.w1()),
                Cell::Real(p.w2()),
                Cell::Int(r.state.n_theta.into()),
                Cell::Int(r.state.l.into()),
                Cell::Real(r.epsilon),
                Cell::Real(r.oracle_epsilon),
                Cell::Real(r.normalization_error),
                Cell::Real(r.max_ode_residual),
                Cell::Real(r.oracle_energy_relerr),
                Cell::Int(r.sign_changes.into()),
                Cell::Bool(ok),
            ]);
        }
    }
    Ok(Outcome { table, passed })
}

fn euclid_limit(a: &EuclidArgs) -> Result<Outcome, CliError> {
    if a.radii.len() < MIN_RADII {
        return Err(CliError::Usage(format!("--radii needs at least {MIN_RADII} values")));
    }
    if a.radii.iter().any(|r| !(r.is_finite() && *r > 0.0)) || a.radii.windows(2).any(|w| w[0] >= w[1]) {
        return Err(CliError::Usage(
            "--radii must be positive and strictly ascending".into(),
        ));
    }
    let ep = EuclideanParams::new(a.dim, a.mass.unwrap_or(1.0), a.hbar.unwrap_or(1.0), a.omega, a.chi)?;
    let qn = QuantumNumbers { n_theta: a.n, l: a.l };
    let rows = euclidean_limit_scan(&ep, qn, &a.radii)?;

    let radii: Vec<f64> = rows.iter().map(|r| r.radius).collect();
    let e: Vec<f64> = rows.iter().map(|r| r.energy_error).collect();
    let f: Vec<f64> = rows.iter().map(|r| r.wavefunction_error).collect();
    let passed = e.windows(2).all(|w| w[1] < w[0]) && f.windows(2).all(|w| w[1] < w[0]);

    let mut table = Table::new(vec!["R", "energy_error", "wavefunction_error", "fitted_slope"]);
    for r in &rows {
        table.push(vec![
            Cell::Real(r.radius),
            Cell::Real(r.energy_error),
            Cell::Real(r.wavefunction_error),
            Cell::Empty,
        ]);
    }
    for (tag, ys) in [("fit_energy", &e), ("fit_wavefunction", &f)] {
        let slope = loglog_slope(&radii, ys).map_or(Cell::Empty, Cell::Real);
        table.push(vec![Cell::Text(tag.into()), Cell::Empty, Cell::Empty, slope]);
    }
    Ok(Outcome { table, passed })
}
