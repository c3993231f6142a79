//! Flat-space limit: sphere systems of growing radius with
//! `ω₂ = ħχ/(4mR²)` compared against the isotropic oscillator with a
//! `1/r²` barrier.

use alloc::vec::Vec;

use crate::eigenfunctions::{eval_f_euclidean, project_to_plane};
use crate::error::{Error, Result};
use crate::model::{big_lambda, EuclideanParams, QuantumNumbers};
use crate::spectrum::{energy, energy_euclidean};

use super::quadrature::gauss_laguerre_rule;

const PROFILE_POINTS: usize = 201;
const PROFILE_EXTENT: f64 = 4.0;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ScanRow {
    pub radius: f64,
    pub energy_error: f64,
    pub wavefunction_error: f64,
}

/// For each radius: `|E − Ẽ|` and `max_r |f(r) − f̃(r)|` over
/// `r ∈ [0, 4√(ħ/mω)]`. Radii must be positive and strictly ascending.
pub fn euclidean_limit_scan(eparams: &EuclideanParams, qn: QuantumNumbers, radii: &[f64]) -> Result<Vec<ScanRow>> {
    if radii.iter().any(|r| !(*r > 0.0) || !r.is_finite()) || radii.windows(2).any(|w| w[0] >= w[1]) {
        return Err(Error::Domain("radii must be positive and strictly ascending"));
    }
    if !(eparams.omega() > 0.0) {
        return Err(Error::Domain("flat-space limit needs omega > 0"));
    }
    let flat_energy = energy_euclidean(eparams, qn.n_theta, qn.l);
    let extent = PROFILE_EXTENT * eparams.length_scale();
    let rs: Vec<f64> = (0..PROFILE_POINTS)
        .map(|i| extent * i as f64 / (PROFILE_POINTS - 1) as f64)
        .collect();
    let flat = rs
        .iter()
        .map(|&r| eval_f_euclidean(eparams, qn.n_theta, qn.l, r))
        .collect::<Result<Vec<_>>>()?;
    radii
        .iter()
        .map(|&radius| {
            let sphere = eparams.on_sphere(radius)?;
            let energy_error = (energy(&sphere, qn)? - flat_energy).abs();
            let mut wavefunction_error: f64 = 0.0;
            for (&r, &f) in rs.iter().zip(&flat) {
                wavefunction_error = wavefunction_error.max((project_to_plane(&sphere, qn, r)? - f).abs());
            }
            Ok(ScanRow {
                radius,
                energy_error,
                wavefunction_error,
            })
        })
        .collect()
}

/// Least-squares slope of `ln y` against `ln x`.
pub fn loglog_slope(xs: &[f64], ys: &[f64]) -> Result<f64> {
    if xs.len() != ys.len() || xs.len() < 2 {
        return Err(Error::Domain("slope fit needs two or more paired points"));
    }
    if xs.iter().chain(ys).any(|v| !(*v > 0.0) || !v.is_finite()) {
        return Err(Error::Domain("slope fit needs positive finite values"));
    }
    let n = xs.len() as f64;
    let lx: Vec<f64> = xs.iter().map(|v| libm::log(*v)).collect();
    let ly: Vec<f64> = ys.iter().map(|v| libm::log(*v)).collect();
    let mx = lx.iter().sum::<f64>() / n;
    let my = ly.iter().sum::<f64>() / n;
    let sxy: f64 = lx.iter().zip(&ly).map(|(x, y)| (x - mx) * (y - my)).sum();
    let sxx: f64 = lx.iter().map(|x| (x - mx) * (x - mx)).sum();
    if sxx == 0.0 {
        return Err(Error::Domain("slope fit needs distinct abscissae"));
    }
    Ok(sxy / sxx)
}

/// `∫₀^∞ r^{N−1} |f̃|² dr` by Gauss–Laguerre in `y = mωr²/ħ`, where the
/// integrand is `y^{Λ+1/2} e^{−y}` times a polynomial.
pub fn euclidean_normalization(eparams: &EuclideanParams, n_r: u32, l: u32) -> Result<f64> {
    let alpha = big_lambda(eparams, l) + 0.5;
    let (ys, ws) = gauss_laguerre_rule(n_r as usize + 40, alpha)?;
    let k = eparams.mass() * eparams.omega() / eparams.hbar();
    let dim = f64::from(eparams.dim());
    let mut total = 0.0;
    for (&y, &w) in ys.iter().zip(&ws) {
        let r = libm::sqrt(y / k);
        let f = eval_f_euclidean(eparams, n_r, l, r)?;
        // r^{N−1} dr/dy / (y^α e^{−y}), with dr/dy = 1 / (2√(k y))
        let log_jac = (dim - 1.0) * libm::log(r) - libm::log(2.0 * libm::sqrt(k * y)) - alpha * libm::log(y) + y;
        total += w * f * f * libm::exp(log_jac);
    }
    Ok(total)
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;
    use approx::assert_relative_eq;

    fn decade() -> Vec<f64> {
        vec![10.0, 15.0, 20.0, 30.0, 45.0, 65.0, 100.0]
    }

    #[test]
    fn slope_of_power_law() {
        let xs = [1.0, 2.0, 4.0, 8.0];
        let ys: Vec<f64> = xs.iter().map(|x| 3.0 / (x * x)).collect();
        assert_relative_eq!(loglog_slope(&xs, &ys).unwrap(), -2.0, max_relative = 1e-14);
        assert!(loglog_slope(&[1.0], &[1.0]).is_err());
        assert!(loglog_slope(&[1.0, 2.0], &[0.0, 1.0]).is_err());
    }

    #[test]
    fn errors_fall_as_inverse_square() {
        for &(dim, n, l, chi) in &[(3u32, 0u32, 0u32, 1.0), (2, 1, 1, 0.5), (5, 2, 2, 2.0)] {
            let ep = EuclideanParams::new(dim, 1.0, 1.0, 1.0, chi).unwrap();
            let rows = euclidean_limit_scan(&ep, QuantumNumbers { n_theta: n, l }, &decade()).unwrap();
            assert!(rows.windows(2).all(|w| w[1].energy_error < w[0].energy_error));
            assert!(rows
                .windows(2)
                .all(|w| w[1].wavefunction_error < w[0].wavefunction_error));
            let radii: Vec<f64> = rows.iter().map(|r| r.radius).collect();
            let e: Vec<f64> = rows.iter().map(|r| r.energy_error).collect();
            let f: Vec<f64> = rows.iter().map(|r| r.wavefunction_error).collect();
            let (se, sf) = (loglog_slope(&radii, &e).unwrap(), loglog_slope(&radii, &f).unwrap());
            assert!((se + 2.0).abs() < 0.1, "N={dim} n={n} L={l}: energy slope {se} {e:?}");
            assert!(
                (sf + 2.0).abs() < 0.1,
                "N={dim} n={n} L={l}: wavefunction slope {sf} {f:?}"
            );
        }
    }

    #[test]
    fn flat_states_are_normalized() {
        for dim in [2u32, 3, 5] {
            let ep = EuclideanParams::new(dim, 1.3, 0.7, 2.1, 0.9).unwrap();
            for n in 0..=4 {
                for l in 0..=2 {
                    let v = euclidean_normalization(&ep, n, l).unwrap();
                    assert!((v - 1.0).abs() < 1e-10, "N={dim} n={n} L={l}: {v}");
                }
            }
        }
    }

    #[test]
    fn rejects_unsorted_radii() {
        let ep = EuclideanParams::new(3, 1.0, 1.0, 1.0, 1.0).unwrap();
        let qn = QuantumNumbers { n_theta: 0, l: 0 };
        assert!(euclidean_limit_scan(&ep, qn, &[20.0, 10.0]).is_err());
        assert!(euclidean_limit_scan(&ep, qn, &[0.0, 10.0]).is_err());
    }
}
