//! Closed-form energy levels.
//!
//! Every routine here has a dimensionless twin returning
//! `ε = E / (ħ²/2mR²)`; the physical energy is `ε · params.energy_unit()`
//! except for the flat-space spectrum, which is already physical.

use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::model::{EuclideanParams, OscillatorParams, QuantumNumbers};

/// One row of a tabulated spectrum.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SpectrumEntry {
    pub n_theta: u32,
    pub l: u32,
    pub energy: f64,
    pub energy_dimensionless: f64,
}

const FORM_TOL: f64 = 1e-12;

/// Product form: `(n + N/2 + X)(n − N/2 + 1 + X) − (w₁² + w₂²)/4`,
/// `X = (μ_{L1} + μ_{L2}) / 2`.
pub fn epsilon_product_form(params: &OscillatorParams, qn: QuantumNumbers) -> f64 {
    let (m1, m2) = params.mus(qn.l);
    let n = f64::from(qn.n_theta);
    let half_dim = f64::from(params.dim()) / 2.0;
    let x = 0.5 * (m1 + m2);
    let (w1, w2) = (params.w1(), params.w2());
    (n + half_dim + x) * (n - half_dim + 1.0 + x) - 0.25 * (w1 * w1 + w2 * w2)
}

/// Expanded form:
/// `(n + N/2)(n − N/2 + 1) + a²/2 + (n + 1/2)(μ₁ + μ₂) + μ₁μ₂/2`, `a = L + N/2 − 1`.
///
/// All large terms enter with a positive sign, so this is the better
/// conditioned of the two when the couplings are large. It is symmetric in
/// `(μ₁, μ₂)` operation by operation.
pub fn epsilon_expanded_form(params: &OscillatorParams, qn: QuantumNumbers) -> f64 {
    let (m1, m2) = params.mus(qn.l);
    let n = f64::from(qn.n_theta);
    let half_dim = f64::from(params.dim()) / 2.0;
    let a = params.angular_shift(qn.l);
    (n + half_dim) * (n - half_dim + 1.0) + 0.5 * a * a + (n + 0.5) * (m1 + m2) + 0.5 * (m1 * m2)
}

/// Dimensionless level `ε_{n_θ L}`.
///
/// The expanded form is returned; the product form is evaluated alongside
/// and must agree to `1e-12` relative to the largest term that cancels.
pub fn epsilon(params: &OscillatorParams, qn: QuantumNumbers) -> Result<f64> {
    let expanded = epsilon_expanded_form(params, qn);
    let product = epsilon_product_form(params, qn);
    let (w1, w2) = (params.w1(), params.w2());
    let scale = expanded.abs().max(0.25 * (w1 * w1 + w2 * w2)).max(1.0);
    if (expanded - product).abs() > FORM_TOL * scale {
        return Err(Error::Inconsistent {
            what: "energy level forms",
            a: product,
            b: expanded,
        });
    }
    Ok(expanded)
}

/// Energy `E_{n_θ L}` in the units of `params`.
pub fn energy(params: &OscillatorParams, qn: QuantumNumbers) -> Result<f64> {
    Ok(epsilon(params, qn)? * params.energy_unit())
}

fn require_equal_omegas(params: &OscillatorParams) -> Result<f64> {
    if params.omega1() != params.omega2() {
        return Err(Error::Domain("this form requires omega1 == omega2"));
    }
    Ok(params.w1())
}

/// `ω₁ = ω₂ = ω`: `(n + N/2 + μ)(n − N/2 + 1 + μ) − w²/2`.
pub fn epsilon_equal_omegas(params: &OscillatorParams, qn: QuantumNumbers) -> Result<f64> {
    let w = require_equal_omegas(params)?;
    let (m, _) = params.mus(qn.l);
    let n = f64::from(qn.n_theta);
    let half_dim = f64::from(params.dim()) / 2.0;
    Ok((n + half_dim + m) * (n - half_dim + 1.0 + m) - 0.5 * w * w)
}

/// `ω₁ = ω₂ = ω`: `(n + N/2)(n − N/2 + 1) + a² + (2n + 1)μ + w²/2`.
pub fn epsilon_equal_omegas_expanded(params: &OscillatorParams, qn: QuantumNumbers) -> Result<f64> {
    let w = require_equal_omegas(params)?;
    let (m, _) = params.mus(qn.l);
    let n = f64::from(qn.n_theta);
    let half_dim = f64::from(params.dim()) / 2.0;
    let a = params.angular_shift(qn.l);
    Ok((n + half_dim) * (n - half_dim + 1.0) + a * a + (2.0 * n + 1.0) * m + 0.5 * w * w)
}

pub fn energy_equal_omegas(params: &OscillatorParams, qn: QuantumNumbers) -> Result<f64> {
    Ok(epsilon_equal_omegas(params, qn)? * params.energy_unit())
}

fn require_omega2_zero(params: &OscillatorParams) -> Result<f64> {
    if params.omega2() != 0.0 {
        return Err(Error::Domain("this form requires omega2 == 0"));
    }
    Ok(params.w1())
}

/// `ω₂ = 0`:
/// `(n + L/2 + 3N/4 − 1/2 + μ/2)(n + L/2 − N/4 + 1/2 + μ/2) − w²/4`.
pub fn epsilon_omega2_zero(params: &OscillatorParams, qn: QuantumNumbers) -> Result<f64> {
    let w = require_omega2_zero(params)?;
    let (m, _) = params.mus(qn.l);
    let (n, l) = (f64::from(qn.n_theta), f64::from(qn.l));
    let quarter_dim = f64::from(params.dim()) / 4.0;
    let first = n + 0.5 * l + 3.0 * quarter_dim - 0.5 + 0.5 * m;
    let second = n + 0.5 * l - quarter_dim + 0.5 + 0.5 * m;
    Ok(first * second - 0.25 * w * w)
}

/// `ω₂ = 0`:
/// `(n + L/2 + 3N/4 − 1/2)(n + L/2 − N/4 + 1/2) + a²/4 + (n + L/2 + N/4)μ`.
pub fn epsilon_omega2_zero_expanded(params: &OscillatorParams, qn: QuantumNumbers) -> Result<f64> {
    require_omega2_zero(params)?;
    let (m, _) = params.mus(qn.l);
    let (n, l) = (f64::from(qn.n_theta), f64::from(qn.l));
    let quarter_dim = f64::from(params.dim()) / 4.0;
    let a = params.angular_shift(qn.l);
    Ok(
        (n + 0.5 * l + 3.0 * quarter_dim - 0.5) * (n + 0.5 * l - quarter_dim + 0.5)
            + 0.25 * a * a
            + (n + 0.5 * l + quarter_dim) * m,
    )
}

pub fn energy_omega2_zero(params: &OscillatorParams, qn: QuantumNumbers) -> Result<f64> {
    Ok(epsilon_omega2_zero(params, qn)? * params.energy_unit())
}

/// Free particle on the sphere: `(n + L)(n + L + N − 1)`.
pub fn epsilon_free(dim: u32, qn: QuantumNumbers) -> f64 {
    let k = f64::from(qn.n_theta) + f64::from(qn.l);
    k * (k + f64::from(dim) - 1.0)
}

/// Flat-space limit `ħω [2n_r + 1 + √((L + N/2 − 1)² + χ²)]`.
pub fn energy_euclidean(eparams: &EuclideanParams, n_r: u32, l: u32) -> f64 {
    let a = f64::from(l) + f64::from(eparams.dim()) / 2.0 - 1.0;
    eparams.hbar() * eparams.omega() * (2.0 * f64::from(n_r) + 1.0 + libm::hypot(a, eparams.chi()))
}

/// All levels with `n_θ ≤ n_max` and `0 ≤ L ≤ l_max`, sorted by
/// `(energy, L, n_θ)`.
pub fn spectrum_table(params: &OscillatorParams, n_max: u32, l_max: u32) -> Result<Vec<SpectrumEntry>> {
    let mut rows = Vec::with_capacity(((n_max + 1) * (l_max + 1)) as usize);
    for l in 0..=l_max {
        for n_theta in 0..=n_max {
            let qn = QuantumNumbers { n_theta, l };
            let eps = epsilon(params, qn)?;
            rows.push(SpectrumEntry {
                n_theta,
                l,
                energy: eps * params.energy_unit(),
                energy_dimensionless: eps,
            });
        }
    }
    rows.sort_by(|a, b| {
        a.energy
            .total_cmp(&b.energy)
            .then(a.l.cmp(&b.l))
            .then(a.n_theta.cmp(&b.n_theta))
    });
    Ok(rows)
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;

    fn qn(n_theta: u32, l: u32) -> QuantumNumbers {
        QuantumNumbers { n_theta, l }
    }

    fn params(dim: u32, w1: f64, w2: f64) -> OscillatorParams {
        OscillatorParams::from_couplings(dim, 1.0, w1, w2).unwrap()
    }

    #[test]
    fn free_particle_levels_are_exact_integers() {
        for dim in 2..6 {
            let p = params(dim, 0.0, 0.0);
            for n in 0..6 {
                for l in 0..6 {
                    assert_eq!(epsilon(&p, qn(n, l)).unwrap(), epsilon_free(dim, qn(n, l)));
                }
            }
        }
        assert_eq!(epsilon(&params(3, 0.0, 0.0), qn(1, 1)).unwrap(), 8.0);
    }

    #[test]
    fn n2_symmetric_ground_level() {
        let p = params(2, 1.0, 1.0);
        assert_relative_eq!(epsilon(&p, qn(0, 0)).unwrap(), 1.5, max_relative = 1e-15);
        assert_relative_eq!(epsilon_equal_omegas(&p, qn(0, 0)).unwrap(), 1.5, max_relative = 1e-15);
    }

    #[test]
    fn special_case_guards() {
        let p = params(3, 1.0, 2.0);
        assert!(epsilon_equal_omegas(&p, qn(0, 0)).is_err());
        assert!(epsilon_omega2_zero(&p, qn(0, 0)).is_err());
        assert!(energy_equal_omegas(&p, qn(0, 0)).is_err());
    }

    #[test]
    fn omega2_zero_matches_general() {
        let p = params(5, 10.0, 0.0);
        let q = qn(3, 2);
        let general = epsilon(&p, q).unwrap();
        assert_relative_eq!(epsilon_omega2_zero(&p, q).unwrap(), general, max_relative = 1e-12);
        assert_relative_eq!(
            epsilon_omega2_zero_expanded(&p, q).unwrap(),
            general,
            max_relative = 1e-12
        );
    }

    #[test]
    fn equal_omega_forms_reduce_to_free_particle() {
        let p = params(4, 0.0, 0.0);
        for n in 0..4 {
            for l in 0..4 {
                assert_eq!(epsilon_equal_omegas(&p, qn(n, l)).unwrap(), epsilon_free(4, qn(n, l)));
                assert_eq!(epsilon_omega2_zero(&p, qn(n, l)).unwrap(), epsilon_free(4, qn(n, l)));
            }
        }
    }

    #[test]
    fn swap_symmetry_is_bit_exact() {
        let p = OscillatorParams::new(3, 1.3, 0.9, 1.1, 0.37, 2.9).unwrap();
        for n in 0..5 {
            for l in 0..5 {
                assert_eq!(energy(&p, qn(n, l)).unwrap(), energy(&p.swapped(), qn(n, l)).unwrap());
            }
        }
    }

    #[test]
    fn monotone_in_both_quantum_numbers() {
        let p = params(3, 5.0, 2.0);
        for l in 0..6 {
            for n in 0..6 {
                let e = epsilon(&p, qn(n, l)).unwrap();
                assert!(epsilon(&p, qn(n + 1, l)).unwrap() > e);
                assert!(epsilon(&p, qn(n, l + 1)).unwrap() > e);
            }
        }
    }

    #[test]
    fn euclidean_levels() {
        let e = EuclideanParams::new(3, 1.0, 1.0, 1.0, 2.0).unwrap();
        assert_relative_eq!(energy_euclidean(&e, 0, 1), 3.5, max_relative = 1e-15);
        let e = EuclideanParams::new(2, 1.0, 1.0, 0.7, 1e-8).unwrap();
        for n in 0..4 {
            assert_relative_eq!(
                energy_euclidean(&e, n, 0),
                0.7 * (2.0 * f64::from(n) + 1.0 + 1e-8),
                max_relative = 1e-15
            );
        }
    }

    #[test]
    fn free_table_n2() {
        let rows = spectrum_table(&params(2, 0.0, 0.0), 1, 1).unwrap();
        let got: Vec<(u32, u32, f64)> = rows.iter().map(|r| (r.n_theta, r.l, r.energy_dimensionless)).collect();
        assert_eq!(got, [(0, 0, 0.0), (1, 0, 2.0), (0, 1, 2.0), (1, 1, 6.0)]);
    }

    #[test]
    fn table_units_are_consistent() {
        let p = OscillatorParams::new(3, 2.0, 0.5, 1.5, 0.3, 0.7).unwrap();
        for r in spectrum_table(&p, 3, 3).unwrap() {
            assert_relative_eq!(r.energy, r.energy_dimensionless * p.energy_unit(), max_relative = 1e-15);
        }
    }
}
