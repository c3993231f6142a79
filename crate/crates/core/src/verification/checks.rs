//! Normalization, orthogonality, ODE residual and node counting for the
//! closed-form eigenfunctions, plus the per-state verification report.

use alloc::vec::Vec;
use core::f64::consts::PI;

use crate::eigenfunctions::eval_F;
use crate::error::{Error, Result};
use crate::model::{OscillatorParams, QuantumNumbers};
use crate::spectrum::epsilon;

use super::fd::fd_eigensolve;
use super::quadrature::gauss_jacobi_rule;

pub const NORMALIZATION_NODES: usize = 200;
const RESIDUAL_POINTS: usize = 400;
const RESIDUAL_MARGIN: f64 = 0.05;
const NODE_GRID: usize = 10_000;

/// Gauss–Jacobi nodes mapped to `θ = arccos x`, with the weights absorbing
/// `R^N`, the Jacobian and the quotient of the sphere measure by the
/// Jacobi weight.
struct SphereRule {
    thetas: Vec<f64>,
    weights: Vec<f64>,
}

impl SphereRule {
    fn new(params: &OscillatorParams, l: u32, nodes: usize) -> Result<Self> {
        let (m1, m2) = params.mus(l);
        let rule = gauss_jacobi_rule(nodes, m2, m1)?;
        let dim = f64::from(params.dim());
        let scale = libm::pow(params.radius(), dim);
        let weights = rule
            .nodes
            .iter()
            .zip(&rule.weights)
            .map(|(&x, &w)| {
                let (one_minus, one_plus) = (1.0 - x, 1.0 + x);
                let log_ratio = (0.5 * dim - 1.0) * libm::log(one_minus * one_plus)
                    - m2 * libm::log(one_minus)
                    - m1 * libm::log(one_plus);
                scale * w * libm::exp(log_ratio)
            })
            .collect();
        Ok(Self {
            thetas: rule.nodes.iter().map(|&x| libm::acos(x)).collect(),
            weights,
        })
    }

    fn sample<F: FnMut(f64) -> Result<f64>>(&self, f: F) -> Result<Vec<f64>> {
        self.thetas.iter().copied().map(f).collect()
    }

    fn integrate(&self, values: impl Iterator<Item = f64>) -> f64 {
        self.weights.iter().zip(values).map(|(w, v)| w * v).sum()
    }
}

/// `R^N ∫₀^π sin^{N−1}θ f(θ) g(θ) dθ`, integrated in `x = cos θ` against
/// the Gauss–Jacobi weight `(1−x)^{μ₂}(1+x)^{μ₁}` that matches states of
/// angular momentum `L`.
pub fn sphere_inner_product<F, G>(params: &OscillatorParams, l: u32, nodes: usize, mut f: F, mut g: G) -> Result<f64>
where
    F: FnMut(f64) -> Result<f64>,
    G: FnMut(f64) -> Result<f64>,
{
    let rule = SphereRule::new(params, l, nodes)?;
    let (fv, gv) = (rule.sample(&mut f)?, rule.sample(&mut g)?);
    Ok(rule.integrate(fv.iter().zip(&gv).map(|(a, b)| a * b)))
}

/// `R^N ∫ sin^{N−1}θ |f|² dθ` for a function of angular momentum `L`.
pub fn normalization_of<F>(params: &OscillatorParams, l: u32, mut f: F) -> Result<f64>
where
    F: FnMut(f64) -> Result<f64>,
{
    let rule = SphereRule::new(params, l, NORMALIZATION_NODES)?;
    let values = rule.sample(&mut f)?;
    Ok(rule.integrate(values.iter().map(|v| v * v)))
}

/// Normalization integral of the closed-form eigenfunction (target 1).
pub fn normalization_check(params: &OscillatorParams, qn: QuantumNumbers) -> Result<f64> {
    normalization_of(params, qn.l, |t| eval_F(params, qn, t))
}

/// Overlaps `⟨F_n | F_n'⟩` for `n, n' ≤ n_max` at fixed `L`, row-major.
pub fn overlap_matrix(params: &OscillatorParams, l: u32, n_max: u32) -> Result<Vec<Vec<f64>>> {
    let rule = SphereRule::new(params, l, NORMALIZATION_NODES.max(n_max as usize + 1))?;
    let samples = (0..=n_max)
        .map(|n| rule.sample(|t| eval_F(params, QuantumNumbers { n_theta: n, l }, t)))
        .collect::<Result<Vec<_>>>()?;
    Ok(samples
        .iter()
        .map(|a| {
            samples
                .iter()
                .map(|b| rule.integrate(a.iter().zip(b).map(|(x, y)| x * y)))
                .collect()
        })
        .collect())
}

/// Sixth-order `(F, F', F'')`: central differences at `h`, `h/2`, `h/4`
/// combined by two Richardson steps.
fn derivatives<F: Fn(f64) -> Result<f64>>(f: &F, theta: f64, h: f64) -> Result<(f64, f64, f64)> {
    let f0 = f(theta)?;
    let mut d1 = [0.0; 3];
    let mut d2 = [0.0; 3];
    for (k, step) in [h, 0.5 * h, 0.25 * h].into_iter().enumerate() {
        let (p, m) = (f(theta + step)?, f(theta - step)?);
        d1[k] = (p - m) / (2.0 * step);
        d2[k] = (p - 2.0 * f0 + m) / (step * step);
    }
    let extrapolate = |d: [f64; 3]| {
        let (a, b) = ((4.0 * d[1] - d[0]) / 3.0, (4.0 * d[2] - d[1]) / 3.0);
        (16.0 * b - a) / 15.0
    };
    Ok((f0, extrapolate(d1), extrapolate(d2)))
}

/// Default residual grid: uniform on `[0.05, π − 0.05]`.
pub fn residual_grid() -> Vec<f64> {
    let (a, b) = (RESIDUAL_MARGIN, PI - RESIDUAL_MARGIN);
    (0..RESIDUAL_POINTS)
        .map(|i| a + (b - a) * i as f64 / (RESIDUAL_POINTS - 1) as f64)
        .collect()
}

/// Scaled residual of the quasi-radial equation with the closed-form energy.
pub fn ode_residual(params: &OscillatorParams, qn: QuantumNumbers, grid: &[f64]) -> Result<f64> {
    ode_residual_at_energy(params, qn, epsilon(params, qn)?, grid)
}

/// `max_θ |L[F](θ)| / scale(θ)` for a trial dimensionless energy `ε`, where
/// `L[F] = F'' + (N−1)cot θ F' − [L(L+N−2)/sin²θ + (w₁²/4)tan²(θ/2)
/// + (w₂²/4)cot²(θ/2) − ε] F` and `scale` is the largest single term.
pub fn ode_residual_at_energy(params: &OscillatorParams, qn: QuantumNumbers, eps: f64, grid: &[f64]) -> Result<f64> {
    ode_residual_with(params, qn, eps, |t| eval_F(params, qn, t), grid)
}

/// [`ode_residual_at_energy`] for an arbitrary evaluation `f` of the state
/// `qn`; the state only sets the difference steps.
pub fn ode_residual_with<F>(params: &OscillatorParams, qn: QuantumNumbers, eps: f64, f: F, grid: &[f64]) -> Result<f64>
where
    F: Fn(f64) -> Result<f64>,
{
    let dim = f64::from(params.dim());
    let lf = f64::from(qn.l);
    let (m1, m2) = params.mus(qn.l);
    let (g1, g2) = (m1 - 0.5 * dim + 1.0, m2 - 0.5 * dim + 1.0);
    let degree = 2.0 * f64::from(qn.n_theta) + m1 + m2 + 3.0;
    let (q1, q2) = (0.25 * params.w1() * params.w1(), 0.25 * params.w2() * params.w2());
    let mut worst: f64 = 0.0;
    for &theta in grid {
        if !(theta > 0.0 && theta < PI) {
            return Err(Error::Domain("residual grid must lie inside (0, pi)"));
        }
        // local oscillation rate sets the difference step
        let kappa = ((g2 + 3.0) / theta).max((g1 + 3.0) / (PI - theta)).max(degree);
        let h = (0.3 / kappa).min(0.5 * theta).min(0.5 * (PI - theta));
        let (f0, d1, d2) = derivatives(&f, theta, h)?;
        let s = libm::sin(theta);
        let (sh, ch) = (libm::sin(0.5 * theta), libm::cos(0.5 * theta));
        let first = (dim - 1.0) * libm::cos(theta) / s * d1;
        let centrifugal = lf * (lf + dim - 2.0) / (s * s) * f0;
        let potential = (q1 * (sh / ch) * (sh / ch) + q2 * (ch / sh) * (ch / sh)) * f0;
        let energy = eps * f0;
        let residual = d2 + first - centrifugal - potential + energy;
        let scale = d2
            .abs()
            .max(first.abs())
            .max(centrifugal.abs())
            .max(potential.abs())
            .max(energy.abs());
        if scale > 0.0 {
            worst = worst.max(residual.abs() / scale);
        }
    }
    Ok(worst)
}

/// Sign changes in a sampled sequence; exact zeros are skipped.
pub fn count_sign_changes(values: &[f64]) -> u32 {
    let mut last = 0.0f64;
    let mut changes = 0;
    for &v in values {
        if v == 0.0 || !v.is_finite() {
            continue;
        }
        if last != 0.0 && (v > 0.0) != (last > 0.0) {
            changes += 1;
        }
        last = v;
    }
    changes
}

/// Sign changes of `F` on a fine interior grid of `(0, π)`.
pub fn node_count(params: &OscillatorParams, qn: QuantumNumbers) -> Result<u32> {
    node_count_with(|t| eval_F(params, qn, t))
}

/// Sign changes of any function on the same grid.
pub fn node_count_with<F: Fn(f64) -> Result<f64>>(f: F) -> Result<u32> {
    let h = PI / NODE_GRID as f64;
    let values = (0..NODE_GRID)
        .map(|i| f((i as f64 + 0.5) * h))
        .collect::<Result<Vec<_>>>()?;
    Ok(count_sign_changes(&values))
}

/// Pass thresholds for [`VerificationReport`].
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Tolerances {
    pub normalization: f64,
    pub residual: f64,
    pub oracle: f64,
}

impl Default for Tolerances {
    fn default() -> Self {
        Self {
            normalization: 1e-10,
            residual: 1e-8,
            oracle: 1e-6,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct VerificationOptions {
    pub n_max: u32,
    pub l_max: u32,
    pub grid_points: usize,
    /// Relative shift applied to the closed-form energy before checking;
    /// nonzero values exist to exercise the detectors.
    pub perturb_energy: f64,
}

impl Default for VerificationOptions {
    fn default() -> Self {
        Self {
            n_max: 4,
            l_max: 2,
            grid_points: 8000,
            perturb_energy: 0.0,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct VerificationReport {
    pub state: QuantumNumbers,
    pub epsilon: f64,
    pub oracle_epsilon: f64,
    pub normalization_error: f64,
    pub max_ode_residual: f64,
    pub oracle_energy_relerr: f64,
    pub sign_changes: u32,
    pub node_count_match: bool,
}

impl VerificationReport {
    pub fn passes(&self, tol: &Tolerances) -> bool {
        self.normalization_error <= tol.normalization
            && self.max_ode_residual <= tol.residual
            && self.oracle_energy_relerr <= tol.oracle
            && self.node_count_match
    }
}

/// Reports for `n_θ ≤ n_max` at one angular momentum; one eigensolve covers
/// the whole column.
pub fn verify_angular_momentum(
    params: &OscillatorParams,
    l: u32,
    opts: &VerificationOptions,
) -> Result<Vec<VerificationReport>> {
    let oracle = fd_eigensolve(params, l, opts.n_max as usize + 1, opts.grid_points)?;
    let grid = residual_grid();
    let mut out = Vec::with_capacity(oracle.len());
    for (n, &oracle_epsilon) in (0..=opts.n_max).zip(&oracle) {
        let state = QuantumNumbers { n_theta: n, l };
        let eps = epsilon(params, state)? * (1.0 + opts.perturb_energy);
        let sign_changes = node_count(params, state)?;
        out.push(VerificationReport {
            state,
            epsilon: eps,
            oracle_epsilon,
            normalization_error: (normalization_check(params, state)? - 1.0).abs(),
            max_ode_residual: ode_residual_at_energy(params, state, eps, &grid)?,
            oracle_energy_relerr: (oracle_epsilon - eps).abs() / eps.abs().max(1.0),
            sign_changes,
            node_count_match: sign_changes == n,
        });
    }
    Ok(out)
}

/// Reports for every `L ≤ l_max`, `n_θ ≤ n_max`, ordered by `(L, n_θ)`.
pub fn verify_states(params: &OscillatorParams, opts: &VerificationOptions) -> Result<Vec<VerificationReport>> {
    let mut out = Vec::new();
    for l in 0..=opts.l_max {
        out.extend(verify_angular_momentum(params, l, opts)?);
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;

    fn params(dim: u32, w1: f64, w2: f64) -> OscillatorParams {
        OscillatorParams::from_couplings(dim, 1.0, w1, w2).unwrap()
    }

    #[test]
    fn free_ground_state_normalization() {
        for dim in [2, 3, 5] {
            let p = OscillatorParams::from_couplings(dim, 1.3, 0.0, 0.0).unwrap();
            let v = normalization_check(&p, QuantumNumbers { n_theta: 0, l: 0 }).unwrap();
            assert!((v - 1.0).abs() < 1e-12, "N={dim}: {v}");
        }
    }

    #[test]
    fn scaled_input_quadruples() {
        let p = params(3, 5.0, 2.0);
        let qn = QuantumNumbers { n_theta: 2, l: 1 };
        let v = normalization_of(&p, 1, |t| Ok(2.0 * eval_F(&p, qn, t)?)).unwrap();
        assert_relative_eq!(v, 4.0, max_relative = 1e-10);
    }

    #[test]
    fn overlaps_form_identity() {
        let p = params(5, 1.0, 1.0);
        let m = overlap_matrix(&p, 2, 4).unwrap();
        for (i, row) in m.iter().enumerate() {
            for (j, v) in row.iter().enumerate() {
                let target = if i == j { 1.0 } else { 0.0 };
                assert!((v - target).abs() < 1e-10, "({i},{j}) = {v}");
            }
        }
        assert_eq!(overlap_matrix(&p, 0, 0).unwrap().len(), 1);
    }

    #[test]
    fn residual_small_for_eigenpairs_and_large_when_perturbed() {
        let grid = residual_grid();
        for &(dim, w1, w2) in &[(2u32, 0.0, 0.0), (3, 5.0, 2.0), (5, 1.0, 0.0)] {
            let p = params(dim, w1, w2);
            for l in 0..=2 {
                for n in 0..=4 {
                    let qn = QuantumNumbers { n_theta: n, l };
                    let r = ode_residual(&p, qn, &grid).unwrap();
                    assert!(r < 1e-8, "N={dim} w=({w1},{w2}) n={n} L={l}: {r}");
                    let eps = epsilon(&p, qn).unwrap();
                    if eps != 0.0 {
                        let bad = ode_residual_at_energy(&p, qn, eps * 1.001, &grid).unwrap();
                        assert!(bad > 1e-4, "insensitive: {bad}");
                    }
                }
            }
        }
    }

    #[test]
    fn residual_rejects_pole_points() {
        let p = params(2, 0.0, 0.0);
        assert!(ode_residual(&p, QuantumNumbers { n_theta: 1, l: 0 }, &[0.0]).is_err());
    }

    #[test]
    fn node_counts_match_degree() {
        let p = params(3, 5.0, 2.0);
        for n in 0..=6 {
            assert_eq!(node_count(&p, QuantumNumbers { n_theta: n, l: 1 }).unwrap(), n);
        }
    }

    #[test]
    fn sign_change_counting() {
        assert_eq!(count_sign_changes(&[1.0, 0.0, -1.0, -2.0, 0.0, 3.0]), 2);
        assert_eq!(count_sign_changes(&[]), 0);
        assert_eq!(count_sign_changes(&[0.0, 0.0]), 0);
    }

    #[test]
    fn report_for_free_ground_state() {
        let p = params(2, 0.0, 0.0);
        let opts = VerificationOptions {
            n_max: 0,
            l_max: 0,
            ..Default::default()
        };
        let reports = verify_states(&p, &opts).unwrap();
        assert_eq!(reports.len(), 1);
        assert!(reports[0].passes(&Tolerances::default()), "{:?}", reports[0]);
    }

    #[test]
    fn perturbed_energy_fails_report() {
        let p = params(3, 1.0, 1.0);
        let opts = VerificationOptions {
            n_max: 1,
            l_max: 0,
            perturb_energy: 1e-3,
            ..Default::default()
        };
        let reports = verify_states(&p, &opts).unwrap();
        assert!(reports.iter().all(|r| !r.passes(&Tolerances::default())));
    }
}
