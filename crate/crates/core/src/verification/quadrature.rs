//! Gauss rules from three-term recurrences (Golub–Welsch): nodes are the
//! eigenvalues of the Jacobi matrix, weights follow from the orthonormal
//! polynomials evaluated at the nodes.

use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::special::ln_gamma;

use super::tridiag::{lowest_eigenvalues, SymTridiagonal};

/// `n`-point Gauss rule for the weight `(1−x)^α (1+x)^β` on `[−1, 1]`.
#[derive(Debug, Clone, PartialEq)]
pub struct QuadratureRule {
    pub nodes: Vec<f64>,
    pub weights: Vec<f64>,
    pub alpha: f64,
    pub beta: f64,
}

impl QuadratureRule {
    /// `Σ wᵢ g(xᵢ)`.
    pub fn integrate<G: FnMut(f64) -> f64>(&self, mut g: G) -> f64 {
        self.nodes.iter().zip(&self.weights).map(|(&x, &w)| w * g(x)).sum()
    }

    /// Total mass `2^{α+β+1} B(α+1, β+1)` of the weight.
    pub fn total_mass(&self) -> f64 {
        libm::exp(log_jacobi_mass(self.alpha, self.beta))
    }
}

fn log_jacobi_mass(alpha: f64, beta: f64) -> f64 {
    let s = alpha + beta;
    (s + 1.0) * core::f64::consts::LN_2 + ln_gamma(alpha + 1.0) + ln_gamma(beta + 1.0) - ln_gamma(s + 2.0)
}

/// Recurrence coefficients `(a_k, b_k)` of the monic Jacobi polynomials;
/// `b[0]` is unused.
fn jacobi_recurrence(n: usize, alpha: f64, beta: f64) -> (Vec<f64>, Vec<f64>) {
    let s = alpha + beta;
    let mut a = Vec::with_capacity(n);
    let mut b = Vec::with_capacity(n);
    for k in 0..n {
        let kf = k as f64;
        let t = 2.0 * kf + s;
        a.push(if k == 0 {
            (beta - alpha) / (s + 2.0)
        } else {
            (beta - alpha) * (beta + alpha) / (t * (t + 2.0))
        });
        b.push(match k {
            0 => 0.0,
            1 => libm::sqrt(4.0 * (1.0 + alpha) * (1.0 + beta) / ((2.0 + s) * (2.0 + s) * (3.0 + s))),
            _ => libm::sqrt(4.0 * kf * (kf + alpha) * (kf + beta) * (kf + s) / (t * t * (t + 1.0) * (t - 1.0))),
        });
    }
    (a, b)
}

/// Orthonormal recurrence `x q_k = b_{k+1} q_{k+1} + a_k q_k + b_k q_{k−1}`
/// started at `q_0 = 1`. Returns `(Σ_{k<n} q_k², q_n, q_n')`.
fn orthonormal_sums(a: &[f64], b: &[f64], b_n: f64, x: f64) -> (f64, f64, f64) {
    let n = a.len();
    let (mut q_prev, mut q) = (0.0, 1.0);
    let (mut d_prev, mut d) = (0.0, 0.0);
    let mut sum = 0.0;
    for k in 0..n {
        sum += q * q;
        let next_b = if k + 1 < n { b[k + 1] } else { b_n };
        let q_next = ((x - a[k]) * q - b[k] * q_prev) / next_b;
        let d_next = ((x - a[k]) * d + q - b[k] * d_prev) / next_b;
        q_prev = q;
        q = q_next;
        d_prev = d;
        d = d_next;
    }
    (sum, q, d)
}

fn gauss_from_recurrence(a: &[f64], b: &[f64], b_n: f64, log_mu0: f64) -> Result<(Vec<f64>, Vec<f64>)> {
    let n = a.len();
    let t = SymTridiagonal::new(a.to_vec(), b[1..].to_vec())?;
    let mut nodes = lowest_eigenvalues(&t, n)?;
    // one Newton polish on q_n; bisection leaves an absolute error near eps·‖J‖
    for x in nodes.iter_mut() {
        let (_, q, d) = orthonormal_sums(a, b, b_n, *x);
        if d != 0.0 && q.is_finite() && d.is_finite() {
            let step = q / d;
            if step.abs() < 1e-8 * (1.0 + x.abs()) {
                *x -= step;
            }
        }
    }
    let mu0 = libm::exp(log_mu0);
    let weights: Vec<f64> = nodes.iter().map(|&x| mu0 / orthonormal_sums(a, b, b_n, x).0).collect();
    if weights.iter().any(|w| !(*w > 0.0) || !w.is_finite()) {
        return Err(Error::NoConvergence("Gauss weights"));
    }
    Ok((nodes, weights))
}

/// `n`-point Gauss–Jacobi rule, exact for polynomials of degree `≤ 2n−1`
/// under `(1−x)^α (1+x)^β`.
pub fn gauss_jacobi_rule(n: usize, alpha: f64, beta: f64) -> Result<QuadratureRule> {
    if n == 0 {
        return Err(Error::Domain("quadrature needs at least one node"));
    }
    if !(alpha > -1.0 && beta > -1.0) || !alpha.is_finite() || !beta.is_finite() {
        return Err(Error::Domain("Jacobi weight exponents must be finite and > -1"));
    }
    let (a, b) = jacobi_recurrence(n + 1, alpha, beta);
    let (nodes, weights) = gauss_from_recurrence(&a[..n], &b[..n], b[n], log_jacobi_mass(alpha, beta))?;
    Ok(QuadratureRule {
        nodes,
        weights,
        alpha,
        beta,
    })
}

/// `n`-point Gauss–Laguerre rule for `y^α e^{−y}` on `[0, ∞)`.
pub(crate) fn gauss_laguerre_rule(n: usize, alpha: f64) -> Result<(Vec<f64>, Vec<f64>)> {
    if n == 0 || !(alpha > -1.0) || !alpha.is_finite() {
        return Err(Error::Domain("Laguerre rule needs n >= 1 and alpha > -1"));
    }
    let a: Vec<f64> = (0..n).map(|k| 2.0 * k as f64 + alpha + 1.0).collect();
    let b: Vec<f64> = (0..=n).map(|k| libm::sqrt(k as f64 * (k as f64 + alpha))).collect();
    gauss_from_recurrence(&a, &b[..n], b[n], ln_gamma(alpha + 1.0))
}
