//! Normalized quasi-radial eigenfunctions `F_{n_θ L}(θ)` on the sphere, the
//! stereographic map onto the tangent plane at the north pole, and the
//! flat-space radial functions of the `R → ∞` limit.
//!
//! Normalization follows `R^N ∫₀^π sin^{N−1}θ |F|² dθ = 1` with a positive
//! leading constant. Prefactors and power envelopes are combined in
//! log-space and exponentiated once, so large couplings do not overflow
//! intermediate Γ values.

use core::f64::consts::{LN_2, PI};

use crate::error::{Error, Result};
use crate::model::{big_lambda, EuclideanParams, OscillatorParams, QuantumNumbers};
use crate::special::{self, check_envelope, jacobi_at_offset, ln_factorial, ln_gamma};

const LN_PI: f64 = 1.144_729_885_849_400_2;

/// `e · ln(base)` with the convention `0 · ln 0 = 0`.
fn log_pow(base: f64, e: f64) -> f64 {
    if e == 0.0 {
        0.0
    } else {
        e * libm::log(base)
    }
}

fn check_theta(theta: f64) -> Result<()> {
    if !(0.0..=PI).contains(&theta) {
        return Err(Error::Domain("theta must lie in [0, pi]"));
    }
    Ok(())
}

fn checked_mus(params: &OscillatorParams, l: u32) -> Result<(f64, f64)> {
    let (m1, m2) = params.mus(l);
    check_envelope("mu_L1", m1)?;
    check_envelope("mu_L2", m2)?;
    Ok((m1, m2))
}

/// `ln` of the half-angle normalization constant, without the `R^{−N/2}`
/// and `2^{−(N−1)/2}` parts.
fn log_gamma_part(n: f64, m1: f64, m2: f64) -> f64 {
    0.5 * (ln_gamma(n + 1.0) + libm::log(2.0 * n + m1 + m2 + 1.0) + ln_gamma(n + m1 + m2 + 1.0)
        - ln_gamma(n + m1 + 1.0)
        - ln_gamma(n + m2 + 1.0))
}

/// `F_{n_θ L}(θ)` in the half-angle form
/// `C (sin θ/2)^{μ₂−N/2+1} (cos θ/2)^{μ₁−N/2+1} P_n^{(μ₂,μ₁)}(cos θ)`.
///
/// `θ ∈ [0, π]`. At a pole the envelope exponent is never negative for
/// valid parameters, so endpoint values are finite; a negative exponent
/// would surface as `±∞`.
#[allow(non_snake_case)]
pub fn eval_F(params: &OscillatorParams, qn: QuantumNumbers, theta: f64) -> Result<f64> {
    check_theta(theta)?;
    let (m1, m2) = checked_mus(params, qn.l)?;
    let n = f64::from(qn.n_theta);
    let dim = f64::from(params.dim());
    let log_c = log_gamma_part(n, m1, m2) - 0.5 * dim * libm::log(params.radius()) - 0.5 * (dim - 1.0) * LN_2;
    let s = libm::sin(0.5 * theta);
    // cos(θ/2) written as sin((π−θ)/2) so that it vanishes exactly at θ = π
    let c = libm::sin(0.5 * (PI - theta));
    let envelope = log_pow(s, m2 - 0.5 * dim + 1.0) + log_pow(c, m1 - 0.5 * dim + 1.0);
    let jac = jacobi_at_offset(qn.n_theta, m2, m1, -2.0 * s * s);
    Ok(libm::exp(log_c + envelope) * jac)
}

/// The same eigenfunction written with `(1 ∓ cos θ)` factors:
/// `C' (1−cos θ)^{μ₂/2−N/4+1/2} (1+cos θ)^{μ₁/2−N/4+1/2} P_n^{(μ₂,μ₁)}(cos θ)`.
#[allow(non_snake_case)]
pub fn eval_F_form_a(params: &OscillatorParams, qn: QuantumNumbers, theta: f64) -> Result<f64> {
    check_theta(theta)?;
    let (m1, m2) = checked_mus(params, qn.l)?;
    let n = f64::from(qn.n_theta);
    let dim = f64::from(params.dim());
    let log_c = log_gamma_part(n, m1, m2) - 0.5 * dim * libm::log(params.radius()) - 0.5 * (m1 + m2 + 1.0) * LN_2;
    let x = libm::cos(theta);
    let envelope = log_pow(1.0 - x, 0.5 * m2 - 0.25 * dim + 0.5) + log_pow(1.0 + x, 0.5 * m1 - 0.25 * dim + 0.5);
    let jac = special::jacobi_eval(qn.n_theta, special::JacobiParams::new(m2, m1)?, x)?;
    Ok(libm::exp(log_c + envelope) * jac)
}

fn require_equal_omegas(params: &OscillatorParams) -> Result<()> {
    if params.omega1() != params.omega2() {
        return Err(Error::Domain("this form requires omega1 == omega2"));
    }
    Ok(())
}

/// `ω₁ = ω₂`: `C (sin θ)^{μ−N/2+1} P_n^{(μ,μ)}(cos θ)`.
#[allow(non_snake_case)]
pub fn eval_F_equal_omegas(params: &OscillatorParams, qn: QuantumNumbers, theta: f64) -> Result<f64> {
    require_equal_omegas(params)?;
    check_theta(theta)?;
    let (m, _) = checked_mus(params, qn.l)?;
    let n = f64::from(qn.n_theta);
    let dim = f64::from(params.dim());
    let log_c = 0.5
        * (ln_factorial(qn.n_theta) + libm::log(2.0 * n + 2.0 * m + 1.0) + ln_gamma(n + 2.0 * m + 1.0)
            - dim * libm::log(params.radius())
            - (2.0 * m + 1.0) * LN_2
            - 2.0 * ln_gamma(n + m + 1.0));
    let envelope = log_pow(libm::sin(theta), m - 0.5 * dim + 1.0);
    let jac = special::jacobi_eval(qn.n_theta, special::JacobiParams::new(m, m)?, libm::cos(theta))?;
    Ok(libm::exp(log_c + envelope) * jac)
}

/// `ω₁ = ω₂`, Gegenbauer form:
/// `C (sin θ)^{μ−N/2+1} C_n^{μ+1/2}(cos θ)`.
#[allow(non_snake_case)]
pub fn eval_F_gegenbauer(params: &OscillatorParams, qn: QuantumNumbers, theta: f64) -> Result<f64> {
    require_equal_omegas(params)?;
    check_theta(theta)?;
    let (m, _) = checked_mus(params, qn.l)?;
    let n = f64::from(qn.n_theta);
    let dim = f64::from(params.dim());
    let log_c = 0.5
        * ((2.0 * m - 1.0) * LN_2
            + ln_factorial(qn.n_theta)
            + libm::log(2.0 * n + 2.0 * m + 1.0)
            + 2.0 * ln_gamma(m + 0.5)
            - dim * libm::log(params.radius())
            - LN_PI
            - ln_gamma(n + 2.0 * m + 1.0));
    let envelope = log_pow(libm::sin(theta), m - 0.5 * dim + 1.0);
    let geg = special::gegenbauer_eval(qn.n_theta, m + 0.5, libm::cos(theta))?;
    Ok(libm::exp(log_c + envelope) * geg)
}

/// Free particle (`ω₁ = ω₂ = 0`):
/// `C sin^L θ · C_n^{L+N/2−1/2}(cos θ)`.
#[allow(non_snake_case)]
pub fn eval_F_free(params: &OscillatorParams, qn: QuantumNumbers, theta: f64) -> Result<f64> {
    if params.omega1() != 0.0 || params.omega2() != 0.0 {
        return Err(Error::Domain("free-particle form requires omega1 == omega2 == 0"));
    }
    check_theta(theta)?;
    let n = f64::from(qn.n_theta);
    let (l, dim) = (f64::from(qn.l), f64::from(params.dim()));
    let log_c = 0.5
        * ((2.0 * l + dim - 3.0) * LN_2
            + ln_factorial(qn.n_theta)
            + libm::log(2.0 * n + 2.0 * l + dim - 1.0)
            + 2.0 * ln_gamma(l + 0.5 * (dim - 1.0))
            - dim * libm::log(params.radius())
            - LN_PI
            - ln_gamma(n + 2.0 * l + dim - 1.0));
    let envelope = log_pow(libm::sin(theta), l);
    let geg = special::gegenbauer_eval(qn.n_theta, l + 0.5 * dim - 0.5, libm::cos(theta))?;
    Ok(libm::exp(log_c + envelope) * geg)
}

/// Shared constant of the one-sided forms (`ω₂ = 0` or `ω₁ = 0`).
fn one_sided_log_constant(params: &OscillatorParams, qn: QuantumNumbers, m: f64) -> f64 {
    let n = f64::from(qn.n_theta);
    let (l, dim) = (f64::from(qn.l), f64::from(params.dim()));
    let s = n + l + 0.5 * dim;
    0.5 * (ln_factorial(qn.n_theta) + libm::log(2.0 * n + l + 0.5 * dim + m) + ln_gamma(s + m)
        - dim * libm::log(params.radius())
        - (dim - 1.0) * LN_2
        - ln_gamma(s)
        - ln_gamma(n + m + 1.0))
}

/// `ω₂ = 0`:
/// `C (sin θ/2)^L (cos θ/2)^{μ−N/2+1} P_n^{(L+N/2−1, μ)}(cos θ)`.
#[allow(non_snake_case)]
pub fn eval_F_omega2_zero(params: &OscillatorParams, qn: QuantumNumbers, theta: f64) -> Result<f64> {
    if params.omega2() != 0.0 {
        return Err(Error::Domain("this form requires omega2 == 0"));
    }
    check_theta(theta)?;
    let (m, _) = checked_mus(params, qn.l)?;
    let a = params.angular_shift(qn.l);
    let dim = f64::from(params.dim());
    let log_c = one_sided_log_constant(params, qn, m);
    let envelope =
        log_pow(libm::sin(0.5 * theta), f64::from(qn.l)) + log_pow(libm::sin(0.5 * (PI - theta)), m - 0.5 * dim + 1.0);
    let jac = special::jacobi_eval(qn.n_theta, special::JacobiParams::new(a, m)?, libm::cos(theta))?;
    Ok(libm::exp(log_c + envelope) * jac)
}

/// `ω₁ = 0`:
/// `C (sin θ/2)^{μ−N/2+1} (cos θ/2)^L P_n^{(μ, L+N/2−1)}(cos θ)`.
#[allow(non_snake_case)]
pub fn eval_F_omega1_zero(params: &OscillatorParams, qn: QuantumNumbers, theta: f64) -> Result<f64> {
    if params.omega1() != 0.0 {
        return Err(Error::Domain("this form requires omega1 == 0"));
    }
    check_theta(theta)?;
    let (_, m) = checked_mus(params, qn.l)?;
    let a = params.angular_shift(qn.l);
    let dim = f64::from(params.dim());
    let log_c = one_sided_log_constant(params, qn, m);
    let envelope =
        log_pow(libm::sin(0.5 * theta), m - 0.5 * dim + 1.0) + log_pow(libm::sin(0.5 * (PI - theta)), f64::from(qn.l));
    let jac = special::jacobi_eval(qn.n_theta, special::JacobiParams::new(m, a)?, libm::cos(theta))?;
    Ok(libm::exp(log_c + envelope) * jac)
}

/// For `params` with `ω₂ = 0`, returns `(F(θ), F̄(π − θ))` where `F̄` is the
/// eigenfunction of the mirrored system (`ω₁ ↔ ω₂`). The pair agrees up to
/// the factor `(−1)^{n_θ}`.
pub fn reflection_check(params: &OscillatorParams, qn: QuantumNumbers, theta: f64) -> Result<(f64, f64)> {
    let mirrored = params.swapped();
    Ok((
        eval_F_omega2_zero(params, qn, theta)?,
        eval_F_omega1_zero(&mirrored, qn, PI - theta)?,
    ))
}

/// Stereographic radius `r = 2R tan(θ/2)`; `θ = π` maps to `+∞`.
pub fn r_from_theta(radius: f64, theta: f64) -> Result<f64> {
    check_theta(theta)?;
    if theta == PI {
        return Ok(f64::INFINITY);
    }
    Ok(2.0 * radius * libm::tan(0.5 * theta))
}

/// Inverse map `θ = 2 arctan(r / 2R)`.
pub fn theta_from_r(radius: f64, r: f64) -> Result<f64> {
    if !(r >= 0.0) {
        return Err(Error::Domain("r must be nonnegative"));
    }
    Ok(2.0 * libm::atan(r / (2.0 * radius)))
}

/// `f(r) = (1 + r²/4R²)^{−(N/2−1)} F(θ(r))`, the eigenfunction carried onto
/// the tangent plane.
pub fn project_to_plane(params: &OscillatorParams, qn: QuantumNumbers, r: f64) -> Result<f64> {
    let theta = theta_from_r(params.radius(), r)?;
    let t = r / (2.0 * params.radius());
    let dim = f64::from(params.dim());
    let f = eval_F(params, qn, theta)?;
    Ok(f * libm::exp(-(0.5 * dim - 1.0) * libm::log1p(t * t)))
}

/// The projected function written directly in `r`:
/// `C (r/2R)^{μ₂−N/2+1} (1 + r²/4R²)^{−(μ₁+μ₂)/2} P_n^{(μ₂,μ₁)}((1−t²)/(1+t²))`,
/// `t = r/2R`.
pub fn project_to_plane_direct(params: &OscillatorParams, qn: QuantumNumbers, r: f64) -> Result<f64> {
    if !(r >= 0.0) {
        return Err(Error::Domain("r must be nonnegative"));
    }
    let (m1, m2) = checked_mus(params, qn.l)?;
    let n = f64::from(qn.n_theta);
    let dim = f64::from(params.dim());
    let log_c = log_gamma_part(n, m1, m2) - 0.5 * dim * libm::log(params.radius()) - 0.5 * (dim - 1.0) * LN_2;
    let t = r / (2.0 * params.radius());
    let t2 = t * t;
    let envelope = log_pow(t, m2 - 0.5 * dim + 1.0) - 0.5 * (m1 + m2) * libm::log1p(t2);
    // argument (1−t²)/(1+t²), passed as its offset from 1
    let jac = jacobi_at_offset(qn.n_theta, m2, m1, -2.0 * t2 / (1.0 + t2));
    Ok(libm::exp(log_c + envelope) * jac)
}

/// Normalized flat-space radial function
/// `√(2 n!/Γ(n+Λ+3/2)) (mω/ħ)^{N/4} y^{Λ/2−N/4+3/4} e^{−y/2} L_n^{(Λ+1/2)}(y)`,
/// `y = mωr²/ħ`.
pub fn eval_f_euclidean(eparams: &EuclideanParams, n_r: u32, l: u32, r: f64) -> Result<f64> {
    if !(r >= 0.0) {
        return Err(Error::Domain("r must be nonnegative"));
    }
    if !(eparams.omega() > 0.0) {
        return Err(Error::Domain("flat-space eigenfunctions need omega > 0"));
    }
    let big_l = big_lambda(eparams, l);
    let n = f64::from(n_r);
    let dim = f64::from(eparams.dim());
    let k = eparams.mass() * eparams.omega() / eparams.hbar();
    let y = k * r * r;
    let log_c = 0.5 * (LN_2 + ln_factorial(n_r) - ln_gamma(n + big_l + 1.5)) + 0.25 * dim * libm::log(k);
    let envelope = log_pow(y, 0.5 * big_l - 0.25 * dim + 0.75) - 0.5 * y;
    let lag = special::laguerre_eval(n_r, big_l + 0.5, y)?;
    Ok(libm::exp(log_c + envelope) * lag)
}
