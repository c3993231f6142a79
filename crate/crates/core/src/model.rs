//! Physical parameters, the potential, and the derived exponents `μ_Lk`,
//! `λ` and `Λ_L`.

use crate::error::{Error, Result};

/// Setup of the oscillator on the sphere `S_R^N`.
///
/// Spectra and eigenfunctions depend on the physical constants only through
/// the dimensionless couplings `w_k = 4 m ω_k R² / ħ`; [`OscillatorParams::w1`]
/// and [`OscillatorParams::w2`] expose them.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct OscillatorParams {
    dim: u32,
    radius: f64,
    mass: f64,
    hbar: f64,
    omega1: f64,
    omega2: f64,
}

impl OscillatorParams {
    pub fn new(dim: u32, radius: f64, mass: f64, hbar: f64, omega1: f64, omega2: f64) -> Result<Self> {
        if dim < 2 {
            return Err(Error::Domain("dimension N must be at least 2"));
        }
        for v in [radius, mass, hbar] {
            if !v.is_finite() || v <= 0.0 {
                return Err(Error::Domain("radius, mass and hbar must be finite and positive"));
            }
        }
        for v in [omega1, omega2] {
            if !v.is_finite() || v < 0.0 {
                return Err(Error::Domain("frequencies must be finite and nonnegative"));
            }
        }
        let p = Self {
            dim,
            radius,
            mass,
            hbar,
            omega1,
            omega2,
        };
        if !p.w1().is_finite() || !p.w2().is_finite() {
            return Err(Error::Domain("dimensionless couplings overflow"));
        }
        Ok(p)
    }

    /// Natural units `ħ = m = 1` with the given radius and couplings.
    pub fn from_couplings(dim: u32, radius: f64, w1: f64, w2: f64) -> Result<Self> {
        if !radius.is_finite() || radius <= 0.0 {
            return Err(Error::Domain("radius, mass and hbar must be finite and positive"));
        }
        let to_omega = |w: f64| w / (4.0 * radius * radius);
        Self::new(dim, radius, 1.0, 1.0, to_omega(w1), to_omega(w2))
    }

    pub fn dim(&self) -> u32 {
        self.dim
    }
    pub fn radius(&self) -> f64 {
        self.radius
    }
    pub fn mass(&self) -> f64 {
        self.mass
    }
    pub fn hbar(&self) -> f64 {
        self.hbar
    }
    pub fn omega1(&self) -> f64 {
        self.omega1
    }
    pub fn omega2(&self) -> f64 {
        self.omega2
    }

    pub fn w1(&self) -> f64 {
        self.coupling(self.omega1)
    }

    pub fn w2(&self) -> f64 {
        self.coupling(self.omega2)
    }

    fn coupling(&self, omega: f64) -> f64 {
        4.0 * self.mass * omega * self.radius * self.radius / self.hbar
    }

    /// `ħ² / (2 m R²)`, the energy unit of the dimensionless spectrum.
    pub fn energy_unit(&self) -> f64 {
        self.hbar * self.hbar / (2.0 * self.mass * self.radius * self.radius)
    }

    /// The parameters with `ω₁` and `ω₂` exchanged.
    pub fn swapped(&self) -> Self {
        Self {
            omega1: self.omega2,
            omega2: self.omega1,
            ..*self
        }
    }

    /// Copy with new frequencies; all other fields kept.
    pub fn with_omegas(&self, omega1: f64, omega2: f64) -> Result<Self> {
        Self::new(self.dim, self.radius, self.mass, self.hbar, omega1, omega2)
    }

    /// `L + N/2 − 1`, with `L` already mapped by [`QuantumNumbers`].
    pub fn angular_shift(&self, l: u32) -> f64 {
        f64::from(l) + f64::from(self.dim) / 2.0 - 1.0
    }

    /// `μ_{L1}` and `μ_{L2}` at once.
    pub fn mus(&self, l: u32) -> (f64, f64) {
        let a = self.angular_shift(l);
        (libm::hypot(a, self.w1()), libm::hypot(a, self.w2()))
    }
}

/// State labels `(n_θ, L)`.
///
/// For `N = 2` negative `L` is accepted and stored as `|L|`: every formula
/// depends on `L` only through `L(L+N−2) = L²`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct QuantumNumbers {
    pub n_theta: u32,
    pub l: u32,
}

impl QuantumNumbers {
    pub fn new(dim: u32, n_theta: u32, l: i64) -> Result<Self> {
        if l < 0 && dim != 2 {
            return Err(Error::Domain("L must be nonnegative for N >= 3"));
        }
        let l = u32::try_from(l.unsigned_abs()).map_err(|_| Error::Domain("L out of range"))?;
        Ok(Self { n_theta, l })
    }
}

/// Parameters of the flat-space oscillator reached as `R → ∞` with
/// `ω₂ = ħχ / (4 m R²)` held at fixed `χ`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct EuclideanParams {
    dim: u32,
    mass: f64,
    hbar: f64,
    omega: f64,
    chi: f64,
}

impl EuclideanParams {
    pub fn new(dim: u32, mass: f64, hbar: f64, omega: f64, chi: f64) -> Result<Self> {
        if dim < 2 {
            return Err(Error::Domain("dimension N must be at least 2"));
        }
        for v in [mass, hbar, chi] {
            if !v.is_finite() || v <= 0.0 {
                return Err(Error::Domain("mass, hbar and chi must be finite and positive"));
            }
        }
        if !omega.is_finite() || omega < 0.0 {
            return Err(Error::Domain("frequency must be finite and nonnegative"));
        }
        Ok(Self {
            dim,
            mass,
            hbar,
            omega,
            chi,
        })
    }

    pub fn dim(&self) -> u32 {
        self.dim
    }
    pub fn mass(&self) -> f64 {
        self.mass
    }
    pub fn hbar(&self) -> f64 {
        self.hbar
    }
    pub fn omega(&self) -> f64 {
        self.omega
    }
    pub fn chi(&self) -> f64 {
        self.chi
    }

    /// Oscillator length `√(ħ / mω)`.
    pub fn length_scale(&self) -> f64 {
        libm::sqrt(self.hbar / (self.mass * self.omega))
    }

    /// The sphere system of radius `R` whose limit this is.
    pub fn on_sphere(&self, radius: f64) -> Result<OscillatorParams> {
        let omega2 = self.hbar * self.chi / (4.0 * self.mass * radius * radius);
        OscillatorParams::new(self.dim, radius, self.mass, self.hbar, self.omega, omega2)
    }
}

/// `V(θ) = 2mω₁²R² tan²(θ/2) + 2mω₂²R² cot²(θ/2)`.
///
/// A pole whose frequency is nonzero yields `+∞`; a zero frequency kills
/// its term even at the pole.
pub fn potential_theta(params: &OscillatorParams, theta: f64) -> f64 {
    let k = 2.0 * params.mass * params.radius * params.radius;
    let half = 0.5 * theta;
    let term = |omega: f64, sq: f64| if omega == 0.0 { 0.0 } else { k * omega * omega * sq };
    let (s, c) = (libm::sin(half), libm::cos(half));
    let tan_sq = if c == 0.0 || theta >= core::f64::consts::PI {
        f64::INFINITY
    } else {
        (s / c) * (s / c)
    };
    let cot_sq = if s == 0.0 {
        f64::INFINITY
    } else if theta >= core::f64::consts::PI {
        0.0
    } else {
        (c / s) * (c / s)
    };
    term(params.omega1, tan_sq) + term(params.omega2, cot_sq)
}

/// The `sec²`/`csc²` form of the same potential:
/// `2mω₁²R²/cos²(θ/2) + 2mω₂²R²/sin²(θ/2) − 2m(ω₁²+ω₂²)R²`.
pub fn potential_theta_secant_form(params: &OscillatorParams, theta: f64) -> f64 {
    let k = 2.0 * params.mass * params.radius * params.radius;
    let half = 0.5 * theta;
    let (s, c) = (libm::sin(half), libm::cos(half));
    let w1 = params.omega1 * params.omega1;
    let w2 = params.omega2 * params.omega2;
    k * w1 / (c * c) + k * w2 / (s * s) - k * (w1 + w2)
}

/// `μ_Lk = √((L + N/2 − 1)² + w_k²)`, `k ∈ {1, 2}`.
pub fn mu(params: &OscillatorParams, l: u32, k: u8) -> Result<f64> {
    let (m1, m2) = params.mus(l);
    match k {
        1 => Ok(m1),
        2 => Ok(m2),
        _ => Err(Error::Domain("coupling index k must be 1 or 2")),
    }
}

/// `λ = −1/2 + √((N−1)² + w₁² + w₂² + 4ε) / 2` with `ε = 2mR²E/ħ²`.
pub fn lambda_of_energy(params: &OscillatorParams, energy: f64) -> Result<f64> {
    let n1 = f64::from(params.dim) - 1.0;
    let (w1, w2) = (params.w1(), params.w2());
    let radicand = n1 * n1 + w1 * w1 + w2 * w2 + 4.0 * energy / params.energy_unit();
    if !(radicand >= 0.0) {
        return Err(Error::Domain("energy below the admissible range (negative radicand)"));
    }
    Ok(-0.5 + 0.5 * libm::sqrt(radicand))
}

/// `Λ_L = √((L + N/2 − 1)² + χ²) − 1/2`.
pub fn big_lambda(eparams: &EuclideanParams, l: u32) -> f64 {
    let a = f64::from(l) + f64::from(eparams.dim) / 2.0 - 1.0;
    libm::hypot(a, eparams.chi) - 0.5
}
