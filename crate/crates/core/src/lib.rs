//! Exact spectrum and normalized quasi-radial eigenfunctions of the
//! Pöschl–Teller anharmonic oscillator on the N-dimensional sphere:
//!
//! ```text
//! V(θ) = 2mω₁²R² tan²(θ/2) + 2mω₂²R² cot²(θ/2),   0 ≤ θ ≤ π,
//! ```
//!
//! together with the flat-space limit reached by stereographic projection
//! and R → ∞, and a set of independent numerical oracles (Gauss–Jacobi
//! quadrature, a finite-difference Sturm–Liouville eigensolver, ODE
//! residuals) that check every closed form.
//!
//! The crate is `no_std` and only needs `alloc`. Internally everything is
//! expressed through the dimensionless couplings `w_k = 4mω_kR²/ħ` and the
//! energy unit `ħ²/(2mR²)`; physical units appear only at the API edge.
#![no_std]
// `!(x > 0.0)` style guards are deliberate: they also reject NaN
#![allow(clippy::neg_cmp_op_on_partial_ord)]

extern crate alloc;

#[cfg(test)]
extern crate std;

pub mod eigenfunctions;
pub mod error;
pub mod model;
pub mod special;
pub mod spectrum;
pub mod verification;

pub use error::{Error, Result};
pub use model::{EuclideanParams, OscillatorParams, QuantumNumbers};
pub use spectrum::SpectrumEntry;
