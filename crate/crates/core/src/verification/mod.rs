//! Independent numerical oracles for the closed forms: Gauss–Jacobi
//! quadrature, a finite-difference Sturm–Liouville eigensolver, ODE
//! residuals, node counting, and the flat-space limit scan.

mod checks;
mod euclid;
mod fd;
mod quadrature;
mod tridiag;

pub use checks::{
    count_sign_changes, node_count, node_count_with, normalization_check, normalization_of, ode_residual,
    ode_residual_at_energy, ode_residual_with, overlap_matrix, residual_grid, sphere_inner_product,
    verify_angular_momentum, verify_states, Tolerances, VerificationOptions, VerificationReport, NORMALIZATION_NODES,
};
pub use euclid::{euclidean_limit_scan, euclidean_normalization, loglog_slope, ScanRow};
pub use fd::{fd_eigenfunction, fd_eigensolve, DiscretizedOperator, MAX_LEVELS, MIN_GRID_POINTS};
pub use quadrature::{gauss_jacobi_rule, QuadratureRule};
pub use tridiag::{eigenvector, lowest_eigenvalues, sturm_count, SymTridiagonal};
