//! Symmetric tridiagonal eigenvalues by Sturm-sequence bisection, and
//! eigenvectors by inverse iteration.

use alloc::vec::Vec;

use crate::error::{Error, Result};

/// Symmetric tridiagonal matrix: `diag[0..n]`, `off[i]` couples `i` and `i+1`.
#[derive(Debug, Clone, PartialEq)]
pub struct SymTridiagonal {
    pub diag: Vec<f64>,
    pub off: Vec<f64>,
}

impl SymTridiagonal {
    pub fn new(diag: Vec<f64>, off: Vec<f64>) -> Result<Self> {
        if diag.is_empty() || off.len() + 1 != diag.len() {
            return Err(Error::Domain(
                "tridiagonal needs n diagonal and n-1 off-diagonal entries",
            ));
        }
        if diag.iter().chain(off.iter()).any(|v| !v.is_finite()) {
            return Err(Error::Domain("tridiagonal entries must be finite"));
        }
        Ok(Self { diag, off })
    }

    pub fn len(&self) -> usize {
        self.diag.len()
    }

    pub fn is_empty(&self) -> bool {
        self.diag.is_empty()
    }

    /// Gershgorin interval containing the whole spectrum.
    pub fn gershgorin(&self) -> (f64, f64) {
        let n = self.diag.len();
        let mut lo = f64::INFINITY;
        let mut hi = f64::NEG_INFINITY;
        for i in 0..n {
            let left = if i > 0 { self.off[i - 1].abs() } else { 0.0 };
            let right = if i + 1 < n { self.off[i].abs() } else { 0.0 };
            lo = lo.min(self.diag[i] - left - right);
            hi = hi.max(self.diag[i] + left + right);
        }
        (lo, hi)
    }
}

/// Number of eigenvalues strictly below `x` (negative pivots of the
/// `LDLᵀ` factorization of `T − xI`).
pub fn sturm_count(t: &SymTridiagonal, x: f64) -> usize {
    let pivmin = f64::MIN_POSITIVE * 1e10;
    let mut count = 0;
    let mut q = t.diag[0] - x;
    for i in 0..t.diag.len() {
        if i > 0 {
            let b = t.off[i - 1];
            q = (t.diag[i] - x) - b * b / q;
        }
        if q.abs() < pivmin {
            q = -pivmin;
        }
        if q < 0.0 {
            count += 1;
        }
    }
    count
}

/// The `k` smallest eigenvalues in ascending order.
pub fn lowest_eigenvalues(t: &SymTridiagonal, k: usize) -> Result<Vec<f64>> {
    if k > t.len() {
        return Err(Error::Domain("requested more eigenvalues than the matrix has"));
    }
    let (glo, ghi) = t.gershgorin();
    let atol = 2.0 * f64::EPSILON * glo.abs().max(ghi.abs());
    let mut out = Vec::with_capacity(k);
    let mut floor = glo;
    for index in 0..k {
        let (mut lo, mut hi) = (floor, ghi);
        let mut iterations = 0;
        loop {
            let mid = 0.5 * (lo + hi);
            if mid <= lo || mid >= hi || hi - lo <= atol + 2.0 * f64::EPSILON * mid.abs() {
                break;
            }
            if sturm_count(t, mid) > index {
                hi = mid;
            } else {
                lo = mid;
            }
            iterations += 1;
            if iterations > 4096 {
                return Err(Error::NoConvergence("Sturm bisection"));
            }
        }
        let value = 0.5 * (lo + hi);
        out.push(value);
        floor = lo;
    }
    Ok(out)
}

/// Solves `(T − σI) x = b` in place by Gaussian elimination with partial
/// pivoting. Exactly zero pivots are replaced by `tiny`.
fn shifted_solve(t: &SymTridiagonal, sigma: f64, tiny: f64, b: &mut [f64]) {
    let n = t.len();
    let mut d: Vec<f64> = t.diag.iter().map(|v| v - sigma).collect();
    let mut du = t.off.clone();
    let mut dl = t.off.clone();
    // dl[i] is reused for the second superdiagonal after a row swap
    for i in 0..n.saturating_sub(1) {
        if d[i].abs() >= dl[i].abs() {
            if d[i] == 0.0 {
                d[i] = tiny;
            }
            let fact = dl[i] / d[i];
            d[i + 1] -= fact * du[i];
            b[i + 1] -= fact * b[i];
            dl[i] = 0.0;
        } else {
            let fact = d[i] / dl[i];
            d[i] = dl[i];
            let next = d[i + 1];
            d[i + 1] = du[i] - fact * next;
            if i + 2 < n {
                dl[i] = du[i + 1];
                du[i + 1] = -fact * dl[i];
            } else {
                dl[i] = 0.0;
            }
            du[i] = next;
            b.swap(i, i + 1);
            b[i + 1] -= fact * b[i];
        }
    }
    if d[n - 1] == 0.0 {
        d[n - 1] = tiny;
    }
    b[n - 1] /= d[n - 1];
    if n > 1 {
        b[n - 2] = (b[n - 2] - du[n - 2] * b[n - 1]) / d[n - 2];
    }
    for i in (0..n.saturating_sub(2)).rev() {
        b[i] = (b[i] - du[i] * b[i + 1] - dl[i] * b[i + 2]) / d[i];
    }
}

/// Unit eigenvector for an isolated eigenvalue `lambda`, by three steps of
/// inverse iteration from a fixed non-symmetric start. The sign is arbitrary.
pub fn eigenvector(t: &SymTridiagonal, lambda: f64) -> Result<Vec<f64>> {
    if !lambda.is_finite() {
        return Err(Error::Domain("eigenvalue must be finite"));
    }
    let (glo, ghi) = t.gershgorin();
    let tiny = f64::EPSILON * glo.abs().max(ghi.abs()).max(f64::MIN_POSITIVE);
    let n = t.len();
    let mut x: Vec<f64> = (0..n).map(|i| 1.0 + ((i * 7919) % 97) as f64 / 97.0).collect();
    for _ in 0..3 {
        shifted_solve(t, lambda, tiny, &mut x);
        let norm = libm::sqrt(x.iter().map(|v| v * v).sum::<f64>());
        if !norm.is_finite() || norm == 0.0 {
            return Err(Error::NoConvergence("inverse iteration"));
        }
        x.iter_mut().for_each(|v| *v /= norm);
    }
    Ok(x)
}
