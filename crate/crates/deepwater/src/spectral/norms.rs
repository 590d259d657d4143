//! Discrete Sobolev and energy norms via the Parseval quadrature
//! `||u||^2 = (2L/N^2) sum_k w(xi_k) |c_k|^2`.

use crate::error::{Result, SolverError};
use crate::spectral::{forward_transform, RealField};

/// Weighted spectral quadrature shared by every norm in this module.
fn weighted_l2(u: &RealField, weight: impl Fn(f64) -> f64) -> f64 {
    let spec = forward_transform(u);
    let grid = u.grid();
    let n = grid.n_points() as f64;
    let scale = 2.0 * grid.half_length() / (n * n);
    let sum: f64 = grid
        .wavenumbers()
        .iter()
        .zip(spec.coefficients())
        .map(|(&xi, c)| weight(xi) * c.norm_sqr())
        .sum();
    (scale * sum).sqrt()
}

/// `H^s` norm, `sqrt((2L/N^2) sum (1+xi^2)^s |c_k|^2)`.
pub fn sobolev_norm(u: &RealField, s: f64) -> f64 {
    assert!(s >= 0.0, "sobolev order must be nonnegative");
    weighted_l2(u, |xi| (1.0 + xi * xi).powf(s))
}

/// Homogeneous half-derivative norm `|| |D|^{1/2} u ||_{L^2}` (weight `|xi|`;
/// the mean mode contributes nothing).
pub fn half_derivative_norm(u: &RealField) -> f64 {
    weighted_l2(u, f64::abs)
}

/// The model's order-`N` energy,
/// `E^N = (1/sqrt(mu)) |Lambda^N zeta|^2 + ||D|^{1/2} Lambda^N zeta|^2 + |v|_{H^N}^2`.
pub fn energy(zeta: &RealField, v: &RealField, order: u32, mu: f64) -> Result<f64> {
    if !(mu.is_finite() && mu > 0.0) {
        return Err(SolverError::InvalidParam(format!(
            "mu must be positive and finite, got {mu}"
        )));
    }
    if !zeta.grid().same_grid(v.grid()) {
        return Err(SolverError::GridMismatch(
            "zeta and v live on different grids".into(),
        ));
    }
    let s = f64::from(order);
    let lambda_zeta = sobolev_norm(zeta, s);
    let half = weighted_l2(zeta, |xi| xi.abs() * (1.0 + xi * xi).powf(s));
    let v_norm = sobolev_norm(v, s);
    Ok(lambda_zeta * lambda_zeta / mu.sqrt() + half * half + v_norm * v_norm)
}
