//! The nonlinear change of variables between the physical surface variables
//! and the tilde variables the evolution system is written in:
//!
//! ```text
//! v~    = v + eps*sqrt(mu)/2 * v * H_mu dx zeta
//! zeta~ = zeta - eps*sqrt(mu)/4 * v^2
//! ```

use num_complex::Complex64;

use crate::error::{Result, SolverError};
use crate::model::{PhysicalParams, WaveState};
use crate::spectral::{apply_symbol, derivative_symbol, h_mu_symbol, RealField};

const MAX_FIXED_POINT_ITERS: usize = 100;
const FIXED_POINT_TOL: f64 = 1e-12;

fn h_dx_symbol(state: &WaveState, mu: f64) -> Vec<Complex64> {
    let grid = state.grid();
    derivative_symbol(grid)
        .iter()
        .zip(h_mu_symbol(grid, mu))
        .map(|(d, h)| d * h)
        .collect()
}

/// Maps physical `(zeta, v)` to the tilde variables. The identity map when
/// `eps = 0` or `v = 0`.
pub fn to_tilde(state: &WaveState, params: &PhysicalParams) -> Result<WaveState> {
    let es = params.steepness();
    if es == 0.0 {
        return Ok(state.clone());
    }
    let h_dx_zeta = apply_symbol(state.zeta(), &h_dx_symbol(state, params.mu()))?;
    let grid = state.grid();
    let zeta_t: Vec<f64> = state
        .zeta()
        .values()
        .iter()
        .zip(state.v().values())
        .map(|(z, v)| z - 0.25 * es * v * v)
        .collect();
    let v_t: Vec<f64> = state
        .v()
        .values()
        .iter()
        .zip(h_dx_zeta.values())
        .map(|(v, h)| v + 0.5 * es * v * h)
        .collect();
    WaveState::new(
        RealField::from_values(grid, zeta_t)?,
        RealField::from_values(grid, v_t)?,
        state.time(),
    )
}

/// Inverts [`to_tilde`] by fixed-point iteration on
/// `(zeta, v) <- (zeta~ + eps*sqrt(mu)/4 v^2, v~ - eps*sqrt(mu)/2 v H_mu dx zeta)`
/// until the max-abs update drops below 1e-12.
pub fn from_tilde(state: &WaveState, params: &PhysicalParams) -> Result<WaveState> {
    let es = params.steepness();
    if es == 0.0 {
        return Ok(state.clone());
    }
    let scale = state.zeta().max_abs().max(state.v().max_abs());
    if es * (1.0 + scale) >= 0.5 {
        // outside the contraction regime of the iteration
        return Err(SolverError::NoConvergence(0));
    }
    let grid = state.grid();
    let sym = h_dx_symbol(state, params.mu());
    let mut zeta = state.zeta().clone();
    let mut v = state.v().clone();
    for _ in 0..MAX_FIXED_POINT_ITERS {
        let zeta_next: Vec<f64> = state
            .zeta()
            .values()
            .iter()
            .zip(v.values())
            .map(|(zt, vi)| zt + 0.25 * es * vi * vi)
            .collect();
        let zeta_next = RealField::from_values(grid, zeta_next)?;
        let h_dx_zeta = apply_symbol(&zeta_next, &sym)?;
        let v_next: Vec<f64> = state
            .v()
            .values()
            .iter()
            .zip(v.values())
            .zip(h_dx_zeta.values())
            .map(|((vt, vi), h)| vt - 0.5 * es * vi * h)
            .collect();
        let v_next = RealField::from_values(grid, v_next)?;
        let change = (&zeta_next - &zeta).max_abs().max((&v_next - &v).max_abs());
        zeta = zeta_next;
        v = v_next;
        if change < FIXED_POINT_TOL {
            return WaveState::new(zeta, v, state.time());
        }
    }
    Err(SolverError::NoConvergence(MAX_FIXED_POINT_ITERS))
}
