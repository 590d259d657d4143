//! The two substep propagators and their Lie composition.

use crate::error::{Result, SolverError};
use crate::model::{
    dispersive_rhs_with, Bathymetry, PhysicalParams, SplitCoeffs, WaveState,
};
use crate::spectral::{apply_symbol, sech_squared_symbol, RealField};

/// One forward-Euler step of the dispersive subsystem; advances the clock
/// by `dt`. Fails with `NonFinite` if the update blew up.
pub fn dispersive_step(
    state: &WaveState,
    params: &PhysicalParams,
    bathy: &Bathymetry,
    dt: f64,
) -> Result<WaveState> {
    dispersive_step_with(state, &SplitCoeffs::deep_water(params), bathy, dt)
}

pub(crate) fn dispersive_step_with(
    state: &WaveState,
    co: &SplitCoeffs,
    bathy: &Bathymetry,
    dt: f64,
) -> Result<WaveState> {
    check_dt(dt)?;
    let tend = dispersive_rhs_with(state, co, bathy)?;
    let zeta: Vec<f64> = state
        .zeta
        .values()
        .iter()
        .zip(tend.d_zeta.values())
        .map(|(u, du)| u + dt * du)
        .collect();
    let v: Vec<f64> = state
        .v
        .values()
        .iter()
        .zip(tend.d_v.values())
        .map(|(u, du)| u + dt * du)
        .collect();
    let next = WaveState {
        zeta: RealField::from_values(state.grid(), zeta)?,
        v: RealField::from_values(state.grid(), v)?,
        time: state.time + dt,
    };
    if !next.all_finite() {
        return Err(SolverError::NonFinite {
            context: "dispersive step",
            time: state.time,
        });
    }
    Ok(next)
}

/// Lax-Wendroff update for `du/dt + a(x) du/dx = 0` with the speed frozen at
/// its current nodal values:
///
/// ```text
/// u_j' = u_j - (a_j dt / 2dx)(u_{j+1} - u_{j-1})
///            + (a_j^2 dt^2 / 2dx^2)(u_{j+1} - 2u_j + u_{j-1})
/// ```
///
/// Stable for `max|a| dt/dx < 1`; the bound is the caller's responsibility.
pub fn lax_wendroff_advect(u: &RealField, speed: &RealField, dt: f64) -> Result<RealField> {
    check_dt(dt)?;
    if !u.grid().same_grid(speed.grid()) {
        return Err(SolverError::GridMismatch(
            "advection speed lives on a different grid".into(),
        ));
    }
    let n = u.grid().n_points();
    let dx = u.grid().dx();
    let vals = u.values();
    let mut out = vec![0.0; n];
    for j in 0..n {
        let up = vals[(j + 1) % n];
        let um = vals[(j + n - 1) % n];
        let lambda = speed.values()[j] * dt / dx;
        out[j] = vals[j] - 0.5 * lambda * (up - um)
            + 0.5 * lambda * lambda * (up - 2.0 * vals[j] + um);
    }
    RealField::from_values(u.grid(), out)
}

/// Conservative Lax-Wendroff (Richtmyer-type) update for
/// `du/dt + d/dx (c u^2) = 0`, using half-point averages
/// `u_{j+1/2} = (u_j + u_{j+1})/2` in the second-order correction:
///
/// ```text
/// u_j' = u_j - (dt/2dx)(f_{j+1} - f_{j-1})
///            + (dt^2/2dx^2)( a_{j+1/2}(f_{j+1} - f_j) - a_{j-1/2}(f_j - f_{j-1}) )
/// ```
///
/// with `f = c u^2` and `a_{j+1/2} = 2 c u_{j+1/2}`. The telescoping fluxes
/// conserve `sum u_j` exactly.
pub fn lax_wendroff_flux(u: &RealField, flux_coeff: f64, dt: f64) -> Result<RealField> {
    check_dt(dt)?;
    let n = u.grid().n_points();
    let dx = u.grid().dx();
    let vals = u.values();
    let f: Vec<f64> = vals.iter().map(|v| flux_coeff * v * v).collect();
    let r = dt / (2.0 * dx);
    let r2 = dt * dt / (2.0 * dx * dx);
    let mut out = vec![0.0; n];
    for j in 0..n {
        let jp = (j + 1) % n;
        let jm = (j + n - 1) % n;
        let a_plus = flux_coeff * (vals[j] + vals[jp]); // 2c * u_{j+1/2}
        let a_minus = flux_coeff * (vals[j] + vals[jm]);
        out[j] = vals[j] - r * (f[jp] - f[jm])
            + r2 * (a_plus * (f[jp] - f[j]) - a_minus * (f[j] - f[jm]));
    }
    RealField::from_values(u.grid(), out)
}

/// One step of the nonlinear transport subsystem: frozen-speed Lax-Wendroff
/// on `zeta` (speed `eps*sqrt(mu)/2 * w`, `w = sech^2(sqrt(mu) D) v`) and
/// conservative Lax-Wendroff on `v` (flux `3 eps*sqrt(mu)/4 * v^2`).
///
/// Asserts the CFL bound
/// `lambda = eps*sqrt(mu)/2 * max(|w|, 3|v|) * dt/dx < 1` and leaves the
/// clock untouched; the Lie composition owns the time increment.
pub fn transport_step(state: &WaveState, params: &PhysicalParams, dt: f64) -> Result<WaveState> {
    transport_step_with(state, &SplitCoeffs::deep_water(params), dt)
}

pub(crate) fn transport_step_with(
    state: &WaveState,
    co: &SplitCoeffs,
    dt: f64,
) -> Result<WaveState> {
    check_dt(dt)?;
    let grid = state.grid();
    let w = apply_symbol(&state.v, &sech_squared_symbol(grid, co.mu))?;

    let za = co.zeta_advection();
    let va = co.v_advection();
    let s_max = transport_speed_bound(&w, &state.v, za, va);
    let lambda = s_max * dt / grid.dx();
    if !(lambda < 1.0) {
        return Err(SolverError::CflViolation { lambda });
    }

    let speed = RealField::from_values(grid, w.values().iter().map(|wj| za * wj).collect())?;
    let zeta = lax_wendroff_advect(&state.zeta, &speed, dt)?;
    let v = lax_wendroff_flux(&state.v, 0.5 * va, dt)?;
    Ok(WaveState {
        zeta,
        v,
        time: state.time,
    })
}

/// Largest advection speed of the transport subsystem, used by the CFL
/// control: `max_j max(za*|w_j|, va*|v_j|)`.
pub(crate) fn transport_speed_bound(w: &RealField, v: &RealField, za: f64, va: f64) -> f64 {
    w.values()
        .iter()
        .zip(v.values())
        .fold(0.0_f64, |m, (wj, vj)| {
            m.max((za * wj).abs()).max((va * vj).abs())
        })
}

/// One Lie step: the dispersive substep followed by the transport substep,
/// both over the same increment `dt` (the clock advances by `dt` total).
pub fn lie_step(
    state: &WaveState,
    params: &PhysicalParams,
    bathy: &Bathymetry,
    dt: f64,
) -> Result<WaveState> {
    lie_step_with(state, &SplitCoeffs::deep_water(params), bathy, dt)
}

pub(crate) fn lie_step_with(
    state: &WaveState,
    co: &SplitCoeffs,
    bathy: &Bathymetry,
    dt: f64,
) -> Result<WaveState> {
    transport_step_with(&dispersive_step_with(state, co, bathy, dt)?, co, dt)
}

fn check_dt(dt: f64) -> Result<()> {
    if !(dt.is_finite() && dt > 0.0) {
        return Err(SolverError::InvalidParam(format!(
            "dt must be positive, got {dt}"
        )));
    }
    Ok(())
}
