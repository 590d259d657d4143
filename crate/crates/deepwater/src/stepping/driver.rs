//! CFL time-step control and the simulation driver.

use std::collections::VecDeque;
use std::fmt;

use crate::error::{Result, SolverError};
use crate::model::{Bathymetry, PhysicalParams, SplitCoeffs, WaveState};
use crate::spectral::{apply_symbol, energy, sech_squared_symbol};
use crate::stepping::substeps::{lie_step_with, transport_speed_bound};
use crate::stepping::{Diagnostics, StepConfig, StepRecord};

/// Next admissible time step for the current state.
///
/// Fixed mode returns the configured step after asserting the transport CFL
/// bound; CFL mode returns `min(sigma * dx / s_max, dt_max)` where `s_max`
/// is the largest transport speed (`dt_max` when the state is at rest).
pub fn cfl_dt(state: &WaveState, params: &PhysicalParams, cfg: &StepConfig) -> Result<f64> {
    cfl_dt_with(state, &SplitCoeffs::deep_water(params), cfg)
}

pub(crate) fn cfl_dt_with(
    state: &WaveState,
    co: &SplitCoeffs,
    cfg: &StepConfig,
) -> Result<f64> {
    let grid = state.grid();
    let w = apply_symbol(state.v(), &sech_squared_symbol(grid, co.mu))?;
    let s_max = transport_speed_bound(&w, state.v(), co.zeta_advection(), co.v_advection());
    match *cfg {
        StepConfig::Fixed { dt } => {
            let lambda = s_max * dt / grid.dx();
            if !(lambda < 1.0) {
                return Err(SolverError::CflViolation { lambda });
            }
            Ok(dt)
        }
        StepConfig::Cfl { sigma, dt_max } => {
            if s_max == 0.0 {
                Ok(dt_max)
            } else {
                Ok((sigma * grid.dx() / s_max).min(dt_max))
            }
        }
    }
}

/// Snapshots, diagnostics, and the state at `t_final`.
#[derive(Debug, Clone)]
pub struct RunOutput {
    pub final_state: WaveState,
    pub snapshots: Vec<WaveState>,
    pub diagnostics: Diagnostics,
}

/// A failed run: the error, the last state that was still finite, and the
/// diagnostics collected up to the failure.
#[derive(Debug)]
pub struct RunFailure {
    pub error: SolverError,
    pub last_state: WaveState,
    pub diagnostics: Diagnostics,
}

impl fmt::Display for RunFailure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "run aborted at t = {}: {}", self.last_state.time(), self.error)
    }
}

impl std::error::Error for RunFailure {
    fn source(&self) -> Option<&(dyn std::error::Error + 'static)> {
        Some(&self.error)
    }
}

/// Advances the initial state to `t_final` with Lie steps, clipping steps to
/// land exactly on each snapshot time and on `t_final`. Snapshots are deep
/// copies of the state at the requested times; one diagnostics record is
/// written per step.
pub fn run(
    initial: &WaveState,
    params: &PhysicalParams,
    bathy: &Bathymetry,
    cfg: &StepConfig,
    t_final: f64,
    snapshot_times: &[f64],
) -> std::result::Result<RunOutput, Box<RunFailure>> {
    run_with(
        initial,
        &SplitCoeffs::deep_water(params),
        bathy,
        cfg,
        t_final,
        snapshot_times,
    )
}

pub(crate) fn run_with(
    initial: &WaveState,
    co: &SplitCoeffs,
    bathy: &Bathymetry,
    cfg: &StepConfig,
    t_final: f64,
    snapshot_times: &[f64],
) -> std::result::Result<RunOutput, Box<RunFailure>> {
    let fail = |error: SolverError, last_state: WaveState, diagnostics: Diagnostics| {
        Box::new(RunFailure {
            error,
            last_state,
            diagnostics,
        })
    };

    let t0 = initial.time();
    let tol = 1e-12 * t_final.abs().max(t0.abs()).max(1.0);
    if !(t_final >= t0 - tol) {
        return Err(fail(
            SolverError::InvalidParam(format!("t_final = {t_final} lies before t0 = {t0}")),
            initial.clone(),
            Diagnostics::default(),
        ));
    }
    if snapshot_times.windows(2).any(|w| w[0] > w[1]) {
        return Err(fail(
            SolverError::InvalidParam("snapshot_times must be sorted".into()),
            initial.clone(),
            Diagnostics::default(),
        ));
    }
    if snapshot_times
        .iter()
        .any(|&t| t < t0 - tol || t > t_final + tol)
    {
        return Err(fail(
            SolverError::InvalidParam(format!(
                "snapshot_times must lie within [{t0}, {t_final}]"
            )),
            initial.clone(),
            Diagnostics::default(),
        ));
    }

    let mut state = initial.clone();
    let mut diagnostics = Diagnostics::default();
    let mut snapshots = Vec::new();
    let mut pending: VecDeque<f64> = snapshot_times.iter().copied().collect();

    // degenerate run: nothing to integrate
    if t_final <= t0 + tol {
        return Ok(RunOutput {
            final_state: state.clone(),
            snapshots: vec![state],
            diagnostics,
        });
    }

    // snapshots requested at (or before) the start time
    while pending.front().is_some_and(|&t| t <= state.time() + tol) {
        snapshots.push(state.clone());
        pending.pop_front();
    }

    while state.time() < t_final - tol {
        let dt_cfl = match cfl_dt_with(&state, co, cfg) {
            Ok(dt) => dt,
            Err(e) => return Err(fail(e, state, diagnostics)),
        };
        let next_event = pending.front().copied().unwrap_or(t_final).min(t_final);
        let remaining = next_event - state.time();
        let (dt, landed) = if dt_cfl >= remaining - tol {
            (remaining, Some(next_event))
        } else {
            (dt_cfl, None)
        };

        state = match lie_step_with(&state, co, bathy, dt) {
            Ok(next) => next,
            Err(e) => return Err(fail(e, state, diagnostics)),
        };
        if let Some(t_event) = landed {
            // kill the accumulation drift so events are hit exactly
            state.time = t_event;
        }

        let energy0 = match energy(state.zeta(), state.v(), 0, co.mu) {
            Ok(e) => e,
            Err(e) => return Err(fail(e, state, diagnostics)),
        };
        diagnostics.records.push(StepRecord {
            time: state.time(),
            dt,
            energy0,
            max_zeta: state.zeta().max_abs(),
            max_v: state.v().max_abs(),
            mass: state.zeta().integral(),
            momentum: state.v().integral(),
        });

        while pending.front().is_some_and(|&t| t <= state.time() + tol) {
            snapshots.push(state.clone());
            pending.pop_front();
        }
    }

    Ok(RunOutput {
        final_state: state,
        snapshots,
        diagnostics,
    })
}
