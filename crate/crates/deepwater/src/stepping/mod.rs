//! Substep propagators, their Lie composition, CFL control, and the
//! simulation driver.

mod driver;
mod substeps;

pub use driver::{cfl_dt, run, RunFailure, RunOutput};
pub use substeps::{
    dispersive_step, lax_wendroff_advect, lax_wendroff_flux, lie_step, transport_step,
};

pub(crate) use driver::run_with;

use crate::error::{Result, SolverError};
use crate::model::SplitCoeffs;
use crate::spectral::Grid;

/// Default CFL number for adaptive stepping.
pub const DEFAULT_CFL_SIGMA: f64 = 0.5;

/// Safety factor applied to the stiffest dispersive period when capping the
/// time step; keeps the forward-Euler amplification of high modes harmless
/// over the run lengths of interest.
pub(crate) const DT_MAX_SAFETY: f64 = 0.2;

/// Default cap on the time step: `0.2 / omega_max` with
/// `omega_max = sqrt(xi_max tanh(sqrt(mu) xi_max))` the fastest dispersive
/// frequency resolved by the grid.
pub fn default_dt_max(grid: &Grid, mu: f64) -> Result<f64> {
    if !(mu.is_finite() && mu > 0.0) {
        return Err(SolverError::InvalidParam(format!(
            "mu must be positive, got {mu}"
        )));
    }
    Ok(DT_MAX_SAFETY / peak_frequency(grid, 1.0, mu))
}

pub(crate) fn default_dt_max_with(grid: &Grid, co: &SplitCoeffs, safety: f64) -> f64 {
    safety / peak_frequency(grid, co.dispersion, co.mu)
}

fn peak_frequency(grid: &Grid, dispersion: f64, mu: f64) -> f64 {
    let xi = grid.max_wavenumber();
    (dispersion * xi * (mu.sqrt() * xi).tanh()).sqrt()
}

/// Per-step time control.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum StepConfig {
    /// Constant step; each step still asserts the transport CFL bound.
    Fixed { dt: f64 },
    /// `dt = min(sigma * dx / s_max, dt_max)` from the current speeds.
    Cfl { sigma: f64, dt_max: f64 },
}

impl StepConfig {
    pub fn fixed(dt: f64) -> Result<Self> {
        if !(dt.is_finite() && dt > 0.0) {
            return Err(SolverError::InvalidParam(format!(
                "dt must be positive, got {dt}"
            )));
        }
        Ok(StepConfig::Fixed { dt })
    }

    /// `sigma` must lie strictly inside (0, 1): the CFL condition is strict.
    pub fn cfl(sigma: f64, dt_max: f64) -> Result<Self> {
        if !(sigma > 0.0 && sigma < 1.0) {
            return Err(SolverError::InvalidParam(format!(
                "cfl_sigma must lie in (0, 1), got {sigma}"
            )));
        }
        if !(dt_max.is_finite() && dt_max > 0.0) {
            return Err(SolverError::InvalidParam(format!(
                "dt_max must be positive, got {dt_max}"
            )));
        }
        Ok(StepConfig::Cfl { sigma, dt_max })
    }

    /// Adaptive stepping with the default sigma and dt_max for this grid.
    pub fn cfl_default(grid: &Grid, mu: f64) -> Result<Self> {
        Ok(StepConfig::Cfl {
            sigma: DEFAULT_CFL_SIGMA,
            dt_max: default_dt_max(grid, mu)?,
        })
    }
}

/// One diagnostics record per completed step.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct StepRecord {
    /// Time after the step.
    pub time: f64,
    /// Step size taken.
    pub dt: f64,
    /// Order-zero energy of the state.
    pub energy0: f64,
    pub max_zeta: f64,
    pub max_v: f64,
    /// Discrete mass `sum(zeta_j) * dx`.
    pub mass: f64,
    /// Discrete momentum `sum(v_j) * dx`.
    pub momentum: f64,
}

/// Per-step records of a run, in step order (monotone time).
#[derive(Debug, Clone, Default)]
pub struct Diagnostics {
    pub records: Vec<StepRecord>,
}

impl Diagnostics {
    pub fn is_empty(&self) -> bool {
        self.records.is_empty()
    }

    pub fn len(&self) -> usize {
        self.records.len()
    }
}
