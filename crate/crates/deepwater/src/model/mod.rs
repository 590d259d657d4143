//! The evolution system: parameters, state, right-hand sides, the change of
//! variables, and the bathymetry/initial-condition catalog.

mod catalog;
mod rhs;
mod vars;

pub use catalog::{make_bathymetry, make_initial};
pub use rhs::{dispersive_rhs, transport_speeds};
pub use vars::{from_tilde, to_tilde};

pub(crate) use rhs::{dispersive_rhs_with, SplitCoeffs};

use std::sync::Arc;

use crate::error::{Result, SolverError};
use crate::spectral::{energy, Grid, RealField};

/// The three dimensionless parameters: nonlinearity `epsilon`, shallowness
/// `mu`, and bathymetric amplitude `beta`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PhysicalParams {
    epsilon: f64,
    mu: f64,
    beta: f64,
}

impl PhysicalParams {
    /// Requires `0 <= epsilon <= 1`, `0 <= beta <= 1`, `mu > 0`.
    pub fn new(epsilon: f64, mu: f64, beta: f64) -> Result<Self> {
        if !(0.0..=1.0).contains(&epsilon) || !epsilon.is_finite() {
            return Err(SolverError::InvalidParam(format!(
                "epsilon must lie in [0, 1], got {epsilon}"
            )));
        }
        if !(0.0..=1.0).contains(&beta) || !beta.is_finite() {
            return Err(SolverError::InvalidParam(format!(
                "beta must lie in [0, 1], got {beta}"
            )));
        }
        if !(mu.is_finite() && mu > 0.0) {
            return Err(SolverError::InvalidParam(format!(
                "mu must be positive, got {mu}"
            )));
        }
        Ok(PhysicalParams { epsilon, mu, beta })
    }

    pub fn epsilon(&self) -> f64 {
        self.epsilon
    }

    pub fn mu(&self) -> f64 {
        self.mu
    }

    pub fn beta(&self) -> f64 {
        self.beta
    }

    /// `delta = max(epsilon, beta)`, the size of the perturbative terms.
    pub fn delta(&self) -> f64 {
        self.epsilon.max(self.beta)
    }

    /// The steepness `epsilon * sqrt(mu)` carried by every nonlinear term.
    pub fn steepness(&self) -> f64 {
        self.epsilon * self.mu.sqrt()
    }
}

/// Sampled bottom profile `b` (the topography is `-1 + beta*b`).
#[derive(Debug, Clone)]
pub struct Bathymetry {
    samples: RealField,
    sup_norm: f64,
}

impl Bathymetry {
    pub fn new(samples: RealField) -> Result<Self> {
        if !samples.all_finite() {
            return Err(SolverError::InvalidParam(
                "bottom profile contains non-finite values".into(),
            ));
        }
        let sup_norm = samples.max_abs();
        Ok(Bathymetry { samples, sup_norm })
    }

    pub fn flat(grid: &Arc<Grid>) -> Self {
        Bathymetry {
            samples: RealField::zeros(grid),
            sup_norm: 0.0,
        }
    }

    pub fn samples(&self) -> &RealField {
        &self.samples
    }

    pub fn sup_norm(&self) -> f64 {
        self.sup_norm
    }

    pub fn grid(&self) -> &Arc<Grid> {
        self.samples.grid()
    }
}

/// Surface elevation `zeta` and surface velocity `v` at a given time.
#[derive(Debug, Clone)]
pub struct WaveState {
    pub(crate) zeta: RealField,
    pub(crate) v: RealField,
    pub(crate) time: f64,
}

impl WaveState {
    pub fn new(zeta: RealField, v: RealField, time: f64) -> Result<Self> {
        if !zeta.grid().same_grid(v.grid()) {
            return Err(SolverError::GridMismatch(
                "zeta and v live on different grids".into(),
            ));
        }
        if !(zeta.all_finite() && v.all_finite() && time.is_finite()) {
            return Err(SolverError::InvalidParam(
                "wave state contains non-finite values".into(),
            ));
        }
        Ok(WaveState { zeta, v, time })
    }

    pub fn zeros(grid: &Arc<Grid>) -> Self {
        WaveState {
            zeta: RealField::zeros(grid),
            v: RealField::zeros(grid),
            time: 0.0,
        }
    }

    pub fn zeta(&self) -> &RealField {
        &self.zeta
    }

    pub fn v(&self) -> &RealField {
        &self.v
    }

    pub fn time(&self) -> f64 {
        self.time
    }

    pub fn grid(&self) -> &Arc<Grid> {
        self.zeta.grid()
    }

    pub fn all_finite(&self) -> bool {
        self.zeta.all_finite() && self.v.all_finite()
    }

    /// Order-`N` energy of the state (see [`crate::spectral::energy`]).
    pub fn energy(&self, order: u32, mu: f64) -> Result<f64> {
        energy(&self.zeta, &self.v, order, mu)
    }
}

/// Time derivative of a state as produced by one of the split right-hand
/// sides; same grid as the source state.
#[derive(Debug, Clone)]
pub struct Tendency {
    pub d_zeta: RealField,
    pub d_v: RealField,
}

pub(crate) fn check_state_bathy(state: &WaveState, bathy: &Bathymetry) -> Result<()> {
    if !state.grid().same_grid(bathy.grid()) {
        return Err(SolverError::GridMismatch(
            "state and bathymetry live on different grids".into(),
        ));
    }
    Ok(())
}
