//! The numerical studies: error metrics, convergence-order estimation, the
//! exact linear oracle, and the KdV / homogenization sweeps.

mod convergence;
mod homogenization;
mod kdv;
mod linear;
mod metrics;

pub use convergence::{convergence_study, linear_oracle_check, Scenario};
pub use homogenization::homogenization_sweep;
pub use kdv::{kdv_comparison, kdv_soliton};
pub use linear::exact_linear_propagator;
pub use metrics::{estimate_order, state_error, LogLogFit};

use crate::error::{Result, SolverError};

/// One `(dt, error)` measurement of a convergence study.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ErrorRow {
    pub dt: f64,
    pub error: f64,
}

/// `(dt, error)` pairs with the fitted log-log slope.
#[derive(Debug, Clone)]
pub struct ErrorTable {
    rows: Vec<ErrorRow>,
    slope: f64,
    residual: f64,
}

impl ErrorTable {
    /// Requires at least two rows, strictly decreasing `dt`, positive errors.
    pub fn new(rows: Vec<ErrorRow>) -> Result<Self> {
        if rows.windows(2).any(|w| w[0].dt <= w[1].dt) {
            return Err(SolverError::InsufficientPoints(
                "dt values must be strictly decreasing".into(),
            ));
        }
        let fit = estimate_order(&rows)?;
        Ok(ErrorTable {
            rows,
            slope: fit.slope,
            residual: fit.residual,
        })
    }

    pub fn rows(&self) -> &[ErrorRow] {
        &self.rows
    }

    /// Least-squares slope of `log(error)` against `log(dt)`.
    pub fn slope(&self) -> f64 {
        self.slope
    }

    /// RMS residual of the fit in log space.
    pub fn residual(&self) -> f64 {
        self.residual
    }
}

/// One `(parameter, quotient)` measurement of a sweep.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct QuotientRow {
    pub parameter: f64,
    pub quotient: f64,
}

/// Sweep results over a strictly ordered parameter list.
#[derive(Debug, Clone)]
pub struct QuotientTable {
    rows: Vec<QuotientRow>,
}

impl QuotientTable {
    pub fn new(rows: Vec<QuotientRow>) -> Result<Self> {
        let increasing = rows.windows(2).all(|w| w[0].parameter < w[1].parameter);
        let decreasing = rows.windows(2).all(|w| w[0].parameter > w[1].parameter);
        if !(increasing || decreasing) {
            return Err(SolverError::InsufficientPoints(
                "sweep parameters must be strictly ordered".into(),
            ));
        }
        Ok(QuotientTable { rows })
    }

    pub fn rows(&self) -> &[QuotientRow] {
        &self.rows
    }
}
