//! Self-convergence study and the exact-oracle convergence check.

use std::sync::Arc;

use crate::error::{Result, SolverError};
use crate::experiments::{exact_linear_propagator, state_error, ErrorRow, ErrorTable};
use crate::model::{make_initial, Bathymetry, PhysicalParams, WaveState};
use crate::spectral::Grid;
use crate::stepping::{run, StepConfig};

/// A reproducible simulation setup for convergence measurements.
#[derive(Debug, Clone)]
pub struct Scenario {
    pub initial: WaveState,
    pub params: PhysicalParams,
    pub bathymetry: Bathymetry,
    pub t_final: f64,
}

fn solve_fixed(scenario: &Scenario, dt: f64) -> Result<WaveState> {
    let cfg = StepConfig::fixed(dt)?;
    let out = run(
        &scenario.initial,
        &scenario.params,
        &scenario.bathymetry,
        &cfg,
        scenario.t_final,
        &[],
    )
    .map_err(|f| f.error)?;
    Ok(out.final_state)
}

fn check_dt_list(dt_list: &[f64]) -> Result<()> {
    if dt_list.len() < 2 {
        return Err(SolverError::InsufficientPoints(format!(
            "need at least 2 dt values, got {}",
            dt_list.len()
        )));
    }
    if dt_list.iter().any(|&dt| !(dt > 0.0 && dt.is_finite())) {
        return Err(SolverError::InsufficientPoints(
            "dt values must be positive".into(),
        ));
    }
    if dt_list.windows(2).any(|w| w[0] <= w[1]) {
        return Err(SolverError::InsufficientPoints(
            "dt values must be strictly decreasing".into(),
        ));
    }
    Ok(())
}

/// Runs the scenario at each `dt` in fixed-step mode, measures the
/// `H^1 x L^2` error at `t_final` against a reference solution computed by
/// the same code path at `dt_ref = min(dt_list)/4`, and fits the order.
pub fn convergence_study(scenario: &Scenario, dt_list: &[f64]) -> Result<ErrorTable> {
    check_dt_list(dt_list)?;
    let dt_ref = dt_list.last().unwrap() / 4.0;
    let reference = solve_fixed(scenario, dt_ref)?;
    let mut rows = Vec::with_capacity(dt_list.len());
    for &dt in dt_list {
        let sol = solve_fixed(scenario, dt)?;
        rows.push(ErrorRow {
            dt,
            error: state_error(&sol, &reference)?,
        });
    }
    ErrorTable::new(rows)
}

/// Validates the full Lie solver against [`exact_linear_propagator`] on the
/// linear system (`eps = beta = 0`, sech-pulse data) and reports the fitted
/// order.
pub fn linear_oracle_check(
    grid: &Arc<Grid>,
    mu: f64,
    dt_list: &[f64],
    t_final: f64,
) -> Result<ErrorTable> {
    check_dt_list(dt_list)?;
    let params = PhysicalParams::new(0.0, mu, 0.0)?;
    let initial = make_initial("sech_pulse", grid, None)?;
    let exact = exact_linear_propagator(&initial, mu, t_final)?;
    let scenario = Scenario {
        initial,
        params,
        bathymetry: Bathymetry::flat(grid),
        t_final,
    };
    let mut rows = Vec::with_capacity(dt_list.len());
    for &dt in dt_list {
        let sol = solve_fixed(&scenario, dt)?;
        rows.push(ErrorRow {
            dt,
            error: state_error(&sol, &exact)?,
        });
    }
    ErrorTable::new(rows)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_degenerate_dt_lists() {
        let g = Grid::new(30.0, 64).unwrap();
        assert!(matches!(
            linear_oracle_check(&g, 1.0, &[0.1], 0.5),
            Err(SolverError::InsufficientPoints(_))
        ));
        assert!(matches!(
            linear_oracle_check(&g, 1.0, &[0.1, 0.1], 0.5),
            Err(SolverError::InsufficientPoints(_))
        ));
        assert!(linear_oracle_check(&g, 1.0, &[0.05, 0.1], 0.5).is_err());
    }

    #[test]
    fn t_zero_gives_zero_errors() {
        // degenerate check: at t_final = 0 both routes return the data
        let g = Grid::new(30.0, 64).unwrap();
        let params = PhysicalParams::new(0.0, 1.0, 0.0).unwrap();
        let initial = make_initial("sech_pulse", &g, None).unwrap();
        let exact = exact_linear_propagator(&initial, 1.0, 0.0).unwrap();
        let scenario = Scenario {
            initial: initial.clone(),
            params,
            bathymetry: Bathymetry::flat(&g),
            t_final: 0.0,
        };
        let sol = solve_fixed(&scenario, 0.01).unwrap();
        let err = state_error(&sol, &exact).unwrap();
        assert!(err < 1e-12);
    }

    #[test]
    fn linear_solver_is_first_order() {
        let g = Grid::new(30.0, 128).unwrap();
        let table = linear_oracle_check(&g, 1.0, &[0.02, 0.01, 0.005], 0.5).unwrap();
        assert!(
            table.slope() > 0.8 && table.slope() < 1.2,
            "slope {}",
            table.slope()
        );
        // halving dt roughly halves the error
        let rows = table.rows();
        for w in rows.windows(2) {
            let ratio = w[0].error / w[1].error;
            assert!(ratio > 1.6 && ratio < 2.4, "ratio {ratio}");
        }
    }
}
