//! Homogenization study: the influence of a rapidly oscillating bottom
//! vanishes as its frequency grows.

use std::sync::Arc;

use crate::error::Result;
use crate::experiments::{QuotientRow, QuotientTable};
use crate::model::{make_bathymetry, make_initial, Bathymetry, PhysicalParams};
use crate::spectral::Grid;
use crate::stepping::{cfl_dt, lie_step, StepConfig};

/// For each `alpha`, runs the sech^2 pair over `b = cos(alpha x)` and over a
/// flat bottom on a shared step sequence (the pointwise minimum of the two
/// CFL choices), and reports `max|zeta_alpha(T) - zeta_flat(T)| / max|zeta0|`.
pub fn homogenization_sweep(
    alpha_list: &[f64],
    params: &PhysicalParams,
    grid: &Arc<Grid>,
    t_final: f64,
) -> Result<QuotientTable> {
    let initial = make_initial("sech_squared", grid, None)?;
    let peak = initial.zeta().max_abs();
    let cfg = StepConfig::cfl_default(grid, params.mu())?;
    let flat = Bathymetry::flat(grid);
    let tol = 1e-12 * t_final.abs().max(1.0);

    let mut rows = Vec::with_capacity(alpha_list.len());
    for &alpha in alpha_list {
        let oscillating = make_bathymetry("cos_alpha", grid, params, Some(alpha))?;
        let mut over_bumps = initial.clone();
        let mut over_flat = initial.clone();
        let mut t = 0.0;
        while t < t_final - tol {
            let dt = cfl_dt(&over_bumps, params, &cfg)?
                .min(cfl_dt(&over_flat, params, &cfg)?)
                .min(t_final - t);
            over_bumps = lie_step(&over_bumps, params, &oscillating, dt)?;
            over_flat = lie_step(&over_flat, params, &flat, dt)?;
            t += dt;
        }
        let diff = over_bumps.zeta() - over_flat.zeta();
        rows.push(QuotientRow {
            parameter: alpha,
            quotient: diff.max_abs() / peak,
        });
    }
    QuotientTable::new(rows)
}
