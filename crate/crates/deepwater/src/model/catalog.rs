//! Bathymetry and initial-condition catalog used by the numerical studies.

use std::sync::Arc;

use crate::error::{Result, SolverError};
use crate::model::{Bathymetry, PhysicalParams, WaveState};
use crate::spectral::{Grid, RealField};

const SQRT3_OVER_2: f64 = 0.866_025_403_784_438_6;

fn require_alpha(kind: &str, alpha: Option<f64>) -> Result<f64> {
    match alpha {
        Some(a) if a > 0.0 && a.is_finite() => Ok(a),
        Some(a) => Err(SolverError::InvalidParam(format!(
            "alpha must be positive for `{kind}`, got {a}"
        ))),
        None => Err(SolverError::InvalidParam(format!(
            "`{kind}` requires an alpha parameter"
        ))),
    }
}

/// Builds one of the catalog bottoms:
///
/// * `flat` - `b = 0`
/// * `bump_cos` - `b(x) = cos(x)`
/// * `ripple` - `b(x) = 0.5 - (x-8)^2/18` on `5 <= x <= 11`, else 0
/// * `smoothed_step` - `b(x) = beta/4 (1+tanh(100(x-2)))(1-tanh(100(x-8)))`
/// * `cos_alpha` - `b(x) = cos(alpha x)` (requires `alpha`)
pub fn make_bathymetry(
    kind: &str,
    grid: &Arc<Grid>,
    params: &PhysicalParams,
    alpha: Option<f64>,
) -> Result<Bathymetry> {
    let samples = match kind {
        "flat" => RealField::zeros(grid),
        "bump_cos" => RealField::from_fn(grid, f64::cos),
        "ripple" => RealField::from_fn(grid, |x| {
            if (5.0..=11.0).contains(&x) {
                0.5 - (x - 8.0) * (x - 8.0) / 18.0
            } else {
                0.0
            }
        }),
        "smoothed_step" => {
            let beta = params.beta();
            RealField::from_fn(grid, move |x| {
                beta / 4.0 * (1.0 + (100.0 * (x - 2.0)).tanh()) * (1.0 - (100.0 * (x - 8.0)).tanh())
            })
        }
        "cos_alpha" => {
            let a = require_alpha(kind, alpha)?;
            RealField::from_fn(grid, move |x| (a * x).cos())
        }
        other => return Err(SolverError::UnknownKind(other.to_string())),
    };
    Bathymetry::new(samples)
}

/// Builds one of the catalog initial conditions (always `v0 = zeta0`,
/// `time = 0`):
///
/// * `sech_pulse` - `zeta0(x) = sech(sqrt(3)/2 x)`
/// * `gaussian` - `zeta0(x) = exp(-x^2)`
/// * `sech_squared` - `zeta0(x) = sech^2(sqrt(3)/2 x)`
/// * `kdv_pair` - `zeta0(x) = alpha sech^2(sqrt(3 alpha/4) x)` (requires `alpha`)
pub fn make_initial(kind: &str, grid: &Arc<Grid>, alpha: Option<f64>) -> Result<WaveState> {
    let zeta = match kind {
        "sech_pulse" => RealField::from_fn(grid, |x| (SQRT3_OVER_2 * x).cosh().recip()),
        "gaussian" => RealField::from_fn(grid, |x| (-x * x).exp()),
        "sech_squared" => RealField::from_fn(grid, |x| {
            let s = (SQRT3_OVER_2 * x).cosh().recip();
            s * s
        }),
        "kdv_pair" => {
            let a = require_alpha(kind, alpha)?;
            let k = (0.75 * a).sqrt();
            RealField::from_fn(grid, move |x| {
                let s = (k * x).cosh().recip();
                a * s * s
            })
        }
        other => return Err(SolverError::UnknownKind(other.to_string())),
    };
    let v = zeta.clone();
    WaveState::new(zeta, v, 0.0)
}
